#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pgr::io {

enum class Tok {
    Ident,
    Number,
    String,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Colon,
    Bang,
    Dash,
    Arrow,       // ->
    PlainArrow,  // -->
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

/// Splits text into tokens. `#` starts a comment running to end of line;
/// `\r` counts as whitespace. Bytes >= 0x80 may appear in identifiers.
/// Throws ParseError(Syntax) on stray characters or unterminated strings.
std::vector<Token> tokenize(std::string_view text);

std::string_view describe(Tok kind);

} // namespace pgr::io
