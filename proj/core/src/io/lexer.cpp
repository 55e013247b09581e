#include "io/lexer.hpp"

#include "pgr/error.hpp"

namespace pgr::io {

namespace {

bool ident_start(unsigned char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80;
}

bool ident_char(unsigned char c)
{
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

bool digit(unsigned char c)
{
    return c >= '0' && c <= '9';
}

} // namespace

std::string_view describe(Tok kind)
{
    switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Bang: return "'!'";
    case Tok::Dash: return "'-'";
    case Tok::Arrow: return "'->'";
    case Tok::PlainArrow: return "'-->'";
    case Tok::End: return "end of input";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            else {
                ++col;
            }
            ++i;
        }
    };

    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        std::size_t l = line, k = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back(Token{Tok::Ident, std::string(text.substr(i, j - i)), l, k});
            advance(j - i);
            continue;
        }
        if (digit(c)) {
            std::size_t j = i;
            while (j < text.size() && digit(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back(Token{Tok::Number, std::string(text.substr(i, j - i)), l, k});
            advance(j - i);
            continue;
        }
        if (c == '"') {
            std::string value;
            advance(1);
            while (true) {
                if (i >= text.size() || text[i] == '\n')
                    throw ParseError(ErrorKind::Syntax, l, k, "unterminated string");
                if (text[i] == '"')
                    break;
                if (text[i] == '\\' && i + 1 < text.size() && (text[i + 1] == '"' || text[i + 1] == '\\')) {
                    value += text[i + 1];
                    advance(2);
                    continue;
                }
                value += text[i];
                advance(1);
            }
            advance(1);
            out.push_back(Token{Tok::String, std::move(value), l, k});
            continue;
        }
        if (text.substr(i, 3) == "-->") {
            out.push_back(Token{Tok::PlainArrow, "-->", l, k});
            advance(3);
            continue;
        }
        if (text.substr(i, 2) == "->") {
            out.push_back(Token{Tok::Arrow, "->", l, k});
            advance(2);
            continue;
        }
        Tok kind;
        switch (c) {
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case ';': kind = Tok::Semi; break;
        case ',': kind = Tok::Comma; break;
        case ':': kind = Tok::Colon; break;
        case '!': kind = Tok::Bang; break;
        case '-': kind = Tok::Dash; break;
        default:
            throw ParseError(ErrorKind::Syntax, l, k, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        out.push_back(Token{kind, std::string(1, static_cast<char>(c)), l, k});
        advance(1);
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

} // namespace pgr::io
