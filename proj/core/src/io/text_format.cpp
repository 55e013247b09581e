#include "pgr/io/text_format.hpp"

#include <set>
#include <sstream>

#include "io/lexer.hpp"

namespace pgr {

using io::Tok;
using io::Token;

namespace {

struct LocatedRule {
    AnnotatedRule rule;
    std::size_t line;
    std::size_t column;
};

struct RawDocument {
    Document doc;
    std::vector<LocatedRule> annotated;
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(io::tokenize(text)) {}

    RawDocument document()
    {
        RawDocument raw;
        std::set<std::string> graph_names, rule_names, system_names;
        std::vector<std::pair<Token, std::string>> references;
        while (! at(Tok::End)) {
            const Token & kw = expect(Tok::Ident, "'graph', 'rule' or 'system'");
            if (kw.text == "graph") {
                Token name = name_token();
                if (! graph_names.insert(name.text).second)
                    fail(ErrorKind::DuplicateId, name, "graph '" + name.text + "' defined twice");
                raw.doc.graphs.emplace_back(name.text, graph_body());
            }
            else if (kw.text == "rule") {
                Token name = name_token();
                if (! rule_names.insert(name.text).second)
                    fail(ErrorKind::DuplicateId, name, "rule '" + name.text + "' defined twice");
                LocatedRule lr{AnnotatedRule{}, kw.line, kw.column};
                lr.rule.name = name.text;
                expect(Tok::LBrace, "'{'");
                keyword("lhs");
                lr.rule.lhs = side_body(true);
                keyword("rhs");
                lr.rule.rhs = side_body(false);
                expect(Tok::RBrace, "'}'");
                raw.annotated.push_back(std::move(lr));
            }
            else if (kw.text == "system") {
                Token name = name_token();
                if (! system_names.insert(name.text).second)
                    fail(ErrorKind::DuplicateId, name, "system '" + name.text + "' defined twice");
                expect(Tok::LBrace, "'{'");
                std::vector<std::string> members;
                if (! at(Tok::RBrace)) {
                    do {
                        Token member = name_token();
                        references.emplace_back(member, member.text);
                        members.push_back(member.text);
                    } while (accept(Tok::Comma));
                }
                expect(Tok::RBrace, "'}'");
                raw.doc.systems.emplace_back(name.text, std::move(members));
            }
            else {
                fail(ErrorKind::Syntax, kw, "expected 'graph', 'rule' or 'system', found '" + kw.text + "'");
            }
        }
        for (const auto & [tok, name] : references)
            if (! rule_names.contains(name))
                fail(ErrorKind::UnknownName, tok, "system refers to unknown rule '" + name + "'");
        return raw;
    }

private:
    [[noreturn]] static void fail(ErrorKind kind, const Token & at, const std::string & msg)
    {
        throw ParseError(kind, at.line, at.column, msg);
    }

    const Token & peek(std::size_t ahead = 0) const
    {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    bool at(Tok kind) const { return peek().kind == kind; }
    bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

    const Token & next()
    {
        const Token & t = toks_[pos_];
        if (pos_ + 1 < toks_.size())
            ++pos_;
        return t;
    }

    bool accept(Tok kind)
    {
        if (! at(kind))
            return false;
        next();
        return true;
    }

    const Token & expect(Tok kind, std::string_view what)
    {
        if (! at(kind)) {
            const Token & t = peek();
            fail(ErrorKind::Syntax, t, "expected " + std::string(what) + ", found " +
                                           (t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'"));
        }
        return next();
    }

    void keyword(std::string_view w)
    {
        if (! at_word(w)) {
            const Token & t = peek();
            fail(ErrorKind::Syntax, t, "expected '" + std::string(w) + "', found " +
                                           (t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'"));
        }
        next();
    }

    Token name_token()
    {
        if (at(Tok::Ident) || at(Tok::String) || at(Tok::Number))
            return next();
        expect(Tok::Ident, "a name");
        return peek();
    }

    VertexId number(const Token & t)
    {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(t.text, &used);
            if (used != t.text.size())
                throw std::invalid_argument(t.text);
            return v;
        }
        catch (const std::exception &) {
            fail(ErrorKind::Syntax, t, "id '" + t.text + "' is out of range");
        }
    }

    VertexId vertex_ref(const Graph & g)
    {
        const Token & t = expect(Tok::Number, "a vertex id");
        VertexId v = number(t);
        if (! g.has_vertex(v))
            fail(ErrorKind::UndeclaredEndpoint, t, "vertex " + t.text + " is not declared");
        return v;
    }

    Endpoint endpoint_ref(const Graph & g)
    {
        if (at_word("ctx")) {
            next();
            return Endpoint::context();
        }
        return Endpoint::vertex(vertex_ref(g));
    }

    std::string key_token()
    {
        if (at(Tok::Ident) || at(Tok::Number) || at(Tok::String))
            return next().text;
        expect(Tok::Ident, "a type edge key");
        return {};
    }

    // Parses `[ID:] SRC -LABEL-> TGT;` or `SRC --> TGT;` into g.
    void edge_statement(Graph & g)
    {
        std::optional<EdgeId> id;
        std::optional<Token> id_tok;
        if (peek().kind == Tok::Number && peek(1).kind == Tok::Colon) {
            id_tok = next();
            id = number(*id_tok);
            next();
        }
        VertexId src = vertex_ref(g);
        Label label;
        if (accept(Tok::PlainArrow)) {
            label = kUnlabeled;
        }
        else {
            expect(Tok::Dash, "'-' or '-->'");
            if (at(Tok::Ident) || at(Tok::Number) || at(Tok::String))
                label = next().text;
            else
                expect(Tok::Ident, "an edge label");
            expect(Tok::Arrow, "'->'");
        }
        VertexId tgt = vertex_ref(g);
        expect(Tok::Semi, "';'");
        if (id) {
            if (g.has_edge(*id))
                fail(ErrorKind::DuplicateId, *id_tok, "edge id " + id_tok->text + " used twice");
            g.add_edge(*id, src, tgt, label);
        }
        else {
            g.add_edge(src, tgt, label);
        }
    }

    Graph graph_body()
    {
        Graph g;
        expect(Tok::LBrace, "'{'");
        while (! accept(Tok::RBrace)) {
            if (at_word("node")) {
                next();
                do {
                    const Token & t = expect(Tok::Number, "a vertex id");
                    if (! g.add_vertex(number(t)))
                        fail(ErrorKind::DuplicateId, t, "vertex " + t.text + " declared twice");
                } while (accept(Tok::Comma));
                expect(Tok::Semi, "';'");
            }
            else {
                edge_statement(g);
            }
        }
        return g;
    }

    AnnotatedSide side_body(bool lhs)
    {
        AnnotatedSide side;
        expect(Tok::LBrace, "'{'");
        while (! accept(Tok::RBrace)) {
            if (at_word("node")) {
                next();
                do {
                    const Token & t = expect(Tok::Number, "a vertex id");
                    VertexId v = number(t);
                    if (! side.pattern.add_vertex(v))
                        fail(ErrorKind::DuplicateId, t, "vertex " + t.text + " declared twice");
                    if (accept(Tok::Bang))
                        side.black.insert(v);
                    if (accept(Tok::LBracket)) {
                        auto & names = side.names[v];
                        if (! at(Tok::RBracket)) {
                            do {
                                names.push_back(expect(Tok::Ident, "a name").text);
                            } while (accept(Tok::Comma));
                        }
                        expect(Tok::RBracket, "']'");
                    }
                } while (accept(Tok::Comma));
                expect(Tok::Semi, "';'");
            }
            else if (at_word("type")) {
                next();
                ExplicitTypeEdge e;
                if (lhs) {
                    e.key = key_token();
                    expect(Tok::Colon, "':'");
                    e.src = endpoint_ref(side.pattern);
                    expect(Tok::Arrow, "'->'");
                    e.tgt = endpoint_ref(side.pattern);
                }
                else {
                    expect(Tok::Colon, "':'");
                    e.src = endpoint_ref(side.pattern);
                    expect(Tok::Arrow, "'->'");
                    e.tgt = endpoint_ref(side.pattern);
                    keyword("from");
                    e.key = key_token();
                }
                expect(Tok::Semi, "';'");
                side.types.push_back(std::move(e));
            }
            else if (at_word("forbid")) {
                next();
                ForbidMark f;
                expect(Tok::LParen, "'('");
                f.x = expect(Tok::Ident, "a name").text;
                expect(Tok::Comma, "','");
                f.y = expect(Tok::Ident, "a name").text;
                expect(Tok::RParen, "')'");
                keyword("on");
                f.src = endpoint_ref(side.pattern);
                expect(Tok::Arrow, "'->'");
                f.tgt = endpoint_ref(side.pattern);
                expect(Tok::Semi, "';'");
                side.forbids.push_back(std::move(f));
            }
            else {
                edge_statement(side.pattern);
            }
        }
        return side;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool bare_word(const std::string & s)
{
    if (s.empty())
        return false;
    auto start = [](unsigned char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80; };
    auto inner = [&](unsigned char c) { return start(c) || (c >= '0' && c <= '9') || c == '\''; };
    bool all_digits = true;
    for (unsigned char c : s)
        all_digits = all_digits && c >= '0' && c <= '9';
    if (all_digits)
        return true;
    if (! start(static_cast<unsigned char>(s[0])))
        return false;
    for (unsigned char c : s)
        if (! inner(c))
            return false;
    return true;
}

std::string quoted(const std::string & s)
{
    if (bare_word(s) && s != "ctx")
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

void write_pattern(std::ostream & out, const Graph & g, const std::string & indent)
{
    if (! g.vertices().empty()) {
        out << indent << "node ";
        bool first = true;
        for (VertexId v : g.vertices()) {
            out << (first ? "" : ", ") << v;
            first = false;
        }
        out << ";\n";
    }
    for (const auto & [id, e] : g.edges()) {
        out << indent << id << ": " << e.src;
        if (e.label == kUnlabeled)
            out << " --> ";
        else
            out << " -" << quoted(e.label) << "-> ";
        out << e.tgt << ";\n";
    }
}

QuasiRule expand_located(const LocatedRule & lr, std::vector<std::string> & warnings)
{
    try {
        return expand_shorthand(lr.rule, &warnings);
    }
    catch (const ParseError &) {
        throw;
    }
    catch (const Error & e) {
        throw ParseError(e.kind(), lr.line, lr.column, e.what());
    }
}

} // namespace

const Graph & Document::graph(const std::string & name) const
{
    for (const auto & [n, g] : graphs)
        if (n == name)
            return g;
    throw Error(ErrorKind::UnknownName, "no graph named '" + name + "'");
}

const QuasiRule & Document::rule(const std::string & name) const
{
    for (const auto & r : rules)
        if (r.name == name)
            return r;
    throw Error(ErrorKind::UnknownName, "no rule named '" + name + "'");
}

RuleSystem Document::system(const std::string & name) const
{
    for (const auto & [n, members] : systems) {
        if (n != name)
            continue;
        RuleSystem s;
        s.name = n;
        for (const auto & m : members)
            s.add(rule(m));
        return s;
    }
    throw Error(ErrorKind::UnknownName, "no system named '" + name + "'");
}

RuleSystem Document::all_rules(std::string name) const
{
    RuleSystem s;
    s.name = std::move(name);
    for (const auto & r : rules)
        s.add(r);
    return s;
}

Document parse_document(std::string_view text)
{
    RawDocument raw = Parser(text).document();
    for (const auto & lr : raw.annotated)
        raw.doc.rules.push_back(expand_located(lr, raw.doc.warnings));
    return std::move(raw.doc);
}

Graph parse_graph(std::string_view text)
{
    Document d = parse_document(text);
    if (d.graphs.size() > 1)
        throw ParseError(ErrorKind::Syntax, 1, 1, "expected at most one graph, found " + std::to_string(d.graphs.size()));
    return d.graphs.empty() ? Graph() : d.graphs.front().second;
}

std::vector<QuasiRule> parse_rules(std::string_view text)
{
    return parse_document(text).rules;
}

std::vector<AnnotatedRule> parse_annotated_rules(std::string_view text)
{
    std::vector<AnnotatedRule> out;
    for (auto & lr : Parser(text).document().annotated)
        out.push_back(std::move(lr.rule));
    return out;
}

std::string serialize_graph(const Graph & g, const std::string & name)
{
    std::ostringstream out;
    out << "graph " << quoted(name) << " {\n";
    write_pattern(out, g, "  ");
    out << "}\n";
    return out.str();
}

std::string serialize_rule(const QuasiRule & r)
{
    std::ostringstream out;
    out << "rule " << quoted(r.name) << " {\n  lhs {\n";
    write_pattern(out, r.lhs.pattern, "    ");
    for (const auto & [id, t] : r.lhs.type.edges)
        out << "    type " << quoted(r.keys.at(id)) << ": " << to_string(t.src) << " -> " << to_string(t.tgt) << ";\n";
    out << "  }\n  rhs {\n";
    write_pattern(out, r.rhs.pattern, "    ");
    for (const auto & [id, t] : r.rhs.type.edges)
        out << "    type: " << to_string(t.src) << " -> " << to_string(t.tgt) << " from "
            << quoted(r.keys.at(r.trace.at(id))) << ";\n";
    out << "  }\n}\n";
    return out.str();
}

std::string serialize_document(const Document & d)
{
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (! first)
            out << "\n";
        first = false;
    };
    for (const auto & [name, g] : d.graphs) {
        sep();
        out << serialize_graph(g, name);
    }
    for (const auto & r : d.rules) {
        sep();
        out << serialize_rule(r);
    }
    for (const auto & [name, members] : d.systems) {
        sep();
        out << "system " << quoted(name) << " {";
        for (std::size_t i = 0; i < members.size(); ++i)
            out << (i == 0 ? " " : ", ") << quoted(members[i]);
        out << (members.empty() ? "}\n" : " }\n");
    }
    return out.str();
}

} // namespace pgr
