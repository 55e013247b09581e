#include "pgr/shorthand.hpp"

#include <algorithm>
#include <tuple>

namespace pgr {

namespace {

const std::string kCtx = "ctx";

struct KeyedEdge {
    std::string key;
    TypeEdge edge;
};

using ForbidKey = std::tuple<std::string, Endpoint, Endpoint>;

std::vector<std::string> unique_names(const std::vector<std::string> & names)
{
    std::vector<std::string> out;
    for (const auto & n : names)
        if (std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(n);
    return out;
}

std::string describe(const ForbidMark & f)
{
    return name_key(f.x, f.y) + " on " + to_string(f.src) + " -> " + to_string(f.tgt);
}

// Implicit edges of the name shorthand on one side, minus forbidden ones.
std::vector<KeyedEdge> name_edges(const AnnotatedSide & side, std::set<ForbidKey> & unused_forbids)
{
    std::set<ForbidKey> forbidden = unused_forbids;
    std::vector<KeyedEdge> out;
    auto emit = [&](std::string key, Endpoint src, Endpoint tgt) {
        ForbidKey fk{key, src, tgt};
        if (forbidden.contains(fk)) {
            unused_forbids.erase(fk);
            return;
        }
        out.push_back(KeyedEdge{std::move(key), TypeEdge{src, tgt}});
    };

    std::vector<std::pair<VertexId, std::vector<std::string>>> named;
    for (const auto & [v, names] : side.names) {
        auto u = unique_names(names);
        if (! u.empty())
            named.emplace_back(v, std::move(u));
    }
    for (const auto & [v, names] : named) {
        for (const auto & x : names) {
            emit(name_key(kCtx, x), Endpoint::context(), Endpoint::vertex(v));
            emit(name_key(x, kCtx), Endpoint::vertex(v), Endpoint::context());
        }
    }
    for (const auto & [n, xs] : named)
        for (const auto & [m, ys] : named)
            for (const auto & x : xs)
                for (const auto & y : ys)
                    emit(name_key(x, y), Endpoint::vertex(n), Endpoint::vertex(m));
    return out;
}

std::vector<KeyedEdge> black_edges(const std::set<VertexId> & black)
{
    std::vector<Endpoint> ends{Endpoint::context()};
    for (VertexId v : black)
        ends.push_back(Endpoint::vertex(v));
    std::vector<KeyedEdge> out;
    if (black.empty())
        return out;
    for (const auto & a : ends)
        for (const auto & b : ends)
            if (! (a.is_context() && b.is_context()))
                out.push_back(KeyedEdge{black_key(a, b), TypeEdge{a, b}});
    return out;
}

std::set<ForbidKey> forbid_set(const AnnotatedSide & side)
{
    std::set<ForbidKey> out;
    for (const auto & f : side.forbids)
        out.insert(ForbidKey{name_key(f.x, f.y), f.src, f.tgt});
    return out;
}

void report_unused(const AnnotatedSide & side, const std::set<ForbidKey> & unused, const std::string & which,
                   const std::string & rule, std::vector<std::string> * warnings)
{
    if (warnings == nullptr)
        return;
    for (const auto & f : side.forbids)
        if (unused.contains(ForbidKey{name_key(f.x, f.y), f.src, f.tgt}))
            warnings->push_back(rule + ": " + which + " forbid mark " + describe(f) + " names no implicit type edge");
}

} // namespace

std::string name_key(const std::string & x, const std::string & y)
{
    return "(" + x + "," + y + ")";
}

std::string black_key(const Endpoint & src, const Endpoint & tgt)
{
    return "b:" + to_string(src) + "->" + to_string(tgt);
}

QuasiRule expand_shorthand(const AnnotatedRule & rule, std::vector<std::string> * warnings)
{
    const std::string & rn = rule.name;

    std::map<std::string, VertexId> lhs_owner;
    for (const auto & [v, names] : rule.lhs.names) {
        for (const auto & x : names) {
            auto [it, fresh] = lhs_owner.emplace(x, v);
            if (! fresh && it->second != v)
                throw Error(ErrorKind::SharedName, rn + ": name '" + x + "' is on lhs nodes " +
                                                       std::to_string(it->second) + " and " + std::to_string(v));
        }
    }
    for (const auto & [v, names] : rule.rhs.names)
        for (const auto & x : names)
            if (! lhs_owner.contains(x))
                throw Error(ErrorKind::DanglingRhsName, rn + ": rhs name '" + x + "' does not occur on the lhs");

    if (rule.lhs.black != rule.rhs.black)
        throw Error(ErrorKind::PositionMismatch, rn + ": black nodes differ between lhs and rhs");
    for (VertexId v : rule.lhs.black)
        if (! rule.lhs.pattern.has_vertex(v) || ! rule.rhs.pattern.has_vertex(v))
            throw Error(ErrorKind::PositionMismatch, rn + ": black node " + std::to_string(v) + " missing on one side");

    QuasiRule out;
    out.name = rn;
    out.lhs.pattern = rule.lhs.pattern;
    out.rhs.pattern = rule.rhs.pattern;

    std::map<std::string, EdgeId> lhs_key_id;
    EdgeId next = 0;
    auto add_lhs = [&](const KeyedEdge & k) {
        if (lhs_key_id.contains(k.key))
            throw Error(ErrorKind::DuplicateTraceKey, rn + ": lhs type key '" + k.key + "' used twice");
        lhs_key_id.emplace(k.key, next);
        out.lhs.type.edges.emplace(next, k.edge);
        out.keys.emplace(next, k.key);
        ++next;
    };
    auto add_rhs = [&](const KeyedEdge & k) {
        auto it = lhs_key_id.find(k.key);
        if (it == lhs_key_id.end())
            throw Error(ErrorKind::UnknownTraceKey, rn + ": rhs type edge " + to_string(k.edge.src) + " -> " +
                                                        to_string(k.edge.tgt) + " cites unknown key '" + k.key + "'");
        out.rhs.type.edges.emplace(next, k.edge);
        out.trace.emplace(next, it->second);
        ++next;
    };

    for (const auto & e : rule.lhs.types)
        add_lhs(KeyedEdge{e.key, TypeEdge{e.src, e.tgt}});
    std::set<ForbidKey> lhs_unused = forbid_set(rule.lhs);
    for (const auto & k : name_edges(rule.lhs, lhs_unused))
        add_lhs(k);
    for (const auto & k : black_edges(rule.lhs.black))
        add_lhs(k);
    report_unused(rule.lhs, lhs_unused, "lhs", rn, warnings);

    for (const auto & e : rule.rhs.types)
        add_rhs(KeyedEdge{e.key, TypeEdge{e.src, e.tgt}});
    std::set<ForbidKey> rhs_unused = forbid_set(rule.rhs);
    for (const auto & k : name_edges(rule.rhs, rhs_unused))
        add_rhs(k);
    for (const auto & k : black_edges(rule.rhs.black))
        add_rhs(k);
    report_unused(rule.rhs, rhs_unused, "rhs", rn, warnings);

    return make_rule(std::move(out));
}

void check_morphism(const Graph & from, const Graph & to, const GraphMorphism & m, bool injective)
{
    std::set<VertexId> vimg;
    for (VertexId v : from.vertices()) {
        auto it = m.vertices.find(v);
        if (it == m.vertices.end())
            throw Error(ErrorKind::NotAMorphism, "vertex " + std::to_string(v) + " has no image");
        if (! to.has_vertex(it->second))
            throw Error(ErrorKind::NotAMorphism, "image of vertex " + std::to_string(v) + " is not in the codomain");
        if (! vimg.insert(it->second).second && injective)
            throw Error(ErrorKind::NotAMorphism, "vertex map is not injective at " + std::to_string(it->second));
    }
    std::set<EdgeId> eimg;
    for (const auto & [id, e] : from.edges()) {
        auto it = m.edges.find(id);
        if (it == m.edges.end())
            throw Error(ErrorKind::NotAMorphism, "edge " + std::to_string(id) + " has no image");
        if (! to.has_edge(it->second))
            throw Error(ErrorKind::NotAMorphism, "image of edge " + std::to_string(id) + " is not in the codomain");
        const Edge & img = to.edge(it->second);
        if (img.src != m.vertices.at(e.src) || img.tgt != m.vertices.at(e.tgt) || img.label != e.label)
            throw Error(ErrorKind::NotAMorphism, "edge " + std::to_string(id) + " is not preserved");
        if (! eimg.insert(it->second).second && injective)
            throw Error(ErrorKind::NotAMorphism, "edge map is not injective at " + std::to_string(it->second));
    }
}

namespace {

AnnotatedRule span_names(const Graph & l, const Graph & k, const Graph & r, const GraphMorphism & phi,
                         const GraphMorphism & psi, std::string name)
{
    AnnotatedRule a;
    a.name = std::move(name);
    a.lhs.pattern = l;
    a.rhs.pattern = r;
    for (VertexId v : k.vertices()) {
        std::string x = "k" + std::to_string(v);
        a.lhs.names[phi.vertices.at(v)].push_back(x);
        a.rhs.names[psi.vertices.at(v)].push_back(x);
    }
    return a;
}

} // namespace

QuasiRule import_dpo(const Graph & l, const Graph & k, const Graph & r, const GraphMorphism & phi,
                     const GraphMorphism & psi, bool injective_phi, std::string name)
{
    check_morphism(k, l, phi, injective_phi);
    check_morphism(k, r, psi, false);
    return expand_shorthand(span_names(l, k, r, phi, psi, std::move(name)));
}

QuasiRule import_spo(const Graph & l, const Graph & k, const Graph & r, const GraphMorphism & phi,
                     const GraphMorphism & psi, std::string name)
{
    check_morphism(k, l, phi, false);
    check_morphism(k, r, psi, false);
    AnnotatedRule a = span_names(l, k, r, phi, psi, std::move(name));
    for (VertexId v : l.vertices())
        if (! a.lhs.names.contains(v))
            a.lhs.names[v].push_back("del" + std::to_string(v));
    return expand_shorthand(a);
}

} // namespace pgr
