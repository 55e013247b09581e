#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pgr/graph.hpp"
#include "pgr/io/text_format.hpp"

namespace pgr::test {

inline std::string read_fixture(const std::string & name)
{
    std::ifstream in(std::string(PGR_FIXTURE_DIR) + "/" + name, std::ios::binary);
    if (! in)
        throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Document load_fixture(const std::string & name)
{
    return parse_document(read_fixture(name));
}

inline std::vector<std::string> fixture_names()
{
    return {"application.pgr", "figures.pgr", "line3.pgr", "quasi.pgr", "shorthand.pgr", "waitfor_nets.pgr"};
}

/// Vertices 0..n-1 are not used on purpose: ids are drawn sparse so that code
/// relying on dense ids shows up.
inline Graph random_graph(std::mt19937_64 & rng, std::size_t max_vertices, std::size_t max_edges,
                          const std::vector<Label> & labels)
{
    Graph g;
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_vertices)(rng);
    std::vector<VertexId> vs;
    VertexId next = std::uniform_int_distribution<VertexId>(0, 5)(rng);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_vertex(next);
        vs.push_back(next);
        next += std::uniform_int_distribution<VertexId>(1, 3)(rng);
    }
    if (vs.empty())
        return g;
    std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
    EdgeId eid = std::uniform_int_distribution<EdgeId>(0, 7)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    std::uniform_int_distribution<std::size_t> lab(0, labels.size() - 1);
    for (std::size_t i = 0; i < m; ++i) {
        g.add_edge(eid, vs[pick(rng)], vs[pick(rng)], labels[lab(rng)]);
        eid += std::uniform_int_distribution<EdgeId>(1, 4)(rng);
    }
    return g;
}

/// Random injective renaming of every id of g.
inline Renaming random_renaming(std::mt19937_64 & rng, const Graph & g)
{
    Renaming phi;
    std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
    std::vector<VertexId> vt(vs.size());
    std::iota(vt.begin(), vt.end(), VertexId{100});
    std::shuffle(vt.begin(), vt.end(), rng);
    for (std::size_t i = 0; i < vs.size(); ++i)
        phi.vertices[vs[i]] = vt[i];
    std::vector<EdgeId> es;
    for (const auto & [id, e] : g.edges())
        es.push_back(id);
    std::vector<EdgeId> et(es.size());
    std::iota(et.begin(), et.end(), EdgeId{500});
    std::shuffle(et.begin(), et.end(), rng);
    for (std::size_t i = 0; i < es.size(); ++i)
        phi.edges[es[i]] = et[i];
    return phi;
}

/// Isomorphism by trying every vertex permutation and comparing the
/// (src, tgt, label) multisets. Exponential; small graphs only.
inline bool brute_isomorphic(const Graph & g, const Graph & h)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    std::vector<VertexId> gv(g.vertices().begin(), g.vertices().end());
    std::vector<VertexId> hv(h.vertices().begin(), h.vertices().end());
    std::multiset<std::tuple<VertexId, VertexId, Label>> target;
    for (const auto & [id, e] : h.edges())
        target.emplace(e.src, e.tgt, e.label);
    std::vector<std::size_t> perm(hv.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        std::map<VertexId, VertexId> m;
        for (std::size_t i = 0; i < gv.size(); ++i)
            m[gv[i]] = hv[perm[i]];
        std::multiset<std::tuple<VertexId, VertexId, Label>> image;
        for (const auto & [id, e] : g.edges())
            image.emplace(m[e.src], m[e.tgt], e.label);
        if (image == target)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::size_t count_label(const Graph & g, const Label & l)
{
    std::size_t n = 0;
    for (const auto & [id, e] : g.edges())
        n += e.label == l ? 1 : 0;
    return n;
}

/// Random deterministic rule over lhs vertices 1..k. Rhs vertices reuse some
/// lhs ids and may add one new vertex; rhs type edges trace to lhs type edges
/// that touch the context whenever they do.
inline QuasiRule random_deterministic_rule(std::mt19937_64 & rng, const std::vector<Label> & labels)
{
    QuasiRule r;
    r.name = "random";
    VertexId k = 1 + rng() % 2;
    for (VertexId v = 1; v <= k; ++v)
        r.lhs.pattern.add_vertex(v);
    std::uniform_int_distribution<std::size_t> lab(0, labels.size() - 1);
    for (std::size_t i = rng() % 2; i > 0; --i)
        r.lhs.pattern.add_edge(1 + rng() % k, 1 + rng() % k, labels[lab(rng)]);

    auto random_end = [&](const Graph & pattern) {
        std::size_t pick = rng() % (pattern.vertex_count() + 1);
        if (pick == 0)
            return Endpoint::context();
        return Endpoint::vertex(*std::next(pattern.vertices().begin(), static_cast<std::ptrdiff_t>(pick - 1)));
    };
    std::set<TypeEdge> seen;
    for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
        TypeEdge t{random_end(r.lhs.pattern), random_end(r.lhs.pattern)};
        if ((t.src.is_context() && t.tgt.is_context()) || ! seen.insert(t).second)
            continue;
        r.lhs.type.edges.emplace(r.lhs.type.edges.size(), t);
    }

    for (VertexId v = 1; v <= k; ++v)
        if (rng() % 3 != 0)
            r.rhs.pattern.add_vertex(v);
    if (rng() % 2)
        r.rhs.pattern.add_vertex(k + 1);
    if (r.rhs.pattern.vertex_count() > 0 && rng() % 2) {
        std::vector<VertexId> rv(r.rhs.pattern.vertices().begin(), r.rhs.pattern.vertices().end());
        r.rhs.pattern.add_edge(rv[rng() % rv.size()], rv[rng() % rv.size()], "c");
    }
    if (r.rhs.pattern.vertex_count() > 0 && ! r.lhs.type.edges.empty()) {
        for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
            TypeEdge t{random_end(r.rhs.pattern), random_end(r.rhs.pattern)};
            if (t.src.is_context() && t.tgt.is_context())
                continue;
            std::vector<EdgeId> allowed;
            for (const auto & [id, l] : r.lhs.type.edges)
                if (! t.touches_context() || l.touches_context())
                    allowed.push_back(id);
            if (allowed.empty())
                continue;
            EdgeId id = 100 + r.rhs.type.edges.size();
            r.rhs.type.edges.emplace(id, t);
            r.trace.emplace(id, allowed[rng() % allowed.size()]);
        }
    }
    return make_rule(std::move(r));
}

/// One N-of-M request of a wait-for net.
struct Request {
    VertexId requester;
    std::vector<VertexId> targets;
    std::size_t needed;
};

/// Processes 1..processes; request vertices follow.
inline Graph make_waitfor_net(std::size_t processes, const std::vector<Request> & requests)
{
    Graph g;
    for (VertexId v = 1; v <= processes; ++v)
        g.add_vertex(v);
    VertexId next = processes + 1;
    for (const auto & r : requests) {
        VertexId q = next++;
        g.add_vertex(q);
        g.add_edge(r.requester, q, kUnlabeled);
        for (VertexId t : r.targets)
            g.add_edge(q, t, kUnlabeled);
        g.add_edge(q, q, "z");
        for (std::size_t i = 0; i < r.needed; ++i)
            g.add_edge(q, q, "s");
    }
    return g;
}

/// Every net with up to `max_processes` processes and up to `max_requests`
/// requests, each from a distinct requester to a non-empty set of other
/// processes, with every feasible number of needed grants.
inline std::vector<std::pair<std::size_t, std::vector<Request>>> waitfor_family(std::size_t max_processes,
                                                                                std::size_t max_requests)
{
    std::vector<std::pair<std::size_t, std::vector<Request>>> out;
    for (std::size_t p = 1; p <= max_processes; ++p) {
        std::vector<Request> single;
        for (VertexId q = 1; q <= p; ++q) {
            std::vector<VertexId> others;
            for (VertexId v = 1; v <= p; ++v)
                if (v != q)
                    others.push_back(v);
            for (std::size_t mask = 1; mask < (std::size_t{1} << others.size()); ++mask) {
                std::vector<VertexId> ts;
                for (std::size_t i = 0; i < others.size(); ++i)
                    if (mask >> i & 1)
                        ts.push_back(others[i]);
                for (std::size_t n = 1; n <= ts.size(); ++n)
                    single.push_back(Request{q, ts, n});
            }
        }
        out.push_back({p, {}});
        if (max_requests >= 1)
            for (const auto & a : single)
                out.push_back({p, {a}});
        if (max_requests >= 2)
            for (std::size_t i = 0; i < single.size(); ++i)
                for (std::size_t j = i + 1; j < single.size(); ++j)
                    if (single[i].requester < single[j].requester)
                        out.push_back({p, {single[i], single[j]}});
    }
    return out;
}

/// Deadlock freedom by graph reduction: a process without a request is free;
/// a requester becomes free once enough of its targets are free.
inline bool reduction_deadlock_free(std::size_t processes, const std::vector<Request> & requests)
{
    std::set<VertexId> free;
    for (VertexId v = 1; v <= processes; ++v)
        free.insert(v);
    for (const auto & r : requests)
        free.erase(r.requester);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto & r : requests) {
            if (free.contains(r.requester))
                continue;
            std::size_t granted = 0;
            for (VertexId t : r.targets)
                granted += free.contains(t) ? 1 : 0;
            if (granted >= r.needed) {
                free.insert(r.requester);
                changed = true;
            }
        }
    }
    return free.size() == processes;
}

} // namespace pgr::test
