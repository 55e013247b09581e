#include <algorithm>
#include <functional>

#include "pgr/isomorphism.hpp"
#include "pgr/rule.hpp"

namespace pgr {

namespace {

const Label kContextMarker = "#ctx";
const Label kTypeLabel = "#type";

// A scheme flattened into one graph: pattern edges keep their labels behind a
// prefix, type edges become "#type" edges, and the context node is pinned by
// a marker loop that nothing else can carry.
struct SchemeGraph {
    Graph g;
    VertexId ctx = 0;
};

SchemeGraph flatten(const Scheme & s)
{
    SchemeGraph out;
    out.g = Graph();
    for (VertexId v : s.pattern.vertices())
        out.g.add_vertex(v);
    out.ctx = s.pattern.next_vertex_id();
    out.g.add_vertex(out.ctx);
    for (const auto & [id, e] : s.pattern.edges())
        out.g.add_edge(e.src, e.tgt, "p/" + e.label);
    auto resolve = [&](const Endpoint & e) { return e.is_context() ? out.ctx : e.id(); };
    for (const auto & [id, t] : s.type.edges)
        out.g.add_edge(resolve(t.src), resolve(t.tgt), kTypeLabel);
    out.g.add_edge(out.ctx, out.ctx, kContextMarker);
    return out;
}

using EndpointPair = std::pair<Endpoint, Endpoint>;

Endpoint map_endpoint(const Endpoint & e, const VertexMap & vmap)
{
    return e.is_context() ? e : Endpoint::vertex(vmap.at(e.id()));
}

// Type edge ids grouped by endpoints.
std::map<EndpointPair, std::vector<EdgeId>> classes_of(const PatchType & t, const VertexMap * vmap)
{
    std::map<EndpointPair, std::vector<EdgeId>> out;
    for (const auto & [id, te] : t.edges) {
        EndpointPair key = vmap == nullptr ? EndpointPair{te.src, te.tgt}
                                           : EndpointPair{map_endpoint(te.src, *vmap), map_endpoint(te.tgt, *vmap)};
        out[key].push_back(id);
    }
    return out;
}

VertexMap strip_context(const VertexMap & vmap, VertexId ctx)
{
    VertexMap out;
    for (const auto & [a, b] : vmap)
        if (a != ctx)
            out.emplace(a, b);
    return out;
}

} // namespace

std::optional<RuleRenaming> rules_isomorphic(const QuasiRule & r1, const QuasiRule & r2)
{
    if (r1.lhs.type.edges.size() != r2.lhs.type.edges.size() || r1.rhs.type.edges.size() != r2.rhs.type.edges.size())
        return std::nullopt;

    SchemeGraph l1 = flatten(r1.lhs), l2 = flatten(r2.lhs);
    SchemeGraph rr1 = flatten(r1.rhs), rr2 = flatten(r2.rhs);

    std::optional<RuleRenaming> found;

    for_each_vertex_isomorphism(l1.g, l2.g, [&](const VertexMap & lmap_full) {
        VertexMap lmap = strip_context(lmap_full, l1.ctx);
        Renaming lhs_ren = complete_edge_bijection(r1.lhs.pattern, r2.lhs.pattern, lmap);

        auto src_classes = classes_of(r1.lhs.type, &lmap);
        auto dst_classes = classes_of(r2.lhs.type, nullptr);
        std::vector<std::vector<EdgeId>> from, to;
        for (auto & [key, ids] : src_classes) {
            from.push_back(ids);
            to.push_back(dst_classes.at(key));
        }
        for (auto & ids : to)
            std::sort(ids.begin(), ids.end());

        // Tries every pairing of parallel lhs type edges.
        std::function<bool(std::size_t)> permute = [&](std::size_t k) -> bool {
            if (k < to.size()) {
                do {
                    if (permute(k + 1))
                        return true;
                } while (std::next_permutation(to[k].begin(), to[k].end()));
                return false;
            }
            std::map<EdgeId, EdgeId> lhs_type;
            for (std::size_t c = 0; c < from.size(); ++c)
                for (std::size_t i = 0; i < from[c].size(); ++i)
                    lhs_type.emplace(from[c][i], to[c][i]);

            return for_each_vertex_isomorphism(rr1.g, rr2.g, [&](const VertexMap & rmap_full) {
                VertexMap rmap = strip_context(rmap_full, rr1.ctx);
                auto rsrc = classes_of(r1.rhs.type, &rmap);
                auto rdst = classes_of(r2.rhs.type, nullptr);
                std::map<EdgeId, EdgeId> rhs_type;
                for (const auto & [key, ids] : rsrc) {
                    const auto & targets = rdst.at(key);
                    std::vector<std::pair<EdgeId, EdgeId>> a, b;
                    for (EdgeId t : ids)
                        a.push_back({lhs_type.at(r1.trace.at(t)), t});
                    for (EdgeId t : targets)
                        b.push_back({r2.trace.at(t), t});
                    std::sort(a.begin(), a.end());
                    std::sort(b.begin(), b.end());
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        if (a[i].first != b[i].first)
                            return false;
                        rhs_type.emplace(a[i].second, b[i].second);
                    }
                }
                found = RuleRenaming{lhs_ren, complete_edge_bijection(r1.rhs.pattern, r2.rhs.pattern, rmap),
                                     lhs_type, rhs_type};
                return true;
            });
        };
        return permute(0);
    });
    return found;
}

} // namespace pgr
