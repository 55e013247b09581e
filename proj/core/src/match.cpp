#include "pgr/match.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace pgr {

namespace {

using EdgeKey = std::tuple<VertexId, VertexId, Label>;

struct SortKey {
    std::vector<VertexId> image_vertices;
    std::vector<EdgeId> image_edges;
    std::vector<VertexId> vmap;
    std::vector<EdgeId> emap;

    friend auto operator<=>(const SortKey &, const SortKey &) = default;
};

SortKey sort_key(const Renaming & r)
{
    SortKey k;
    for (const auto & [from, to] : r.vertices) {
        k.image_vertices.push_back(to);
        k.vmap.push_back(to);
    }
    for (const auto & [from, to] : r.edges) {
        k.image_edges.push_back(to);
        k.emap.push_back(to);
    }
    std::sort(k.image_vertices.begin(), k.image_vertices.end());
    std::sort(k.image_edges.begin(), k.image_edges.end());
    return k;
}

} // namespace

std::vector<Renaming> find_pattern_embeddings(const Graph & host, const Graph & pattern)
{
    std::vector<Renaming> results;
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return results;

    std::map<EdgeKey, std::vector<EdgeId>> host_edges;
    for (const auto & [id, e] : host.edges())
        host_edges[{e.src, e.tgt, e.label}].push_back(id);
    std::map<EdgeKey, int> pattern_need;
    for (const auto & [id, e] : pattern.edges())
        ++pattern_need[{e.src, e.tgt, e.label}];

    // Pattern vertices in an order that keeps neighbours close together.
    std::vector<VertexId> order;
    {
        std::set<VertexId> placed;
        while (order.size() < pattern.vertex_count()) {
            VertexId best = 0;
            int best_links = -1;
            for (VertexId v : pattern.vertices()) {
                if (placed.contains(v))
                    continue;
                int links = 0;
                for (const auto & [id, e] : pattern.edges())
                    if ((e.src == v && placed.contains(e.tgt)) || (e.tgt == v && placed.contains(e.src)))
                        ++links;
                if (links > best_links) {
                    best = v;
                    best_links = links;
                }
            }
            placed.insert(best);
            order.push_back(best);
        }
    }

    auto available = [&](VertexId hs, VertexId ht, const Label & l) -> int {
        auto it = host_edges.find({hs, ht, l});
        return it == host_edges.end() ? 0 : static_cast<int>(it->second.size());
    };

    Renaming current;
    std::set<VertexId> used_vertices;
    std::vector<std::pair<EdgeId, EdgeKey>> pattern_edge_list;
    for (const auto & [id, e] : pattern.edges())
        pattern_edge_list.push_back({id, {e.src, e.tgt, e.label}});
    std::set<EdgeId> used_edges;

    std::function<void(std::size_t)> assign_edges = [&](std::size_t i) {
        if (i == pattern_edge_list.size()) {
            results.push_back(current);
            return;
        }
        const auto & [pid, key] = pattern_edge_list[i];
        const auto & [s, t, l] = key;
        auto it = host_edges.find({current.vertices.at(s), current.vertices.at(t), l});
        if (it == host_edges.end())
            return;
        for (EdgeId hid : it->second) {
            if (used_edges.contains(hid))
                continue;
            used_edges.insert(hid);
            current.edges[pid] = hid;
            assign_edges(i + 1);
            current.edges.erase(pid);
            used_edges.erase(hid);
        }
    };

    std::function<void(std::size_t)> assign_vertices = [&](std::size_t depth) {
        if (depth == order.size()) {
            assign_edges(0);
            return;
        }
        VertexId x = order[depth];
        for (VertexId y : host.vertices()) {
            if (used_vertices.contains(y))
                continue;
            current.vertices[x] = y;
            bool ok = true;
            for (const auto & [key, need] : pattern_need) {
                const auto & [s, t, l] = key;
                if (s != x && t != x)
                    continue;
                auto si = current.vertices.find(s);
                auto ti = current.vertices.find(t);
                if (si == current.vertices.end() || ti == current.vertices.end())
                    continue;
                if (available(si->second, ti->second, l) < need) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used_vertices.insert(y);
                assign_vertices(depth + 1);
                used_vertices.erase(y);
            }
            current.vertices.erase(x);
        }
    };
    assign_vertices(0);

    std::vector<std::pair<SortKey, std::size_t>> keyed;
    for (std::size_t i = 0; i < results.size(); ++i)
        keyed.push_back({sort_key(results[i]), i});
    std::sort(keyed.begin(), keyed.end());
    std::vector<Renaming> sorted;
    sorted.reserve(results.size());
    for (const auto & [k, i] : keyed)
        sorted.push_back(std::move(results[i]));
    return sorted;
}

namespace {

PatchDecomposition split_at(const Graph & host, const Renaming & embedding)
{
    std::set<VertexId> mv;
    std::set<EdgeId> me;
    for (const auto & [from, to] : embedding.vertices)
        mv.insert(to);
    for (const auto & [from, to] : embedding.edges)
        me.insert(to);
    return decompose_at(host, mv, me);
}

} // namespace

RedexSearch find_redexes(const Graph & host, std::shared_ptr<const QuasiRule> rule, std::size_t cap)
{
    RedexSearch out;
    for (const Renaming & emb : find_pattern_embeddings(host, rule->lhs.pattern)) {
        PatchDecomposition d = split_at(host, emb);
        PatchType type = instantiate_type(rule->lhs.type, emb);
        std::size_t room = cap - out.redexes.size();
        AdherenceEnumeration maps = enumerate_adherence_maps(d.patch, type, d, room);
        for (auto & h : maps.maps)
            out.redexes.push_back(Redex{rule, emb, d, type, std::move(h)});
        if (maps.truncated || out.redexes.size() >= cap) {
            out.truncated = true;
            return out;
        }
    }
    return out;
}

RedexSearch find_redexes(const Graph & host, const QuasiRule & rule, std::size_t cap)
{
    return find_redexes(host, std::make_shared<const QuasiRule>(rule), cap);
}

Redex make_redex(const Graph & host, std::shared_ptr<const QuasiRule> rule, const Renaming & embedding,
                 const AdherenceMap & hL)
{
    if (! embedding.is_injective())
        throw Error(ErrorKind::InvalidRedex, "embedding is not injective");
    for (VertexId v : rule->lhs.pattern.vertices())
        if (! embedding.vertices.contains(v) || ! host.has_vertex(embedding.vertices.at(v)))
            throw Error(ErrorKind::InvalidRedex, "embedding misses pattern vertex " + std::to_string(v));
    for (const auto & [id, e] : rule->lhs.pattern.edges()) {
        auto it = embedding.edges.find(id);
        if (it == embedding.edges.end() || ! host.has_edge(it->second))
            throw Error(ErrorKind::InvalidRedex, "embedding misses pattern edge " + std::to_string(id));
        const Edge & img = host.edge(it->second);
        if (img.src != embedding.vertices.at(e.src) || img.tgt != embedding.vertices.at(e.tgt) || img.label != e.label)
            throw Error(ErrorKind::InvalidRedex, "embedding does not preserve pattern edge " + std::to_string(id));
    }
    PatchDecomposition d = split_at(host, embedding);
    PatchType type = instantiate_type(rule->lhs.type, embedding);
    if (! is_adherence_map(d.patch, type, d, hL))
        throw Error(ErrorKind::InvalidRedex, "not an adherence map for the induced patch");
    return Redex{std::move(rule), embedding, std::move(d), std::move(type), hL};
}

std::string redex_summary(const Redex & r)
{
    std::ostringstream out;
    out << r.rule->name << " {";
    bool first = true;
    for (const auto & [from, to] : r.embedding.vertices) {
        out << (first ? "" : ", ") << from << "->" << to;
        first = false;
    }
    out << "}";
    return out.str();
}

} // namespace pgr
