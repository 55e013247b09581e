#include "pgr/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <vector>

namespace pgr {

namespace {

using LabelCounts = std::map<Label, int>;

struct Adjacency {
    // out[u][v] = label multiset of edges u -> v
    std::map<VertexId, std::map<VertexId, LabelCounts>> out;

    explicit Adjacency(const Graph & g)
    {
        for (const auto & [id, e] : g.edges())
            ++out[e.src][e.tgt][e.label];
    }

    const LabelCounts * between(VertexId u, VertexId v) const
    {
        auto it = out.find(u);
        if (it == out.end())
            return nullptr;
        auto jt = it->second.find(v);
        return jt == it->second.end() ? nullptr : &jt->second;
    }
};

bool same_counts(const LabelCounts * a, const LabelCounts * b)
{
    if (a == nullptr || a->empty())
        return b == nullptr || b->empty();
    return b != nullptr && *a == *b;
}

// (label, kind) -> count where kind is 0 = out, 1 = in, 2 = loop
using Signature = std::map<std::pair<Label, int>, int>;

std::map<VertexId, Signature> signatures(const Graph & g)
{
    std::map<VertexId, Signature> sig;
    for (VertexId v : g.vertices())
        sig[v];
    for (const auto & [id, e] : g.edges()) {
        if (e.src == e.tgt) {
            ++sig[e.src][{e.label, 2}];
        }
        else {
            ++sig[e.src][{e.label, 0}];
            ++sig[e.tgt][{e.label, 1}];
        }
    }
    return sig;
}

std::map<Label, int> label_multiset(const Graph & g)
{
    std::map<Label, int> m;
    for (const auto & [id, e] : g.edges())
        ++m[e.label];
    return m;
}

} // namespace

bool for_each_vertex_isomorphism(const Graph & g, const Graph & h,
                                 const std::function<bool(const VertexMap &)> & visit)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    if (label_multiset(g) != label_multiset(h))
        return false;

    auto sig_g = signatures(g);
    auto sig_h = signatures(h);

    std::map<Signature, int> hist_g, hist_h;
    for (const auto & [v, s] : sig_g)
        ++hist_g[s];
    for (const auto & [v, s] : sig_h)
        ++hist_h[s];
    if (hist_g != hist_h)
        return false;

    Adjacency adj_g(g), adj_h(h);

    // Order: repeatedly take the unplaced vertex with most edges to placed
    // vertices, ties broken by degree and then id.
    std::vector<VertexId> order;
    {
        std::map<VertexId, int> degree;
        for (VertexId v : g.vertices())
            for (const auto & [k, c] : sig_g[v])
                degree[v] += c;
        std::set<VertexId> placed;
        std::map<VertexId, int> links;
        while (order.size() < g.vertex_count()) {
            VertexId best = 0;
            bool found = false;
            for (VertexId v : g.vertices()) {
                if (placed.contains(v))
                    continue;
                if (! found || std::tie(links[v], degree[v]) > std::tie(links[best], degree[best])) {
                    best = v;
                    found = true;
                }
            }
            placed.insert(best);
            order.push_back(best);
            for (const auto & [id, e] : g.edges()) {
                if (e.src == best && ! placed.contains(e.tgt))
                    ++links[e.tgt];
                if (e.tgt == best && ! placed.contains(e.src))
                    ++links[e.src];
            }
        }
    }

    std::map<VertexId, std::vector<VertexId>> candidates;
    for (VertexId v : g.vertices())
        for (VertexId w : h.vertices())
            if (sig_g[v] == sig_h[w])
                candidates[v].push_back(w);

    VertexMap mapping;
    std::set<VertexId> used;

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == order.size())
            return visit(mapping);
        VertexId x = order[depth];
        for (VertexId y : candidates[x]) {
            if (used.contains(y))
                continue;
            if (! same_counts(adj_g.between(x, x), adj_h.between(y, y)))
                continue;
            bool consistent = true;
            for (const auto & [xp, yp] : mapping) {
                if (! same_counts(adj_g.between(x, xp), adj_h.between(y, yp)) ||
                    ! same_counts(adj_g.between(xp, x), adj_h.between(yp, y))) {
                    consistent = false;
                    break;
                }
            }
            if (! consistent)
                continue;
            mapping.emplace(x, y);
            used.insert(y);
            if (extend(depth + 1))
                return true;
            mapping.erase(x);
            used.erase(y);
        }
        return false;
    };
    return extend(0);
}

Renaming complete_edge_bijection(const Graph & g, const Graph & h, const VertexMap & vmap)
{
    Renaming phi;
    phi.vertices = vmap;
    std::map<Edge, std::vector<EdgeId>> pool;
    for (const auto & [id, e] : h.edges())
        pool[e].push_back(id);
    for (auto & [e, ids] : pool)
        std::reverse(ids.begin(), ids.end());
    for (const auto & [id, e] : g.edges()) {
        Edge image{vmap.at(e.src), vmap.at(e.tgt), e.label};
        auto it = pool.find(image);
        if (it == pool.end() || it->second.empty())
            throw Error(ErrorKind::NotBijective, "vertex map does not preserve edge multisets");
        phi.edges.emplace(id, it->second.back());
        it->second.pop_back();
    }
    return phi;
}

std::optional<Renaming> find_isomorphism(const Graph & g, const Graph & h)
{
    std::optional<Renaming> result;
    for_each_vertex_isomorphism(g, h, [&](const VertexMap & vmap) {
        result = complete_edge_bijection(g, h, vmap);
        return true;
    });
    return result;
}

namespace {

// Canonical labelling by colour refinement and individualisation.
class Canonicalizer {
public:
    explicit Canonicalizer(const Graph & g) : g_(g)
    {
        for (VertexId v : g.vertices()) {
            index_.emplace(v, ids_.size());
            ids_.push_back(v);
        }
        std::map<Label, int> label_index;
        for (const auto & [id, e] : g.edges())
            label_index.emplace(e.label, 0);
        int next = 0;
        for (auto & [l, i] : label_index)
            i = next++;
        labels_ = label_index;
        out_.resize(ids_.size());
        in_.resize(ids_.size());
        for (const auto & [id, e] : g.edges()) {
            int s = index_.at(e.src), t = index_.at(e.tgt), l = label_index.at(e.label);
            out_[s].push_back({t, l});
            in_[t].push_back({s, l});
        }
    }

    std::vector<int> run()
    {
        std::vector<int> colours(ids_.size(), 0);
        refine(colours);
        search(colours);
        return best_order_;
    }

    const std::vector<VertexId> & ids() const { return ids_; }

private:
    struct Arc {
        int other;
        int label;
    };

    // Splits colour classes until stable. Colours stay ordered consistently
    // with the previous partition, so the result is isomorphism-invariant.
    void refine(std::vector<int> & colours) const
    {
        std::size_t n = colours.size();
        std::size_t classes = count_classes(colours);
        while (true) {
            using Sig = std::tuple<int, std::vector<std::tuple<int, int, int>>, std::vector<std::tuple<int, int, int>>>;
            std::vector<Sig> sigs(n);
            for (std::size_t v = 0; v < n; ++v) {
                std::vector<std::tuple<int, int, int>> outs, ins;
                for (const Arc & a : out_[v])
                    outs.emplace_back(a.label, colours[a.other], a.other == static_cast<int>(v) ? 1 : 0);
                for (const Arc & a : in_[v])
                    ins.emplace_back(a.label, colours[a.other], a.other == static_cast<int>(v) ? 1 : 0);
                std::sort(outs.begin(), outs.end());
                std::sort(ins.begin(), ins.end());
                sigs[v] = Sig{colours[v], std::move(outs), std::move(ins)};
            }
            std::vector<Sig> distinct = sigs;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (std::size_t v = 0; v < n; ++v)
                colours[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) - distinct.begin());
            std::size_t now = distinct.size();
            if (now == classes)
                break;
            classes = now;
        }
    }

    static std::size_t count_classes(const std::vector<int> & colours)
    {
        std::set<int> s(colours.begin(), colours.end());
        return s.size();
    }

    using Encoding = std::vector<std::tuple<int, int, int>>;

    Encoding encode(const std::vector<int> & rank) const
    {
        Encoding enc;
        for (std::size_t v = 0; v < out_.size(); ++v)
            for (const Arc & a : out_[v])
                enc.emplace_back(rank[v], rank[a.other], a.label);
        std::sort(enc.begin(), enc.end());
        return enc;
    }

    // Swapping u and w preserves every arc, given the current colouring.
    bool transposition_is_automorphism(int u, int w) const
    {
        auto swap_v = [&](int x) { return x == u ? w : (x == w ? u : x); };
        auto collect = [&](int v, bool mapped) {
            std::vector<std::tuple<int, int, int>> arcs;
            for (const Arc & a : out_[v])
                arcs.emplace_back(0, mapped ? swap_v(a.other) : a.other, a.label);
            for (const Arc & a : in_[v])
                arcs.emplace_back(1, mapped ? swap_v(a.other) : a.other, a.label);
            std::sort(arcs.begin(), arcs.end());
            return arcs;
        };
        return collect(u, true) == collect(w, false);
    }

    void search(const std::vector<int> & colours)
    {
        std::size_t n = colours.size();
        std::map<int, std::vector<int>> cells;
        for (std::size_t v = 0; v < n; ++v)
            cells[colours[v]].push_back(static_cast<int>(v));

        const std::vector<int> * target = nullptr;
        for (const auto & [c, members] : cells) {
            if (members.size() > 1) {
                target = &members;
                break;
            }
        }
        if (target == nullptr) {
            Encoding enc = encode(colours);
            if (! have_best_ || enc < best_encoding_) {
                best_encoding_ = std::move(enc);
                best_order_ = colours;
                have_best_ = true;
            }
            return;
        }

        std::vector<int> representatives;
        for (int v : *target) {
            bool covered = false;
            for (int r : representatives) {
                if (transposition_is_automorphism(r, v)) {
                    covered = true;
                    break;
                }
            }
            if (! covered)
                representatives.push_back(v);
        }

        int cell_colour = colours[target->front()];
        for (int v : representatives) {
            // Individualise v: it keeps the cell's position, everything at or
            // beyond that position shifts up by one.
            std::vector<int> next(n);
            for (std::size_t u = 0; u < n; ++u) {
                if (static_cast<int>(u) == v)
                    next[u] = 2 * cell_colour;
                else
                    next[u] = colours[u] < cell_colour ? 2 * colours[u] : 2 * colours[u] + 1;
            }
            refine(next);
            search(next);
        }
    }

    const Graph & g_;
    std::vector<VertexId> ids_;
    std::map<VertexId, int> index_;
    std::map<Label, int> labels_;
    std::vector<std::vector<Arc>> out_, in_;

    bool have_best_ = false;
    Encoding best_encoding_;
    std::vector<int> best_order_;
};

} // namespace

Renaming canonical_labeling(const Graph & g)
{
    Canonicalizer canon(g);
    std::vector<int> rank = canon.run();
    Renaming phi;
    const auto & ids = canon.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        phi.vertices.emplace(ids[i], static_cast<VertexId>(rank[i]));

    std::vector<std::pair<Edge, EdgeId>> images;
    for (const auto & [id, e] : g.edges())
        images.push_back({Edge{phi.vertices.at(e.src), phi.vertices.at(e.tgt), e.label}, id});
    std::sort(images.begin(), images.end());
    for (std::size_t i = 0; i < images.size(); ++i)
        phi.edges.emplace(images[i].second, static_cast<EdgeId>(i));
    return phi;
}

Graph canonical_form(const Graph & g)
{
    return rename_graph(g, canonical_labeling(g));
}

std::string canonical_key(const Graph & g)
{
    Graph c = canonical_form(g);
    std::ostringstream out;
    out << c.vertex_count() << '|';
    for (const auto & [id, e] : c.edges())
        out << e.src << ',' << e.tgt << ',' << e.label.size() << ':' << e.label << ';';
    return out.str();
}

} // namespace pgr
