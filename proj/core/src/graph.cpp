#include "pgr/graph.hpp"

#include <sstream>

namespace pgr {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::EdgeIdClash: return "EdgeIdClash";
    case ErrorKind::VertexIdClash: return "VertexIdClash";
    case ErrorKind::DomainGap: return "DomainGap";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotASubgraph: return "NotASubgraph";
    case ErrorKind::InvalidPatch: return "InvalidPatch";
    case ErrorKind::InvalidPatchType: return "InvalidPatchType";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::ContextPreservationViolation: return "ContextPreservationViolation";
    case ErrorKind::SharedName: return "SharedName";
    case ErrorKind::DanglingRhsName: return "DanglingRhsName";
    case ErrorKind::UnknownTraceKey: return "UnknownTraceKey";
    case ErrorKind::DuplicateTraceKey: return "DuplicateTraceKey";
    case ErrorKind::PositionMismatch: return "PositionMismatch";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::IdExhaustion: return "IdExhaustion";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::StepLimitReached: return "StepLimitReached";
    case ErrorKind::DeterminismViolation: return "DeterminismViolation";
    case ErrorKind::NotDeterministic: return "NotDeterministic";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::SelfLoopInTopology: return "SelfLoopInTopology";
    case ErrorKind::AlphabetClash: return "AlphabetClash";
    case ErrorKind::InvalidRedex: return "InvalidRedex";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UndeclaredEndpoint: return "UndeclaredEndpoint";
    case ErrorKind::UnknownName: return "UnknownName";
    }
    return "Unknown";
}

bool Graph::add_vertex(VertexId v)
{
    return vertices_.insert(v).second;
}

VertexId Graph::add_fresh_vertex()
{
    VertexId v = next_vertex_id();
    vertices_.insert(v);
    return v;
}

void Graph::add_edge(EdgeId id, VertexId src, VertexId tgt, Label label)
{
    if (edges_.contains(id))
        throw Error(ErrorKind::EdgeIdClash, "edge id " + std::to_string(id) + " already in use");
    if (! vertices_.contains(src))
        throw Error(ErrorKind::UndeclaredEndpoint, "source vertex " + std::to_string(src) + " not in graph");
    if (! vertices_.contains(tgt))
        throw Error(ErrorKind::UndeclaredEndpoint, "target vertex " + std::to_string(tgt) + " not in graph");
    edges_.emplace(id, Edge{src, tgt, std::move(label)});
}

EdgeId Graph::add_edge(VertexId src, VertexId tgt, Label label)
{
    EdgeId id = next_edge_id();
    add_edge(id, src, tgt, std::move(label));
    return id;
}

void Graph::remove_edge(EdgeId id)
{
    edges_.erase(id);
}

const Edge & Graph::edge(EdgeId e) const
{
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw Error(ErrorKind::DomainGap, "no edge " + std::to_string(e));
    return it->second;
}

VertexId Graph::next_vertex_id() const noexcept
{
    return vertices_.empty() ? 0 : *vertices_.rbegin() + 1;
}

EdgeId Graph::next_edge_id() const noexcept
{
    return edges_.empty() ? 0 : edges_.rbegin()->first + 1;
}

std::set<Label> Graph::labels() const
{
    std::set<Label> result;
    for (const auto & [id, e] : edges_)
        result.insert(e.label);
    return result;
}

bool Renaming::is_injective() const
{
    std::set<VertexId> vimg;
    for (const auto & [from, to] : vertices)
        if (! vimg.insert(to).second)
            return false;
    std::set<EdgeId> eimg;
    for (const auto & [from, to] : edges)
        if (! eimg.insert(to).second)
            return false;
    return true;
}

Renaming Renaming::inverse() const
{
    if (! is_injective())
        throw Error(ErrorKind::NotBijective, "renaming is not injective");
    Renaming inv;
    for (const auto & [from, to] : vertices)
        inv.vertices.emplace(to, from);
    for (const auto & [from, to] : edges)
        inv.edges.emplace(to, from);
    return inv;
}

VertexId Renaming::vertex(VertexId v) const
{
    auto it = vertices.find(v);
    if (it == vertices.end())
        throw Error(ErrorKind::DomainGap, "renaming has no image for vertex " + std::to_string(v));
    return it->second;
}

EdgeId Renaming::edge(EdgeId e) const
{
    auto it = edges.find(e);
    if (it == edges.end())
        throw Error(ErrorKind::DomainGap, "renaming has no image for edge " + std::to_string(e));
    return it->second;
}

Renaming Renaming::identity(const Graph & g)
{
    Renaming r;
    for (VertexId v : g.vertices())
        r.vertices.emplace(v, v);
    for (const auto & [id, e] : g.edges())
        r.edges.emplace(id, id);
    return r;
}

bool CheckReport::has(std::string_view clause) const
{
    for (const auto & v : violations)
        if (v.clause == clause)
            return true;
    return false;
}

std::string CheckReport::to_string() const
{
    if (violations.empty())
        return "ok";
    std::ostringstream out;
    for (const auto & v : violations)
        out << v.clause << ": " << v.detail << "\n";
    return out.str();
}

void CheckReport::add(std::string clause, std::string detail)
{
    violations.push_back(Violation{std::move(clause), std::move(detail)});
}

Graph graph_union(const Graph & g, const Graph & h)
{
    Graph result = g;
    for (VertexId v : h.vertices())
        result.add_vertex(v);
    for (const auto & [id, e] : h.edges()) {
        if (result.has_edge(id))
            throw Error(ErrorKind::EdgeIdClash, "graph union requires disjoint edge sets; edge " + std::to_string(id) + " is shared");
        result.add_edge(id, e.src, e.tgt, e.label);
    }
    return result;
}

Graph rename_graph(const Graph & g, const Renaming & phi)
{
    Graph result;
    for (VertexId v : g.vertices()) {
        VertexId image = phi.vertex(v);
        if (! result.add_vertex(image))
            throw Error(ErrorKind::NotBijective, "two vertices renamed to " + std::to_string(image));
    }
    for (const auto & [id, e] : g.edges()) {
        EdgeId image = phi.edge(id);
        if (result.has_edge(image))
            throw Error(ErrorKind::NotBijective, "two edges renamed to " + std::to_string(image));
        result.add_edge(image, phi.vertex(e.src), phi.vertex(e.tgt), e.label);
    }
    return result;
}

bool is_simple(const Graph & g)
{
    std::set<Edge> triples;
    for (const auto & [id, e] : g.edges())
        if (! triples.insert(e).second)
            return false;
    return true;
}

Graph induced_subgraph(const Graph & g, const std::set<VertexId> & vertices)
{
    Graph result;
    for (VertexId v : vertices)
        if (g.has_vertex(v))
            result.add_vertex(v);
    for (const auto & [id, e] : g.edges())
        if (result.has_vertex(e.src) && result.has_vertex(e.tgt))
            result.add_edge(id, e.src, e.tgt, e.label);
    return result;
}

CheckReport validate_patch(const PatchDecomposition & d)
{
    CheckReport report;
    const Graph & c = d.context;
    const Graph & m = d.match;
    const Graph & j = d.patch;

    for (VertexId v : c.vertices())
        if (m.has_vertex(v))
            report.add("disjoint", "vertex " + std::to_string(v) + " is in both context and match");
    for (const auto & [id, e] : c.edges())
        if (m.has_edge(id))
            report.add("disjoint", "edge " + std::to_string(id) + " is in both context and match");

    std::set<VertexId> endpoints;
    for (const auto & [id, e] : j.edges()) {
        if (c.has_edge(id) || m.has_edge(id))
            report.add("edge-disjoint", "patch edge " + std::to_string(id) + " also occurs in context or match");
        endpoints.insert(e.src);
        endpoints.insert(e.tgt);
        bool src_c = c.has_vertex(e.src), src_m = m.has_vertex(e.src);
        bool tgt_c = c.has_vertex(e.tgt), tgt_m = m.has_vertex(e.tgt);
        bool allowed = (src_c && tgt_m) || (src_m && tgt_c) || (src_m && tgt_m);
        if (! allowed)
            report.add("endpoints", "patch edge " + std::to_string(id) + " (" + std::to_string(e.src) + " -> " +
                                        std::to_string(e.tgt) + ") does not connect the match to the context or itself");
    }
    if (endpoints != j.vertices())
        report.add("vertex-set", "patch vertices must be exactly the endpoints of patch edges");
    return report;
}

Graph patch_compose(const PatchDecomposition & d)
{
    CheckReport report = validate_patch(d);
    if (! report.ok())
        throw Error(ErrorKind::InvalidPatch, report.to_string());
    return graph_union(graph_union(d.context, d.patch), d.match);
}

PatchDecomposition decompose_at(const Graph & g, const std::set<VertexId> & match_vertices,
                                const std::set<EdgeId> & match_edges)
{
    PatchDecomposition d;
    for (VertexId v : match_vertices) {
        if (! g.has_vertex(v))
            throw Error(ErrorKind::NotASubgraph, "vertex " + std::to_string(v) + " not in host");
        d.match.add_vertex(v);
    }
    for (EdgeId id : match_edges) {
        if (! g.has_edge(id))
            throw Error(ErrorKind::NotASubgraph, "edge " + std::to_string(id) + " not in host");
        const Edge & e = g.edge(id);
        if (! match_vertices.contains(e.src) || ! match_vertices.contains(e.tgt))
            throw Error(ErrorKind::NotASubgraph, "edge " + std::to_string(id) + " has an endpoint outside the match vertices");
        d.match.add_edge(id, e.src, e.tgt, e.label);
    }
    for (VertexId v : g.vertices())
        if (! match_vertices.contains(v))
            d.context.add_vertex(v);
    for (const auto & [id, e] : g.edges()) {
        if (match_edges.contains(id))
            continue;
        if (d.context.has_vertex(e.src) && d.context.has_vertex(e.tgt)) {
            d.context.add_edge(id, e.src, e.tgt, e.label);
        }
        else {
            d.patch.add_vertex(e.src);
            d.patch.add_vertex(e.tgt);
            d.patch.add_edge(id, e.src, e.tgt, e.label);
        }
    }
    return d;
}

} // namespace pgr
