#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgr/error.hpp"

namespace pgr {

using VertexId = std::uint64_t;
using EdgeId = std::uint64_t;
using Label = std::string;

/// Label carried by edges drawn without one (process/request links, for example).
inline const Label kUnlabeled = "_";

struct Edge {
    VertexId src;
    VertexId tgt;
    Label label;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Directed edge-labeled multigraph with opaque integer ids. Vertex ids and
/// edge ids are separate namespaces. Iteration order is always ascending id.
class Graph {
public:
    Graph() = default;

    /// Returns false if the vertex was already present.
    bool add_vertex(VertexId v);
    VertexId add_fresh_vertex();

    /// Throws EdgeIdClash for a used id, UndeclaredEndpoint for unknown endpoints.
    void add_edge(EdgeId id, VertexId src, VertexId tgt, Label label);
    EdgeId add_edge(VertexId src, VertexId tgt, Label label);

    void remove_edge(EdgeId id);

    [[nodiscard]] bool has_vertex(VertexId v) const { return vertices_.contains(v); }
    [[nodiscard]] bool has_edge(EdgeId e) const { return edges_.contains(e); }
    [[nodiscard]] const Edge & edge(EdgeId e) const;

    [[nodiscard]] const std::set<VertexId> & vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::map<EdgeId, Edge> & edges() const noexcept { return edges_; }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] bool empty() const noexcept { return vertices_.empty() && edges_.empty(); }

    /// One past the largest vertex id (0 for a vertex-free graph).
    [[nodiscard]] VertexId next_vertex_id() const noexcept;
    [[nodiscard]] EdgeId next_edge_id() const noexcept;

    [[nodiscard]] std::set<Label> labels() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::set<VertexId> vertices_;
    std::map<EdgeId, Edge> edges_;
};

/// A pair of id maps. Applied to a graph it must cover every id of that graph
/// and be injective there.
struct Renaming {
    std::map<VertexId, VertexId> vertices;
    std::map<EdgeId, EdgeId> edges;

    [[nodiscard]] bool is_injective() const;
    [[nodiscard]] Renaming inverse() const;
    [[nodiscard]] VertexId vertex(VertexId v) const;
    [[nodiscard]] EdgeId edge(EdgeId e) const;

    static Renaming identity(const Graph & g);

    friend bool operator==(const Renaming &, const Renaming &) = default;
};

/// Structured list of violated well-formedness clauses.
struct Violation {
    std::string clause;
    std::string detail;
};

struct CheckReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
    [[nodiscard]] bool has(std::string_view clause) const;
    [[nodiscard]] std::string to_string() const;
    void add(std::string clause, std::string detail);
};

/// Context C, patch J and match M of a host graph.
struct PatchDecomposition {
    Graph context;
    Graph patch;
    Graph match;

    friend bool operator==(const PatchDecomposition &, const PatchDecomposition &) = default;
};

/// Componentwise union; shared vertices fuse, shared edge ids are an error.
Graph graph_union(const Graph & g, const Graph & h);

Graph rename_graph(const Graph & g, const Renaming & phi);

/// No two distinct edges share (source, target, label).
bool is_simple(const Graph & g);

/// Subgraph with the given vertices and every edge among them.
Graph induced_subgraph(const Graph & g, const std::set<VertexId> & vertices);

CheckReport validate_patch(const PatchDecomposition & d);
Graph patch_compose(const PatchDecomposition & d);
PatchDecomposition decompose_at(const Graph & g, const std::set<VertexId> & match_vertices,
                                const std::set<EdgeId> & match_edges);

} // namespace pgr
