#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "pgr/graph.hpp"

namespace pgr {

using VertexMap = std::map<VertexId, VertexId>;

/// Backtracking search over vertex bijections g -> h that preserve the edge
/// multiset between every ordered vertex pair (loops included). Candidates are
/// pruned by per-label in/out/loop degree signatures. `visit` returns true to
/// stop; the function returns true iff it was stopped.
bool for_each_vertex_isomorphism(const Graph & g, const Graph & h,
                                 const std::function<bool(const VertexMap &)> & visit);

/// Extends a multiset-preserving vertex bijection to a full renaming by pairing
/// parallel edges in ascending id order.
Renaming complete_edge_bijection(const Graph & g, const Graph & h, const VertexMap & vmap);

/// A witness phi with rename_graph(g, phi) == h, if one exists.
std::optional<Renaming> find_isomorphism(const Graph & g, const Graph & h);

inline bool isomorphic(const Graph & g, const Graph & h) { return find_isomorphism(g, h).has_value(); }

/// Renaming onto vertex ids 0..n-1 and edge ids 0..m-1 such that isomorphic
/// graphs receive identical images. Computed by colour refinement plus
/// individualisation, keeping the lexicographically least edge encoding.
Renaming canonical_labeling(const Graph & g);

Graph canonical_form(const Graph & g);

/// Compact string of the canonical form, suitable as a hash key.
std::string canonical_key(const Graph & g);

} // namespace pgr
