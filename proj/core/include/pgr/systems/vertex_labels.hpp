#pragma once

#include <map>

#include "pgr/rule.hpp"

namespace pgr {

enum class VertexLabelMode {
    /// v -a-> v for a vertex labelled a.
    Loops,
    /// A fresh root r with r -a-> v for every vertex v labelled a.
    Root,
};

/// Adds the label encoding to g. Every vertex needs a label (DomainGap
/// otherwise). In Loops mode the vertex labels must not occur as edge labels
/// of g (AlphabetClash). In Root mode the root gets id g.next_vertex_id().
Graph encode_vertex_labels(const Graph & g, const std::map<VertexId, Label> & labels, VertexLabelMode mode);

/// Loops mode: drops every loop of a vertex labelled `a` except its label loop.
QuasiRule drop_loops_rule(const Label & a);

/// Root mode: drops every loop of any non-root vertex, whatever its label.
QuasiRule drop_loops_root_rule();

} // namespace pgr
