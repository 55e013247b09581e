#pragma once

#include <string>

#include "pgr/match.hpp"

namespace pgr {

/// Graphviz text for g. With a redex, match vertices and edges are drawn
/// thick green and patch edges dotted red. Output depends only on the inputs.
std::string export_dot(const Graph & g, const Redex * highlight = nullptr, const std::string & name = "g");

} // namespace pgr
