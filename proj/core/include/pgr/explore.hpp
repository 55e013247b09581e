#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "pgr/rewrite.hpp"

namespace pgr {

struct ExploreOptions {
    std::size_t max_states = 200000;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
    std::size_t cap = kDefaultMapCap;
};

struct Transition {
    std::size_t rule_index;
    std::size_t target;
};

/// Reachable states up to isomorphism, in breadth-first discovery order.
/// State 0 is the start graph.
struct StateSpace {
    std::vector<Graph> states;
    std::vector<std::size_t> depth;
    std::vector<std::vector<Transition>> transitions;
    /// True if max_states, max_depth or the redex cap cut the search short.
    bool truncated = false;

    /// States without outgoing transitions (only meaningful below max_depth).
    [[nodiscard]] std::vector<std::size_t> terminal_states() const;
};

StateSpace explore(const Graph & start, const RuleSystem & system, const ExploreOptions & options = {});

/// Distinct normal forms reachable from `start` (exhaustive).
std::vector<Graph> reachable_normal_forms(const Graph & start, const RuleSystem & system,
                                          const ExploreOptions & options = {});

} // namespace pgr
