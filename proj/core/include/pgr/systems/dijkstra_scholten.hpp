#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pgr/rewrite.hpp"

namespace pgr {

/// Edge labels of a termination-detection state.
namespace ds {
inline const Label kNetwork = "e";
inline const Label kBasic = "b";
inline const Label kControl = "c";
inline const Label kParent = "p";
inline const Label kInitiator = "i";
inline const Label kInTree = "t";
inline const Label kCounter = "s";
} // namespace ds

const std::string & dijkstra_scholten_rules_text();

/// snd b, rec b-1, rec b-2, rec c, quit, announce.
RuleSystem dijkstra_scholten_system();

/// Processes are the vertices named in `links` plus the initiator. Each
/// undirected link becomes an e-edge in both directions; the initiator gets
/// its i- and t-loop. Throws SelfLoopInTopology for a link (v, v).
Graph ds_initial_network(const std::vector<std::pair<VertexId, VertexId>> & links, VertexId initiator);

/// Whenever announce applies, no basic or control message is in transit and
/// only the initiator is in the tree. Clauses: "basic", "control", "tree".
CheckReport ds_announce_safety(const Graph & state);

struct DsExploreOptions {
    /// Bound on snd b steps taken by each process along one run.
    std::size_t max_sends_per_process = 2;
    std::size_t max_states = 200000;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
};

struct DsExploration {
    /// Distinct (state, remaining send budget) pairs, start first.
    std::vector<Graph> states;
    std::size_t transitions = 0;
    std::size_t announce_states = 0;
    std::size_t terminated_states = 0;
    /// Indices into `states` that fail ds_announce_safety.
    std::vector<std::size_t> unsafe;
    bool truncated = false;
};

/// Breadth-first exploration of the rule system from `start`, with the send
/// budget tracked per process across steps.
DsExploration ds_explore(const Graph & start, const DsExploreOptions & options = {});

} // namespace pgr
