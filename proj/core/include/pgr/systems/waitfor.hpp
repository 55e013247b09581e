#pragma once

#include <cstddef>
#include <string>

#include "pgr/rewrite.hpp"

namespace pgr {

/// Wait-for nets as multigraphs. Processes are loop-free vertices; a request
/// is a vertex with one z-loop, one s-loop per grant still outstanding, one
/// `_` edge from its requester and one `_` edge to each target.
inline const Label kWaitZ = "z";
inline const Label kWaitS = "s";

/// Rule text of every wait-for rule in the library.
const std::string & waitfor_rules_text();

/// create, 1-of-1, ext-0, ext-1.
RuleSystem waitfor_grammar();

/// create, destroy, grant, resolve, clone-1, clone-2, and the N-of-M rules
/// for 1 <= N <= M <= max_arity.
RuleSystem waitfor_system(std::size_t max_arity = 2);

/// grant, resolve, destroy.
RuleSystem deadlock_detection_system();

/// Atomic N-of-M request: a requester without outgoing request asks m
/// distinct processes and needs n grants. Throws BadArity unless 0 < n <= m.
QuasiRule make_n_of_m_rule(std::size_t n, std::size_t m);

enum class WaitForPhase {
    /// Freshly built by the grammar: every request has s-loops and targets.
    Built,
    /// During execution: grants may have used up s-loops and targets.
    Running,
};

/// Clauses: "labels", "loops", "request-in", "request-out", "process-out",
/// "process-in", "pending".
CheckReport check_waitfor_net(const Graph & g, WaitForPhase phase = WaitForPhase::Running);

enum class DeadlockVerdict { DeadlockFree, Deadlocked };

struct DeadlockResult {
    DeadlockVerdict verdict;
    Graph normal_form;
    std::size_t steps = 0;
};

/// Normalizes under deadlock_detection_system(). The net is deadlock free iff
/// it drains to the empty graph. Throws StepLimitError past max_steps.
DeadlockResult detect_deadlock(const Graph & net, std::size_t max_steps = 10000);

std::string to_string(DeadlockVerdict v);

} // namespace pgr
