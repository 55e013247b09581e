#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgr/match.hpp"

namespace pgr {

/// Witnesses for one rewrite step. `rhs_type` is the rhs patch type moved
/// onto the ids of the rhs pattern copy; `sigma` maps every new patch edge to
/// the old patch edge it stands for.
struct StepCertificate {
    Redex redex;
    Renaming rhs_instance;
    PatchType rhs_type;
    Graph j_prime;
    AdherenceMap hR;
    std::map<EdgeId, EdgeId> sigma;
};

struct StepResult {
    Graph graph;
    StepCertificate certificate;
};

/// Smallest id above every vertex and edge id of g.
std::uint64_t default_fresh_base(const Graph & g);

/// Builds J', hR and sigma for a redex whose rhs copy is already fixed.
/// New edge ids are taken from `next_edge` upward.
void construct_rhs_patch(StepCertificate & cert, std::uint64_t & next_edge);

/// One step at `redex`. Fresh ids start at `fresh_base` (default: above every
/// host id). Throws IdExhaustion on counter overflow and VertexIdClash or
/// EdgeIdClash if an explicit base collides with the context.
StepResult apply_at(const Graph & host, const Redex & redex, std::optional<std::uint64_t> fresh_base = std::nullopt);

/// Declarative re-check of a step against the definition, independent of the
/// construction. Clauses: "redex", "rhs-instance", "result", "hR",
/// "sigma-total", "sigma-bijective", "label", "context".
CheckReport verify_step(const Graph & host, const Graph & result, const StepCertificate & cert);

/// Enumerates every J' (one edge per pair of rhs type edge and lhs patch edge
/// bound to its trace, over all endpoints and labels) that passes
/// verify_step, deduplicated up to isomorphism. Throws BoundTooSmall if the
/// required patch size exceeds `size_bound`.
std::vector<Graph> brute_force_step_oracle(const Graph & host, const Redex & redex, std::size_t size_bound);

/// Host vertices that survive a step, mapped to their result ids: context
/// vertices are kept; a matched vertex survives when its pattern id also
/// occurs in the rhs pattern.
std::map<VertexId, VertexId> vertex_trace(const StepCertificate & cert);

struct Successor {
    std::size_t rule_index;
    std::string rule_name;
    Graph graph;
    StepCertificate certificate;
};

struct SuccessorSet {
    std::vector<Successor> items;
    bool truncated = false;
};

/// All one-step results in rule order then redex order. With `dedup`, later
/// results isomorphic to an earlier one are dropped.
SuccessorSet successors(const Graph & host, const RuleSystem & system, bool dedup,
                        std::size_t cap = kDefaultMapCap);

enum class Strategy { First, Random };

struct NormalizeOptions {
    Strategy strategy = Strategy::First;
    std::uint64_t seed = 0;
    std::size_t max_steps = 10000;
    std::size_t cap = kDefaultMapCap;
};

struct TraceStep {
    std::string rule;
    std::string redex;
};

struct NormalizeResult {
    Graph graph;
    std::vector<TraceStep> trace;
};

/// Raised when max_steps is reached; carries the graph and trace so far.
class StepLimitError : public Error {
public:
    StepLimitError(std::size_t steps, NormalizeResult partial)
        : Error(ErrorKind::StepLimitReached, "no normal form within " + std::to_string(steps) + " steps"),
          partial_(std::move(partial))
    {
    }

    [[nodiscard]] const NormalizeResult & partial() const noexcept { return partial_; }

private:
    NormalizeResult partial_;
};

NormalizeResult normalize(const Graph & host, const RuleSystem & system, const NormalizeOptions & options = {});

/// The same redex expressed on rename_graph(host, phi).
Redex rename_redex(const Redex & redex, const Renaming & phi);

struct DeterminismReport {
    std::size_t hosts = 0;
    std::size_t redexes = 0;
};

/// For every host and redex, applies the rule with two fresh-id bases and on
/// a shuffled copy of the host, and requires isomorphic results. Throws
/// NotDeterministic for quasi rules and DeterminismViolation on a mismatch.
DeterminismReport check_rule_determinism(const QuasiRule & rule, const std::vector<Graph> & hosts,
                                         std::uint64_t seed = 1);

} // namespace pgr
