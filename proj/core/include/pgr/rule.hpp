#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgr/graph.hpp"

namespace pgr {

/// Endpoint of a patch type edge: a pattern vertex or the context node.
class Endpoint {
public:
    Endpoint() = default;

    static Endpoint context() noexcept { return Endpoint(); }
    static Endpoint vertex(VertexId v) noexcept
    {
        Endpoint e;
        e.context_ = false;
        e.id_ = v;
        return e;
    }

    [[nodiscard]] bool is_context() const noexcept { return context_; }
    /// Throws DomainGap for the context node.
    [[nodiscard]] VertexId id() const;

    friend bool operator==(const Endpoint &, const Endpoint &) = default;
    friend std::strong_ordering operator<=>(const Endpoint & a, const Endpoint & b) noexcept
    {
        if (auto c = b.context_ <=> a.context_; c != 0)
            return c;
        return a.id_ <=> b.id_;
    }

private:
    bool context_ = true;
    VertexId id_ = 0;
};

std::string to_string(const Endpoint & e);

struct TypeEdge {
    Endpoint src;
    Endpoint tgt;

    [[nodiscard]] bool touches_context() const noexcept { return src.is_context() || tgt.is_context(); }

    friend bool operator==(const TypeEdge &, const TypeEdge &) = default;
    friend auto operator<=>(const TypeEdge &, const TypeEdge &) = default;
};

/// Unlabeled patch over a pattern and the context node.
struct PatchType {
    std::map<EdgeId, TypeEdge> edges;

    /// No two type edges share both endpoints.
    [[nodiscard]] bool is_simple() const;

    friend bool operator==(const PatchType &, const PatchType &) = default;
};

struct Scheme {
    Graph pattern;
    PatchType type;

    friend bool operator==(const Scheme &, const Scheme &) = default;
};

/// A rule between two schemes. `trace` maps every rhs type edge to an lhs
/// type edge. `keys` are the surface names of lhs type edges.
///
/// Pattern vertex ids of lhs and rhs may coincide; a shared id marks the
/// same node position and is used only to track vertices through a step.
struct QuasiRule {
    std::string name;
    Scheme lhs;
    Scheme rhs;
    std::map<EdgeId, EdgeId> trace;
    bool deterministic = true;
    std::map<EdgeId, std::string> keys;

    friend bool operator==(const QuasiRule &, const QuasiRule &) = default;
};

/// Ordered rule set; order fixes the "first" strategy.
struct RuleSystem {
    std::string name;
    std::vector<std::shared_ptr<const QuasiRule>> rules;

    void add(QuasiRule r) { rules.push_back(std::make_shared<const QuasiRule>(std::move(r))); }
    /// Null if absent.
    [[nodiscard]] std::shared_ptr<const QuasiRule> find(const std::string & rule_name) const;
};

using AdherenceMap = std::map<EdgeId, EdgeId>;

inline constexpr std::size_t kDefaultMapCap = 4096;

CheckReport validate_patch_type(const PatchType & type, const Graph & pattern);

/// Clauses: "lhs-type", "rhs-type", "trace-total", "trace-range",
/// "context-preservation", "deterministic-flag".
CheckReport validate_quasi_rule(const QuasiRule & r);

/// Renumbers type edges (lhs 0..k-1, rhs k.. in ascending old id), fills in
/// missing keys, derives the deterministic flag and validates. Throws
/// ContextPreservationViolation or InvalidRule.
QuasiRule make_rule(QuasiRule r);

/// Moves a pattern-level patch type onto host ids through an embedding.
PatchType instantiate_type(const PatchType & type, const Renaming & embedding);

/// Adherence of a single patch edge to a type edge. Endpoints not in the context are taken to be
/// match vertices.
bool edge_adheres(const Edge & j, bool src_in_context, bool tgt_in_context, const TypeEdge & t);
bool edge_adheres(const Edge & j, const PatchDecomposition & d, const TypeEdge & t);

struct AdherenceEnumeration {
    std::vector<AdherenceMap> maps;
    bool truncated = false;
};

/// All total adherence maps from `patch` to `type`, in lexicographic order
/// of the (patch edge id, type edge id) assignment sequence.
AdherenceEnumeration enumerate_adherence_maps(const Graph & patch, const PatchType & type,
                                              const PatchDecomposition & d, std::size_t cap = kDefaultMapCap);

bool is_adherence_map(const Graph & patch, const PatchType & type, const PatchDecomposition & d,
                      const AdherenceMap & h);

std::set<VertexId> context_of(const Edge & e, const TypeEdge & assigned);
std::set<VertexId> context_of(EdgeId e, const Graph & patch, const AdherenceMap & h, const PatchType & type);

/// Witness for rule isomorphism: one renaming per side plus the induced
/// bijections on type edges. The context node is fixed implicitly.
struct RuleRenaming {
    Renaming lhs;
    Renaming rhs;
    std::map<EdgeId, EdgeId> lhs_type;
    std::map<EdgeId, EdgeId> rhs_type;
};

std::optional<RuleRenaming> rules_isomorphic(const QuasiRule & r1, const QuasiRule & r2);

/// Applies a RuleRenaming to r; used to check witnesses.
QuasiRule rename_rule(const QuasiRule & r, const RuleRenaming & phi);

} // namespace pgr
