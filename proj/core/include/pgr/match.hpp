#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pgr/rule.hpp"

namespace pgr {

/// A rule located in a host: the pattern embedding, the induced C/J/M split,
/// the lhs patch type moved onto host ids, and one adherence map for J.
struct Redex {
    std::shared_ptr<const QuasiRule> rule;
    Renaming embedding;
    PatchDecomposition decomposition;
    PatchType type;
    AdherenceMap hL;
};

struct RedexSearch {
    std::vector<Redex> redexes;
    bool truncated = false;
};

/// Every vertex- and edge-injective embedding of `pattern` into `host`,
/// ordered by (sorted image vertices, sorted image edges, vertex map, edge map).
std::vector<Renaming> find_pattern_embeddings(const Graph & host, const Graph & pattern);

/// Redexes in embedding order; within one embedding, adherence maps in
/// enumeration order. `cap` bounds the total number returned.
RedexSearch find_redexes(const Graph & host, std::shared_ptr<const QuasiRule> rule, std::size_t cap = kDefaultMapCap);
RedexSearch find_redexes(const Graph & host, const QuasiRule & rule, std::size_t cap = kDefaultMapCap);

/// Builds the redex for a given embedding and adherence map, or throws
/// InvalidRedex if they do not fit the host.
Redex make_redex(const Graph & host, std::shared_ptr<const QuasiRule> rule, const Renaming & embedding,
                 const AdherenceMap & hL);

/// Short human-readable description: rule name and the vertex images.
std::string redex_summary(const Redex & r);

} // namespace pgr
