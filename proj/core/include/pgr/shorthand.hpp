#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgr/rule.hpp"

namespace pgr {

/// A type edge written out by hand. On the lhs `key` names the edge; on the
/// rhs it cites the lhs edge the new one traces to.
struct ExplicitTypeEdge {
    std::string key;
    Endpoint src;
    Endpoint tgt;
};

/// Suppresses the implicit edge keyed (x,y) between src and tgt. Either name
/// may be "ctx" together with a context endpoint.
struct ForbidMark {
    std::string x;
    std::string y;
    Endpoint src;
    Endpoint tgt;
};

struct AnnotatedSide {
    Graph pattern;
    std::map<VertexId, std::vector<std::string>> names;
    std::set<VertexId> black;
    std::vector<ExplicitTypeEdge> types;
    std::vector<ForbidMark> forbids;
};

struct AnnotatedRule {
    std::string name;
    AnnotatedSide lhs;
    AnnotatedSide rhs;
};

/// Key of a generated type edge, e.g. "(ctx,x)", "(x,y)".
std::string name_key(const std::string & x, const std::string & y);
/// Key of a black-node type edge, e.g. "b:ctx->1".
std::string black_key(const Endpoint & src, const Endpoint & tgt);

/// Desugars names, forbid marks and black nodes together with explicit type
/// edges into a validated rule. Throws SharedName, DanglingRhsName,
/// UnknownTraceKey, DuplicateTraceKey, PositionMismatch and the make_rule
/// errors. Forbid marks that match no implicit edge are reported through
/// `warnings` when given.
QuasiRule expand_shorthand(const AnnotatedRule & rule, std::vector<std::string> * warnings = nullptr);

/// Same expansion; provided under the names used for the two notations.
inline QuasiRule expand_name_shorthand(const AnnotatedRule & rule, std::vector<std::string> * warnings = nullptr)
{
    return expand_shorthand(rule, warnings);
}
inline QuasiRule expand_black_node_shorthand(const AnnotatedRule & rule, std::vector<std::string> * warnings = nullptr)
{
    return expand_shorthand(rule, warnings);
}

/// Structure-preserving map between graphs; total on the domain graph.
struct GraphMorphism {
    std::map<VertexId, VertexId> vertices;
    std::map<EdgeId, EdgeId> edges;
};

/// Throws NotAMorphism unless m is a total, structure-preserving map from
/// `from` into `to` (and injective on vertices and edges when requested).
void check_morphism(const Graph & from, const Graph & to, const GraphMorphism & m, bool injective);

/// DPO span L <-phi- K -psi-> R as a rule: each L (R) vertex is named by its
/// phi (psi) preimages, then the name shorthand is expanded.
QuasiRule import_dpo(const Graph & l, const Graph & k, const Graph & r, const GraphMorphism & phi,
                     const GraphMorphism & psi, bool injective_phi, std::string name = "dpo");

/// As import_dpo, but L vertices outside the image of phi get a fresh
/// lhs-only name so that their incident patch edges are deleted.
QuasiRule import_spo(const Graph & l, const Graph & k, const Graph & r, const GraphMorphism & phi,
                     const GraphMorphism & psi, std::string name = "spo");

} // namespace pgr
