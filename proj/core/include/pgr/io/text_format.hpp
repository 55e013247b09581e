#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgr/rule.hpp"
#include "pgr/shorthand.hpp"

namespace pgr {

/// Contents of one text file: graphs, rules (expanded), and named rule lists.
struct Document {
    std::vector<std::pair<std::string, Graph>> graphs;
    std::vector<QuasiRule> rules;
    std::vector<std::pair<std::string, std::vector<std::string>>> systems;
    std::vector<std::string> warnings;

    /// Throw UnknownName when absent.
    [[nodiscard]] const Graph & graph(const std::string & name) const;
    [[nodiscard]] const QuasiRule & rule(const std::string & name) const;
    [[nodiscard]] RuleSystem system(const std::string & name) const;
    /// Every rule of the document in declaration order.
    [[nodiscard]] RuleSystem all_rules(std::string name = "all") const;
};

/// Syntax:
///   graph NAME { node 1, 2; [ID:] 1 -a-> 2; 1 --> 2; }
///   rule NAME { lhs { node 1! [x, y]; ...; type KEY: ctx -> 1; forbid (x,y) on 1 -> 2; }
///               rhs { ...; type: 1 -> ctx from KEY; } }
///   system NAME { rule1, rule2 }
/// `-->` is an edge with the reserved unlabeled label. Errors are ParseError
/// with the location of the offending token (or of the enclosing rule for
/// expansion errors).
Document parse_document(std::string_view text);

/// A text holding at most one graph; empty text yields the empty graph.
Graph parse_graph(std::string_view text);
std::vector<QuasiRule> parse_rules(std::string_view text);

/// Rule text before expansion, for tools that show the shorthand itself.
std::vector<AnnotatedRule> parse_annotated_rules(std::string_view text);

std::string serialize_graph(const Graph & g, const std::string & name = "g");
/// Writes the expanded form with every type edge explicit.
std::string serialize_rule(const QuasiRule & r);
std::string serialize_document(const Document & d);

} // namespace pgr
