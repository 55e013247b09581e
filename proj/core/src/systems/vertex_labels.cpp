#include "pgr/systems/vertex_labels.hpp"

#include "pgr/io/text_format.hpp"

namespace pgr {

namespace {

std::string quote(const std::string & s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

// Lower vertex 1, root 2.
const char * const kRootRule = R"(
rule "drop-loops" {
  lhs {
    node 1, 2;
    type 1: ctx -> 1;
    type 2: 1 -> ctx;
    type 3: 1 -> 1;
    type 4: 2 -> 1;
    type 5: 2 -> ctx;
  }
  rhs {
    node 1, 2;
    type: ctx -> 1 from 1;
    type: 1 -> ctx from 2;
    type: 2 -> 1 from 4;
    type: 2 -> ctx from 5;
  }
}
)";

} // namespace

Graph encode_vertex_labels(const Graph & g, const std::map<VertexId, Label> & labels, VertexLabelMode mode)
{
    for (VertexId v : g.vertices())
        if (! labels.contains(v))
            throw Error(ErrorKind::DomainGap, "vertex " + std::to_string(v) + " has no label");
    Graph out = g;
    if (mode == VertexLabelMode::Loops) {
        std::set<Label> edge_labels = g.labels();
        for (VertexId v : g.vertices()) {
            const Label & a = labels.at(v);
            if (edge_labels.contains(a))
                throw Error(ErrorKind::AlphabetClash, "vertex label '" + a + "' is also an edge label");
        }
        for (VertexId v : g.vertices())
            out.add_edge(v, v, labels.at(v));
        return out;
    }
    VertexId root = g.next_vertex_id();
    if (root == 0 && ! g.vertices().empty())
        throw Error(ErrorKind::IdExhaustion, "no vertex id left for the root");
    out.add_vertex(root);
    for (VertexId v : g.vertices())
        out.add_edge(root, v, labels.at(v));
    return out;
}

QuasiRule drop_loops_rule(const Label & a)
{
    std::string l = quote(a);
    std::string text = "rule " + quote("drop-loops-" + a) + " {\n"
        "  lhs { node 1; 1 -" + l + "-> 1; type 1: ctx -> 1; type 2: 1 -> ctx; type 3: 1 -> 1; }\n"
        "  rhs { node 1; 1 -" + l + "-> 1; type: ctx -> 1 from 1; type: 1 -> ctx from 2; }\n"
        "}\n";
    return parse_document(text).rules.at(0);
}

QuasiRule drop_loops_root_rule()
{
    static const QuasiRule rule = parse_document(kRootRule).rules.at(0);
    return rule;
}

} // namespace pgr
