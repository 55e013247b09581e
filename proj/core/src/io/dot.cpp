#include "pgr/io/dot.hpp"

#include <sstream>

namespace pgr {

namespace {

std::string escape(const std::string & s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string export_dot(const Graph & g, const Redex * highlight, const std::string & name)
{
    const Graph * match = highlight ? &highlight->decomposition.match : nullptr;
    const Graph * patch = highlight ? &highlight->decomposition.patch : nullptr;

    std::ostringstream out;
    out << "digraph \"" << escape(name) << "\" {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v : g.vertices()) {
        out << "  " << v;
        if (match && match->has_vertex(v))
            out << " [color=green, penwidth=3]";
        out << ";\n";
    }
    for (const auto & [id, e] : g.edges()) {
        out << "  " << e.src << " -> " << e.tgt << " [id=\"e" << id << "\"";
        if (e.label != kUnlabeled)
            out << ", label=\"" << escape(e.label) << "\"";
        if (match && match->has_edge(id))
            out << ", color=green, penwidth=3";
        else if (patch && patch->has_edge(id))
            out << ", color=red, style=dotted";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace pgr
