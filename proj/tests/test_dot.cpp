#include <doctest.h>

#include "pgr/io/dot.hpp"
#include "support.hpp"

using namespace pgr;

TEST_CASE("dot: plain export")
{
    Graph g = parse_graph("graph g { node 1, 2; 1 -a-> 2; 2 --> 1; }");
    std::string dot = export_dot(g, nullptr, "g\"x");
    CHECK(dot.rfind("digraph \"g\\\"x\" {", 0) == 0);
    CHECK(dot.find("1 -> 2 [id=\"e0\", label=\"a\"];") != std::string::npos);
    CHECK(dot.find("2 -> 1 [id=\"e1\"];") != std::string::npos);
    CHECK(dot.find("green") == std::string::npos);
    CHECK(export_dot(g) == export_dot(g));
}

TEST_CASE("dot: highlighted redex")
{
    Document doc = test::load_fixture("figures.pgr");
    const Graph & g = doc.graph("G");
    RedexSearch s = find_redexes(g, doc.rule("delete"));
    REQUIRE(s.redexes.size() == 1);
    std::string dot = export_dot(g, &s.redexes[0], "G");
    CHECK(dot.find("  2 [color=green, penwidth=3];") != std::string::npos);
    CHECK(dot.find("2 -> 2 [id=\"e2\", label=\"a\", color=green, penwidth=3];") != std::string::npos);
    CHECK(dot.find("2 -> 3 [id=\"e3\", label=\"d\", color=red, style=dotted];") != std::string::npos);
    CHECK(dot.find("3 -> 3 [id=\"e4\", label=\"e\"];") != std::string::npos);
}
