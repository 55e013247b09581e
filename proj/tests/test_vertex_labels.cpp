#include <doctest.h>

#include "pgr/isomorphism.hpp"
#include "pgr/rewrite.hpp"
#include "pgr/systems/vertex_labels.hpp"
#include "support.hpp"

using namespace pgr;

TEST_CASE("vertex labels: loop encoding")
{
    Graph g = parse_graph("graph g { node 1, 2; 1 -x-> 2; }");
    Graph enc = encode_vertex_labels(g, {{1, "A"}, {2, "B"}}, VertexLabelMode::Loops);
    CHECK(enc.edge_count() == 3);
    CHECK(test::count_label(enc, "A") == 1);
    CHECK_THROWS_AS(encode_vertex_labels(g, {{1, "x"}, {2, "B"}}, VertexLabelMode::Loops), Error);
    CHECK_THROWS_AS(encode_vertex_labels(g, {{1, "A"}}, VertexLabelMode::Loops), Error);
}

TEST_CASE("vertex labels: root encoding")
{
    Graph g = parse_graph("graph g { node 1, 4; 1 -x-> 4; }");
    Graph enc = encode_vertex_labels(g, {{1, "x"}, {4, "B"}}, VertexLabelMode::Root);
    REQUIRE(enc.has_vertex(5));
    CHECK(enc.edge_count() == 3);
    for (const auto & [id, e] : enc.edges())
        if (e.src == 5)
            CHECK((e.tgt == 1 || e.tgt == 4));
}

TEST_CASE("vertex labels: dropping loops")
{
    Graph g = parse_graph("graph g { node 1, 2; 1 -x-> 1; 1 -y-> 1; 1 -e-> 2; 2 -x-> 2; }");
    Graph enc = encode_vertex_labels(g, {{1, "A"}, {2, "B"}}, VertexLabelMode::Loops);
    RedexSearch s = find_redexes(enc, drop_loops_rule("A"));
    REQUIRE(s.redexes.size() == 1);
    Graph after = apply_at(enc, s.redexes[0]).graph;
    CHECK(isomorphic(after, parse_graph("graph e { node 1, 2; 1 -A-> 1; 1 -e-> 2; 2 -x-> 2; 2 -B-> 2; }")));

    Graph rooted = encode_vertex_labels(g, {{1, "A"}, {2, "B"}}, VertexLabelMode::Root);
    Graph step;
    for (const auto & rx : find_redexes(rooted, drop_loops_root_rule()).redexes)
        if (rx.embedding.vertex(1) == 1 && rx.embedding.vertex(2) == 3)
            step = apply_at(rooted, rx).graph;
    CHECK(isomorphic(step, parse_graph("graph e { node 1, 2, 3; 1 -e-> 2; 2 -x-> 2; 3 -A-> 1; 3 -B-> 2; }")));
}
