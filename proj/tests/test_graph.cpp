#include <doctest.h>

#include "pgr/graph.hpp"
#include "support.hpp"

using namespace pgr;

TEST_CASE("graph: vertices and edges keep separate id spaces")
{
    Graph g;
    CHECK(g.add_vertex(1));
    CHECK_FALSE(g.add_vertex(1));
    g.add_vertex(2);
    g.add_edge(1, 1, 2, "a");
    CHECK(g.has_vertex(1));
    CHECK(g.has_edge(1));
    CHECK(g.edge(1) == Edge{1, 2, "a"});
    CHECK(g.next_vertex_id() == 3);
    CHECK(g.next_edge_id() == 2);
    EdgeId e = g.add_edge(2, 2, kUnlabeled);
    CHECK(e == 2);
    CHECK(g.labels() == std::set<Label>{"a", "_"});
}

TEST_CASE("graph: errors")
{
    Graph g;
    g.add_vertex(0);
    g.add_edge(5, 0, 0, "a");
    auto kind_of = [](auto && f) {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        FAIL("no error");
        return ErrorKind::Syntax;
    };
    CHECK(kind_of([&] { g.add_edge(5, 0, 0, "b"); }) == ErrorKind::EdgeIdClash);
    CHECK(kind_of([&] { g.add_edge(6, 0, 9, "b"); }) == ErrorKind::UndeclaredEndpoint);
    CHECK(kind_of([&] { g.add_edge(6, 9, 0, "b"); }) == ErrorKind::UndeclaredEndpoint);

    Graph h;
    h.add_vertex(0);
    h.add_edge(5, 0, 0, "a");
    CHECK(kind_of([&] { graph_union(g, h); }) == ErrorKind::EdgeIdClash);
}

TEST_CASE("graph: empty graph")
{
    Graph g;
    CHECK(g.empty());
    CHECK(g.next_vertex_id() == 0);
    CHECK(g.next_edge_id() == 0);
    CHECK(is_simple(g));
}

TEST_CASE("graph: simplicity looks at (src, tgt, label) triples")
{
    Graph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_edge(1, 2, "a");
    g.add_edge(1, 2, "b");
    CHECK(is_simple(g));
    g.add_edge(1, 2, "a");
    CHECK_FALSE(is_simple(g));
}

TEST_CASE("graph: renaming round trip")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Graph g = test::random_graph(rng, 6, 10, {"a", "b"});
        Renaming phi = test::random_renaming(rng, g);
        CHECK(phi.is_injective());
        Graph h = rename_graph(g, phi);
        CHECK(rename_graph(h, phi.inverse()) == g);
    }
}

TEST_CASE("graph: decompose then compose gives the host back")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        Graph g = test::random_graph(rng, 6, 12, {"a", "b", "_"});
        std::set<VertexId> mv;
        for (VertexId v : g.vertices())
            if (rng() % 2)
                mv.insert(v);
        std::set<EdgeId> me;
        for (const auto & [id, e] : g.edges())
            if (mv.contains(e.src) && mv.contains(e.tgt) && rng() % 2)
                me.insert(id);
        PatchDecomposition d = decompose_at(g, mv, me);
        CheckReport r = validate_patch(d);
        CHECK_MESSAGE(r.ok(), r.to_string());
        CHECK(patch_compose(d) == g);
        // context is the largest subgraph disjoint from the match
        CHECK(d.context == induced_subgraph(g, d.context.vertices()));
    }
}

TEST_CASE("graph: validate_patch names each broken clause")
{
    PatchDecomposition d;
    d.context.add_vertex(1);
    d.match.add_vertex(1);
    CHECK(validate_patch(d).has("disjoint"));

    PatchDecomposition e;
    e.context.add_vertex(1);
    e.context.add_vertex(2);
    e.patch.add_vertex(1);
    e.patch.add_vertex(2);
    e.patch.add_edge(0, 1, 2, "a");
    CHECK(validate_patch(e).has("endpoints"));

    PatchDecomposition f;
    f.match.add_vertex(1);
    f.patch.add_vertex(1);
    f.patch.add_vertex(7);
    CHECK(validate_patch(f).has("vertex-set"));

    PatchDecomposition h;
    h.match.add_vertex(1);
    h.match.add_edge(0, 1, 1, "a");
    h.patch.add_vertex(1);
    h.patch.add_edge(0, 1, 1, "b");
    CHECK(validate_patch(h).has("edge-disjoint"));
    CHECK_THROWS_AS(patch_compose(h), Error);
}

TEST_CASE("graph: decompose_at rejects non-subgraphs")
{
    Graph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_edge(0, 1, 2, "a");
    CHECK_THROWS_AS(decompose_at(g, {3}, {}), Error);
    CHECK_THROWS_AS(decompose_at(g, {1}, {0}), Error);
}
