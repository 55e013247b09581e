#include <doctest.h>

#include "pgr/explore.hpp"
#include "pgr/isomorphism.hpp"
#include "pgr/systems/waitfor.hpp"
#include "support.hpp"

using namespace pgr;

TEST_CASE("waitfor: grammar output keeps the net invariants")
{
    ExploreOptions opts;
    opts.max_depth = 6;
    StateSpace space = explore(Graph(), waitfor_grammar(), opts);
    CHECK(space.states.size() > 20);
    bool saw_request = false;
    for (const auto & g : space.states) {
        CheckReport r = check_waitfor_net(g, WaitForPhase::Built);
        CHECK_MESSAGE(r.ok(), r.to_string());
        saw_request = saw_request || test::count_label(g, kWaitZ) > 0;
    }
    CHECK(saw_request);
}

TEST_CASE("waitfor: the full system stays within the running invariants")
{
    Graph start;
    for (VertexId v = 1; v <= 3; ++v)
        start.add_vertex(v);
    ExploreOptions opts;
    opts.max_depth = 3;
    StateSpace space = explore(start, waitfor_system(2), opts);
    for (const auto & g : space.states) {
        CheckReport r = check_waitfor_net(g);
        CHECK_MESSAGE(r.ok(), r.to_string());
    }
}

TEST_CASE("waitfor: detection on the small-net family")
{
    RuleSystem det = deadlock_detection_system();
    auto family = test::waitfor_family(4, 2);
    CHECK(family.size() > 500);
    std::size_t deadlocked = 0;
    for (const auto & [p, requests] : family) {
        Graph net = test::make_waitfor_net(p, requests);
        REQUIRE(check_waitfor_net(net, WaitForPhase::Built).ok());

        StateSpace space = explore(net, det);
        REQUIRE_FALSE(space.truncated);
        for (std::size_t i = 0; i < space.states.size(); ++i) {
            std::size_t size = space.states[i].vertex_count() + space.states[i].edge_count();
            for (const auto & t : space.transitions[i]) {
                const Graph & next = space.states[t.target];
                CHECK(next.vertex_count() + next.edge_count() < size);
            }
            CHECK(check_waitfor_net(space.states[i]).ok());
        }
        auto terminal = space.terminal_states();
        REQUIRE(terminal.size() == 1);

        bool free = test::reduction_deadlock_free(p, requests);
        CHECK(space.states[terminal[0]].empty() == free);
        DeadlockResult r = detect_deadlock(net);
        CHECK((r.verdict == DeadlockVerdict::DeadlockFree) == free);
        CHECK(isomorphic(r.normal_form, space.states[terminal[0]]));
        deadlocked += free ? 0 : 1;
    }
    CHECK(deadlocked > 0);
    CHECK(deadlocked < family.size());
}

TEST_CASE("waitfor: fixture nets")
{
    Document doc = test::load_fixture("waitfor_nets.pgr");
    CHECK(detect_deadlock(doc.graph("cycle")).verdict == DeadlockVerdict::Deadlocked);
    CHECK(detect_deadlock(doc.graph("chain")).verdict == DeadlockVerdict::DeadlockFree);
    CHECK(detect_deadlock(doc.graph("empty")).verdict == DeadlockVerdict::DeadlockFree);
    CHECK(to_string(DeadlockVerdict::Deadlocked) == "deadlocked");
    CHECK(to_string(DeadlockVerdict::DeadlockFree) == "deadlock-free");
}

TEST_CASE("waitfor: N-of-M requests")
{
    CHECK_THROWS_AS(make_n_of_m_rule(0, 2), Error);
    CHECK_THROWS_AS(make_n_of_m_rule(3, 2), Error);
    QuasiRule r = make_n_of_m_rule(2, 3);
    CHECK(r.name == "2-of-3");

    Graph procs;
    for (VertexId v = 1; v <= 4; ++v)
        procs.add_vertex(v);
    RedexSearch s = find_redexes(procs, r);
    // requester times ordered target triples
    CHECK(s.redexes.size() == 4 * 3 * 2 * 1);
    Graph after = apply_at(procs, s.redexes[0]).graph;
    CHECK(check_waitfor_net(after, WaitForPhase::Built).ok());
    CHECK(test::count_label(after, kWaitS) == 2);
    CHECK(test::count_label(after, kWaitZ) == 1);
    CHECK(test::count_label(after, kUnlabeled) == 4);

    // a process that already waits cannot ask again
    CHECK(find_redexes(after, make_n_of_m_rule(1, 1)).redexes.size() == 3 * 3);
}

TEST_CASE("waitfor: invariant clauses")
{
    Graph g = test::make_waitfor_net(2, {{1, {2}, 1}});
    REQUIRE(check_waitfor_net(g).ok());

    Graph bad_label = g;
    bad_label.add_edge(1, 2, "q");
    CHECK(check_waitfor_net(bad_label).has("labels"));

    Graph process_loop = g;
    process_loop.add_edge(2, 2, kWaitS);
    CHECK(check_waitfor_net(process_loop).has("loops"));

    Graph two_requests = test::make_waitfor_net(3, {{1, {2}, 1}, {1, {3}, 1}});
    CHECK(check_waitfor_net(two_requests).has("process-out"));

    Graph greedy = test::make_waitfor_net(2, {{1, {2}, 1}});
    greedy.add_edge(3, 3, kWaitS);
    CHECK(check_waitfor_net(greedy).has("pending"));

    // grants may use up targets while running, not in a freshly built net
    Graph spent;
    spent.add_vertex(1);
    spent.add_vertex(2);
    spent.add_edge(1, 2, kUnlabeled);
    spent.add_edge(2, 2, kWaitZ);
    CHECK(check_waitfor_net(spent).ok());
    CHECK_FALSE(check_waitfor_net(spent, WaitForPhase::Built).ok());
}
