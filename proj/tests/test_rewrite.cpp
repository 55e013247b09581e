#include <doctest.h>

#include <functional>
#include <limits>

#include "pgr/isomorphism.hpp"
#include "pgr/rewrite.hpp"
#include "support.hpp"

using namespace pgr;

namespace {

Graph step_once(const Graph & host, const QuasiRule & rule, std::size_t index = 0)
{
    RedexSearch s = find_redexes(host, rule);
    REQUIRE(s.redexes.size() > index);
    return apply_at(host, s.redexes[index]).graph;
}

ErrorKind kind_of(const std::function<void()> & f)
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.kind();
    }
    FAIL("no error");
    return ErrorKind::Syntax;
}

} // namespace

TEST_CASE("rewrite: single-node rules on the leading example")
{
    Document doc = test::load_fixture("figures.pgr");
    const Graph & g = doc.graph("G");
    for (const auto & [rule, expected] : std::vector<std::pair<std::string, std::string>>{
             {"delete", "after_delete"},
             {"redirect", "after_redirect"},
             {"duplicate", "after_duplicate"},
             {"exotic", "after_exotic"}}) {
        CAPTURE(rule);
        CHECK(isomorphic(step_once(g, doc.rule(rule)), doc.graph(expected)));
    }
    CHECK(isomorphic(step_once(doc.graph("Gf"), doc.rule("duplication")), doc.graph("after_duplication")));
}

TEST_CASE("rewrite: moving patch edges onto surviving vertices")
{
    Document doc = test::load_fixture("application.pgr");
    RedexSearch s = find_redexes(doc.graph("host"), doc.rule("example"));
    REQUIRE(s.redexes.size() == 1);
    StepResult r = apply_at(doc.graph("host"), s.redexes[0]);
    CHECK(isomorphic(r.graph, doc.graph("result")));
    CHECK(verify_step(doc.graph("host"), r.graph, r.certificate).ok());
}

TEST_CASE("rewrite: verify_step catches tampering")
{
    Document doc = test::load_fixture("figures.pgr");
    const Graph & g = doc.graph("G");
    RedexSearch s = find_redexes(g, doc.rule("exotic"));
    REQUIRE(s.redexes.size() == 1);
    StepResult r = apply_at(g, s.redexes[0]);
    REQUIRE(verify_step(g, r.graph, r.certificate).ok());

    Graph missing = r.graph;
    missing.remove_edge(r.certificate.j_prime.edges().begin()->first);
    CHECK_FALSE(verify_step(g, missing, r.certificate).ok());

    // relabel J' consistently in the certificate and the result
    StepCertificate relabeled = r.certificate;
    Graph jp, res;
    for (VertexId v : relabeled.j_prime.vertices())
        jp.add_vertex(v);
    for (VertexId v : r.graph.vertices())
        res.add_vertex(v);
    for (const auto & [id, e] : r.graph.edges()) {
        bool in_patch = relabeled.j_prime.has_edge(id);
        res.add_edge(id, e.src, e.tgt, in_patch ? e.label + "x" : e.label);
        if (in_patch)
            jp.add_edge(id, e.src, e.tgt, e.label + "x");
    }
    relabeled.j_prime = jp;
    CheckReport rep = verify_step(g, res, relabeled);
    CHECK_MESSAGE(rep.has("label"), rep.to_string());
    CHECK_FALSE(rep.has("result"));

    StepCertificate unsigma = r.certificate;
    unsigma.sigma.erase(unsigma.sigma.begin());
    CHECK_FALSE(verify_step(g, r.graph, unsigma).ok());
}

TEST_CASE("rewrite: steps of deterministic rules are unique up to isomorphism")
{
    std::mt19937_64 rng(61);
    int instances = 0;
    for (int i = 0; i < 3000 && instances < 300; ++i) {
        QuasiRule rule = test::random_deterministic_rule(rng, {"a", "b"});
        Graph host = test::random_graph(rng, 4, 6, {"a", "b"});
        RedexSearch s = find_redexes(host, rule);
        if (s.redexes.empty())
            continue;
        const Redex & redex = s.redexes[rng() % s.redexes.size()];
        ++instances;
        StepResult a = apply_at(host, redex);
        StepResult b = apply_at(host, redex, default_fresh_base(host) + 1000);
        CHECK(verify_step(host, a.graph, a.certificate).ok());
        CHECK(verify_step(host, b.graph, b.certificate).ok());
        CHECK(isomorphic(a.graph, b.graph));
        auto classes = brute_force_step_oracle(host, redex, 64);
        REQUIRE(classes.size() == 1);
        CHECK(isomorphic(classes[0], a.graph));
    }
    CHECK(instances >= 200);
}

TEST_CASE("rewrite: oracle bound")
{
    Document doc = test::load_fixture("figures.pgr");
    RedexSearch s = find_redexes(doc.graph("G"), doc.rule("duplicate"));
    REQUIRE(s.redexes.size() == 1);
    CHECK(kind_of([&] { brute_force_step_oracle(doc.graph("G"), s.redexes[0], 1); }) == ErrorKind::BoundTooSmall);
}

TEST_CASE("rewrite: quasi rules can yield several classes")
{
    QuasiRule q = test::load_fixture("quasi.pgr").rule("quasi");
    Graph host;
    host.add_vertex(1);
    host.add_vertex(2);
    host.add_edge(1, 2, "a");
    host.add_edge(1, 2, "b");
    RedexSearch s = find_redexes(host, q);
    REQUIRE(s.redexes.size() == 4);
    std::set<std::string> keys;
    for (const auto & r : s.redexes)
        keys.insert(canonical_key(apply_at(host, r).graph));
    // keep both, keep only a, keep only b, keep neither
    CHECK(keys.size() == 4);
    CHECK(kind_of([&] { check_rule_determinism(q, {host}); }) == ErrorKind::NotDeterministic);
}

TEST_CASE("rewrite: determinism check on the figure rules")
{
    Document doc = test::load_fixture("figures.pgr");
    std::vector<Graph> hosts{doc.graph("G"), doc.graph("Gf")};
    std::mt19937_64 rng(62);
    for (int i = 0; i < 20; ++i)
        hosts.push_back(test::random_graph(rng, 4, 6, {"a", "b", "c"}));
    for (const auto & r : doc.rules) {
        DeterminismReport rep = check_rule_determinism(r, hosts);
        CHECK(rep.hosts == hosts.size());
    }
}

TEST_CASE("rewrite: fresh ids")
{
    Document doc = test::load_fixture("figures.pgr");
    const Graph & g = doc.graph("G");
    CHECK(default_fresh_base(g) == 5);
    RedexSearch s = find_redexes(g, doc.rule("duplicate"));
    REQUIRE(s.redexes.size() == 1);
    const Redex & r = s.redexes[0];
    CHECK(kind_of([&] { apply_at(g, r, 1); }) == ErrorKind::VertexIdClash);
    CHECK(kind_of([&] { apply_at(g, r, std::numeric_limits<std::uint64_t>::max() - 1); }) ==
          ErrorKind::IdExhaustion);
    StepResult far = apply_at(g, r, 1000);
    for (VertexId v : far.graph.vertices())
        CHECK((v == 1 || v == 3 || v >= 1000));
}

TEST_CASE("rewrite: vertex_trace")
{
    Document doc = test::load_fixture("application.pgr");
    RedexSearch s = find_redexes(doc.graph("host"), doc.rule("example"));
    REQUIRE(s.redexes.size() == 1);
    StepResult r = apply_at(doc.graph("host"), s.redexes[0]);
    auto t = vertex_trace(r.certificate);
    // host 2 plays pattern 2, which the rhs drops
    CHECK_FALSE(t.contains(2));
    for (VertexId v : {5, 6, 7})
        CHECK(t.at(v) == static_cast<VertexId>(v));
    for (VertexId v : {1, 3, 4})
        CHECK(r.graph.has_vertex(t.at(v)));
}

TEST_CASE("rewrite: renamed redexes give isomorphic steps")
{
    std::mt19937_64 rng(63);
    for (int i = 0; i < 200; ++i) {
        QuasiRule rule = test::random_deterministic_rule(rng, {"a", "b"});
        Graph host = test::random_graph(rng, 4, 6, {"a", "b"});
        RedexSearch s = find_redexes(host, rule);
        if (s.redexes.empty())
            continue;
        Renaming phi = test::random_renaming(rng, host);
        Redex moved = rename_redex(s.redexes[0], phi);
        Graph renamed = rename_graph(host, phi);
        CHECK(isomorphic(apply_at(host, s.redexes[0]).graph, apply_at(renamed, moved).graph));
    }
}

TEST_CASE("rewrite: successors and normalize")
{
    RuleSystem sys;
    sys.add(parse_rules("rule shrink { lhs { node 1; 1 -a-> 1; type 1: ctx -> 1; type 2: 1 -> ctx; }"
                        " rhs { node 1; type: ctx -> 1 from 1; type: 1 -> ctx from 2; } }")
                .at(0));
    Graph host;
    for (VertexId v = 1; v <= 4; ++v) {
        host.add_vertex(v);
        host.add_edge(v, v, "a");
    }
    host.add_edge(1, 2, "b");

    SuccessorSet all = successors(host, sys, false);
    CHECK(all.items.size() == 4);
    // 3 and 4 are interchangeable
    SuccessorSet dedup = successors(host, sys, true);
    CHECK(dedup.items.size() == 3);

    NormalizeResult nf = normalize(host, sys);
    CHECK(nf.trace.size() == 4);
    CHECK(test::count_label(nf.graph, "a") == 0);
    CHECK(nf.graph.edge_count() == 1);

    NormalizeOptions random;
    random.strategy = Strategy::Random;
    random.seed = 7;
    NormalizeResult r1 = normalize(host, sys, random), r2 = normalize(host, sys, random);
    CHECK(r1.graph == r2.graph);
    CHECK(isomorphic(r1.graph, nf.graph));
}

TEST_CASE("rewrite: normalize stops at the step limit")
{
    RuleSystem sys;
    sys.add(parse_rules("rule grow { lhs { node 1; 1 -a-> 1; } rhs { node 1, 2; 1 -a-> 1; } }").at(0));
    Graph host;
    host.add_vertex(1);
    host.add_edge(1, 1, "a");
    NormalizeOptions opts;
    opts.max_steps = 5;
    try {
        normalize(host, sys, opts);
        FAIL("no limit");
    }
    catch (const StepLimitError & e) {
        CHECK(e.kind() == ErrorKind::StepLimitReached);
        CHECK(e.partial().trace.size() == 5);
        CHECK(e.partial().graph.vertex_count() == 6);
    }
}
