#include <doctest.h>

#include <functional>

#include "pgr/match.hpp"
#include "pgr/systems/elementary.hpp"
#include "support.hpp"

using namespace pgr;

namespace {

using VMap = std::map<VertexId, VertexId>;
using EMap = std::map<EdgeId, EdgeId>;

// Every injective vertex map, then every injective label-preserving edge map.
std::set<std::pair<VMap, EMap>> brute_embeddings(const Graph & host, const Graph & pattern)
{
    std::set<std::pair<VMap, EMap>> out;
    std::vector<VertexId> pv(pattern.vertices().begin(), pattern.vertices().end());
    std::vector<VertexId> hv(host.vertices().begin(), host.vertices().end());
    std::vector<EdgeId> pe;
    for (const auto & [id, e] : pattern.edges())
        pe.push_back(id);

    std::function<void(std::size_t, VMap &, std::set<VertexId> &)> vstep;
    std::function<void(std::size_t, const VMap &, EMap &, std::set<EdgeId> &)> estep;
    estep = [&](std::size_t i, const VMap & vm, EMap & em, std::set<EdgeId> & used) {
        if (i == pe.size()) {
            out.emplace(vm, em);
            return;
        }
        const Edge & p = pattern.edge(pe[i]);
        for (const auto & [hid, h] : host.edges()) {
            if (used.contains(hid) || h.label != p.label || h.src != vm.at(p.src) || h.tgt != vm.at(p.tgt))
                continue;
            used.insert(hid);
            em[pe[i]] = hid;
            estep(i + 1, vm, em, used);
            em.erase(pe[i]);
            used.erase(hid);
        }
    };
    vstep = [&](std::size_t i, VMap & vm, std::set<VertexId> & used) {
        if (i == pv.size()) {
            EMap em;
            std::set<EdgeId> eu;
            estep(0, vm, em, eu);
            return;
        }
        for (VertexId h : hv) {
            if (used.contains(h))
                continue;
            used.insert(h);
            vm[pv[i]] = h;
            vstep(i + 1, vm, used);
            vm.erase(pv[i]);
            used.erase(h);
        }
    };
    VMap vm;
    std::set<VertexId> used;
    vstep(0, vm, used);
    return out;
}

// Redex count from the definition: per embedding, the product over patch
// edges of the number of type edges each one fits.
std::size_t brute_redex_count(const Graph & host, const QuasiRule & rule)
{
    std::size_t total = 0;
    for (const auto & [vm, em] : brute_embeddings(host, rule.lhs.pattern)) {
        std::set<VertexId> image;
        for (const auto & [p, h] : vm)
            image.insert(h);
        std::set<EdgeId> matched;
        for (const auto & [p, h] : em)
            matched.insert(h);
        std::size_t product = 1;
        for (const auto & [hid, h] : host.edges()) {
            bool src_m = image.contains(h.src), tgt_m = image.contains(h.tgt);
            if (matched.contains(hid) || (! src_m && ! tgt_m))
                continue;
            std::size_t fits = 0;
            for (const auto & [tid, t] : rule.lhs.type.edges) {
                auto fit = [&](VertexId v, bool in_match, const Endpoint & e) {
                    return in_match ? (! e.is_context() && vm.at(e.id()) == v) : e.is_context();
                };
                fits += fit(h.src, src_m, t.src) && fit(h.tgt, tgt_m, t.tgt) ? 1 : 0;
            }
            product *= fits;
        }
        total += product;
    }
    return total;
}

std::vector<QuasiRule> corpus_rules()
{
    std::vector<QuasiRule> out;
    for (const auto & f : {"figures.pgr", "quasi.pgr", "shorthand.pgr", "application.pgr"})
        for (const auto & r : test::load_fixture(f).rules)
            out.push_back(r);
    for (const auto & r : elementary_rules().rules)
        out.push_back(*r);
    return out;
}

} // namespace

TEST_CASE("match: embeddings agree with brute force")
{
    std::mt19937_64 rng(51);
    for (int i = 0; i < 300; ++i) {
        Graph host = test::random_graph(rng, 5, 8, {"a", "b"});
        Graph pattern = test::random_graph(rng, 3, 3, {"a", "b"});
        auto expected = brute_embeddings(host, pattern);
        auto found = find_pattern_embeddings(host, pattern);
        std::set<std::pair<VMap, EMap>> got;
        for (const auto & e : found)
            got.emplace(e.vertices, e.edges);
        CHECK(got.size() == found.size());
        CHECK(got == expected);
    }
}

TEST_CASE("match: redex counts agree with the definition")
{
    std::mt19937_64 rng(52);
    auto rules = corpus_rules();
    for (int i = 0; i < 400; ++i) {
        const QuasiRule & r = rules[rng() % rules.size()];
        Graph host = test::random_graph(rng, 5, 8, {"a", "b", "c"});
        RedexSearch s = find_redexes(host, r, 1u << 20);
        CHECK_FALSE(s.truncated);
        CHECK_MESSAGE(s.redexes.size() == brute_redex_count(host, r), r.name);
        for (const auto & x : s.redexes) {
            CHECK(validate_patch(x.decomposition).ok());
            CHECK(is_adherence_map(x.decomposition.patch, x.type, x.decomposition, x.hL));
        }
    }
}

TEST_CASE("match: the isolated-node rule has no redex in the leading example")
{
    Document doc = test::load_fixture("figures.pgr");
    CHECK(find_redexes(doc.graph("G"), doc.rule("isolated")).redexes.empty());
    CHECK(find_redexes(doc.graph("G"), doc.rule("delete")).redexes.size() == 1);
}

TEST_CASE("match: make_redex rejects maps that do not fit")
{
    Document doc = test::load_fixture("figures.pgr");
    const Graph & g = doc.graph("G");
    auto rule = std::make_shared<const QuasiRule>(doc.rule("delete"));
    RedexSearch s = find_redexes(g, rule);
    REQUIRE(s.redexes.size() == 1);
    const Redex & ok = s.redexes[0];
    Redex again = make_redex(g, rule, ok.embedding, ok.hL);
    CHECK(again.hL == ok.hL);

    AdherenceMap swapped = ok.hL;
    for (auto & [e, t] : swapped)
        t = 1 - t;
    CHECK_THROWS_AS(make_redex(g, rule, ok.embedding, swapped), Error);

    AdherenceMap partial = ok.hL;
    partial.erase(partial.begin());
    CHECK_THROWS_AS(make_redex(g, rule, ok.embedding, partial), Error);

    Renaming bad = ok.embedding;
    bad.vertices.begin()->second = 3;
    CHECK_THROWS_AS(make_redex(g, rule, bad, ok.hL), Error);
}

TEST_CASE("match: redex cap")
{
    QuasiRule q = test::load_fixture("quasi.pgr").rule("quasi");
    Graph host;
    host.add_vertex(1);
    host.add_vertex(2);
    for (int i = 0; i < 6; ++i)
        host.add_edge(1, 2, "a");
    // the pattern has no edges, so both orientations embed; only 1 -> 2 carries edges
    RedexSearch all = find_redexes(host, q, 1000);
    CHECK(all.redexes.size() == 64);
    RedexSearch cut = find_redexes(host, q, 10);
    CHECK(cut.redexes.size() == 10);
    CHECK(cut.truncated);
    CHECK(redex_summary(all.redexes[0]).find("quasi") != std::string::npos);
}
