#include "pgr/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "pgr/isomorphism.hpp"

namespace pgr {

namespace {

constexpr std::uint64_t kMaxId = std::numeric_limits<std::uint64_t>::max();

std::uint64_t take_id(std::uint64_t & next)
{
    if (next == kMaxId)
        throw Error(ErrorKind::IdExhaustion, "fresh id counter overflow");
    return next++;
}

std::map<EdgeId, std::vector<EdgeId>> preimages(const AdherenceMap & h)
{
    std::map<EdgeId, std::vector<EdgeId>> out;
    for (const auto & [e, t] : h)
        out[t].push_back(e);
    return out;
}

Renaming fresh_instance(const Graph & pattern, const Graph & context, std::uint64_t & next)
{
    Renaming inst;
    for (VertexId v : pattern.vertices()) {
        VertexId id = take_id(next);
        if (context.has_vertex(id))
            throw Error(ErrorKind::VertexIdClash, "fresh vertex id " + std::to_string(id) + " is a context vertex");
        inst.vertices.emplace(v, id);
    }
    for (const auto & [eid, e] : pattern.edges()) {
        EdgeId id = take_id(next);
        if (context.has_edge(id))
            throw Error(ErrorKind::EdgeIdClash, "fresh edge id " + std::to_string(id) + " is a context edge");
        inst.edges.emplace(eid, id);
    }
    return inst;
}

} // namespace

std::uint64_t default_fresh_base(const Graph & g)
{
    std::uint64_t base = 0;
    if (! g.vertices().empty())
        base = std::max(base, *g.vertices().rbegin() + 1);
    if (! g.edges().empty())
        base = std::max(base, g.edges().rbegin()->first + 1);
    return base;
}

void construct_rhs_patch(StepCertificate & cert, std::uint64_t & next_edge)
{
    const Redex & rx = cert.redex;
    const QuasiRule & rule = *rx.rule;
    const Graph & context = rx.decomposition.context;
    const Graph & patch = rx.decomposition.patch;
    auto bound = preimages(rx.hL);

    cert.j_prime = Graph();
    cert.hR.clear();
    cert.sigma.clear();

    for (const auto & [tid, t] : cert.rhs_type.edges) {
        EdgeId traced = rule.trace.at(tid);
        const TypeEdge & tau = rx.type.edges.at(traced);
        auto it = bound.find(traced);
        if (it == bound.end())
            continue;
        for (EdgeId jid : it->second) {
            const Edge & j = patch.edge(jid);
            VertexId src = 0, tgt = 0;
            if (! t.src.is_context() && ! t.tgt.is_context()) {
                src = t.src.id();
                tgt = t.tgt.id();
            }
            else if (t.src.is_context() && tau.src.is_context()) {
                src = j.src;
                tgt = t.tgt.id();
            }
            else if (t.tgt.is_context() && tau.tgt.is_context()) {
                src = t.src.id();
                tgt = j.tgt;
            }
            else if (t.src.is_context() && tau.tgt.is_context()) {
                src = j.tgt;
                tgt = t.tgt.id();
            }
            else {
                src = t.src.id();
                tgt = j.src;
            }
            EdgeId fresh = take_id(next_edge);
            if (context.has_edge(fresh))
                throw Error(ErrorKind::EdgeIdClash, "fresh edge id " + std::to_string(fresh) + " is a context edge");
            cert.j_prime.add_vertex(src);
            cert.j_prime.add_vertex(tgt);
            cert.j_prime.add_edge(fresh, src, tgt, j.label);
            cert.hR.emplace(fresh, tid);
            cert.sigma.emplace(fresh, jid);
        }
    }
}

StepResult apply_at(const Graph & host, const Redex & redex, std::optional<std::uint64_t> fresh_base)
{
    std::uint64_t next = fresh_base.value_or(default_fresh_base(host));
    const QuasiRule & rule = *redex.rule;
    const Graph & context = redex.decomposition.context;

    StepResult out;
    StepCertificate & cert = out.certificate;
    cert.redex = redex;
    cert.rhs_instance = fresh_instance(rule.rhs.pattern, context, next);
    cert.rhs_type = instantiate_type(rule.rhs.type, cert.rhs_instance);
    construct_rhs_patch(cert, next);

    Graph copy = rename_graph(rule.rhs.pattern, cert.rhs_instance);
    out.graph = graph_union(graph_union(context, cert.j_prime), copy);
    return out;
}

CheckReport verify_step(const Graph & host, const Graph & result, const StepCertificate & cert)
{
    CheckReport report;
    const Redex & rx = cert.redex;
    const QuasiRule & rule = *rx.rule;
    const PatchDecomposition & d = rx.decomposition;

    try {
        if (rename_graph(rule.lhs.pattern, rx.embedding) != d.match)
            report.add("redex", "match is not the embedded lhs pattern");
        if (! validate_patch(d).ok() || patch_compose(d) != host)
            report.add("redex", "context, patch and match do not compose to the host");
        if (rx.type != instantiate_type(rule.lhs.type, rx.embedding))
            report.add("redex", "lhs patch type is not the embedded one");
        if (! is_adherence_map(d.patch, rx.type, d, rx.hL))
            report.add("redex", "hL is not an adherence map");
    }
    catch (const Error & e) {
        report.add("redex", e.what());
    }
    if (! report.ok())
        return report;

    Graph copy;
    try {
        if (! cert.rhs_instance.is_injective())
            report.add("rhs-instance", "rhs instance is not injective");
        copy = rename_graph(rule.rhs.pattern, cert.rhs_instance);
        if (cert.rhs_type != instantiate_type(rule.rhs.type, cert.rhs_instance))
            report.add("rhs-instance", "rhs patch type is not the instantiated one");
    }
    catch (const Error & e) {
        report.add("rhs-instance", e.what());
    }
    if (! report.ok())
        return report;

    PatchDecomposition after{d.context, cert.j_prime, copy};
    CheckReport patch_report = validate_patch(after);
    if (! patch_report.ok()) {
        report.add("result", "J' is not a patch: " + patch_report.to_string());
        return report;
    }
    if (patch_compose(after) != result)
        report.add("result", "result is not C composed with J' and the rhs copy");

    if (! is_adherence_map(cert.j_prime, cert.rhs_type, after, cert.hR)) {
        report.add("hR", "hR is not an adherence map");
        return report;
    }

    for (const auto & [jid, j] : cert.j_prime.edges())
        if (! cert.sigma.contains(jid))
            report.add("sigma-total", "sigma undefined on new patch edge " + std::to_string(jid));
    for (const auto & [from, to] : cert.sigma)
        if (! cert.j_prime.has_edge(from))
            report.add("sigma-total", "sigma defined on unknown edge " + std::to_string(from));
    if (! report.ok())
        return report;

    auto new_bound = preimages(cert.hR);
    auto old_bound = preimages(rx.hL);
    for (const auto & [tid, t] : cert.rhs_type.edges) {
        EdgeId traced = rule.trace.at(tid);
        std::set<EdgeId> target;
        if (auto it = old_bound.find(traced); it != old_bound.end())
            target.insert(it->second.begin(), it->second.end());
        std::set<EdgeId> image;
        std::size_t domain = 0;
        if (auto it = new_bound.find(tid); it != new_bound.end()) {
            for (EdgeId e : it->second) {
                ++domain;
                EdgeId s = cert.sigma.at(e);
                image.insert(s);
                if (! target.contains(s)) {
                    report.add("sigma-bijective", "sigma sends " + std::to_string(e) + " outside the edges bound to its trace");
                    continue;
                }
                const Edge & ne = cert.j_prime.edge(e);
                const Edge & oe = d.patch.edge(s);
                if (ne.label != oe.label)
                    report.add("label", "edge " + std::to_string(e) + " and its sigma image differ in label");
                auto c_new = context_of(ne, t);
                auto c_old = context_of(oe, rx.type.edges.at(traced));
                if (! std::includes(c_old.begin(), c_old.end(), c_new.begin(), c_new.end()))
                    report.add("context", "edge " + std::to_string(e) + " moves to a different context vertex");
            }
        }
        if (image.size() != domain || image != target)
            report.add("sigma-bijective", "sigma is not a bijection for rhs type edge " + std::to_string(tid));
    }
    return report;
}

std::vector<Graph> brute_force_step_oracle(const Graph & host, const Redex & redex, std::size_t size_bound)
{
    const QuasiRule & rule = *redex.rule;
    const PatchDecomposition & d = redex.decomposition;
    auto bound = preimages(redex.hL);

    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (const auto & [tid, t] : rule.rhs.type.edges)
        if (auto it = bound.find(rule.trace.at(tid)); it != bound.end())
            for (EdgeId j : it->second)
                pairs.push_back({tid, j});
    if (pairs.size() > size_bound)
        throw Error(ErrorKind::BoundTooSmall, "the step needs " + std::to_string(pairs.size()) +
                                                  " patch edges, bound is " + std::to_string(size_bound));

    std::uint64_t next = default_fresh_base(host);
    StepCertificate cert;
    cert.redex = redex;
    cert.rhs_instance = fresh_instance(rule.rhs.pattern, d.context, next);
    cert.rhs_type = instantiate_type(rule.rhs.type, cert.rhs_instance);
    Graph copy = rename_graph(rule.rhs.pattern, cert.rhs_instance);
    PatchDecomposition after{d.context, Graph(), copy};

    std::vector<VertexId> pool(d.context.vertices().begin(), d.context.vertices().end());
    pool.insert(pool.end(), copy.vertices().begin(), copy.vertices().end());
    std::set<Label> labels = host.labels();
    for (const auto & l : copy.labels())
        labels.insert(l);

    // Local filter: each candidate alone must satisfy the per-edge clauses.
    std::vector<std::vector<Edge>> options;
    for (const auto & [tid, jid] : pairs) {
        const TypeEdge & t = cert.rhs_type.edges.at(tid);
        const Edge & j = d.patch.edge(jid);
        auto c_old = context_of(j, redex.type.edges.at(rule.trace.at(tid)));
        std::vector<Edge> fits;
        for (VertexId s : pool) {
            for (VertexId g : pool) {
                bool s_ctx = d.context.has_vertex(s), g_ctx = d.context.has_vertex(g);
                if (s_ctx && g_ctx)
                    continue;
                for (const Label & l : labels) {
                    Edge cand{s, g, l};
                    if (l != j.label || ! edge_adheres(cand, s_ctx, g_ctx, t))
                        continue;
                    auto c_new = context_of(cand, t);
                    if (std::includes(c_old.begin(), c_old.end(), c_new.begin(), c_new.end()))
                        fits.push_back(cand);
                }
            }
        }
        if (fits.empty())
            return {};
        options.push_back(std::move(fits));
    }

    std::vector<Graph> results;
    std::unordered_set<std::string> seen;
    std::vector<std::size_t> choice(pairs.size(), 0);
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == pairs.size()) {
            StepCertificate c = cert;
            c.j_prime = Graph();
            std::uint64_t edge_id = next;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const Edge & e = options[k][choice[k]];
                EdgeId id = take_id(edge_id);
                c.j_prime.add_vertex(e.src);
                c.j_prime.add_vertex(e.tgt);
                c.j_prime.add_edge(id, e.src, e.tgt, e.label);
                c.hR.emplace(id, pairs[k].first);
                c.sigma.emplace(id, pairs[k].second);
            }
            after.patch = c.j_prime;
            if (! validate_patch(after).ok())
                return;
            Graph result = patch_compose(after);
            if (! verify_step(host, result, c).ok())
                return;
            if (seen.insert(canonical_key(result)).second)
                results.push_back(std::move(result));
            return;
        }
        for (std::size_t k = 0; k < options[i].size(); ++k) {
            choice[i] = k;
            pick(i + 1);
        }
    };
    pick(0);
    return results;
}

std::map<VertexId, VertexId> vertex_trace(const StepCertificate & cert)
{
    std::map<VertexId, VertexId> out;
    for (VertexId v : cert.redex.decomposition.context.vertices())
        out.emplace(v, v);
    const Graph & rhs = cert.redex.rule->rhs.pattern;
    for (const auto & [pv, hv] : cert.redex.embedding.vertices)
        if (rhs.has_vertex(pv))
            out.emplace(hv, cert.rhs_instance.vertex(pv));
    return out;
}

SuccessorSet successors(const Graph & host, const RuleSystem & system, bool dedup, std::size_t cap)
{
    SuccessorSet out;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < system.rules.size(); ++i) {
        RedexSearch found = find_redexes(host, system.rules[i], cap);
        out.truncated = out.truncated || found.truncated;
        for (const Redex & rx : found.redexes) {
            StepResult step = apply_at(host, rx);
            if (dedup && ! seen.insert(canonical_key(step.graph)).second)
                continue;
            out.items.push_back(Successor{i, system.rules[i]->name, std::move(step.graph), std::move(step.certificate)});
        }
    }
    return out;
}

NormalizeResult normalize(const Graph & host, const RuleSystem & system, const NormalizeOptions & options)
{
    NormalizeResult state{host, {}};
    std::mt19937_64 rng(options.seed);
    while (true) {
        std::optional<Redex> chosen;
        if (options.strategy == Strategy::First) {
            for (const auto & rule : system.rules) {
                RedexSearch found = find_redexes(state.graph, rule, 1);
                if (! found.redexes.empty()) {
                    chosen = std::move(found.redexes.front());
                    break;
                }
            }
        }
        else {
            std::vector<Redex> all;
            for (const auto & rule : system.rules) {
                RedexSearch found = find_redexes(state.graph, rule, options.cap);
                for (auto & rx : found.redexes)
                    all.push_back(std::move(rx));
            }
            if (! all.empty()) {
                std::uniform_int_distribution<std::size_t> dist(0, all.size() - 1);
                chosen = std::move(all[dist(rng)]);
            }
        }
        if (! chosen)
            return state;
        if (state.trace.size() >= options.max_steps)
            throw StepLimitError(options.max_steps, state);
        state.trace.push_back(TraceStep{chosen->rule->name, redex_summary(*chosen)});
        state.graph = apply_at(state.graph, *chosen).graph;
    }
}

Redex rename_redex(const Redex & redex, const Renaming & phi)
{
    Redex out;
    out.rule = redex.rule;
    for (const auto & [pv, hv] : redex.embedding.vertices)
        out.embedding.vertices.emplace(pv, phi.vertex(hv));
    for (const auto & [pe, he] : redex.embedding.edges)
        out.embedding.edges.emplace(pe, phi.edge(he));
    out.decomposition.context = rename_graph(redex.decomposition.context, phi);
    out.decomposition.patch = rename_graph(redex.decomposition.patch, phi);
    out.decomposition.match = rename_graph(redex.decomposition.match, phi);
    out.type = instantiate_type(redex.rule->lhs.type, out.embedding);
    for (const auto & [j, t] : redex.hL)
        out.hL.emplace(phi.edge(j), t);
    return out;
}

DeterminismReport check_rule_determinism(const QuasiRule & rule, const std::vector<Graph> & hosts, std::uint64_t seed)
{
    if (! rule.deterministic)
        throw Error(ErrorKind::NotDeterministic, rule.name + ": lhs patch type is not simple");
    auto shared = std::make_shared<const QuasiRule>(rule);
    std::mt19937_64 rng(seed);
    DeterminismReport report;

    for (const Graph & host : hosts) {
        ++report.hosts;
        // A shuffled copy of the host on a disjoint id range.
        Renaming phi;
        std::uint64_t offset = default_fresh_base(host) + 1000;
        std::vector<VertexId> vs(host.vertices().begin(), host.vertices().end());
        std::vector<VertexId> vperm(vs.size());
        std::iota(vperm.begin(), vperm.end(), offset);
        std::shuffle(vperm.begin(), vperm.end(), rng);
        for (std::size_t i = 0; i < vs.size(); ++i)
            phi.vertices.emplace(vs[i], vperm[i]);
        std::vector<EdgeId> es;
        for (const auto & [id, e] : host.edges())
            es.push_back(id);
        std::vector<EdgeId> eperm(es.size());
        std::iota(eperm.begin(), eperm.end(), offset);
        std::shuffle(eperm.begin(), eperm.end(), rng);
        for (std::size_t i = 0; i < es.size(); ++i)
            phi.edges.emplace(es[i], eperm[i]);
        Graph shuffled = rename_graph(host, phi);

        for (const Redex & rx : find_redexes(host, shared).redexes) {
            ++report.redexes;
            StepResult a = apply_at(host, rx);
            StepResult b = apply_at(host, rx, default_fresh_base(host) + 17 + report.redexes);
            Redex moved = rename_redex(rx, phi);
            StepResult c = apply_at(shuffled, moved);
            bool ok = verify_step(host, a.graph, a.certificate).ok() && verify_step(host, b.graph, b.certificate).ok() &&
                      verify_step(shuffled, c.graph, c.certificate).ok() && isomorphic(a.graph, b.graph) &&
                      isomorphic(a.graph, c.graph);
            if (! ok)
                throw Error(ErrorKind::DeterminismViolation, rule.name + ": non-isomorphic results at " + redex_summary(rx));
        }
    }
    return report;
}

} // namespace pgr
