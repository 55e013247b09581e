#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgr/explore.hpp"
#include "pgr/io/dot.hpp"
#include "pgr/io/text_format.hpp"
#include "pgr/systems/dijkstra_scholten.hpp"
#include "pgr/systems/waitfor.hpp"

namespace {

enum Exit { Ok = 0, Negative = 1, InputError = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

pgr::Document load(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return pgr::parse_document(buf.str());
}

const pgr::Graph & pick_graph(const pgr::Document & doc, const std::string & name, const std::string & path)
{
    if (! name.empty())
        return doc.graph(name);
    if (doc.graphs.size() != 1)
        throw UsageError(path + " holds " + std::to_string(doc.graphs.size()) + " graphs; pass --graph");
    return doc.graphs.front().second;
}

std::size_t map_cap()
{
    const char * env = std::getenv("PGR_MAX_MAPS");
    if (! env || ! *env)
        return pgr::kDefaultMapCap;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0)
            throw std::invalid_argument(env);
        return static_cast<std::size_t>(v);
    }
    catch (const std::exception &) {
        throw UsageError(std::string("PGR_MAX_MAPS must be a positive integer, got '") + env + "'");
    }
}

std::shared_ptr<const pgr::QuasiRule> pick_rule(const pgr::Document & doc, const std::string & name)
{
    return std::make_shared<const pgr::QuasiRule>(doc.rule(name));
}

pgr::RedexSearch search(const pgr::Graph & host, const std::shared_ptr<const pgr::QuasiRule> & rule)
{
    pgr::RedexSearch found = pgr::find_redexes(host, rule, map_cap());
    if (found.truncated)
        std::cerr << "warning: redex list cut at " << found.redexes.size() << " (PGR_MAX_MAPS)\n";
    return found;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Patch graph rewriting driver"};
    app.require_subcommand(1);

    std::string file, rules_file, graph_name, rule_name, system_name, strategy = "first";
    std::size_t redex_index = 0, max_steps = 10000, max_depth = 64, max_sends = 2;
    std::uint64_t seed = 0, initiator = 1;
    std::optional<std::uint64_t> fresh_base;

    auto * validate = app.add_subcommand("validate", "Parse a file and check every rule");
    validate->add_option("file", file)->required();

    auto * expand = app.add_subcommand("expand", "Print rules with all shorthand expanded");
    expand->add_option("file", file)->required();

    auto * match = app.add_subcommand("match", "List the redexes of a rule in a graph");
    match->add_option("graphs", file)->required();
    match->add_option("rules", rules_file)->required();
    match->add_option("--rule", rule_name)->required();
    match->add_option("--graph", graph_name);

    auto * apply = app.add_subcommand("apply", "Rewrite one redex and print the result");
    apply->add_option("graphs", file)->required();
    apply->add_option("rules", rules_file)->required();
    apply->add_option("--rule", rule_name)->required();
    apply->add_option("--graph", graph_name);
    apply->add_option("--redex-index", redex_index);
    apply->add_option("--fresh-base", fresh_base);

    auto * norm = app.add_subcommand("normalize", "Rewrite until no rule applies");
    norm->add_option("graphs", file)->required();
    norm->add_option("rules", rules_file)->required();
    norm->add_option("--graph", graph_name);
    norm->add_option("--system", system_name, "Named system (default: every rule in order)");
    norm->add_option("--strategy", strategy)->check(CLI::IsMember({"first", "random"}));
    norm->add_option("--seed", seed);
    norm->add_option("--max-steps", max_steps);

    auto * deadlock = app.add_subcommand("deadlock", "Decide whether a wait-for net deadlocks");
    deadlock->add_option("file", file)->required();
    deadlock->add_option("--graph", graph_name);
    deadlock->add_option("--max-steps", max_steps);

    auto * ds = app.add_subcommand("ds-explore", "Explore termination detection on a topology");
    ds->add_option("topology", file, "Graph whose edges are the undirected links")->required();
    ds->add_option("--graph", graph_name);
    ds->add_option("--initiator", initiator);
    ds->add_option("--max-depth", max_depth);
    ds->add_option("--max-sends", max_sends, "Basic messages each process may send");

    auto * dot = app.add_subcommand("dot", "Export a graph as Graphviz text");
    dot->add_option("file", file)->required();
    dot->add_option("--graph", graph_name);
    dot->add_option("--highlight", rules_file, "Rule file; highlights a redex of --rule");
    dot->add_option("--rule", rule_name);
    dot->add_option("--redex-index", redex_index);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (*validate) {
            pgr::Document doc = load(file);
            std::size_t quasi = 0;
            for (const auto & r : doc.rules)
                quasi += r.deterministic ? 0 : 1;
            for (const auto & w : doc.warnings)
                std::cerr << "warning: " << w << "\n";
            std::cout << doc.graphs.size() << " graphs, " << doc.rules.size() << " rules (" << quasi
                      << " quasi), " << doc.systems.size() << " systems\n";
            return Ok;
        }
        if (*expand) {
            pgr::Document doc = load(file);
            for (const auto & r : doc.rules)
                std::cout << pgr::serialize_rule(r);
            return Ok;
        }
        if (*match) {
            pgr::Document gdoc = load(file), rdoc = load(rules_file);
            const pgr::Graph & host = pick_graph(gdoc, graph_name, file);
            pgr::RedexSearch found = search(host, pick_rule(rdoc, rule_name));
            for (std::size_t i = 0; i < found.redexes.size(); ++i)
                std::cout << i << ": " << pgr::redex_summary(found.redexes[i]) << "\n";
            return found.redexes.empty() ? Negative : Ok;
        }
        if (*apply) {
            pgr::Document gdoc = load(file), rdoc = load(rules_file);
            const pgr::Graph & host = pick_graph(gdoc, graph_name, file);
            pgr::RedexSearch found = search(host, pick_rule(rdoc, rule_name));
            if (redex_index >= found.redexes.size()) {
                std::cerr << "error: redex index " << redex_index << " out of range (" << found.redexes.size()
                          << " redexes)\n";
                return found.redexes.empty() ? Negative : InputError;
            }
            pgr::StepResult step = pgr::apply_at(host, found.redexes[redex_index], fresh_base);
            std::cout << pgr::serialize_graph(step.graph, graph_name.empty() ? "result" : graph_name);
            return Ok;
        }
        if (*norm) {
            pgr::Document gdoc = load(file), rdoc = load(rules_file);
            const pgr::Graph & host = pick_graph(gdoc, graph_name, file);
            pgr::RuleSystem sys = system_name.empty() ? rdoc.all_rules() : rdoc.system(system_name);
            pgr::NormalizeOptions opts;
            opts.strategy = strategy == "random" ? pgr::Strategy::Random : pgr::Strategy::First;
            opts.seed = seed;
            opts.max_steps = max_steps;
            opts.cap = map_cap();
            try {
                pgr::NormalizeResult r = pgr::normalize(host, sys, opts);
                for (const auto & s : r.trace)
                    std::cerr << s.redex << "\n";
                std::cout << pgr::serialize_graph(r.graph, "normal_form");
                return Ok;
            }
            catch (const pgr::StepLimitError & e) {
                std::cerr << e.what() << "\n";
                std::cout << pgr::serialize_graph(e.partial().graph, "partial");
                return Negative;
            }
        }
        if (*deadlock) {
            pgr::Document doc = load(file);
            const pgr::Graph & net = pick_graph(doc, graph_name, file);
            pgr::CheckReport report = pgr::check_waitfor_net(net);
            if (! report.ok()) {
                std::cerr << "error: not a wait-for net: " << report.to_string() << "\n";
                return InputError;
            }
            pgr::DeadlockResult r = pgr::detect_deadlock(net, max_steps);
            std::cout << pgr::to_string(r.verdict) << " after " << r.steps << " steps\n";
            if (r.verdict == pgr::DeadlockVerdict::Deadlocked)
                std::cout << pgr::serialize_graph(r.normal_form, "normal_form");
            return r.verdict == pgr::DeadlockVerdict::DeadlockFree ? Ok : Negative;
        }
        if (*ds) {
            pgr::Document doc = load(file);
            const pgr::Graph & topo = pick_graph(doc, graph_name, file);
            std::vector<std::pair<pgr::VertexId, pgr::VertexId>> links;
            for (const auto & [id, e] : topo.edges())
                links.emplace_back(e.src, e.tgt);
            if (! topo.has_vertex(initiator))
                throw UsageError("initiator " + std::to_string(initiator) + " is not in the topology");
            pgr::Graph start = pgr::ds_initial_network(links, initiator);
            for (pgr::VertexId v : topo.vertices())
                start.add_vertex(v);
            pgr::DsExploreOptions opts;
            opts.max_depth = max_depth;
            opts.max_sends_per_process = max_sends;
            pgr::DsExploration x = pgr::ds_explore(start, opts);
            std::cout << "states " << x.states.size() << "\n"
                      << "transitions " << x.transitions << "\n"
                      << "announce-enabled " << x.announce_states << "\n"
                      << "terminal " << x.terminated_states << "\n"
                      << "unsafe " << x.unsafe.size() << "\n"
                      << "truncated " << (x.truncated ? "yes" : "no") << "\n";
            return x.unsafe.empty() ? Ok : Negative;
        }
        if (*dot) {
            pgr::Document doc = load(file);
            const pgr::Graph & g = pick_graph(doc, graph_name, file);
            std::string name = graph_name.empty() ? doc.graphs.front().first : graph_name;
            if (rules_file.empty()) {
                std::cout << pgr::export_dot(g, nullptr, name);
                return Ok;
            }
            if (rule_name.empty())
                throw UsageError("--highlight needs --rule");
            pgr::RedexSearch found = search(g, pick_rule(load(rules_file), rule_name));
            if (redex_index >= found.redexes.size()) {
                std::cerr << "error: redex index " << redex_index << " out of range (" << found.redexes.size()
                          << " redexes)\n";
                return InputError;
            }
            std::cout << pgr::export_dot(g, &found.redexes[redex_index], name);
            return Ok;
        }
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    catch (const pgr::Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    return InputError;
}
