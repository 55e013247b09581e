#include "pgr/systems/dijkstra_scholten.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "pgr/io/text_format.hpp"
#include "pgr/isomorphism.hpp"

namespace pgr {

namespace {

const char * const kRules = R"(
rule "snd b" {
  lhs { node 1!, 2!; 1 -t-> 1; 1 -e-> 2; }
  rhs { node 1!, 2!; 1 -t-> 1; 1 -s-> 1; 1 -e-> 2; 1 -b-> 2; }
}

rule "rec b-1" {
  lhs { node 1!, 2!; 2 -t-> 2; 1 -b-> 2; }
  rhs { node 1!, 2!; 2 -t-> 2; 2 -c-> 1; }
}

rule "rec b-2" {
  lhs {
    node 1!, 2;
    1 -b-> 2;
    type 1: 1 -> 2;
    type 2: 2 -> 1;
    type 3: ctx -> 2;
    type 4: 2 -> ctx;
  }
  rhs {
    node 1!, 2;
    1 -p-> 2; 2 -t-> 2;
    type: 1 -> 2 from 1;
    type: 2 -> 1 from 2;
    type: ctx -> 2 from 3;
    type: 2 -> ctx from 4;
  }
}

rule "rec c" {
  lhs { node 1!, 2!; 2 -c-> 1; 1 -s-> 1; }
  rhs { node 1!, 2!; }
}

rule quit {
  lhs {
    node 1!, 2;
    1 -p-> 2; 2 -t-> 2;
    type 1: 1 -> 2;
    type 2: 2 -> 1;
    type 3: ctx -> 2;
    type 4: 2 -> ctx;
  }
  rhs {
    node 1!, 2;
    2 -c-> 1;
    type: 1 -> 2 from 1;
    type: 2 -> 1 from 2;
    type: ctx -> 2 from 3;
    type: 2 -> ctx from 4;
  }
}

rule announce {
  lhs {
    node 1;
    1 -i-> 1; 1 -t-> 1;
    type 1: ctx -> 1;
    type 2: 1 -> ctx;
  }
  rhs {
    node 1;
    1 -i-> 1;
    type: ctx -> 1 from 1;
    type: 1 -> ctx from 2;
  }
}

system ds { "snd b", "rec b-1", "rec b-2", "rec c", quit, announce }
)";

const Document & library()
{
    static const Document doc = parse_document(kRules);
    return doc;
}

// Pattern vertex sending the basic message in snd b.
VertexId sender_of(const QuasiRule & snd)
{
    for (const auto & [id, e] : snd.lhs.pattern.edges())
        if (e.label == ds::kNetwork)
            return e.src;
    throw Error(ErrorKind::InvalidRule, "snd b has no network edge");
}

struct Node {
    Graph graph;
    std::map<VertexId, std::size_t> sent;
    std::size_t depth;
};

// State plus send counters, as one graph for isomorphism dedup.
std::string budget_key(const Node & n)
{
    Graph g = n.graph;
    for (const auto & [v, k] : n.sent)
        for (std::size_t i = 0; i < k; ++i)
            g.add_edge(v, v, "#sent");
    return canonical_key(g);
}

} // namespace

const std::string & dijkstra_scholten_rules_text()
{
    static const std::string text = kRules;
    return text;
}

RuleSystem dijkstra_scholten_system()
{
    return library().system("ds");
}

Graph ds_initial_network(const std::vector<std::pair<VertexId, VertexId>> & links, VertexId initiator)
{
    Graph g;
    g.add_vertex(initiator);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [u, v] : links) {
        if (u == v)
            throw Error(ErrorKind::SelfLoopInTopology, "link " + std::to_string(u) + " -- " + std::to_string(v));
        g.add_vertex(u);
        g.add_vertex(v);
        if (! seen.insert(std::minmax(u, v)).second)
            continue;
        g.add_edge(u, v, ds::kNetwork);
        g.add_edge(v, u, ds::kNetwork);
    }
    g.add_edge(initiator, initiator, ds::kInitiator);
    g.add_edge(initiator, initiator, ds::kInTree);
    return g;
}

CheckReport ds_announce_safety(const Graph & state)
{
    CheckReport report;
    if (find_redexes(state, library().rule("announce"), 1).redexes.empty())
        return report;
    std::set<VertexId> initiators;
    for (const auto & [id, e] : state.edges())
        if (e.src == e.tgt && e.label == ds::kInitiator)
            initiators.insert(e.src);
    for (const auto & [id, e] : state.edges()) {
        std::string at = "e" + std::to_string(id);
        if (e.label == ds::kBasic)
            report.add("basic", at + " still in transit");
        else if (e.label == ds::kControl)
            report.add("control", at + " still in transit");
        else if (e.label == ds::kInTree && ! initiators.contains(e.src))
            report.add("tree", "vertex " + std::to_string(e.src) + " still in the tree");
    }
    return report;
}

DsExploration ds_explore(const Graph & start, const DsExploreOptions & options)
{
    RuleSystem sys = dijkstra_scholten_system();
    const QuasiRule & snd = *sys.rules.front();
    const VertexId sender = sender_of(snd);

    DsExploration out;
    std::unordered_set<std::string> seen;
    std::deque<std::size_t> queue;
    std::vector<Node> nodes;

    auto push = [&](Node n) {
        if (! seen.insert(budget_key(n)).second)
            return;
        if (nodes.size() >= options.max_states) {
            out.truncated = true;
            return;
        }
        out.states.push_back(n.graph);
        queue.push_back(nodes.size());
        nodes.push_back(std::move(n));
    };
    push(Node{start, {}, 0});

    while (! queue.empty()) {
        std::size_t index = queue.front();
        queue.pop_front();
        const Node current = nodes[index];

        CheckReport safety = ds_announce_safety(current.graph);
        if (! safety.ok())
            out.unsafe.push_back(index);

        if (! find_redexes(current.graph, sys.rules.back(), 1).redexes.empty())
            ++out.announce_states;

        std::size_t fired = 0;
        for (std::size_t r = 0; r < sys.rules.size(); ++r) {
            RedexSearch found = find_redexes(current.graph, sys.rules[r]);
            out.truncated = out.truncated || found.truncated;
            for (const Redex & rx : found.redexes) {
                VertexId who = 0;
                if (r == 0) {
                    who = rx.embedding.vertex(sender);
                    auto it = current.sent.find(who);
                    std::size_t used = it == current.sent.end() ? 0 : it->second;
                    if (used >= options.max_sends_per_process)
                        continue;
                }
                ++fired;
                if (current.depth >= options.max_depth) {
                    out.truncated = true;
                    continue;
                }
                StepResult step = apply_at(current.graph, rx);
                ++out.transitions;
                auto trace = vertex_trace(step.certificate);
                Node next{std::move(step.graph), {}, current.depth + 1};
                for (const auto & [v, k] : current.sent)
                    if (auto it = trace.find(v); it != trace.end())
                        next.sent[it->second] = k;
                if (r == 0)
                    ++next.sent[trace.at(who)];
                push(std::move(next));
            }
        }
        if (fired == 0)
            ++out.terminated_states;
    }
    return out;
}

} // namespace pgr
