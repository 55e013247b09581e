#include "pgr/systems/waitfor.hpp"

#include <map>
#include <sstream>

#include "pgr/io/text_format.hpp"

namespace pgr {

namespace {

const char * const kRules = R"(
rule create {
  lhs { }
  rhs { node 1; }
}

rule destroy {
  lhs { node 1; }
  rhs { }
}

# target 1, requester 2, request 3
rule "1-of-1" {
  lhs {
    node 1, 2;
    type 1: ctx -> 2;
    type 2: ctx -> 1;
    type 3: 1 -> ctx;
  }
  rhs {
    node 1, 2, 3;
    2 --> 3; 3 --> 1; 3 -z-> 3; 3 -s-> 3;
    type: ctx -> 2 from 1;
    type: ctx -> 1 from 2;
    type: 1 -> ctx from 3;
  }
}

# requester 2, new target 3, request 4
rule "ext-0" {
  lhs {
    node 2, 3, 4;
    2 --> 4; 4 -z-> 4;
    type 1: ctx -> 2;
    type 2: 4 -> 4;
    type 3: 4 -> ctx;
    type 4: ctx -> 3;
    type 5: 3 -> ctx;
  }
  rhs {
    node 2, 3, 4;
    2 --> 4; 4 -z-> 4; 4 --> 3;
    type: ctx -> 2 from 1;
    type: 4 -> 4 from 2;
    type: 4 -> ctx from 3;
    type: ctx -> 3 from 4;
    type: 3 -> ctx from 5;
  }
}

rule "ext-1" {
  lhs {
    node 2, 3, 4;
    2 --> 4; 4 -z-> 4;
    type 1: ctx -> 2;
    type 2: 4 -> 4;
    type 3: 4 -> ctx;
    type 4: ctx -> 3;
    type 5: 3 -> ctx;
  }
  rhs {
    node 2, 3, 4;
    2 --> 4; 4 -z-> 4; 4 --> 3; 4 -s-> 4;
    type: ctx -> 2 from 1;
    type: 4 -> 4 from 2;
    type: 4 -> ctx from 3;
    type: ctx -> 3 from 4;
    type: 3 -> ctx from 5;
  }
}

# targets 1 and 3, requester 2, request 4
rule "2-of-2" {
  lhs {
    node 1, 2, 3;
    type 1: ctx -> 2;
    type 2: ctx -> 1;
    type 3: 1 -> ctx;
    type 4: ctx -> 3;
    type 5: 3 -> ctx;
  }
  rhs {
    node 1, 2, 3, 4;
    2 --> 4; 4 --> 1; 4 --> 3; 4 -z-> 4; 4 -s-> 4; 4 -s-> 4;
    type: ctx -> 2 from 1;
    type: ctx -> 1 from 2;
    type: 1 -> ctx from 3;
    type: ctx -> 3 from 4;
    type: 3 -> ctx from 5;
  }
}

# target 1, requester 2, request 3
rule grant {
  lhs {
    node 1, 2, 3;
    2 --> 3; 3 --> 1; 3 -s-> 3;
    type 1: ctx -> 2;
    type 2: ctx -> 1;
    type 3: 3 -> ctx;
    type 4: 3 -> 3;
  }
  rhs {
    node 1, 2, 3;
    2 --> 3;
    type: ctx -> 2 from 1;
    type: ctx -> 1 from 2;
    type: 3 -> ctx from 3;
    type: 3 -> 3 from 4;
  }
}

rule resolve {
  lhs {
    node 1;
    1 -z-> 1;
    type 1: ctx -> 1;
    type 2: 1 -> ctx;
  }
  rhs { }
}

# p = 4 keeps r1, r2; its clone 5 takes r3
rule "clone-1" {
  lhs {
    node 1 [r1], 2 [r2], 3 [r3], 4;
    1 --> 4; 2 --> 4; 3 --> 4;
    type 1: ctx -> 4;
  }
  rhs {
    node 1 [r1], 2 [r2], 3 [r3], 4, 5;
    1 --> 4; 2 --> 4; 3 --> 5;
    type: ctx -> 4 from 1;
    type: ctx -> 5 from 1;
  }
}

# as clone-1, and the clone 6 gets a copy 7 of p's request 5
rule "clone-2" {
  lhs {
    node 1 [r1], 2 [r2], 3 [r3], 4, 5;
    1 --> 4; 2 --> 4; 3 --> 4; 4 --> 5;
    type 1: ctx -> 4;
    type 2: 5 -> 5;
    type 3: 5 -> ctx;
  }
  rhs {
    node 1 [r1], 2 [r2], 3 [r3], 4, 5, 6, 7;
    1 --> 4; 2 --> 4; 3 --> 6; 4 --> 5; 6 --> 7;
    type: ctx -> 4 from 1;
    type: ctx -> 6 from 1;
    type: 5 -> 5 from 2;
    type: 5 -> ctx from 3;
    type: 7 -> 7 from 2;
    type: 7 -> ctx from 3;
  }
}

system grammar { create, "1-of-1", "ext-0", "ext-1" }
system detection { grant, resolve, destroy }
)";

const Document & library()
{
    static const Document doc = parse_document(kRules);
    return doc;
}

std::map<VertexId, std::size_t> count_loops(const Graph & g, const Label & label)
{
    std::map<VertexId, std::size_t> out;
    for (const auto & [id, e] : g.edges())
        if (e.src == e.tgt && e.label == label)
            ++out[e.src];
    return out;
}

} // namespace

const std::string & waitfor_rules_text()
{
    static const std::string text = kRules;
    return text;
}

RuleSystem waitfor_grammar()
{
    return library().system("grammar");
}

RuleSystem deadlock_detection_system()
{
    return library().system("detection");
}

RuleSystem waitfor_system(std::size_t max_arity)
{
    RuleSystem out;
    out.name = "waitfor";
    for (const char * name : {"create", "destroy", "grant", "resolve", "clone-1", "clone-2"})
        out.add(library().rule(name));
    for (std::size_t m = 1; m <= max_arity; ++m)
        for (std::size_t n = 1; n <= m; ++n)
            out.add(make_n_of_m_rule(n, m));
    return out;
}

QuasiRule make_n_of_m_rule(std::size_t n, std::size_t m)
{
    if (n == 0 || n > m)
        throw Error(ErrorKind::BadArity, "N-of-M needs 0 < N <= M, got N=" + std::to_string(n) +
                                             " M=" + std::to_string(m));
    // requester 1, targets 2..m+1, request m+2
    const std::size_t request = m + 2;
    std::ostringstream lhs, rhs;
    lhs << "node 1";
    rhs << "node 1";
    for (std::size_t i = 2; i <= m + 1; ++i) {
        lhs << ", " << i;
        rhs << ", " << i;
    }
    lhs << ";\n";
    rhs << ", " << request << ";\n";
    rhs << "1 --> " << request << "; " << request << " -z-> " << request << ";\n";
    for (std::size_t i = 0; i < n; ++i)
        rhs << request << " -s-> " << request << ";\n";
    lhs << "type r: ctx -> 1;\n";
    rhs << "type: ctx -> 1 from r;\n";
    for (std::size_t i = 2; i <= m + 1; ++i) {
        lhs << "type in" << i << ": ctx -> " << i << ";\n";
        lhs << "type out" << i << ": " << i << " -> ctx;\n";
        rhs << request << " --> " << i << ";\n";
        rhs << "type: ctx -> " << i << " from in" << i << ";\n";
        rhs << "type: " << i << " -> ctx from out" << i << ";\n";
    }
    std::ostringstream text;
    text << "rule \"" << n << "-of-" << m << "\" {\n lhs {\n" << lhs.str() << "}\n rhs {\n" << rhs.str() << "}\n}\n";
    return parse_document(text.str()).rules.at(0);
}

CheckReport check_waitfor_net(const Graph & g, WaitForPhase phase)
{
    CheckReport report;
    auto z = count_loops(g, kWaitZ);
    auto s = count_loops(g, kWaitS);
    auto is_request = [&](VertexId v) { return z.contains(v); };

    std::map<VertexId, std::vector<VertexId>> out, in;
    for (const auto & [id, e] : g.edges()) {
        if (e.src == e.tgt) {
            if (e.label != kWaitZ && e.label != kWaitS)
                report.add("labels", "loop e" + std::to_string(id) + " labelled '" + e.label + "'");
            continue;
        }
        if (e.label != kUnlabeled)
            report.add("labels", "edge e" + std::to_string(id) + " labelled '" + e.label + "'");
        out[e.src].push_back(e.tgt);
        in[e.tgt].push_back(e.src);
    }

    for (VertexId v : g.vertices()) {
        std::string at = "vertex " + std::to_string(v);
        if (! is_request(v)) {
            if (s.contains(v))
                report.add("loops", at + " has s-loops but no z-loop");
            if (out[v].size() > 1)
                report.add("process-out", at + " has " + std::to_string(out[v].size()) + " outgoing requests");
            for (VertexId w : out[v])
                if (! is_request(w))
                    report.add("process-out", at + " points at process " + std::to_string(w));
            for (VertexId w : in[v])
                if (! is_request(w))
                    report.add("process-in", at + " is pointed at by process " + std::to_string(w));
            continue;
        }
        if (z[v] != 1)
            report.add("loops", at + " has " + std::to_string(z[v]) + " z-loops");
        if (in[v].size() != 1) {
            report.add("request-in", at + " has " + std::to_string(in[v].size()) + " requesters");
            continue;
        }
        VertexId requester = in[v].front();
        if (is_request(requester))
            report.add("request-in", at + " is requested by request " + std::to_string(requester));
        std::set<VertexId> targets;
        for (VertexId w : out[v]) {
            if (w == requester)
                report.add("request-out", at + " targets its own requester");
            if (is_request(w))
                report.add("request-out", at + " targets request " + std::to_string(w));
            if (! targets.insert(w).second)
                report.add("request-out", at + " targets " + std::to_string(w) + " twice");
        }
        std::size_t pending = s.contains(v) ? s[v] : 0;
        if (pending > targets.size())
            report.add("pending", at + " needs " + std::to_string(pending) + " grants from " +
                                      std::to_string(targets.size()) + " targets");
        if (phase == WaitForPhase::Built) {
            if (targets.empty())
                report.add("request-out", at + " has no targets");
            if (pending == 0)
                report.add("pending", at + " has no s-loop");
        }
    }
    return report;
}

DeadlockResult detect_deadlock(const Graph & net, std::size_t max_steps)
{
    NormalizeOptions opts;
    opts.max_steps = max_steps;
    NormalizeResult r = normalize(net, deadlock_detection_system(), opts);
    DeadlockVerdict v = r.graph.empty() ? DeadlockVerdict::DeadlockFree : DeadlockVerdict::Deadlocked;
    return DeadlockResult{v, std::move(r.graph), r.trace.size()};
}

std::string to_string(DeadlockVerdict v)
{
    return v == DeadlockVerdict::DeadlockFree ? "deadlock-free" : "deadlocked";
}

} // namespace pgr
