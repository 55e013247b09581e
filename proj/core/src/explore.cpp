#include "pgr/explore.hpp"

#include <deque>
#include <unordered_map>

#include "pgr/isomorphism.hpp"

namespace pgr {

std::vector<std::size_t> StateSpace::terminal_states() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (transitions[i].empty())
            out.push_back(i);
    return out;
}

StateSpace explore(const Graph & start, const RuleSystem & system, const ExploreOptions & options)
{
    StateSpace space;
    std::unordered_map<std::string, std::size_t> index;
    auto intern = [&](const Graph & g, std::size_t depth) -> std::pair<std::size_t, bool> {
        auto [it, fresh] = index.emplace(canonical_key(g), space.states.size());
        if (fresh) {
            space.states.push_back(g);
            space.depth.push_back(depth);
            space.transitions.emplace_back();
        }
        return {it->second, fresh};
    };

    std::deque<std::size_t> queue;
    queue.push_back(intern(start, 0).first);
    while (! queue.empty()) {
        std::size_t s = queue.front();
        queue.pop_front();
        if (space.depth[s] >= options.max_depth) {
            space.truncated = true;
            continue;
        }
        SuccessorSet next = successors(space.states[s], system, true, options.cap);
        space.truncated = space.truncated || next.truncated;
        for (const Successor & succ : next.items) {
            if (space.states.size() >= options.max_states && ! index.contains(canonical_key(succ.graph))) {
                space.truncated = true;
                continue;
            }
            auto [t, fresh] = intern(succ.graph, space.depth[s] + 1);
            space.transitions[s].push_back(Transition{succ.rule_index, t});
            if (fresh)
                queue.push_back(t);
        }
    }
    return space;
}

std::vector<Graph> reachable_normal_forms(const Graph & start, const RuleSystem & system, const ExploreOptions & options)
{
    StateSpace space = explore(start, system, options);
    if (space.truncated)
        throw Error(ErrorKind::StepLimitReached, "state space exploration was truncated");
    std::vector<Graph> out;
    for (std::size_t i : space.terminal_states())
        out.push_back(space.states[i]);
    return out;
}

} // namespace pgr
