#include "pgr/rule.hpp"

#include <sstream>

namespace pgr {

VertexId Endpoint::id() const
{
    if (context_)
        throw Error(ErrorKind::DomainGap, "the context node has no vertex id");
    return id_;
}

std::string to_string(const Endpoint & e)
{
    return e.is_context() ? std::string("ctx") : std::to_string(e.id());
}

std::shared_ptr<const QuasiRule> RuleSystem::find(const std::string & rule_name) const
{
    for (const auto & r : rules)
        if (r->name == rule_name)
            return r;
    return nullptr;
}

bool PatchType::is_simple() const
{
    std::set<TypeEdge> seen;
    for (const auto & [id, t] : edges)
        if (! seen.insert(t).second)
            return false;
    return true;
}

CheckReport validate_patch_type(const PatchType & type, const Graph & pattern)
{
    CheckReport report;
    for (const auto & [id, t] : type.edges) {
        if (t.src.is_context() && t.tgt.is_context())
            report.add("context-loop", "type edge " + std::to_string(id) + " has the context node at both ends");
        for (const Endpoint & end : {t.src, t.tgt})
            if (! end.is_context() && ! pattern.has_vertex(end.id()))
                report.add("endpoints", "type edge " + std::to_string(id) + " refers to vertex " +
                                            std::to_string(end.id()) + " outside the pattern");
    }
    return report;
}

CheckReport validate_quasi_rule(const QuasiRule & r)
{
    CheckReport report;
    for (const auto & v : validate_patch_type(r.lhs.type, r.lhs.pattern).violations)
        report.add("lhs-type", v.detail);
    for (const auto & v : validate_patch_type(r.rhs.type, r.rhs.pattern).violations)
        report.add("rhs-type", v.detail);

    for (const auto & [id, t] : r.rhs.type.edges) {
        auto it = r.trace.find(id);
        if (it == r.trace.end()) {
            report.add("trace-total", "rhs type edge " + std::to_string(id) + " has no trace");
            continue;
        }
        auto lt = r.lhs.type.edges.find(it->second);
        if (lt == r.lhs.type.edges.end()) {
            report.add("trace-range", "rhs type edge " + std::to_string(id) + " traces to unknown lhs type edge " +
                                          std::to_string(it->second));
            continue;
        }
        if (t.touches_context() && ! lt->second.touches_context())
            report.add("context-preservation", "rhs type edge " + std::to_string(id) +
                                                   " touches the context but its trace " +
                                                   std::to_string(it->second) + " does not");
    }
    for (const auto & [from, to] : r.trace)
        if (! r.rhs.type.edges.contains(from))
            report.add("trace-total", "trace entry for unknown rhs type edge " + std::to_string(from));

    if (r.deterministic != r.lhs.type.is_simple())
        report.add("deterministic-flag", r.deterministic ? "flag set but lhs patch type is not simple"
                                                         : "flag cleared but lhs patch type is simple");
    return report;
}

QuasiRule make_rule(QuasiRule r)
{
    QuasiRule out;
    out.name = r.name;
    out.lhs.pattern = r.lhs.pattern;
    out.rhs.pattern = r.rhs.pattern;

    std::map<EdgeId, EdgeId> lhs_ids;
    EdgeId next = 0;
    for (const auto & [id, t] : r.lhs.type.edges) {
        lhs_ids.emplace(id, next);
        out.lhs.type.edges.emplace(next, t);
        ++next;
    }

    std::set<std::string> used;
    for (const auto & [id, key] : r.keys)
        if (lhs_ids.contains(id))
            used.insert(key);
    for (const auto & [old, fresh] : lhs_ids) {
        auto it = r.keys.find(old);
        if (it != r.keys.end()) {
            out.keys.emplace(fresh, it->second);
            continue;
        }
        std::string key = std::to_string(fresh + 1);
        while (used.contains(key))
            key += "'";
        used.insert(key);
        out.keys.emplace(fresh, key);
    }

    for (const auto & [id, t] : r.rhs.type.edges) {
        EdgeId fresh = next++;
        out.rhs.type.edges.emplace(fresh, t);
        auto it = r.trace.find(id);
        if (it == r.trace.end())
            throw Error(ErrorKind::InvalidRule, "rhs type edge " + std::to_string(id) + " has no trace");
        auto lt = lhs_ids.find(it->second);
        if (lt == lhs_ids.end())
            throw Error(ErrorKind::InvalidRule, "rhs type edge " + std::to_string(id) +
                                                    " traces to unknown lhs type edge " + std::to_string(it->second));
        out.trace.emplace(fresh, lt->second);
    }

    out.deterministic = out.lhs.type.is_simple();
    CheckReport report = validate_quasi_rule(out);
    if (report.has("context-preservation"))
        throw Error(ErrorKind::ContextPreservationViolation, (r.name.empty() ? "" : r.name + ": ") + report.to_string());
    if (! report.ok())
        throw Error(ErrorKind::InvalidRule, (r.name.empty() ? "" : r.name + ": ") + report.to_string());
    return out;
}

PatchType instantiate_type(const PatchType & type, const Renaming & embedding)
{
    auto move = [&](const Endpoint & e) {
        return e.is_context() ? e : Endpoint::vertex(embedding.vertex(e.id()));
    };
    PatchType out;
    for (const auto & [id, t] : type.edges)
        out.edges.emplace(id, TypeEdge{move(t.src), move(t.tgt)});
    return out;
}

bool edge_adheres(const Edge & j, bool src_in_context, bool tgt_in_context, const TypeEdge & t)
{
    bool src_ok = src_in_context ? t.src.is_context() : (! t.src.is_context() && t.src.id() == j.src);
    bool tgt_ok = tgt_in_context ? t.tgt.is_context() : (! t.tgt.is_context() && t.tgt.id() == j.tgt);
    return src_ok && tgt_ok;
}

bool edge_adheres(const Edge & j, const PatchDecomposition & d, const TypeEdge & t)
{
    return edge_adheres(j, d.context.has_vertex(j.src), d.context.has_vertex(j.tgt), t);
}

AdherenceEnumeration enumerate_adherence_maps(const Graph & patch, const PatchType & type,
                                              const PatchDecomposition & d, std::size_t cap)
{
    AdherenceEnumeration result;
    std::vector<EdgeId> patch_ids;
    std::vector<std::vector<EdgeId>> options;
    for (const auto & [jid, j] : patch.edges()) {
        std::vector<EdgeId> fits;
        for (const auto & [tid, t] : type.edges)
            if (edge_adheres(j, d, t))
                fits.push_back(tid);
        if (fits.empty())
            return result;
        patch_ids.push_back(jid);
        options.push_back(std::move(fits));
    }

    std::vector<std::size_t> digits(options.size(), 0);
    while (true) {
        if (result.maps.size() == cap) {
            result.truncated = true;
            return result;
        }
        AdherenceMap h;
        for (std::size_t i = 0; i < digits.size(); ++i)
            h.emplace(patch_ids[i], options[i][digits[i]]);
        result.maps.push_back(std::move(h));

        // Last patch edge varies fastest.
        std::size_t i = digits.size();
        while (i > 0) {
            --i;
            if (++digits[i] < options[i].size())
                break;
            digits[i] = 0;
            if (i == 0)
                return result;
        }
        if (digits.empty())
            return result;
    }
}

bool is_adherence_map(const Graph & patch, const PatchType & type, const PatchDecomposition & d,
                      const AdherenceMap & h)
{
    if (h.size() != patch.edge_count())
        return false;
    for (const auto & [jid, j] : patch.edges()) {
        auto it = h.find(jid);
        if (it == h.end())
            return false;
        auto t = type.edges.find(it->second);
        if (t == type.edges.end() || ! edge_adheres(j, d, t->second))
            return false;
    }
    return true;
}

std::set<VertexId> context_of(const Edge & e, const TypeEdge & assigned)
{
    if (assigned.src.is_context())
        return {e.src};
    if (assigned.tgt.is_context())
        return {e.tgt};
    return {};
}

std::set<VertexId> context_of(EdgeId e, const Graph & patch, const AdherenceMap & h, const PatchType & type)
{
    auto it = h.find(e);
    if (it == h.end())
        throw Error(ErrorKind::DomainGap, "adherence map has no entry for edge " + std::to_string(e));
    auto t = type.edges.find(it->second);
    if (t == type.edges.end())
        throw Error(ErrorKind::DomainGap, "unknown type edge " + std::to_string(it->second));
    return context_of(patch.edge(e), t->second);
}

QuasiRule rename_rule(const QuasiRule & r, const RuleRenaming & phi)
{
    auto move = [](const Endpoint & e, const Renaming & ren) {
        return e.is_context() ? e : Endpoint::vertex(ren.vertex(e.id()));
    };
    QuasiRule out;
    out.name = r.name;
    out.deterministic = r.deterministic;
    out.lhs.pattern = rename_graph(r.lhs.pattern, phi.lhs);
    out.rhs.pattern = rename_graph(r.rhs.pattern, phi.rhs);
    for (const auto & [id, t] : r.lhs.type.edges)
        out.lhs.type.edges.emplace(phi.lhs_type.at(id), TypeEdge{move(t.src, phi.lhs), move(t.tgt, phi.lhs)});
    for (const auto & [id, t] : r.rhs.type.edges)
        out.rhs.type.edges.emplace(phi.rhs_type.at(id), TypeEdge{move(t.src, phi.rhs), move(t.tgt, phi.rhs)});
    for (const auto & [from, to] : r.trace)
        out.trace.emplace(phi.rhs_type.at(from), phi.lhs_type.at(to));
    for (const auto & [id, key] : r.keys)
        out.keys.emplace(phi.lhs_type.at(id), key);
    return out;
}

} // namespace pgr
