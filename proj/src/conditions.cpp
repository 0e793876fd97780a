#include "fheavy/conditions.hpp"

#include <stdexcept>

#include "fheavy/graph6.hpp"

namespace fheavy {
namespace {

bool light(const Graph& g, Vertex v) { return !heavy_degree(g.degree(v), g.order()); }

/// Lexicographically first pair inside `subset` (sorted) at distance 2 in the
/// induced subgraph with both endpoints light in g.
std::optional<LightPair> first_light_pair(const Graph& g, std::span<const Vertex> subset) {
    VertexSet inside(g.order());
    for (Vertex v : subset) inside.insert(v);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const Vertex u = subset[i];
        if (!light(g, u)) continue;
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            const Vertex v = subset[j];
            if (g.adjacent(u, v) || !light(g, v)) continue;
            if ((g.neighbors(u) & g.neighbors(v)).intersects(inside))
                return LightPair{u, v, g.degree(u), g.degree(v)};
        }
    }
    return std::nullopt;
}

Violation pair_violation(const Graph& g, const Pattern* p, InducedCopy copy, LightPair pair) {
    Violation out;
    out.kind = ViolationKind::LightPair;
    if (p) {
        out.pattern = p->label;
        out.pattern_graph6 = encode_graph6(p->graph);
    }
    out.copy = std::move(copy);
    out.pair = pair;
    out.n = g.order();
    return out;
}

ConditionReport holds(std::string name) { return ConditionReport{std::move(name), true, {}}; }

ConditionReport fails(std::string name, Violation v) {
    ConditionReport r{std::move(name), false, {}};
    r.violations.push_back(std::move(v));
    return r;
}

std::string family_label(std::span<const Pattern> family) {
    std::string out = "{";
    for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + family[i].label;
    return out + "}";
}

}  // namespace

bool is_heavy(const Graph& g, Vertex v) { return heavy_degree(g.degree(v), g.order()); }

ConditionReport copy_is_f_heavy(const Graph& g, std::span<const Vertex> subset) {
    InducedCopy sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted)
        if (v < 0 || v >= g.order()) throw std::out_of_range("copy_is_f_heavy: vertex " + std::to_string(v));
    if (auto pair = first_light_pair(g, sorted)) return fails("f-heavy", pair_violation(g, nullptr, sorted, *pair));
    return holds("f-heavy");
}

ConditionReport is_R_f_heavy(const Graph& g, const Pattern& p) {
    const std::string name = p.label + "-f-heavy";
    // A copy can only fail if it holds two light vertices, so graphs with at
    // most one light vertex pass without enumeration.
    int light_count = 0;
    for (Vertex v = 0; v < g.order(); ++v) light_count += light(g, v) ? 1 : 0;
    if (light_count < 2) return holds(name);

    bool any_failure = false;
    for_each_induced_embedding(g, p.graph, [&](const InducedCopy& copy) {
        any_failure = first_light_pair(g, copy).has_value();
        return !any_failure;
    });
    if (!any_failure) return holds(name);

    // Slow path only for failing graphs: report the lexicographically first copy.
    for (const auto& copy : enumerate_induced_copies(g, p))
        if (auto pair = first_light_pair(g, copy)) return fails(name, pair_violation(g, &p, copy, *pair));
    throw std::logic_error("is_R_f_heavy: failing copy vanished on re-enumeration");
}

ConditionReport is_family_f_heavy(const Graph& g, std::span<const Pattern> family) {
    if (family.empty()) throw std::invalid_argument("is_family_f_heavy: empty pattern family");
    const std::string name = family_label(family) + "-f-heavy";
    for (const auto& p : family) {
        auto r = is_R_f_heavy(g, p);
        if (!r.verdict) {
            r.condition = name;
            r.violations.front().context = family_label(family);
            return r;
        }
    }
    return holds(name);
}

ConditionReport satisfies_fan(const Graph& g) {
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        if (!light(g, u)) continue;
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v) || !light(g, v)) continue;
            if (g.neighbors(u).intersects(g.neighbors(v)))
                return fails("fan", pair_violation(g, nullptr, {}, LightPair{u, v, g.degree(u), g.degree(v)}));
        }
    }
    return holds("fan");
}

ConditionReport is_2_heavy(const Graph& g) {
    // A claw with fewer than two heavy ends has two light ends, which are at
    // distance 2 through the center; that pair is the claw's first light pair.
    auto r = is_R_f_heavy(g, pattern(PatternName::Claw));
    r.condition = "2heavy";
    return r;
}

bool is_R_free(const Graph& g, const Pattern& p) {
    return for_each_induced_embedding(g, p.graph, [](const InducedCopy&) { return false; });
}

ConditionReport free_report(const Graph& g, const Pattern& p) {
    const std::string name = p.label + "-free";
    if (is_R_free(g, p)) return holds(name);
    Violation v;
    v.kind = ViolationKind::ForbiddenCopy;
    v.pattern = p.label;
    v.pattern_graph6 = encode_graph6(p.graph);
    v.copy = enumerate_induced_copies(g, p).front();
    v.n = g.order();
    return fails(name, std::move(v));
}

ConditionReport theorem5_condition(const Graph& g) {
    const std::vector<Pattern> deer_family{pattern(PatternName::Claw), pattern(PatternName::P7),
                                           pattern(PatternName::Deer)};
    const std::vector<Pattern> hourglass_family{pattern(PatternName::Claw), pattern(PatternName::P7),
                                                pattern(PatternName::Hourglass)};
    ConditionReport out = holds("thm5");
    auto first = is_family_f_heavy(g, deer_family);
    if (first.verdict) return out;
    auto second = is_family_f_heavy(g, hourglass_family);
    if (second.verdict) return out;
    out.verdict = false;
    out.violations.push_back(std::move(first.violations.front()));
    out.violations.push_back(std::move(second.violations.front()));
    return out;
}

ConditionReport theorem4_condition(const Graph& g) {
    ConditionReport out = holds("thm4");
    auto two_heavy = is_2_heavy(g);
    if (!two_heavy.verdict) {
        out.verdict = false;
        out.violations = std::move(two_heavy.violations);
        out.violations.front().context = "2heavy";
        return out;
    }
    const Pattern p7 = pattern(PatternName::P7);
    auto p7_free = free_report(g, p7);
    auto alternative = [&](PatternName other, const char* label) -> std::optional<Violation> {
        if (!p7_free.verdict) {
            Violation v = p7_free.violations.front();
            v.context = label;
            return v;
        }
        auto r = free_report(g, pattern(other));
        if (r.verdict) return std::nullopt;
        r.violations.front().context = label;
        return r.violations.front();
    };
    auto deer_side = alternative(PatternName::Deer, "{P7,DEER}-free");
    if (!deer_side) return out;
    auto hourglass_side = alternative(PatternName::Hourglass, "{P7,HOURGLASS}-free");
    if (!hourglass_side) return out;
    out.verdict = false;
    out.violations.push_back(std::move(*deer_side));
    out.violations.push_back(std::move(*hourglass_side));
    return out;
}

bool revalidate(const Graph& g, const Violation& violation) {
    const int n = g.order();
    if (violation.n != n) return false;
    for (Vertex v : violation.copy)
        if (v < 0 || v >= n) return false;

    if (!violation.copy.empty() && !violation.pattern_graph6.empty()) {
        const Graph want = decode_graph6(violation.pattern_graph6);
        const auto sub = induced(g, violation.copy);
        if (static_cast<std::size_t>(sub.graph.order()) != violation.copy.size()) return false;
        if (want.order() <= kSmallIsoLimit) {
            if (!is_isomorphic_small(sub.graph, want)) return false;
        } else if (enumerate_induced_copies(sub.graph, custom_pattern(want)).size() != 1) {
            return false;
        }
    }

    if (violation.kind == ViolationKind::ForbiddenCopy) return !violation.copy.empty();

    if (!violation.pair) return false;
    const auto& p = *violation.pair;
    if (p.u < 0 || p.v < 0 || p.u >= n || p.v >= n || p.u == p.v) return false;
    if (g.degree(p.u) != p.degree_u || g.degree(p.v) != p.degree_v) return false;
    if (heavy_degree(p.degree_u, n) || heavy_degree(p.degree_v, n)) return false;
    if (g.adjacent(p.u, p.v)) return false;
    VertexSet scope = g.vertices();
    if (!violation.copy.empty()) {
        scope = VertexSet(n);
        for (Vertex v : violation.copy) scope.insert(v);
        if (!scope.contains(p.u) || !scope.contains(p.v)) return false;
    }
    return (g.neighbors(p.u) & g.neighbors(p.v)).intersects(scope);
}

}  // namespace fheavy
