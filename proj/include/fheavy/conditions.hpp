#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fheavy/graph.hpp"
#include "fheavy/patterns.hpp"

namespace fheavy {

/// Two non-adjacent vertices with a common neighbor, both light in the host.
struct LightPair {
    Vertex u = 0;
    Vertex v = 0;
    int degree_u = 0;
    int degree_v = 0;
};

enum class ViolationKind {
    LightPair,       // a distance-2 pair with no heavy endpoint
    ForbiddenCopy,   // an induced copy of a pattern that had to be absent
};

/// Concrete evidence that a condition fails on a graph.
///
/// Whole-graph violations (Fan's condition) leave `copy` empty; the pair is
/// then at distance 2 in G itself. Otherwise the pair lies inside G[copy].
struct Violation {
    ViolationKind kind = ViolationKind::LightPair;
    std::string pattern;          // pattern label, empty for whole-graph scope
    std::string pattern_graph6;   // the pattern itself, for re-validation
    std::string context;          // e.g. the family a disjunct belongs to
    InducedCopy copy;
    std::optional<LightPair> pair;
    int n = 0;                    // heaviness threshold is 2 d(v) >= n
};

struct ConditionReport {
    std::string condition;
    bool verdict = true;
    /// Empty iff verdict is true. Disjunctive conditions list one entry per
    /// failed disjunct, in evaluation order.
    std::vector<Violation> violations;

    const Violation* violation() const { return violations.empty() ? nullptr : &violations.front(); }
};

/// 2 d(v) >= n. Throws std::out_of_range for a bad vertex.
bool is_heavy(const Graph& g, Vertex v);

/// f-heaviness of G[S]: every pair at distance 2 inside G[S] has an endpoint
/// heavy in G. Reports the lexicographically first failing pair.
ConditionReport copy_is_f_heavy(const Graph& g, std::span<const Vertex> subset);

/// Every induced copy of p is f-heavy; reports the first failing copy in
/// lexicographic order.
ConditionReport is_R_f_heavy(const Graph& g, const Pattern& p);

/// Conjunction of is_R_f_heavy over `family`, evaluated in list order.
/// Throws std::invalid_argument for an empty family.
ConditionReport is_family_f_heavy(const Graph& g, std::span<const Pattern> family);

/// Fan's condition: every pair at distance 2 in G has a heavy endpoint.
ConditionReport satisfies_fan(const Graph& g);

/// Every induced claw has at least two heavy end vertices.
ConditionReport is_2_heavy(const Graph& g);

bool is_R_free(const Graph& g, const Pattern& p);

/// R-freeness as a report; the violation is the first induced copy.
ConditionReport free_report(const Graph& g, const Pattern& p);

/// {CLAW,P7,DEER}-f-heavy or {CLAW,P7,HOURGLASS}-f-heavy (DEER side first).
ConditionReport theorem5_condition(const Graph& g);

/// 2-heavy and ({P7,DEER}-free or {P7,HOURGLASS}-free).
ConditionReport theorem4_condition(const Graph& g);

/// Re-checks a violation against g from scratch: the copy induces the named
/// pattern, and for light pairs the cited vertices are at distance 2 in the
/// cited scope with both degrees (as recorded) below the threshold.
bool revalidate(const Graph& g, const Violation& violation);

}  // namespace fheavy
