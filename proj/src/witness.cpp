#include "fheavy/witness.hpp"

#include <stdexcept>

namespace fheavy {

WitnessSpec::WitnessSpec(int n) : n_(n) {
    if (n < 16 || n % 2 != 0)
        throw std::invalid_argument("witness order must be an even integer >= 16, got " + std::to_string(n));
}

Graph build_witness(const WitnessSpec& spec) {
    const WitnessLayout L{spec.n()};
    std::vector<Edge> edges;
    auto clique = [&](int begin, int size) {
        for (int i = begin; i < begin + size; ++i)
            for (int j = i + 1; j < begin + size; ++j) edges.emplace_back(i, j);
    };
    clique(L.a_begin(), L.a_size());
    clique(L.b_begin(), L.b_size());
    edges.insert(edges.end(), {{L.x(), L.y()},
                               {L.x(), L.z()},
                               {L.y(), L.z()},
                               {L.y(), L.w()},
                               {L.w(), L.u()},
                               {L.z(), L.t()},
                               {L.t(), L.v()}});
    for (int a = L.a_begin(); a < L.a_begin() + L.a_size(); ++a)
        for (Vertex s : {L.x(), L.y(), L.z()}) edges.emplace_back(s, a);
    for (int b = L.b_begin(); b < L.b_begin() + L.b_size(); ++b)
        for (Vertex s : {L.u(), L.v()}) edges.emplace_back(s, b);
    return build_graph(spec.n(), edges);
}

const WitnessFlag& WitnessReport::flag(const std::string& name) const {
    for (const auto& f : flags)
        if (f.name == name) return f;
    throw std::out_of_range("no witness flag named " + name);
}

WitnessReport classify_witness(const Graph& g) {
    const bool claims = g.order() >= 16 && g.order() % 2 == 0;
    auto claim = [&](bool value) { return claims ? std::optional<bool>(value) : std::nullopt; };

    WitnessReport out;
    out.n = g.order();

    WitnessFlag ham{"hamiltonian", claim(true), false, {"hamiltonian", true, {}}, std::nullopt};
    ham.cycle = find_hamilton_cycle(g);
    ham.verified = ham.cycle.has_value();
    ham.report.verdict = ham.verified;
    out.flags.push_back(std::move(ham));

    auto push = [&](std::string name, std::optional<bool> claimed, ConditionReport report) {
        WitnessFlag f{std::move(name), claimed, report.verdict, std::move(report), std::nullopt};
        out.flags.push_back(std::move(f));
    };
    push("fan_condition", claim(false), satisfies_fan(g));
    push("thm4_condition", claim(false), theorem4_condition(g));
    push("thm5_condition", claim(true), theorem5_condition(g));
    push("claw_free", std::nullopt, free_report(g, pattern(PatternName::Claw)));
    return out;
}

}  // namespace fheavy
