#include "fheavy/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fheavy/graph6.hpp"

namespace fheavy {

using nlohmann::json;

json to_json(const Violation& v) {
    json j;
    j["kind"] = v.kind == ViolationKind::LightPair ? "light_pair" : "forbidden_copy";
    if (!v.pattern.empty()) {
        j["pattern"] = v.pattern;
        j["pattern_graph6"] = v.pattern_graph6;
    }
    if (!v.context.empty()) j["context"] = v.context;
    if (!v.copy.empty()) j["copy"] = v.copy;
    if (v.pair) {
        j["pair"] = {v.pair->u, v.pair->v};
        j["degrees"] = {v.pair->degree_u, v.pair->degree_v};
    }
    j["n"] = v.n;
    return j;
}

Violation violation_from_json(const json& j) {
    Violation v;
    v.kind = j.at("kind").get<std::string>() == "light_pair" ? ViolationKind::LightPair : ViolationKind::ForbiddenCopy;
    v.pattern = j.value("pattern", "");
    v.pattern_graph6 = j.value("pattern_graph6", "");
    v.context = j.value("context", "");
    if (j.contains("copy")) v.copy = j.at("copy").get<std::vector<Vertex>>();
    if (j.contains("pair")) {
        const auto& p = j.at("pair");
        const auto& d = j.at("degrees");
        v.pair = LightPair{p.at(0).get<int>(), p.at(1).get<int>(), d.at(0).get<int>(), d.at(1).get<int>()};
    }
    v.n = j.at("n").get<int>();
    return v;
}

json to_json(const ConditionReport& r) {
    json j{{"condition", r.condition}, {"verdict", r.verdict}};
    json vs = json::array();
    for (const auto& v : r.violations) vs.push_back(to_json(v));
    j["violations"] = std::move(vs);
    return j;
}

VerdictRecord make_record(std::size_t graph_id, const Graph& g, const ConditionReport& report) {
    VerdictRecord r;
    r.graph_id = graph_id;
    r.graph6 = encode_graph6(g);
    r.condition = report.condition;
    r.verdict = report.verdict;
    r.violations = report.violations;
    return r;
}

json to_json(const VerdictRecord& r) {
    json j{{"graph", r.graph_id}, {"graph6", r.graph6}, {"condition", r.condition}};
    if (r.verdict) {
        j["verdict"] = *r.verdict;
    } else {
        j["verdict"] = nullptr;
        j["error"] = r.error;
    }
    json vs = json::array();
    for (const auto& v : r.violations) vs.push_back(to_json(v));
    j["violations"] = std::move(vs);
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

namespace {

std::string describe(const Violation& v) {
    std::ostringstream os;
    if (!v.context.empty()) os << v.context << ": ";
    if (!v.pattern.empty()) os << v.pattern << " ";
    if (!v.copy.empty()) {
        os << "[";
        for (std::size_t i = 0; i < v.copy.size(); ++i) os << (i ? "," : "") << v.copy[i];
        os << "] ";
    }
    if (v.pair)
        os << "pair (" << v.pair->u << "," << v.pair->v << ") degrees " << v.pair->degree_u << "," << v.pair->degree_v
           << " n=" << v.n;
    else
        os << "induced copy present";
    return os.str();
}

}  // namespace

std::string write_report(std::span<const VerdictRecord> records, ReportFormat format) {
    std::vector<const VerdictRecord*> sorted;
    for (const auto& r : records) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const VerdictRecord* a, const VerdictRecord* b) { return a->graph_id < b->graph_id; });

    std::size_t yes = 0, no = 0, err = 0;
    for (const auto* r : sorted) {
        if (!r->verdict)
            ++err;
        else if (*r->verdict)
            ++yes;
        else
            ++no;
    }

    std::ostringstream os;
    if (format == ReportFormat::Json) {
        for (const auto* r : sorted) os << to_json(*r).dump() << '\n';
        json summary{{"records", sorted.size()}, {"true", yes}, {"false", no}, {"error", err}};
        os << json{{"summary", summary}}.dump() << '\n';
        return os.str();
    }

    os << std::left << std::setw(8) << "graph" << std::setw(16) << "graph6" << std::setw(28) << "condition"
       << std::setw(8) << "verdict"
       << "witness\n";
    for (const auto* r : sorted) {
        std::string verdict = r->verdict ? (*r->verdict ? "true" : "false") : "error";
        std::string witness = r->verdict ? "" : r->error;
        if (!r->violations.empty()) witness = describe(r->violations.front());
        os << std::left << std::setw(8) << r->graph_id << std::setw(16) << r->graph6 << std::setw(28) << r->condition
           << std::setw(8) << verdict << witness << '\n';
        for (std::size_t i = 1; i < r->violations.size(); ++i)
            os << std::string(60, ' ') << describe(r->violations[i]) << '\n';
    }
    os << "records " << sorted.size() << ", true " << yes << ", false " << no << ", error " << err << '\n';
    return os.str();
}

json to_json(const Cycle& c) { return json(c.seq); }

json to_json(const WitnessReport& r) {
    json flags = json::array();
    for (const auto& f : r.flags) {
        json jf{{"name", f.name}, {"verified", f.verified}};
        jf["claimed"] = f.claimed ? json(*f.claimed) : json(nullptr);
        jf["discrepancy"] = f.discrepancy();
        json vs = json::array();
        for (const auto& v : f.report.violations) vs.push_back(to_json(v));
        jf["violations"] = std::move(vs);
        if (f.cycle) jf["cycle"] = to_json(*f.cycle);
        flags.push_back(std::move(jf));
    }
    return json{{"n", r.n}, {"flags", std::move(flags)}};
}

json to_json(const VerificationSummary& s) {
    json ces = json::array();
    for (const auto& c : s.counterexamples) ces.push_back({{"graph", c.index}, {"graph6", c.graph6}});
    return json{{"theorem", s.theorem},
                {"corpus_size", s.corpus_size},
                {"parse_errors", s.parse_errors},
                {"two_connected", s.two_connected},
                {"hypothesis", s.hypothesis},
                {"hamiltonian", s.hamiltonian},
                {"counterexamples", std::move(ces)},
                {"errors", s.errors},
                {"elapsed_ms", s.elapsed_ms}};
}

json to_json(const HuntResult& h) {
    json j{{"r", h.r}, {"s", h.s}, {"examined", h.examined}, {"errors", h.errors}};
    if (h.counterexample)
        j["counterexample"] = {{"graph", h.counterexample->index}, {"graph6", h.counterexample->graph6}};
    else
        j["counterexample"] = nullptr;
    return j;
}

}  // namespace fheavy
