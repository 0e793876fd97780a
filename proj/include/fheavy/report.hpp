#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fheavy/conditions.hpp"
#include "fheavy/cycles.hpp"
#include "fheavy/harness.hpp"
#include "fheavy/witness.hpp"

namespace fheavy {

/// One (graph, condition) verdict as emitted by the check command.
struct VerdictRecord {
    std::size_t graph_id = 0;
    std::string graph6;
    std::string condition;
    std::optional<bool> verdict;  // empty when evaluation failed
    std::string error;
    std::vector<Violation> violations;
    std::optional<double> elapsed_ms;  // only when timing was requested
};

enum class ReportFormat { Json, Table };

/// JSON: one object per line, ordered by graph id, then a summary line
/// {"summary":{"records":..,"true":..,"false":..,"error":..}}.
/// Table: aligned columns plus a totals line.
std::string write_report(std::span<const VerdictRecord> records, ReportFormat format);

VerdictRecord make_record(std::size_t graph_id, const Graph& g, const ConditionReport& report);

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const VerdictRecord& r);
nlohmann::json to_json(const Cycle& c);
nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const VerificationSummary& s);
nlohmann::json to_json(const HuntResult& h);

/// Inverse of to_json(Violation), for feeding printed witnesses back in.
Violation violation_from_json(const nlohmann::json& j);

}  // namespace fheavy
