#include <doctest.h>

#include <sstream>

#include "fheavy/graph6.hpp"
#include "fheavy/report.hpp"
#include "fixtures.hpp"

using namespace fheavy;
using nlohmann::json;

namespace {

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("empty report is a zero summary") {
    const auto lines = json_lines(write_report({}, ReportFormat::Json));
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] == json{{"summary", {{"records", 0}, {"true", 0}, {"false", 0}, {"error", 0}}}});
    CHECK(write_report({}, ReportFormat::Table).find("records 0, true 0, false 0, error 0") != std::string::npos);
}

TEST_CASE("false record carries a re-checkable witness") {
    const Graph c5 = fixtures::cycle(5);
    const VerdictRecord rec = make_record(0, c5, satisfies_fan(c5));
    const auto lines = json_lines(write_report(std::vector<VerdictRecord>{rec}, ReportFormat::Json));
    REQUIRE(lines.size() == 2);
    const json& j = lines[0];
    CHECK(j["graph6"] == "Dhc");
    CHECK(j["condition"] == "fan");
    CHECK(j["verdict"] == false);
    REQUIRE(j["violations"].size() == 1);
    CHECK(j["violations"][0]["pair"] == json{0, 2});
    CHECK(j["violations"][0]["degrees"] == json{2, 2});
    CHECK(j["violations"][0]["n"] == 5);
    CHECK_FALSE(j.contains("elapsed_ms"));

    const Violation back = violation_from_json(j["violations"][0]);
    CHECK(revalidate(decode_graph6(j["graph6"].get<std::string>()), back));
    CHECK(lines[1]["summary"]["false"] == 1);
}

TEST_CASE("records are ordered by graph id") {
    std::vector<VerdictRecord> recs;
    recs.push_back(make_record(2, fixtures::complete(4), satisfies_fan(fixtures::complete(4))));
    recs.push_back(make_record(0, fixtures::cycle(5), satisfies_fan(fixtures::cycle(5))));
    VerdictRecord broken;
    broken.graph_id = 1;
    broken.condition = "fan";
    broken.error = "line 2: truncated";
    recs.push_back(broken);

    const auto lines = json_lines(write_report(recs, ReportFormat::Json));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0]["graph"] == 0);
    CHECK(lines[1]["graph"] == 1);
    CHECK(lines[1]["verdict"].is_null());
    CHECK(lines[1]["error"] == "line 2: truncated");
    CHECK(lines[2]["graph"] == 2);
    CHECK(lines[3]["summary"] == json{{"records", 3}, {"true", 1}, {"false", 1}, {"error", 1}});

    const std::string table = write_report(recs, ReportFormat::Table);
    CHECK(table.find("pair (0,2) degrees 2,2 n=5") != std::string::npos);
    CHECK(table.find("Dhc") < table.find("C~"));
}

TEST_CASE("violation JSON round trip for copies and pairs") {
    const Graph star = fixtures::complete_bipartite(1, 3);
    for (const auto& v : theorem5_condition(star).violations) {
        const Violation back = violation_from_json(to_json(v));
        CHECK(back.copy == v.copy);
        CHECK(back.pattern == v.pattern);
        CHECK(back.context == v.context);
        CHECK(back.pair->u == v.pair->u);
        CHECK(revalidate(star, back));
    }
    const auto free = free_report(fixtures::path(7), pattern(PatternName::P7));
    const Violation copy = violation_from_json(to_json(*free.violation()));
    CHECK(copy.kind == ViolationKind::ForbiddenCopy);
    CHECK_FALSE(copy.pair);
    CHECK(revalidate(fixtures::path(7), copy));
}

TEST_CASE("summary and hunt JSON") {
    VerificationSummary s;
    s.theorem = "thm5";
    s.counterexamples.push_back({3, "C~"});
    const json j = to_json(s);
    CHECK(j["theorem"] == "thm5");
    CHECK(j["counterexamples"][0]["graph"] == 3);

    HuntResult h;
    h.r = "P7";
    h.s = "DEER";
    CHECK(to_json(h)["counterexample"].is_null());
}
