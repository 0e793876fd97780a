// fheavy: check f-heavy/Fan-type conditions, verify the Hamiltonicity
// theorems over graph corpora, hunt for counterexamples, emit witness graphs.
//
// Exit codes: 0 verdict true / no counterexample, 1 verdict false /
// counterexample found, 2 usage or input error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fheavy/conditions.hpp"
#include "fheavy/enumerate.hpp"
#include "fheavy/graph6.hpp"
#include "fheavy/harness.hpp"
#include "fheavy/patterns.hpp"
#include "fheavy/report.hpp"
#include "fheavy/witness.hpp"

namespace {

using namespace fheavy;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

/// Fixed default so runs are reproducible unless --seed is given.
constexpr std::uint64_t kDefaultSeed = 20140101;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Owns either a file stream or borrows std::cin for "-".
class InputSource {
public:
    explicit InputSource(const std::string& path) {
        if (path == "-") {
            in_ = &std::cin;
            return;
        }
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_) throw UsageError("cannot open " + path);
        in_ = file_.get();
    }
    std::istream& stream() { return *in_; }

private:
    std::unique_ptr<std::ifstream> file_;
    std::istream* in_ = nullptr;
};

CorpusFormat parse_format(const std::string& s) {
    if (s == "auto") return CorpusFormat::Auto;
    if (s == "graph6" || s == "g6") return CorpusFormat::Graph6;
    if (s == "edges") return CorpusFormat::EdgeList;
    throw UsageError("unknown input format " + s);
}

std::vector<Pattern> parse_patterns(const std::vector<std::string>& names) {
    std::vector<Pattern> out;
    for (const auto& name : names) {
        try {
            out.push_back(pattern_from_string(name));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

ConditionReport evaluate(const std::string& condition, const Graph& g, const std::vector<Pattern>& patterns) {
    if (condition == "fan" || condition == "thm1") return satisfies_fan(g);
    if (condition == "2heavy") return is_2_heavy(g);
    if (condition == "thm4") return theorem4_condition(g);
    if (condition == "thm5") return theorem5_condition(g);
    if (condition == "f-heavy") return is_family_f_heavy(g, patterns);
    if (condition == "free") {
        std::string label = "{";
        for (std::size_t i = 0; i < patterns.size(); ++i) label += (i ? "," : "") + patterns[i].label;
        label += "}-free";
        for (const auto& p : patterns) {
            auto r = free_report(g, p);
            if (!r.verdict) {
                r.condition = label;
                return r;
            }
        }
        return ConditionReport{label, true, {}};
    }
    throw UsageError("unknown condition " + condition);
}

struct CheckArgs {
    std::string file;
    std::string condition;
    std::vector<std::string> patterns;
    std::string format = "json";
    std::string input_format = "auto";
    bool timing = false;
};

int run_check(const CheckArgs& a) {
    if ((a.condition == "f-heavy" || a.condition == "free") && a.patterns.empty())
        throw UsageError("--patterns is required for condition " + a.condition);
    const auto patterns = parse_patterns(a.patterns);
    if (a.condition != "fan" && a.condition != "thm1" && a.condition != "2heavy" && a.condition != "thm4" &&
        a.condition != "thm5" && a.condition != "f-heavy" && a.condition != "free")
        throw UsageError("unknown condition " + a.condition);

    InputSource input(a.file);
    std::vector<std::pair<std::size_t, Graph>> graphs;
    try {
        graphs = read_corpus(input.stream(), parse_format(a.input_format));
    } catch (const ParseError& e) {
        std::cerr << "error: " << a.file << ": " << e.what() << '\n';
        return kExitUsage;
    }
    if (graphs.empty()) throw UsageError("no graph in " + a.file);

    std::vector<VerdictRecord> records;
    bool all_true = true;
    for (const auto& [id, g] : graphs) {
        const auto started = std::chrono::steady_clock::now();
        auto report = evaluate(a.condition, g, patterns);
        auto record = make_record(id, g, report);
        if (a.timing)
            record.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        all_true = all_true && report.verdict;
        records.push_back(std::move(record));
    }
    std::cout << write_report(records, a.format == "table" ? ReportFormat::Table : ReportFormat::Json);
    return all_true ? kExitTrue : kExitFalse;
}

struct CorpusArgs {
    std::string corpus;
    int generate = 0;
    std::string input_format = "auto";
    unsigned workers = 1;
};

std::vector<Graph> generated(int max_n) {
    if (max_n < 3 || max_n > kMaxGeneratedOrder)
        throw UsageError("--generate must be within 3.." + std::to_string(kMaxGeneratedOrder));
    return two_connected_graphs_up_to(max_n);
}

void require_one_source(const CorpusArgs& c) {
    if (c.corpus.empty() == (c.generate == 0)) throw UsageError("give exactly one of --corpus or --generate");
}

int run_verify(const CorpusArgs& c, const std::string& theorem, bool allow_separable) {
    require_one_source(c);
    VerifyOptions options;
    try {
        options.theorem = parse_theorem(theorem);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    options.require_two_connected = !allow_separable;
    options.workers = resolve_workers(c.workers);

    VerificationSummary summary;
    if (c.generate) {
        auto graphs = generated(c.generate);
        summary = verify_graphs(graphs, options);
    } else {
        InputSource input(c.corpus);
        CorpusReader reader(input.stream(), parse_format(c.input_format));
        summary = verify_corpus(reader, options);
    }
    std::cout << to_json(summary).dump(2) << '\n';
    if (!summary.counterexamples.empty()) return kExitFalse;
    return summary.errors.empty() ? kExitTrue : kExitUsage;
}

int run_hunt(const CorpusArgs& c, const std::string& r, const std::string& s, int max_n) {
    require_one_source(c);
    HuntOptions options;
    auto ps = parse_patterns({r, s});
    options.r = ps[0];
    options.s = ps[1];
    options.max_n = max_n;
    options.workers = resolve_workers(c.workers);

    HuntResult result;
    if (c.generate) {
        auto graphs = generated(c.generate);
        result = hunt_graphs(graphs, options);
    } else {
        InputSource input(c.corpus);
        CorpusReader reader(input.stream(), parse_format(c.input_format));
        result = hunt(reader, options);
    }
    std::cout << to_json(result).dump(2) << '\n';
    if (result.counterexample) return kExitFalse;
    return result.errors.empty() ? kExitTrue : kExitUsage;
}

int run_witness(int n, const std::string& emit) {
    std::optional<WitnessSpec> spec;
    try {
        spec.emplace(n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Graph g = build_witness(*spec);
    if (emit == "graph6") {
        std::cout << encode_graph6(g) << '\n';
        return kExitTrue;
    }
    if (emit == "edges") {
        std::cout << format_edge_list(g);
        return kExitTrue;
    }
    if (emit != "report") throw UsageError("unknown --emit value " + emit);
    auto report = classify_witness(g);
    auto j = to_json(report);
    j["graph6"] = encode_graph6(g);
    std::cout << j.dump(2) << '\n';
    return kExitTrue;
}

int run_generate(int n, bool all) {
    if (n < 1 || n > kMaxGeneratedOrder)
        throw UsageError("--n must be within 1.." + std::to_string(kMaxGeneratedOrder));
    for (const auto& g : all ? all_graphs(n) : two_connected_graphs(n)) std::cout << encode_graph6(g) << '\n';
    return kExitTrue;
}

int run_random(int count, int max_n, double p, std::uint64_t seed) {
    if (max_n < 1 || max_n > kGraph6MaxOrder) throw UsageError("--max-n out of range");
    if (p < 0.0 || p > 1.0) throw UsageError("--p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(1, max_n);
    for (int i = 0; i < count; ++i) std::cout << encode_graph6(random_graph(order(rng), p, rng)) << '\n';
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fan-type f-heavy condition checker and Hamiltonicity verification harness"};
    app.require_subcommand(1);
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "Seed for randomized commands")->capture_default_str();

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Evaluate a condition on every graph in a file");
    check_cmd->add_option("file", check.file, "Input file (graph6 lines or edge list), - for stdin")->required();
    check_cmd->add_option("--condition", check.condition, "fan|thm1|2heavy|f-heavy|free|thm4|thm5")->required();
    check_cmd->add_option("--patterns", check.patterns, "Pattern list for f-heavy/free, e.g. claw,p7,deer")
        ->delimiter(',');
    check_cmd->add_option("--format", check.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    check_cmd->add_option("--input-format", check.input_format, "auto|graph6|edges")->capture_default_str();
    check_cmd->add_flag("--timing", check.timing, "Include per-graph timing in records");

    CorpusArgs verify;
    std::string theorem;
    bool allow_separable = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check hypothesis => Hamiltonian over a corpus");
    verify_cmd->add_option("--corpus", verify.corpus, "graph6 corpus path, - for stdin");
    verify_cmd->add_option("--generate", verify.generate, "Use all 2-connected graphs of order 3..N instead");
    verify_cmd->add_option("--theorem", theorem, "thm1|thm4|thm5")->required();
    verify_cmd->add_option("--workers", verify.workers, "Worker threads (0 = all cores)")->capture_default_str();
    verify_cmd->add_option("--input-format", verify.input_format, "auto|graph6|edges")->capture_default_str();
    verify_cmd->add_flag("--allow-separable", allow_separable, "Do not skip graphs that are not 2-connected");

    CorpusArgs hunt_args;
    std::string r_name, s_name;
    int max_n = -1;
    auto* hunt_cmd = app.add_subcommand("hunt", "Find a 2-connected {CLAW,R,S}-f-heavy non-Hamiltonian graph");
    hunt_cmd->add_option("--r", r_name, "Pattern R (catalog name or graph6)")->required();
    hunt_cmd->add_option("--s", s_name, "Pattern S (catalog name or graph6)")->required();
    hunt_cmd->add_option("--corpus", hunt_args.corpus, "graph6 corpus path, - for stdin");
    hunt_cmd->add_option("--generate", hunt_args.generate, "Use all 2-connected graphs of order 3..N instead");
    hunt_cmd->add_option("--max-n", max_n, "Skip graphs with more vertices");
    hunt_cmd->add_option("--workers", hunt_args.workers, "Worker threads (0 = all cores)")->capture_default_str();
    hunt_cmd->add_option("--input-format", hunt_args.input_format, "auto|graph6|edges")->capture_default_str();

    int witness_n = 0;
    std::string emit = "graph6";
    auto* witness_cmd = app.add_subcommand("witness", "Emit the separating witness graph or its report");
    witness_cmd->add_option("--n", witness_n, "Even order >= 16")->required();
    witness_cmd->add_option("--emit", emit, "graph6|edges|report")->capture_default_str();

    int gen_n = 0;
    bool gen_all = false;
    auto* gen_cmd = app.add_subcommand("generate", "Print all 2-connected graphs of one order as graph6");
    gen_cmd->add_option("--n", gen_n, "Order")->required();
    gen_cmd->add_flag("--all", gen_all, "Print every isomorphism class, not only 2-connected ones");

    int rand_count = 0;
    int rand_max_n = 12;
    double rand_p = 0.5;
    auto* rand_cmd = app.add_subcommand("random", "Print seeded G(n,p) graphs as graph6");
    rand_cmd->add_option("--count", rand_count, "Number of graphs")->required();
    rand_cmd->add_option("--max-n", rand_max_n, "Orders are uniform in 1..max-n")->capture_default_str();
    rand_cmd->add_option("--p", rand_p, "Edge probability")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check_cmd) return run_check(check);
        if (*verify_cmd) return run_verify(verify, theorem, allow_separable);
        if (*hunt_cmd) return run_hunt(hunt_args, r_name, s_name, max_n);
        if (*witness_cmd) return run_witness(witness_n, emit);
        if (*gen_cmd) return run_generate(gen_n, gen_all);
        if (*rand_cmd) return run_random(rand_count, rand_max_n, rand_p, seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
