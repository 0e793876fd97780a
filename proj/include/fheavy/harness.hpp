#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fheavy/conditions.hpp"
#include "fheavy/graph.hpp"
#include "fheavy/graph6.hpp"
#include "fheavy/patterns.hpp"

namespace fheavy {

enum class Theorem { Fan, Thm4, Thm5 };

/// "thm1" (or "fan"), "thm4", "thm5". Throws std::invalid_argument otherwise.
Theorem parse_theorem(std::string_view name);
std::string_view to_string(Theorem t);

/// The degree/forbidden-subgraph hypothesis of the theorem (2-connectivity
/// is gated separately).
ConditionReport theorem_hypothesis(Theorem t, const Graph& g);

struct Counterexample {
    std::size_t index = 0;
    std::string graph6;
};

struct VerificationSummary {
    std::string theorem;
    std::size_t corpus_size = 0;     // records read, including malformed ones
    std::size_t parse_errors = 0;
    std::size_t two_connected = 0;
    std::size_t hypothesis = 0;      // graphs past the gate that satisfy the hypothesis
    std::size_t hamiltonian = 0;     // of those, how many are Hamiltonian
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> errors;
    double elapsed_ms = 0.0;
};

struct VerifyOptions {
    Theorem theorem = Theorem::Thm5;
    bool require_two_connected = true;
    unsigned workers = 1;
};

VerificationSummary verify_corpus(CorpusReader& reader, const VerifyOptions& options);
VerificationSummary verify_graphs(std::span<const Graph> graphs, const VerifyOptions& options);

struct HuntOptions {
    Pattern r;
    Pattern s;
    int max_n = -1;  // negative: no bound
    unsigned workers = 1;
};

struct HuntResult {
    std::string r;
    std::string s;
    std::size_t examined = 0;  // well-formed graphs within the order bound
    std::optional<Counterexample> counterexample;
    std::vector<std::string> errors;
};

/// First graph in corpus order that is 2-connected, {CLAW,R,S}-f-heavy and
/// not Hamiltonian.
HuntResult hunt(CorpusReader& reader, const HuntOptions& options);
HuntResult hunt_graphs(std::span<const Graph> graphs, const HuntOptions& options);

/// Applies `fn` to every index in [0, count) on `workers` threads. Each index
/// is processed exactly once; callers store results by index, which keeps
/// output independent of scheduling.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace fheavy
