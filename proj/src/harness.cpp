#include "fheavy/harness.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fheavy/cycles.hpp"

namespace fheavy {
namespace {

constexpr std::size_t kBatch = 4096;

/// One corpus record as handed to workers.
struct Job {
    std::size_t index = 0;
    const Graph* graph = nullptr;
    std::string error;
};

/// Pulls records in batches from either a reader or an in-memory list and
/// hands each batch to `process` in corpus order.
template <class Process>
void drive(CorpusReader* reader, std::span<const Graph> graphs, Process&& process) {
    if (reader) {
        std::vector<CorpusItem> items;
        std::vector<Job> jobs;
        bool more = true;
        while (more) {
            items.clear();
            while (items.size() < kBatch) {
                auto item = reader->next();
                if (!item) {
                    more = false;
                    break;
                }
                items.push_back(std::move(*item));
            }
            jobs.clear();
            for (const auto& it : items)
                jobs.push_back(Job{it.index, it.graph ? &*it.graph : nullptr, it.graph ? "" : it.describe_error()});
            if (!jobs.empty() && !process(std::span<const Job>(jobs))) return;
        }
        return;
    }
    std::vector<Job> jobs;
    for (std::size_t begin = 0; begin < graphs.size(); begin += kBatch) {
        jobs.clear();
        for (std::size_t i = begin; i < std::min(graphs.size(), begin + kBatch); ++i) jobs.push_back(Job{i, &graphs[i], {}});
        if (!process(std::span<const Job>(jobs))) return;
    }
}

struct VerifyOutcome {
    bool gate = false;
    bool hypothesis = false;
    bool hamiltonian = false;
    std::string error;
};

VerificationSummary run_verify(CorpusReader* reader, std::span<const Graph> graphs, const VerifyOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    VerificationSummary summary;
    summary.theorem = std::string(to_string(options.theorem));
    std::vector<VerifyOutcome> outcomes;

    drive(reader, graphs, [&](std::span<const Job> jobs) {
        outcomes.assign(jobs.size(), VerifyOutcome{});
        parallel_for(jobs.size(), options.workers, [&](std::size_t i) {
            const Job& job = jobs[i];
            auto& out = outcomes[i];
            if (!job.graph) return;
            try {
                out.gate = !options.require_two_connected || is_two_connected(*job.graph);
                if (!out.gate) return;
                out.hypothesis = theorem_hypothesis(options.theorem, *job.graph).verdict;
                if (out.hypothesis) out.hamiltonian = find_hamilton_cycle(*job.graph).has_value();
            } catch (const std::exception& e) {
                out.error = e.what();
            }
        });
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            const Job& job = jobs[i];
            const auto& out = outcomes[i];
            ++summary.corpus_size;
            if (!job.graph) {
                ++summary.parse_errors;
                summary.errors.push_back(job.error);
                continue;
            }
            if (!out.error.empty()) {
                summary.errors.push_back("graph " + std::to_string(job.index) + ": " + out.error);
                continue;
            }
            if (!out.gate) continue;
            if (options.require_two_connected) ++summary.two_connected;
            if (!out.hypothesis) continue;
            ++summary.hypothesis;
            if (out.hamiltonian)
                ++summary.hamiltonian;
            else
                summary.counterexamples.push_back({job.index, encode_graph6(*job.graph)});
        }
        return true;
    });
    summary.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return summary;
}

HuntResult run_hunt(CorpusReader* reader, std::span<const Graph> graphs, const HuntOptions& options) {
    HuntResult result;
    result.r = options.r.label;
    result.s = options.s.label;
    const std::vector<Pattern> family{pattern(PatternName::Claw), options.r, options.s};

    struct Outcome {
        bool examined = false;
        bool hit = false;
        std::string error;
    };
    std::vector<Outcome> outcomes;
    drive(reader, graphs, [&](std::span<const Job> jobs) {
        outcomes.assign(jobs.size(), Outcome{});
        parallel_for(jobs.size(), options.workers, [&](std::size_t i) {
            const Job& job = jobs[i];
            auto& out = outcomes[i];
            if (!job.graph) return;
            const Graph& g = *job.graph;
            if (options.max_n >= 0 && g.order() > options.max_n) return;
            out.examined = true;
            try {
                out.hit = is_two_connected(g) && is_family_f_heavy(g, family).verdict &&
                          !find_hamilton_cycle(g).has_value();
            } catch (const std::exception& e) {
                out.error = e.what();
            }
        });
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            const Job& job = jobs[i];
            const auto& out = outcomes[i];
            if (!job.graph) {
                result.errors.push_back(job.error);
                continue;
            }
            if (!out.error.empty()) result.errors.push_back("graph " + std::to_string(job.index) + ": " + out.error);
            if (out.examined) ++result.examined;
            if (out.hit) {
                result.counterexample = Counterexample{job.index, encode_graph6(*job.graph)};
                return false;
            }
        }
        return true;
    });
    return result;
}

}  // namespace

Theorem parse_theorem(std::string_view name) {
    if (name == "thm1" || name == "fan") return Theorem::Fan;
    if (name == "thm4") return Theorem::Thm4;
    if (name == "thm5") return Theorem::Thm5;
    throw std::invalid_argument("unknown theorem '" + std::string(name) + "' (expected thm1, thm4 or thm5)");
}

std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::Fan: return "thm1";
        case Theorem::Thm4: return "thm4";
        case Theorem::Thm5: return "thm5";
    }
    return "?";
}

ConditionReport theorem_hypothesis(Theorem t, const Graph& g) {
    switch (t) {
        case Theorem::Fan: return satisfies_fan(g);
        case Theorem::Thm4: return theorem4_condition(g);
        case Theorem::Thm5: return theorem5_condition(g);
    }
    throw std::logic_error("theorem_hypothesis: bad theorem");
}

VerificationSummary verify_corpus(CorpusReader& reader, const VerifyOptions& options) {
    return run_verify(&reader, {}, options);
}

VerificationSummary verify_graphs(std::span<const Graph> graphs, const VerifyOptions& options) {
    return run_verify(nullptr, graphs, options);
}

HuntResult hunt(CorpusReader& reader, const HuntOptions& options) { return run_hunt(&reader, {}, options); }

HuntResult hunt_graphs(std::span<const Graph> graphs, const HuntOptions& options) {
    return run_hunt(nullptr, graphs, options);
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const auto n = std::min<std::size_t>(workers, count);
        for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace fheavy
