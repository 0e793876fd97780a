#include <doctest.h>

#include <atomic>
#include <random>
#include <sstream>

#include "fheavy/enumerate.hpp"
#include "fheavy/graph6.hpp"
#include "fheavy/harness.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fheavy;

TEST_CASE("parse_theorem") {
    CHECK(parse_theorem("thm1") == Theorem::Fan);
    CHECK(parse_theorem("fan") == Theorem::Fan);
    CHECK(parse_theorem("thm4") == Theorem::Thm4);
    CHECK(parse_theorem("thm5") == Theorem::Thm5);
    CHECK_THROWS_AS(parse_theorem("thm2"), std::invalid_argument);
}

TEST_CASE("parallel_for visits each index once") {
    for (unsigned workers : {1U, 2U, 5U}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                        if (i == 7) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
}

TEST_CASE("verify over all 2-connected graphs with n <= 7") {
    const auto corpus = two_connected_graphs_up_to(7);
    for (Theorem t : {Theorem::Fan, Theorem::Thm4, Theorem::Thm5}) {
        CAPTURE(to_string(t));
        const auto s = verify_graphs(corpus, VerifyOptions{t, true, 1});
        CHECK(s.corpus_size == corpus.size());
        CHECK(s.two_connected == corpus.size());
        CHECK(s.hypothesis > 0);
        CHECK(s.hamiltonian == s.hypothesis);
        CHECK(s.counterexamples.empty());
        CHECK(s.errors.empty());
    }
}

TEST_CASE("verify results do not depend on the worker count") {
    std::mt19937_64 rng(77);
    std::vector<Graph> corpus;
    for (int i = 0; i < 600; ++i) corpus.push_back(oracle::random_graph(rng, 3, 10));
    const auto one = verify_graphs(corpus, VerifyOptions{Theorem::Thm5, false, 1});
    const auto four = verify_graphs(corpus, VerifyOptions{Theorem::Thm5, false, 4});
    CHECK(one.hypothesis == four.hypothesis);
    CHECK(one.hamiltonian == four.hamiltonian);
    REQUIRE(one.counterexamples.size() == four.counterexamples.size());
    for (std::size_t i = 0; i < one.counterexamples.size(); ++i) {
        CHECK(one.counterexamples[i].index == four.counterexamples[i].index);
        CHECK(one.counterexamples[i].graph6 == four.counterexamples[i].graph6);
    }
}

TEST_CASE("without the 2-connectivity gate, separable graphs show up as counterexamples") {
    // Triangle with a pendant vertex: Fan holds, not Hamiltonian.
    const Graph paw = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    const std::vector<Graph> corpus{paw};
    const auto gated = verify_graphs(corpus, VerifyOptions{Theorem::Fan, true, 1});
    CHECK(gated.two_connected == 0);
    CHECK(gated.counterexamples.empty());
    const auto open = verify_graphs(corpus, VerifyOptions{Theorem::Fan, false, 1});
    REQUIRE(open.counterexamples.size() == 1);
    CHECK(open.counterexamples[0].graph6 == encode_graph6(paw));
}

TEST_CASE("verify on Petersen and on an empty corpus") {
    std::istringstream pet(encode_graph6(fixtures::petersen()) + "\n");
    CorpusReader reader(pet);
    const auto s = verify_corpus(reader, VerifyOptions{});
    CHECK(s.corpus_size == 1);
    CHECK(s.two_connected == 1);
    CHECK(s.hypothesis == 0);
    CHECK(s.counterexamples.empty());

    std::istringstream empty("");
    CorpusReader none(empty);
    const auto z = verify_corpus(none, VerifyOptions{});
    CHECK(z.corpus_size == 0);
    CHECK(z.hypothesis == 0);
    CHECK(z.counterexamples.empty());
}

TEST_CASE("verify reports malformed lines and keeps going") {
    std::istringstream in("C~\nC~~\nDhc\n");
    CorpusReader reader(in);
    const auto s = verify_corpus(reader, VerifyOptions{Theorem::Fan, true, 1});
    CHECK(s.corpus_size == 3);
    CHECK(s.parse_errors == 1);
    REQUIRE(s.errors.size() == 1);
    CHECK(s.errors[0].find("line 2") != std::string::npos);
    CHECK(s.two_connected == 2);
    CHECK(s.hypothesis == 1);
}

TEST_CASE("hunt") {
    const Pattern p7 = pattern(PatternName::P7);
    const Pattern deer = pattern(PatternName::Deer);
    const auto corpus = two_connected_graphs_up_to(7);
    const auto none = hunt_graphs(corpus, HuntOptions{p7, deer, -1, 1});
    CHECK_FALSE(none.counterexample);
    CHECK(none.examined == corpus.size());
    CHECK(none.r == "P7");
    CHECK(none.s == "DEER");

    const auto empty = hunt_graphs(std::span<const Graph>{}, HuntOptions{p7, deer, -1, 1});
    CHECK_FALSE(empty.counterexample);
    CHECK(empty.examined == 0);

    // Every 2-connected claw-f-heavy graph with n <= 7 is Hamiltonian
    // (cross-checked with networkx), so nothing can turn up here.
    const Pattern p4 = pattern(PatternName::P4);
    CHECK_FALSE(hunt_graphs(corpus, HuntOptions{p4, p4, -1, 1}).counterexample);

    const auto bounded = hunt_graphs(corpus, HuntOptions{p7, deer, 5, 1});
    CHECK(bounded.examined == 1 + 3 + 10);
}

TEST_CASE("hunt reports the first counterexample in corpus order") {
    // Triangles {0,1,2} and {3,4,5} joined by paths i - 6+i - 3+i. Claw-free
    // and 2-connected; a Hamilton cycle would cross between the triangles an
    // even number of times, but it must use all three paths.
    const Graph prism = build_graph(9, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                        {0, 6}, {6, 3}, {1, 7}, {7, 4}, {2, 8}, {8, 5}});
    CHECK(is_R_free(prism, pattern(PatternName::Claw)));
    CHECK_FALSE(oracle::hamiltonian(prism));

    const Pattern k4 = custom_pattern(fixtures::complete(4), "K4");
    const std::vector<Graph> corpus{fixtures::cycle(5), fixtures::petersen(), prism, prism};
    const auto r = hunt_graphs(corpus, HuntOptions{k4, k4, -1, 1});
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->index == 2);
    CHECK(r.counterexample->graph6 == encode_graph6(prism));
    CHECK(r.r == "K4");

    // Petersen has light induced claws, so it never qualifies.
    CHECK_FALSE(is_R_f_heavy(fixtures::petersen(), pattern(PatternName::Claw)).verdict);
    CHECK_FALSE(hunt_graphs(corpus, HuntOptions{k4, k4, 8, 1}).counterexample);
}
