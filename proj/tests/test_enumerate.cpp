#include <doctest.h>

#include <random>
#include <set>

#include "fheavy/enumerate.hpp"
#include "fheavy/graph6.hpp"
#include "oracles.hpp"

using namespace fheavy;

// OEIS A000088 (graphs) and A002218 (2-connected graphs).
TEST_CASE("class counts match the known sequences") {
    const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::size_t biconnected[] = {0, 0, 0, 1, 3, 10, 56, 468, 7123};
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(all_graphs(n).size() == all[n]);
        CHECK(two_connected_graphs(n).size() == biconnected[n]);
    }
    CHECK(two_connected_graphs_up_to(7).size() == 1 + 3 + 10 + 56 + 468);
}

TEST_CASE("all_graphs is one representative per class for n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        std::set<std::uint64_t> labelled;
        for_each_labelled_graph(n, [&](const Graph& g) { labelled.insert(oracle::canonical_code(g)); });
        std::set<std::uint64_t> generated;
        for (const Graph& g : all_graphs(n)) {
            CHECK(g.order() == n);
            CHECK(generated.insert(oracle::canonical_code(g)).second);
        }
        CHECK(generated == labelled);
    }
}

TEST_CASE("all_graphs output is deterministic") {
    const auto a = all_graphs(6);
    const auto b = all_graphs(6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(encode_graph6(a[i]) == encode_graph6(b[i]));
}

TEST_CASE("two_connected_graphs_up_to is ordered by order") {
    const auto gs = two_connected_graphs_up_to(6);
    for (std::size_t i = 1; i < gs.size(); ++i) CHECK(gs[i - 1].order() <= gs[i].order());
    for (const auto& g : gs) CHECK(oracle::two_connected(g));
}

TEST_CASE("for_each_labelled_graph") {
    std::size_t count = 0;
    Graph last = build_graph(0, {});
    for_each_labelled_graph(4, [&](const Graph& g) {
        ++count;
        last = g;
    });
    CHECK(count == 64);
    CHECK(last.size() == 6);
    CHECK_THROWS_AS(for_each_labelled_graph(9, [](const Graph&) {}), std::invalid_argument);
}

TEST_CASE("argument checks and random_graph") {
    CHECK_THROWS_AS(all_graphs(-1), std::invalid_argument);
    CHECK_THROWS_AS(all_graphs(kMaxGeneratedOrder + 1), std::invalid_argument);
    std::mt19937_64 a(3), b(3);
    CHECK(random_graph(12, 0.4, a) == random_graph(12, 0.4, b));
    CHECK(random_graph(7, 1.0, a).size() == 21);
    CHECK(random_graph(7, 0.0, a).size() == 0);
}
