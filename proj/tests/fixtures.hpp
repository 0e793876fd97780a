#pragma once

#include <vector>

#include "fheavy/graph.hpp"

namespace fixtures {

using fheavy::Edge;
using fheavy::Graph;

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return fheavy::build_graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return fheavy::build_graph(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return fheavy::build_graph(n, e);
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return fheavy::build_graph(a + b, e);
}

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram on 5..9.
inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return fheavy::build_graph(10, e);
}

inline Graph hourglass() { return fheavy::build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline Graph two_triangles() { return fheavy::build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

/// K4 with edge {0,1} removed.
inline Graph k4_minus_edge() { return fheavy::build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return fheavy::build_graph(g.order(), e);
}

}  // namespace fixtures
