#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fheavy/graph.hpp"

namespace fheavy {

/// Largest order the built-in generator accepts.
inline constexpr int kMaxGeneratedOrder = 10;

/// One representative of every isomorphism class of graphs on n vertices.
///
/// Graphs on n vertices are grown from the classes on n-1 vertices by adding
/// a vertex with every possible neighborhood; duplicates are removed by
/// colour-refinement bucketing plus an exact isomorphism test. Output order
/// is deterministic. Throws std::invalid_argument outside 0..kMaxGeneratedOrder.
std::vector<Graph> all_graphs(int n);

/// The 2-connected members of all_graphs(n).
std::vector<Graph> two_connected_graphs(int n);

/// All 2-connected classes with 3 <= order <= max_n, ascending by order.
std::vector<Graph> two_connected_graphs_up_to(int max_n);

/// Every labelled graph on n vertices (n <= 8), in upper-triangle bitmask
/// order: bit k of the mask is the k-th pair in graph6 column order.
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& visit);

/// G(n, p): each pair is an edge independently with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace fheavy
