#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fheavy/graph.hpp"

namespace fheavy {

enum class PatternName { Claw, P4, P5, P6, P7, Deer, Hourglass, Custom };

/// A small graph used as an induced-subgraph template.
///
/// Catalog numbering is frozen:
///   claw       center 0, ends 1,2,3
///   P_k        path 0-1-...-(k-1)
///   deer       triangle 0,1,2 with pendant paths 0-3-4 and 1-5-6
///   hourglass  shared vertex 0, triangles {0,1,2} and {0,3,4}
struct Pattern {
    PatternName name = PatternName::Custom;
    std::string label;
    Graph graph;
};

/// Catalog lookup. Throws std::invalid_argument for PatternName::Custom.
Pattern pattern(PatternName name);

/// Case-insensitive lookup by label ("claw", "k13", "p4".."p7", "deer", "d",
/// "hourglass", "h"). Anything else is tried as a graph6 string and becomes a
/// custom pattern; failing both throws std::invalid_argument.
Pattern pattern_from_string(std::string_view text);

Pattern custom_pattern(Graph graph, std::string label = "custom");

/// Every catalog pattern, in enum order.
std::vector<Pattern> catalog();

std::string_view to_string(PatternName name);

/// A sorted vertex subset S of the host with G[S] isomorphic to the pattern.
using InducedCopy = std::vector<Vertex>;

/// All induced copies of p in g, each subset once, in lexicographic order.
std::vector<InducedCopy> enumerate_induced_copies(const Graph& g, const Pattern& p);

/// Calls `visit(copy)` for each induced copy, in unspecified order, until it
/// returns false. Copies may repeat when the pattern has automorphisms.
/// Returns false iff the visitor stopped the search.
template <class Visitor>
bool for_each_induced_embedding(const Graph& g, const Graph& pattern, Visitor&& visit);

/// Largest order accepted by is_isomorphic_small.
inline constexpr int kSmallIsoLimit = 10;

/// Exact isomorphism test for graphs with at most kSmallIsoLimit vertices.
/// Throws std::invalid_argument above that bound.
bool is_isomorphic_small(const Graph& a, const Graph& b);

/// Unordered pairs {u, v}, u < v, at distance exactly 2 in h, sorted.
std::vector<Edge> distance2_pairs(const Graph& h);

namespace detail {

/// Pattern vertices in an order where each vertex (after the first of its
/// component) has an earlier neighbor.
std::vector<Vertex> match_order(const Graph& pattern);

}  // namespace detail

template <class Visitor>
bool for_each_induced_embedding(const Graph& g, const Graph& pattern, Visitor&& visit) {
    const int k = pattern.order();
    const int n = g.order();
    if (k == 0) return visit(InducedCopy{});
    if (k > n) return true;

    const std::vector<Vertex> order = detail::match_order(pattern);
    // anchor[i]: an earlier position adjacent to order[i] in the pattern, or -1.
    std::vector<int> anchor(static_cast<std::size_t>(k), -1);
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < i; ++j)
            if (pattern.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
                anchor[static_cast<std::size_t>(i)] = j;
                break;
            }

    std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
    VertexSet used(n);
    bool keep_going = true;

    auto consistent = [&](int pos, Vertex host) {
        const Vertex pv = order[static_cast<std::size_t>(pos)];
        if (g.degree(host) < pattern.degree(pv)) return false;
        for (int j = 0; j < pos; ++j) {
            bool want = pattern.adjacent(pv, order[static_cast<std::size_t>(j)]);
            if (g.adjacent(host, image[static_cast<std::size_t>(j)]) != want) return false;
        }
        return true;
    };

    auto extend = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            InducedCopy copy = image;
            std::sort(copy.begin(), copy.end());
            keep_going = visit(std::move(copy));
            return;
        }
        auto try_host = [&](Vertex host) {
            if (!keep_going || used.contains(host) || !consistent(pos, host)) return;
            image[static_cast<std::size_t>(pos)] = host;
            used.insert(host);
            self(self, pos + 1);
            used.erase(host);
        };
        const int a = anchor[static_cast<std::size_t>(pos)];
        if (a >= 0) {
            g.neighbors(image[static_cast<std::size_t>(a)]).for_each(try_host);
        } else {
            for (Vertex host = 0; host < n && keep_going; ++host) try_host(host);
        }
    };
    extend(extend, 0);
    return keep_going;
}

}  // namespace fheavy
