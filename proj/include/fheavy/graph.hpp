#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fheavy/vertex_set.hpp"

namespace fheavy {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one bitset row per vertex; degrees are cached at
/// construction. Instances are never mutated after `build_graph` returns, so
/// they can be shared freely across worker threads.
class Graph {
public:
    Graph() = default;

    /// Builds the graph with exactly the given edges (duplicates collapse).
    /// Throws std::out_of_range for an endpoint >= n and
    /// std::invalid_argument for a self-loop or negative n.
    static Graph build(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const;

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<int> degrees_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::build(n, edges); }
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
    return Graph::build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Shortest-path hop count; std::nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct InducedSubgraph {
    Graph graph;
    /// to_host[i] is the host vertex that became vertex i.
    std::vector<Vertex> to_host;
};

/// Subgraph induced by `subset`, relabelled in ascending host order.
/// Duplicate members are ignored.
InducedSubgraph induced(const Graph& g, std::span<const Vertex> subset);

bool is_connected(const Graph& g);

/// Cut vertices of g, ascending.
std::vector<Vertex> articulation_points(const Graph& g);

/// n >= 3, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

/// uv is an edge, or d(u) + d(v) >= n. Throws for u == v or out-of-range.
bool ore_adjacent(const Graph& g, Vertex u, Vertex v);

/// 2 d(v) >= n, the integer form of d(v) >= n/2.
inline bool heavy_degree(int degree, int n) { return 2 * degree >= n; }

std::string to_string(const Graph& g);

}  // namespace fheavy
