#include "fheavy/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace fheavy {
namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
    if (v < 0 || v >= g.order())
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(g.order()));
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("build_graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("build_graph: self-loop at vertex " + std::to_string(u));
        g.rows_[static_cast<std::size_t>(u)].insert(v);
        g.rows_[static_cast<std::size_t>(v)].insert(u);
    }
    g.degrees_.resize(static_cast<std::size_t>(n));
    int twice_m = 0;
    for (int v = 0; v < n; ++v) {
        g.degrees_[static_cast<std::size_t>(v)] = g.rows_[static_cast<std::size_t>(v)].count();
        twice_m += g.degrees_[static_cast<std::size_t>(v)];
    }
    g.m_ = twice_m / 2;
    return g;
}

int Graph::degree(Vertex v) const {
    check_vertex(*this, v, "degree");
    return degrees_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[static_cast<std::size_t>(u)].next(u); v != -1; v = rows_[static_cast<std::size_t>(u)].next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    check_vertex(g, source, "bfs_distances");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](Vertex w) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u, "distance");
    check_vertex(g, v, "distance");
    int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return d;
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> subset) {
    InducedSubgraph out;
    out.to_host.assign(subset.begin(), subset.end());
    for (Vertex v : out.to_host) check_vertex(g, v, "induced");
    std::sort(out.to_host.begin(), out.to_host.end());
    out.to_host.erase(std::unique(out.to_host.begin(), out.to_host.end()), out.to_host.end());

    std::vector<Edge> edges;
    const int k = static_cast<int>(out.to_host.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(out.to_host[static_cast<std::size_t>(i)], out.to_host[static_cast<std::size_t>(j)]))
                edges.emplace_back(i, j);
    out.graph = Graph::build(k, edges);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen(g.order());
    VertexSet frontier(g.order());
    frontier.insert(0);
    seen.insert(0);
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](Vertex u) { next |= g.neighbors(u); });
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen.count() == g.order();
}

std::vector<Vertex> articulation_points(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> cut(static_cast<std::size_t>(n), false);
    int timer = 0;

    // Iterative Tarjan: each frame remembers the last neighbor it explored.
    struct Frame {
        Vertex v;
        Vertex last;
        int children;
    };
    std::vector<Frame> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            Vertex w = g.neighbors(f.v).next(f.last);
            if (w != -1) {
                f.last = w;
                auto wi = static_cast<std::size_t>(w);
                if (disc[wi] == -1) {
                    parent[wi] = f.v;
                    ++f.children;
                    disc[wi] = low[wi] = timer++;
                    stack.push_back({w, -1, 0});
                } else if (w != parent[static_cast<std::size_t>(f.v)]) {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) cut[static_cast<std::size_t>(done.v)] = true;
                continue;
            }
            Vertex p = stack.back().v;
            auto pi = static_cast<std::size_t>(p);
            low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done.v)]);
            if (p != root && low[static_cast<std::size_t>(done.v)] >= disc[pi]) cut[pi] = true;
        }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (cut[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

bool is_two_connected(const Graph& g) {
    return g.order() >= 3 && is_connected(g) && articulation_points(g).empty();
}

bool ore_adjacent(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u, "ore_adjacent");
    check_vertex(g, v, "ore_adjacent");
    if (u == v) throw std::invalid_argument("ore_adjacent: identical endpoints");
    return g.adjacent(u, v) || g.degree(u) + g.degree(v) >= g.order();
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "Graph(n=" << g.order() << ", m=" << g.size() << ", {";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        os << (first ? "" : ",") << u << "-" << v;
        first = false;
    }
    os << "})";
    return os.str();
}

}  // namespace fheavy
