#include "fheavy/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace fheavy {

Cycle normalize_cycle(std::vector<Vertex> seq) {
    if (seq.empty()) return Cycle{};
    auto min_it = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), min_it, seq.end());
    if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
    return Cycle{std::move(seq)};
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    const auto k = c.seq.size();
    if (k < 3) return false;
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex v = c.seq[i];
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
        if (!g.adjacent(v, c.seq[(i + 1) % k])) return false;
    }
    return true;
}

OCycle make_o_cycle(const Graph& g, std::vector<Vertex> seq) {
    OCycle oc;
    oc.seq = std::move(seq);
    const auto k = oc.seq.size();
    if (k < 3) throw std::invalid_argument("o-cycle needs at least 3 vertices");
    VertexSet seen(g.order());
    for (Vertex v : oc.seq) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("o-cycle vertex out of range");
        if (seen.contains(v)) throw std::invalid_argument("o-cycle repeats vertex " + std::to_string(v));
        seen.insert(v);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Vertex a = oc.seq[i];
        const Vertex b = oc.seq[(i + 1) % k];
        if (!ore_adjacent(g, a, b))
            throw std::invalid_argument("o-cycle pair (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") is neither an edge nor has degree sum >= n");
        oc.virtual_pair.push_back(!g.adjacent(a, b));
    }
    return oc;
}

bool is_valid_o_cycle(const Graph& g, const OCycle& oc) {
    try {
        return make_o_cycle(g, oc.seq).virtual_pair == oc.virtual_pair;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace {

/// Depth-first extension of a path from `start` until it closes into a cycle
/// covering every required vertex. Neighbors are tried in ascending order.
class CycleSearch {
public:
    CycleSearch(const Graph& g, VertexSet allowed, VertexSet required, Vertex start)
        : g_(g),
          allowed_(std::move(allowed)),
          required_(std::move(required)),
          start_(start),
          unvisited_(allowed_) {}

    std::optional<Cycle> run() {
        unvisited_.erase(start_);
        path_.push_back(start_);
        if (extend(start_)) return normalize_cycle(path_);
        return std::nullopt;
    }

private:
    bool extend(Vertex cur) {
        if (path_.size() >= 3 && g_.adjacent(cur, start_) && !required_.intersects(unvisited_)) return true;
        if (!feasible(cur)) return false;
        const VertexSet candidates = g_.neighbors(cur) & unvisited_;
        for (Vertex w = candidates.first(); w != -1; w = candidates.next(w)) {
            unvisited_.erase(w);
            path_.push_back(w);
            if (extend(w)) return true;
            path_.pop_back();
            unvisited_.insert(w);
        }
        return false;
    }

    bool feasible(Vertex cur) const {
        const VertexSet pending = required_ & unvisited_;
        // Each pending vertex must still be enterable and leavable.
        VertexSet open = unvisited_;
        open.insert(cur);
        open.insert(start_);
        for (Vertex r = pending.first(); r != -1; r = pending.next(r))
            if (g_.neighbors(r).intersection_count(open) < 2) return false;

        // Every pending vertex, and a neighbor of start, must be reachable
        // from cur through unvisited vertices.
        VertexSet reach(g_.order());
        VertexSet frontier(g_.order());
        frontier.insert(cur);
        while (!frontier.empty()) {
            VertexSet next(g_.order());
            frontier.for_each([&](Vertex u) { next |= g_.neighbors(u); });
            next &= unvisited_;
            next -= reach;
            reach |= next;
            frontier = std::move(next);
        }
        if (!pending.is_subset_of(reach)) return false;
        reach.insert(cur);
        if (path_.size() == 1) return true;
        return g_.neighbors(start_).intersects(reach);
    }

    const Graph& g_;
    VertexSet allowed_;
    VertexSet required_;
    Vertex start_;
    VertexSet unvisited_;
    std::vector<Vertex> path_;
};

}  // namespace

std::vector<Vertex> heavy_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (heavy_degree(g.degree(v), g.order())) out.push_back(v);
    return out;
}

std::optional<Cycle> find_cycle_through(const Graph& g, std::span<const Vertex> required) {
    const int n = g.order();
    VertexSet req(n);
    for (Vertex v : required) {
        if (v < 0 || v >= n) throw std::out_of_range("find_cycle_through: vertex " + std::to_string(v));
        req.insert(v);
    }
    if (n < 3) return std::nullopt;
    if (!req.empty()) return CycleSearch(g, g.vertices(), req, req.first()).run();

    // Any cycle: the first vertex s lying on a cycle inside {s, s+1, ...}.
    for (Vertex s = 0; s < n; ++s) {
        VertexSet allowed(n);
        for (Vertex v = s; v < n; ++v) allowed.insert(v);
        VertexSet only(n);
        only.insert(s);
        if (auto c = CycleSearch(g, allowed, only, s).run()) return c;
    }
    return std::nullopt;
}

std::optional<Cycle> find_hamilton_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) return std::nullopt;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) < 2) return std::nullopt;
    if (!is_two_connected(g)) return std::nullopt;
    return CycleSearch(g, g.vertices(), g.vertices(), 0).run();
}

Cycle expand_o_cycle(const Graph& g, const OCycle& oc) {
    if (!is_valid_o_cycle(g, oc)) throw std::invalid_argument("expand_o_cycle: input is not a valid o-cycle");
    if (std::none_of(oc.virtual_pair.begin(), oc.virtual_pair.end(), [](bool b) { return b; }))
        return normalize_cycle(oc.seq);
    auto c = find_cycle_through(g, oc.seq);
    if (!c) {
        std::ostringstream os;
        os << "no real cycle covers the o-cycle";
        for (Vertex v : oc.seq) os << ' ' << v;
        throw LemmaViolation(os.str());
    }
    return *c;
}

std::string to_string(const Cycle& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.seq.size(); ++i) os << (i ? "," : "") << c.seq[i];
    return os.str();
}

}  // namespace fheavy
