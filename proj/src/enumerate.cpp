#include "fheavy/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace fheavy {
namespace {

constexpr int kMax = kMaxGeneratedOrder;

struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, kMax> rows{};

    bool adjacent(int u, int v) const { return (rows[static_cast<std::size_t>(u)] >> v) & 1U; }
    int degree(int v) const { return std::popcount(rows[static_cast<std::size_t>(v)]); }
};

struct Refinement {
    std::array<std::uint8_t, kMax> color{};
    std::array<std::uint8_t, kMax> class_size{};
    std::uint64_t hash = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    return h;
}

/// Stable colouring by iterated neighbourhood signatures. Colours are ranks
/// of sorted signatures, so they do not depend on the vertex labelling.
Refinement refine(const SmallGraph& g) {
    const int n = g.n;
    using Sig = std::array<std::uint8_t, kMax + 1>;
    std::array<Sig, kMax> sig{};
    std::array<int, kMax> idx{};
    Refinement r;
    r.hash = mix(static_cast<std::uint64_t>(n), 0);

    for (int v = 0; v < n; ++v) {
        int tri = 0;
        for (int w = 0; w < n; ++w)
            if (g.adjacent(v, w)) tri += std::popcount(static_cast<unsigned>(g.rows[static_cast<std::size_t>(v)] & g.rows[static_cast<std::size_t>(w)]));
        sig[static_cast<std::size_t>(v)].fill(0xff);
        sig[static_cast<std::size_t>(v)][0] = static_cast<std::uint8_t>(g.degree(v));
        sig[static_cast<std::size_t>(v)][1] = static_cast<std::uint8_t>(tri / 2);
    }

    int classes = 0;
    while (true) {
        std::iota(idx.begin(), idx.begin() + n, 0);
        std::sort(idx.begin(), idx.begin() + n,
                  [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
        int rank = -1;
        for (int i = 0; i < n; ++i) {
            const auto& s = sig[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (i == 0 || s != sig[static_cast<std::size_t>(idx[static_cast<std::size_t>(i - 1)])]) {
                ++rank;
                for (auto byte : s) r.hash = mix(r.hash, byte);
            }
            r.hash = mix(r.hash, static_cast<std::uint64_t>(rank));
            r.color[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = static_cast<std::uint8_t>(rank);
        }
        const int now = rank + 1;
        if (now == classes) break;
        classes = now;

        for (int v = 0; v < n; ++v) {
            Sig s;
            s.fill(0xff);
            s[0] = r.color[static_cast<std::size_t>(v)];
            int k = 1;
            for (int w = 0; w < n; ++w)
                if (g.adjacent(v, w)) s[static_cast<std::size_t>(k++)] = r.color[static_cast<std::size_t>(w)];
            std::sort(s.begin() + 1, s.begin() + k);
            sig[static_cast<std::size_t>(v)] = s;
        }
    }
    r.class_size.fill(0);
    for (int v = 0; v < n; ++v) ++r.class_size[r.color[static_cast<std::size_t>(v)]];
    return r;
}

/// Exact isomorphism test that only maps vertices of equal colour.
bool isomorphic(const SmallGraph& a, const Refinement& ra, const SmallGraph& b, const Refinement& rb) {
    const int n = a.n;
    std::array<int, kMax> order{};
    std::iota(order.begin(), order.begin() + n, 0);
    std::stable_sort(order.begin(), order.begin() + n, [&](int x, int y) {
        auto cx = ra.color[static_cast<std::size_t>(x)], cy = ra.color[static_cast<std::size_t>(y)];
        if (ra.class_size[cx] != ra.class_size[cy]) return ra.class_size[cx] < ra.class_size[cy];
        return cx < cy;
    });
    std::array<int, kMax> image{};
    std::uint16_t used = 0;

    auto extend = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        const int v = order[static_cast<std::size_t>(pos)];
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1U) continue;
            if (rb.color[static_cast<std::size_t>(w)] != ra.color[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int j = 0; j < pos && ok; ++j)
                ok = a.adjacent(v, order[static_cast<std::size_t>(j)]) == b.adjacent(w, image[static_cast<std::size_t>(j)]);
            if (!ok) continue;
            image[static_cast<std::size_t>(pos)] = w;
            used = static_cast<std::uint16_t>(used | (1U << w));
            if (self(self, pos + 1)) return true;
            used = static_cast<std::uint16_t>(used & ~(1U << w));
        }
        return false;
    };
    return extend(extend, 0);
}

Graph to_graph(const SmallGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);
    return build_graph(g.n, edges);
}

/// Classes on k+1 vertices from the classes on k vertices.
std::vector<SmallGraph> grow(const std::vector<SmallGraph>& level, int k) {
    std::vector<SmallGraph> next;
    std::vector<Refinement> next_ref;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (const auto& base : level) {
        for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
            SmallGraph h = base;
            h.n = k + 1;
            h.rows[static_cast<std::size_t>(k)] = static_cast<std::uint16_t>(mask);
            for (int u = 0; u < k; ++u)
                if ((mask >> u) & 1U) h.rows[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1U << k);
            Refinement r = refine(h);
            auto& bucket = buckets[r.hash];
            bool seen = false;
            for (std::size_t i : bucket) {
                if (next_ref[i].class_size != r.class_size) continue;
                if (isomorphic(h, r, next[i], next_ref[i])) {
                    seen = true;
                    break;
                }
            }
            if (seen) continue;
            bucket.push_back(next.size());
            next.push_back(h);
            next_ref.push_back(r);
        }
    }
    return next;
}

/// Calls visit(k, classes on k vertices) for k = 0..n.
template <class Visit>
void for_each_level(int n, Visit&& visit) {
    std::vector<SmallGraph> level{SmallGraph{}};
    visit(0, level);
    for (int k = 0; k < n; ++k) {
        level = grow(level, k);
        visit(k + 1, level);
    }
}

void check_order(int n, int limit, const char* what) {
    if (n < 0 || n > limit)
        throw std::invalid_argument(std::string(what) + ": order " + std::to_string(n) + " outside 0.." +
                                    std::to_string(limit));
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
    check_order(n, kMaxGeneratedOrder, "all_graphs");
    std::vector<Graph> out;
    for_each_level(n, [&](int k, const std::vector<SmallGraph>& level) {
        if (k != n) return;
        for (const auto& g : level) out.push_back(to_graph(g));
    });
    return out;
}

std::vector<Graph> two_connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_two_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> two_connected_graphs_up_to(int max_n) {
    check_order(max_n, kMaxGeneratedOrder, "two_connected_graphs_up_to");
    std::vector<Graph> out;
    for_each_level(max_n, [&](int k, const std::vector<SmallGraph>& level) {
        if (k < 3) return;
        for (const auto& small : level) {
            Graph g = to_graph(small);
            if (is_two_connected(g)) out.push_back(std::move(g));
        }
    });
    return out;
}

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& visit) {
    check_order(n, 8, "for_each_labelled_graph");
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U) edges.push_back(pairs[k]);
        visit(build_graph(n, edges));
    }
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

}  // namespace fheavy
