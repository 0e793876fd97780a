#include "fheavy/patterns.hpp"

#include <cctype>
#include <stdexcept>

#include "fheavy/graph6.hpp"

namespace fheavy {
namespace {

Graph path_graph(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return build_graph(k, edges);
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::string_view to_string(PatternName name) {
    switch (name) {
        case PatternName::Claw: return "CLAW";
        case PatternName::P4: return "P4";
        case PatternName::P5: return "P5";
        case PatternName::P6: return "P6";
        case PatternName::P7: return "P7";
        case PatternName::Deer: return "DEER";
        case PatternName::Hourglass: return "HOURGLASS";
        case PatternName::Custom: return "CUSTOM";
    }
    return "?";
}

Pattern pattern(PatternName name) {
    Pattern p;
    p.name = name;
    p.label = std::string(to_string(name));
    switch (name) {
        case PatternName::Claw: p.graph = build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); break;
        case PatternName::P4: p.graph = path_graph(4); break;
        case PatternName::P5: p.graph = path_graph(5); break;
        case PatternName::P6: p.graph = path_graph(6); break;
        case PatternName::P7: p.graph = path_graph(7); break;
        case PatternName::Deer:
            p.graph = build_graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 5}, {5, 6}});
            break;
        case PatternName::Hourglass:
            p.graph = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
            break;
        case PatternName::Custom: throw std::invalid_argument("pattern: CUSTOM requires a supplied graph");
    }
    return p;
}

Pattern custom_pattern(Graph graph, std::string label) {
    return Pattern{PatternName::Custom, std::move(label), std::move(graph)};
}

Pattern pattern_from_string(std::string_view text) {
    const std::string key = lower(text);
    if (key == "claw" || key == "k13" || key == "k1,3") return pattern(PatternName::Claw);
    if (key == "p4") return pattern(PatternName::P4);
    if (key == "p5") return pattern(PatternName::P5);
    if (key == "p6") return pattern(PatternName::P6);
    if (key == "p7") return pattern(PatternName::P7);
    if (key == "deer" || key == "d") return pattern(PatternName::Deer);
    if (key == "hourglass" || key == "h") return pattern(PatternName::Hourglass);
    try {
        return custom_pattern(decode_graph6(text), std::string(text));
    } catch (const ParseError& e) {
        throw std::invalid_argument("unknown pattern '" + std::string(text) + "' (not a catalog name, and " +
                                    e.what() + ")");
    }
}

std::vector<Pattern> catalog() {
    return {pattern(PatternName::Claw), pattern(PatternName::P4),   pattern(PatternName::P5),
            pattern(PatternName::P6),   pattern(PatternName::P7),   pattern(PatternName::Deer),
            pattern(PatternName::Hourglass)};
}

namespace detail {

std::vector<Vertex> match_order(const Graph& pattern) {
    const int k = pattern.order();
    std::vector<Vertex> order;
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    // Greedy: next vertex is the one with most already-placed neighbors
    // (ties: higher degree, then lower index). Starts each component at its
    // highest-degree vertex.
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        int best_links = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (Vertex u : order) links += pattern.adjacent(u, v) ? 1 : 0;
            if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        placed[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
    }
    return order;
}

}  // namespace detail

std::vector<InducedCopy> enumerate_induced_copies(const Graph& g, const Pattern& p) {
    std::vector<InducedCopy> copies;
    for_each_induced_embedding(g, p.graph, [&](InducedCopy copy) {
        copies.push_back(std::move(copy));
        return true;
    });
    std::sort(copies.begin(), copies.end());
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    return copies;
}

bool is_isomorphic_small(const Graph& a, const Graph& b) {
    if (a.order() > kSmallIsoLimit || b.order() > kSmallIsoLimit)
        throw std::invalid_argument("is_isomorphic_small: graphs above " + std::to_string(kSmallIsoLimit) +
                                    " vertices are not supported");
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    // An isomorphism is an induced embedding of a into b covering all of b.
    return !for_each_induced_embedding(b, a, [](const InducedCopy&) { return false; });
}

std::vector<Edge> distance2_pairs(const Graph& h) {
    std::vector<Edge> out;
    const int n = h.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v) && h.neighbors(u).intersects(h.neighbors(v))) out.emplace_back(u, v);
    return out;
}

}  // namespace fheavy
