#include "fheavy/graph6.hpp"

#include <charconv>
#include <sstream>

namespace fheavy {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

int char_value(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw ParseError("graph6: byte " + std::to_string(u) + " outside printable range 63..126");
    return u - 63;
}

bool looks_like_edge_list(std::string_view line) {
    return !line.empty() && line.front() >= '0' && line.front() <= '9';
}

}  // namespace

Graph decode_graph6(std::string_view line) {
    line = trim(line);
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    if (line.empty()) throw ParseError("graph6: empty record");

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] != '~') {
        n = char_value(line[0]);
        pos = 1;
    } else if (line.size() >= 2 && line[1] == '~') {
        throw ParseError("graph6: 8-byte size prefix (n > 258047) is not supported");
    } else {
        if (line.size() < 4) throw ParseError("graph6: truncated size prefix");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | char_value(line[i]);
        pos = 4;
    }

    const long long bits = n * (n - 1) / 2;
    const long long chars = (bits + 5) / 6;
    const auto available = static_cast<long long>(line.size() - pos);
    if (available < chars)
        throw ParseError("graph6: truncated data, expected " + std::to_string(chars) + " data bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(available));
    if (available > chars) throw ParseError("graph6: trailing data after " + std::to_string(chars) + " data bytes");

    std::vector<Edge> edges;
    long long k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            int value = char_value(line[pos + static_cast<std::size_t>(k / 6)]);
            if ((value >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    if (k % 6 != 0) {
        int last = char_value(line[pos + static_cast<std::size_t>(k / 6)]);
        if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::build(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw std::length_error("encode_graph6: n=" + std::to_string(n) + " exceeds supported maximum " +
                                std::to_string(kGraph6MaxOrder));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

namespace {

std::vector<long long> parse_ints(std::string_view line) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || value < 0) throw ParseError("edge list: expected non-negative integers");
        i = static_cast<std::size_t>(ptr - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t')
            throw ParseError("edge list: unexpected character '" + std::string(1, line[i]) + "'");
        out.push_back(value);
    }
    return out;
}

Graph edge_list_from_lines(const std::vector<std::string>& lines, std::size_t first_line) {
    auto fail = [&](std::size_t offset, const std::string& what) {
        return ParseError(what, first_line ? first_line + offset : 0, offset < lines.size() ? lines[offset] : "");
    };
    std::vector<long long> header;
    try {
        header = parse_ints(lines.at(0));
    } catch (const ParseError& e) {
        throw fail(0, e.message());
    }
    if (header.size() != 2) throw fail(0, "edge list: header must be \"n m\"");
    if (header[0] > kGraph6MaxOrder) throw fail(0, "edge list: vertex count too large");
    const long long m = header[1];
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw fail(lines.size() - 1, "edge list: expected " + std::to_string(m) + " edge lines, found " +
                                         std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    for (long long i = 1; i <= m; ++i) {
        auto idx = static_cast<std::size_t>(i);
        std::vector<long long> e;
        try {
            e = parse_ints(lines[idx]);
        } catch (const ParseError& err) {
            throw fail(idx, err.message());
        }
        if (e.size() != 2) throw fail(idx, "edge list: edge line must be \"u v\"");
        if (e[0] >= header[0] || e[1] >= header[0])
            throw fail(idx, "edge list: endpoint outside 0.." + std::to_string(header[0] - 1));
        if (e[0] == e[1]) throw fail(idx, "edge list: self-loop at vertex " + std::to_string(e[0]));
        edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
    }
    try {
        return Graph::build(static_cast<int>(header[0]), edges);
    } catch (const std::exception& err) {
        throw fail(0, err.what());
    }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (!t.empty()) lines.emplace_back(t);
    }
    if (lines.empty()) throw ParseError("edge list: empty input");
    Graph g = edge_list_from_lines(lines, 0);
    const auto used = 1 + static_cast<std::size_t>(parse_ints(lines[0])[1]);
    if (lines.size() > used) throw ParseError("edge list: trailing content after the last edge");
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

bool CorpusReader::next_line(std::string& out) {
    while (std::getline(in_, out)) {
        ++line_no_;
        auto t = trim(out);
        if (!t.empty()) {
            out = std::string(t);
            return true;
        }
    }
    return false;
}

std::optional<CorpusItem> CorpusReader::next() {
    if (failed_) return std::nullopt;
    std::string line;
    if (!next_line(line)) return std::nullopt;

    CorpusItem item;
    item.index = index_++;
    item.line = line_no_;
    item.text = line;

    bool edge_list = format_ == CorpusFormat::EdgeList || (format_ == CorpusFormat::Auto && looks_like_edge_list(line));
    if (!edge_list) {
        try {
            item.graph = decode_graph6(line);
        } catch (const std::exception& e) {
            item.error = e.what();
            item.error_line = item.line;
        }
        return item;
    }

    std::vector<std::string> lines{line};
    try {
        auto header = parse_ints(line);
        if (header.size() == 2) {
            for (long long i = 0; i < header[1]; ++i) {
                std::string edge;
                if (!next_line(edge)) break;
                lines.push_back(std::move(edge));
            }
        }
        item.graph = edge_list_from_lines(lines, item.line);
    } catch (const ParseError& e) {
        item.error = e.message();
        item.error_line = e.line() ? e.line() : item.line;
        failed_ = true;
    }
    return item;
}

std::vector<std::pair<std::size_t, Graph>> read_corpus(std::istream& in, CorpusFormat format) {
    std::vector<std::pair<std::size_t, Graph>> out;
    CorpusReader reader(in, format);
    while (auto item = reader.next()) {
        if (!item->graph) throw ParseError(item->error, item->error_line, item->text);
        out.emplace_back(item->index, std::move(*item->graph));
    }
    return out;
}

}  // namespace fheavy
