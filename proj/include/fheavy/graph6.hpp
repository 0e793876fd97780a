#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fheavy/graph.hpp"

namespace fheavy {

/// Largest order graph6 can express with the 4-byte size prefix.
inline constexpr int kGraph6MaxOrder = 258047;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::string content = {})
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          message_(what),
          line_(line),
          content_(std::move(content)) {}

    /// The message without the "line N: " prefix.
    const std::string& message() const { return message_; }

    /// 1-based line number, 0 when not tied to a stream.
    std::size_t line() const { return line_; }
    const std::string& content() const { return content_; }

private:
    std::string message_;
    std::size_t line_;
    std::string content_;
};

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; anything else outside the format is a ParseError.
Graph decode_graph6(std::string_view line);

/// Canonical graph6 text for g (no header, no newline).
/// Throws std::length_error when g has more than kGraph6MaxOrder vertices.
std::string encode_graph6(const Graph& g);

/// Edge-list text: "n m" followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

enum class CorpusFormat { Auto, Graph6, EdgeList };

struct CorpusItem {
    std::size_t index = 0;  // 0-based record number
    std::size_t line = 0;   // 1-based line where the record starts
    std::string text;       // the raw first line of the record
    std::optional<Graph> graph;
    std::string error;      // set iff graph is empty
    std::size_t error_line = 0;

    /// "line N: message" for error items.
    std::string describe_error() const { return "line " + std::to_string(error_line) + ": " + error; }
};

/// Streams graphs out of a text source, one record at a time.
///
/// graph6 records are single lines, so a malformed line yields an error item
/// and reading continues. Edge-list records span several lines; a malformed
/// edge list ends the stream after its error item because record boundaries
/// are lost.
class CorpusReader {
public:
    explicit CorpusReader(std::istream& in, CorpusFormat format = CorpusFormat::Auto)
        : in_(in), format_(format) {}

    std::optional<CorpusItem> next();

private:
    bool next_line(std::string& out);

    std::istream& in_;
    CorpusFormat format_;
    std::size_t line_no_ = 0;
    std::size_t index_ = 0;
    bool failed_ = false;
};

/// Reads the whole stream; the first malformed record throws ParseError
/// carrying its line number.
std::vector<std::pair<std::size_t, Graph>> read_corpus(std::istream& in, CorpusFormat format = CorpusFormat::Auto);

}  // namespace fheavy
