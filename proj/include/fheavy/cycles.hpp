#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fheavy/graph.hpp"

namespace fheavy {

/// A cycle of length >= 3, stored canonically: starts at its minimum vertex
/// and seq[1] < seq.back().
struct Cycle {
    std::vector<Vertex> seq;

    int length() const { return static_cast<int>(seq.size()); }
    bool operator==(const Cycle&) const = default;
};

/// Rotates and reflects `seq` into canonical form.
Cycle normalize_cycle(std::vector<Vertex> seq);

/// Distinct vertices, length >= 3, every cyclically consecutive pair an edge.
bool is_valid_cycle(const Graph& g, const Cycle& c);

/// Cyclic vertex sequence whose consecutive pairs are Ore-adjacent.
/// virtual_pair[i] describes the pair (seq[i], seq[(i+1) % k]) and is true
/// exactly when that pair is not an edge of the graph.
struct OCycle {
    std::vector<Vertex> seq;
    std::vector<bool> virtual_pair;
};

/// Builds an OCycle from a vertex sequence, deriving the flags.
/// Throws std::invalid_argument when the sequence is not an o-cycle of g.
OCycle make_o_cycle(const Graph& g, std::vector<Vertex> seq);

bool is_valid_o_cycle(const Graph& g, const OCycle& oc);

/// Thrown when an o-cycle admits no covering real cycle. Since every
/// o-cycle is covered by some cycle, this means the input or the search is
/// wrong and must never be swallowed.
class LemmaViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact search. std::nullopt iff g has no Hamilton cycle.
std::optional<Cycle> find_hamilton_cycle(const Graph& g);

/// Vertices with 2 d(v) >= n, ascending.
std::vector<Vertex> heavy_vertices(const Graph& g);

/// Exact search for a cycle whose vertex set contains `required`.
/// With an empty requirement, returns a cycle through the smallest vertex
/// that lies on any cycle. std::nullopt iff no such cycle exists.
std::optional<Cycle> find_cycle_through(const Graph& g, std::span<const Vertex> required);

/// A real cycle covering V(oc). An o-cycle without virtual pairs is returned
/// as-is (normalized). Throws std::invalid_argument for an invalid o-cycle
/// and LemmaViolation when no covering cycle exists.
Cycle expand_o_cycle(const Graph& g, const OCycle& oc);

std::string to_string(const Cycle& c);

}  // namespace fheavy
