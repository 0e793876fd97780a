#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fheavy/conditions.hpp"
#include "fheavy/cycles.hpp"
#include "fheavy/graph.hpp"

namespace fheavy {

/// Order of the separating construction: an even integer >= 16.
class WitnessSpec {
public:
    /// Throws std::invalid_argument for odd n or n < 16.
    explicit WitnessSpec(int n);
    int n() const { return n_; }

private:
    int n_;
};

/// Frozen vertex numbering of the witness graph on n vertices:
/// clique A = 0..n/2-1, clique B = n/2..n-8, then x,y,z,u,v,w,t = n-7..n-1.
struct WitnessLayout {
    int n;
    int a_begin() const { return 0; }
    int a_size() const { return n / 2; }
    int b_begin() const { return n / 2; }
    int b_size() const { return n / 2 - 7; }
    Vertex x() const { return n - 7; }
    Vertex y() const { return n - 6; }
    Vertex z() const { return n - 5; }
    Vertex u() const { return n - 4; }
    Vertex v() const { return n - 3; }
    Vertex w() const { return n - 2; }
    Vertex t() const { return n - 1; }
};

/// K_{n/2} + K_{n/2-7} plus x,y,z,u,v,w,t with edges xy,xz,yz,yw,wu,zt,tv,
/// x,y,z joined to all of A and u,v joined to all of B.
Graph build_witness(const WitnessSpec& spec);

/// One property of the witness: what the construction is claimed to have,
/// and what the machine found.
struct WitnessFlag {
    std::string name;
    std::optional<bool> claimed;  // empty when nothing is claimed
    bool verified = false;
    ConditionReport report;       // underlying predicate output
    std::optional<Cycle> cycle;   // for the Hamiltonicity flag

    bool discrepancy() const { return claimed && *claimed != verified; }
};

struct WitnessReport {
    int n = 0;
    std::vector<WitnessFlag> flags;  // hamiltonian, fan_condition, thm4_condition, thm5_condition, claw_free

    const WitnessFlag& flag(const std::string& name) const;
};

/// Runs the Hamiltonicity solver and the Fan, Theorem-4, Theorem-5 and
/// claw-freeness predicates on g. Claimed values are filled in when g has the
/// witness order layout and n >= 16 is even.
WitnessReport classify_witness(const Graph& g);

}  // namespace fheavy
