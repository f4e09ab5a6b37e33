#pragma once

#include <string>
#include <vector>

#include "gridsalvage/grid.hpp"

namespace gridsalvage {

// One branch set of a minor model: the host vertices contracted to a single
// minor vertex.  Hosts must induce a connected subgraph of the host grid and
// stay clear of the damage set.
struct BranchSet {
    Coord minor_vertex;        // coordinates in the minor's index space
    std::vector<Coord> hosts;  // sorted lexicographically
};

// Certificate that the minor grid embeds in the damaged host grid: one
// branch set per minor vertex, pairwise disjoint, with every minor edge
// realized by a host edge between the two branch sets.  `depth` is the
// maximum branch-set radius; depth 0 means the minor is a subgraph.
struct MinorModel {
    GridSpec host;
    GridSpec minor;
    int depth = 0;
    std::vector<BranchSet> branches;
};

// Recomputes the depth of the model (max over branch sets of the radius of
// the subgraph induced by that branch set's hosts), stores it in
// model.depth and returns it.  Throws CertificateError if a branch set is
// disconnected, InvalidInputError if damage and model disagree on the host.
int compute_depth(MinorModel& model, const DamageSet& damage);

// Radius of the subgraph of `host` induced by `hosts` (distances within the
// set only).  Throws CertificateError when the set is empty or disconnected.
int branch_radius(const GridSpec& host, const std::vector<Coord>& hosts);

// Ordered bag sequence certifying a pathwidth upper bound.
struct PathDecomposition {
    std::vector<std::vector<Coord>> bags;

    // (max bag size) - 1, or -1 when there are no bags.
    int width() const;
};

// A hypercube subgraph as a {0,1,*}-string, axis 0 leftmost.  The vertices
// are obtained by replacing each * independently by 0 or 1.
struct SubcubePattern {
    std::string symbols;

    int length() const { return static_cast<int>(symbols.size()); }
    int dimension() const;                  // number of * symbols
    std::uint64_t vertex_count() const;     // 2^dimension
    bool matches(std::uint64_t mask) const; // mask bit i = axis i
};

// Concrete guarantee values promised by the extractors for the given
// parameters, with labels describing which formula produced each value.
struct BoundReport {
    int subgraph_side = 0;
    int minor_side = 0;
    int shallow_side = 0;
    std::vector<std::string> formulas_used;
};

}  // namespace gridsalvage
