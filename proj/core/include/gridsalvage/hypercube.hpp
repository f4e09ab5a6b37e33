#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gridsalvage/certificates.hpp"
#include "gridsalvage/grid.hpp"

namespace gridsalvage::hypercube {

// Damage on a d-dimensional hypercube.  Vertices are d-bit masks with bit i
// holding the coordinate of axis i; the string form puts axis 0 leftmost.
class HypercubeDamage {
public:
    HypercubeDamage(int dim, std::vector<std::uint64_t> masks);

    int dim() const { return dim_; }
    std::uint64_t vertex_count() const { return std::uint64_t{1} << dim_; }
    std::size_t size() const { return masks_.size(); }

    const std::vector<std::uint64_t>& masks() const { return masks_; }
    bool contains(std::uint64_t mask) const { return set_.count(mask) != 0; }

    std::string bit_string(std::uint64_t mask) const;
    static std::uint64_t parse_bit_string(const std::string& s, int dim);

    // The same damage viewed as a DamageSet on the side-2 grid.
    DamageSet to_damage_set() const;

private:
    int dim_;
    std::vector<std::uint64_t> masks_;  // sorted ascending
    std::unordered_set<std::uint64_t> set_;
};

// Vertex count the subcube finder promises for dimension d and m damaged
// vertices; deterministic in (d, m).
std::uint64_t subcube_guarantee(int d, std::uint64_t m);

// Finds a subcube of dimension at least d-2 disjoint from the damage by
// scanning the 2d halfspace intersections for a comparable pair.  Requires
// d > C(m, floor(m/2)) / 2, otherwise throws BoundNotApplicableError without
// searching.  When the two halfspaces fix the same axis the result
// degenerates to a (d-1)-dimensional subcube and is still returned.
SubcubePattern sperner_subcube(const HypercubeDamage& damage);

// Large damage-free subcube: applies sperner_subcube directly when m is
// tiny, otherwise partitions into aligned subcubes by fixing a prefix of
// coordinates, picks the least damaged one and searches inside it.  The
// result has at least subcube_guarantee(d, m) vertices; throws
// EmptyResultError when that guarantee is below one vertex.
SubcubePattern find_subgraph(const HypercubeDamage& damage);

// For even m, the m points in dimension C(m, m/2)/2 whose i-th coordinates
// encode the i-th equal-size bipartition of {1..m}.  Bipartitions are
// enumerated by lexicographic order of the side containing element 1.
// Deleting these points eliminates every (d-2)-dimensional subcube.
HypercubeDamage codim2_damage(int m);

// Coordinates on which two damaged vertices at Hamming distance <= 2
// differ.  Sorted ascending; size is at most 2m-2 for m >= 1.
std::vector<int> bad_coordinates(const HypercubeDamage& damage);

// Contracts all edges along the given axis.  Requires the axis to not be a
// bad coordinate; the error message names a violating damaged pair.  The
// result is a (d-1)-dimensional hypercube minor of depth at most 1 whose
// branch sets are the edge pairs minus their damaged members.
MinorModel contract_coordinate(const HypercubeDamage& damage, int axis);

// Vertex count find_minor promises for (d, m).
std::uint64_t minor_guarantee(int d, std::uint64_t m);

// Depth-1 hypercube minor: contracts a non-bad coordinate of the whole cube
// when one exists, otherwise partitions into aligned subcubes, picks a
// lightly damaged one and contracts a non-bad coordinate inside it.  Throws
// EmptyResultError when the guarantee is below one vertex.
MinorModel find_minor(const HypercubeDamage& damage);

// Theorem-shaped target for random_blocking_damage with all constants one,
// in vertices.
std::uint64_t default_blocking_target(int d, int m);

struct BlockingSearchResult {
    bool success = false;
    int attempts = 0;
    std::uint64_t target_size = 0;
    // Size in vertices of the largest damage-free subcube of `damage`
    // (oracle-verified).  On failure `damage` is the best set found.
    std::uint64_t achieved_size = 0;
    HypercubeDamage damage;
};

// Samples m-vertex damage sets uniformly (seeded, reproducible) until the
// oracle certifies that every damage-free subcube has fewer than
// target_size vertices.  Exhausting max_attempts is a legal outcome and is
// reported via success = false with the best set found.
BlockingSearchResult random_blocking_damage(int d, int m,
                                            std::optional<std::uint64_t> target_size,
                                            int max_attempts, std::uint64_t seed);

}  // namespace gridsalvage::hypercube
