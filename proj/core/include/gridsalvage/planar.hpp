#pragma once

#include <optional>

#include "gridsalvage/certificates.hpp"
#include "gridsalvage/grid.hpp"

// Two-dimensional constructions: extraction of undamaged subgrids, grid
// minors and shallow minors from damaged square grids, the damage patterns
// that block larger structures, and path-decomposition builders.
namespace gridsalvage::planar {

// Concrete guarantees for an n x n grid with m damaged vertices.
//   subgraph_side: floor(n / ceil(sqrt(m+1)))
//   minor_side:    value find_grid_minor always achieves
//   shallow_side:  value find_shallow_minor achieves for the given depth
//                  (equals minor_side when no depth is supplied)
BoundReport bounds(int n, int m, std::optional<int> lambda = std::nullopt);

// Side guaranteed by find_grid_minor, as a deterministic function of (n, m).
int minor_side_guarantee(int n, int m);

// Largest minor side the diagonal-residue adversary cannot rule out with a
// budget of m vertices: ceil(n^2/(2m) - 1/2).  Meaningful for m > n/2.
int diagonal_blocking_side(int n, int m);

// Side guaranteed by find_shallow_minor.
int shallow_side_guarantee(int n, int m, int lambda);

// Largest undamaged axis-aligned subgrid the partition argument certifies:
// at least floor(n / ceil(sqrt(m+1))) on a side.  Returns the first
// undamaged partition cell in row-major cell order; falls back to a 1x1
// region when the partition is degenerate.  Throws EmptyResultError only
// when every vertex is damaged.
SubgridRegion find_undamaged_subgrid(const DamageSet& damage);

// Minor from the rows and columns of `region` that are clear of damage:
// with m' damaged vertices inside a side-s region this yields side >= s-m'.
// Branch sets are crosses around each chosen row/column intersection, arms
// split at midpoints with the middle vertex of an odd gap going to the
// lower-index branch.  Throws NoGuaranteeError when m' >= s.
MinorModel rows_cols_minor(const SubgridRegion& region, const DamageSet& damage);

// Grid minor of side at least minor_side_guarantee(n, m): whole-grid rows
// and columns when m < n, otherwise the least damaged cell of a partition
// into t^2 subgrids, t = floor(2m/n).
MinorModel find_grid_minor(const DamageSet& damage);

// Minor built from k vertex-disjoint horizontal paths (column 0 to column
// n-1) and k vertex-disjoint vertical paths (row 0 to row n-1), each
// horizontal-vertical pair intersecting in a connected segment.  Branch
// (i, j) is the intersection of h_paths[i] and v_paths[j] plus the
// half-segments toward the neighboring intersections, split at path-length
// midpoints.  Precondition violations name the offending path or pair.
MinorModel realize_minor_from_paths(const std::vector<std::vector<Coord>>& h_paths,
                                    const std::vector<std::vector<Coord>>& v_paths,
                                    const DamageSet& damage);

// Shallow minor of depth at most lambda and side at least
// shallow_side_guarantee(n, m, lambda).
MinorModel find_shallow_minor(const DamageSet& damage, int lambda);

// Damage on all vertices whose coordinates are both congruent to -1 modulo
// k+1: floor(n/(k+1))^2 vertices leaving no undamaged subgrid of side > k.
DamageSet lattice_damage(int n, int k);

// The m vertices (i, i) for i < m, extending diagonally from the corner.
// Requires m <= floor(n/2); the remaining graph has pathwidth <= n-m.
DamageSet corner_diagonal_damage(int n, int m);

// Width <= n-m path decomposition of the grid minus corner_diagonal_damage:
// center vertex in all bags when n is odd, the undamaged diagonal vertices
// between corner and center in all bags, everything else introduced in
// radial angular order around the center starting clockwise of the damaged
// diagonal (ties by distance from center, then lexicographic).  Requires
// 1 <= m <= floor(n/2).
PathDecomposition corner_diagonal_decomposition(int n, int m);

// Column-sweep decomposition of the undamaged n x n grid, width n.
PathDecomposition grid_path_decomposition(int n);

// Damages every vertex on the diagonals (numbered i+j+1) congruent to r
// modulo 2k+1, with r chosen by exhaustive scan to minimize the damage
// (ties: smallest r).  At most ceil(n^2/(2k+1)) vertices; every remaining
// component spans at most 2k contiguous diagonals and has pathwidth <= k,
// so no (k+1) x (k+1) minor survives.
DamageSet diagonal_residue_damage(int n, int k);

// Witness for the diagonal adversary: per remaining component, vertices
// ordered by i-j.  Validates with width <= k.
PathDecomposition diagonal_residue_decomposition(int n, int k);

// floor(m/(2*lambda+1)) diagonal segments of 2*lambda+1 vertices each,
// centers placed row-major on an evenly spaced square sublattice and
// clamped so every segment fits; at most m vertices in total.
DamageSet shallow_segments_damage(int n, int m, int lambda);

}  // namespace gridsalvage::planar
