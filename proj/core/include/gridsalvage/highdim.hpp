#pragma once

#include <optional>

#include "gridsalvage/certificates.hpp"
#include "gridsalvage/grid.hpp"

// d-dimensional generalizations (d >= 3) of the planar constructions.  All
// public operations delegate to the planar module when d == 2 so that each
// construction has a single code path.
namespace gridsalvage::highdim {

BoundReport bounds(int d, int n, int m, std::optional<int> lambda = std::nullopt);

int subgraph_side_guarantee(int d, int n, int m);
int minor_side_guarantee(int d, int n, int m);
int shallow_side_guarantee(int d, int n, int m, int lambda);

// Undamaged cubical subgrid of side at least floor(n / ceil((m+1)^(1/d))):
// first undamaged cell in lexicographic cell order, 1x..x1 fallback.
SubgridRegion find_subgrid(const DamageSet& damage);

// Minor from the intersection pattern of the region's undamaged
// (d-1)-dimensional axis-parallel hyperplanes; side >= s - m'.  Branch sets
// are stars around each intersection point, so every branch vertex has at
// least d-1 coordinates on undamaged hyperplanes and is itself undamaged.
// Throws NoGuaranteeError when m' >= s.
MinorModel hyperplane_minor(const SubgridRegion& region, const DamageSet& damage);

// Cubical grid minor of side at least minor_side_guarantee: whole-grid
// hyperplanes when m < n, otherwise the least damaged cell of a partition
// into cells of side floor((n^d/(2m))^(1/(d-1))).
MinorModel find_minor(const DamageSet& damage);

// Shallow cubical minor of depth at most lambda, side at least
// shallow_side_guarantee.
MinorModel find_shallow_minor(const DamageSet& damage, int lambda);

// Damage on all vertices whose coordinates are all congruent to -1 modulo
// k+1: floor(n/(k+1))^d vertices, largest undamaged subgrid side exactly k.
DamageSet lattice_damage(int d, int n, int k);

// floor(m / n^(d-1)) full hyperplanes orthogonal to axis 0, evenly spaced;
// the remaining components are slabs of thickness at most ceil(n/(h+1)),
// which caps the side of any surviving cubical grid minor.  Requires
// m >= n^(d-1).
DamageSet hyperplane_damage(int d, int n, int m);

// Positions along axis 0 used by hyperplane_damage.
std::vector<int> hyperplane_positions(int n, int count);

}  // namespace gridsalvage::highdim
