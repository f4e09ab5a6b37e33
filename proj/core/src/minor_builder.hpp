#pragma once

#include "gridsalvage/certificates.hpp"
#include "gridsalvage/grid.hpp"

namespace gridsalvage::detail {

// Minor from the undamaged axis-parallel hyperplanes of `region` (rows and
// columns when d == 2).  Chooses, per axis, the first k' coordinate values
// whose hyperplane within the region is damage-free, where k' is the
// smallest such count over the axes; the branch set of minor vertex a is
// the intersection point of its chosen values plus, along each axis, the
// run of cells to the midpoints toward the neighboring chosen values.  The
// middle cell of an odd run goes to the lower-index branch.
//
// Requires m' < s where m' is the damage inside the region and s its side;
// throws NoGuaranteeError otherwise.  The resulting side is at least s-m'.
MinorModel hyperplane_star_minor(const SubgridRegion& region, const DamageSet& damage);

// First vertex of the grid, in lexicographic coordinate order, that is not
// damaged; wrapped as a side-1 minor model.  Throws EmptyResultError when
// every vertex is damaged.
MinorModel single_vertex_minor(const DamageSet& damage);

// Partition the grid into cells of side `cell_side` (leftover rows dropped)
// and return the region of the cell with the fewest damaged vertices, ties
// broken by lexicographic cell index.
SubgridRegion least_damaged_cell(const DamageSet& damage, int cell_side);

}  // namespace gridsalvage::detail
