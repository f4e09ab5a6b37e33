#include "gridsalvage/highdim.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gridsalvage/planar.hpp"
#include "int_math.hpp"
#include "minor_builder.hpp"

namespace gridsalvage::highdim {

namespace {

using detail::cdiv_u64;
using detail::ceil_root;
using detail::floor_root;
using detail::ipow_sat;

void require_dim(int d, const char* op) {
    if (d < 2) throw InvalidInputError(std::string(op) + " requires dimension at least 2");
}

void check_grid_args(int d, int n, int m) {
    GridSpec(d, n);  // validates d, n and the vertex count
    if (m < 0) throw InvalidInputError("damage count must be non-negative");
}

// Cell side for the heavy-damage minor regime: floor((n^d/(2m))^(1/(d-1))),
// clamped into [1, n].
int minor_cell_side(int d, int n, std::uint64_t m) {
    const std::uint64_t total = ipow_sat(static_cast<std::uint64_t>(n), d);
    std::uint64_t s = floor_root(total / (2 * m), d - 1);
    if (s < 1) s = 1;
    if (s > static_cast<std::uint64_t>(n)) s = static_cast<std::uint64_t>(n);
    return static_cast<int>(s);
}

int cell_guarantee(int d, int n, std::uint64_t m, int cell_side) {
    const auto cells_per_axis = static_cast<std::uint64_t>(n / cell_side);
    const std::uint64_t worst = m / ipow_sat(cells_per_axis, d);
    if (worst >= static_cast<std::uint64_t>(cell_side)) return 0;
    return cell_side - static_cast<int>(worst);
}

enum class ShallowCase { trivial, whole_grid, light_partition, capped_partition };

ShallowCase classify_shallow(int d, int n, std::uint64_t m, int lambda) {
    if (2 * static_cast<std::uint64_t>(lambda) >=
        static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(n)) {
        return ShallowCase::trivial;
    }
    if (2 * m <= static_cast<std::uint64_t>(n) &&
        m <= 2 * static_cast<std::uint64_t>(lambda) - 1) {
        return ShallowCase::whole_grid;
    }
    // light regime when m * (16 lambda)^(d-1) <= n^d; reduces to the planar
    // rule lambda <= n^2/(16m) at d == 2
    unsigned __int128 lhs = m;
    for (int i = 0; i < d - 1; ++i) lhs *= static_cast<unsigned __int128>(16) * lambda;
    unsigned __int128 rhs = 1;
    for (int i = 0; i < d; ++i) rhs *= static_cast<unsigned __int128>(n);
    return lhs <= rhs ? ShallowCase::light_partition : ShallowCase::capped_partition;
}

// Smallest t with t^d (2l-1) >= m + 2l - 1, so the least damaged of the t^d
// cells holds at most 2l-2 damaged vertices.
int light_partition_t(int d, int n, std::uint64_t m, int lambda) {
    const std::uint64_t per_cell = 2 * static_cast<std::uint64_t>(lambda) - 1;
    std::uint64_t t = ceil_root(cdiv_u64(m + per_cell, per_cell), d);
    if (t < 1) t = 1;
    if (t > static_cast<std::uint64_t>(n)) t = static_cast<std::uint64_t>(n);
    return static_cast<int>(t);
}

int capped_cell_side(int d, int n, std::uint64_t m, int lambda) {
    const int base = m < static_cast<std::uint64_t>(n) ? n : minor_cell_side(d, n, m);
    return std::min(base, 2 * lambda + 1);
}

MinorModel cell_minor_or_fallback(const DamageSet& damage, int cell_side) {
    try {
        return hyperplane_minor(detail::least_damaged_cell(damage, cell_side), damage);
    } catch (const NoGuaranteeError&) {
        return detail::single_vertex_minor(damage);
    }
}

}  // namespace

int subgraph_side_guarantee(int d, int n, int m) {
    check_grid_args(d, n, m);
    const std::uint64_t q = ceil_root(static_cast<std::uint64_t>(m) + 1, d);
    if (q > static_cast<std::uint64_t>(n)) return 0;
    return n / static_cast<int>(q);
}

int minor_side_guarantee(int d, int n, int m) {
    check_grid_args(d, n, m);
    if (d == 2) return planar::minor_side_guarantee(n, m);
    const auto mm = static_cast<std::uint64_t>(m);
    if (mm < static_cast<std::uint64_t>(n)) return n - m;
    return cell_guarantee(d, n, mm, minor_cell_side(d, n, mm));
}

int shallow_side_guarantee(int d, int n, int m, int lambda) {
    check_grid_args(d, n, m);
    if (lambda < 1) throw InvalidInputError("depth bound must be at least 1");
    if (d == 2) return planar::shallow_side_guarantee(n, m, lambda);
    const auto mm = static_cast<std::uint64_t>(m);
    switch (classify_shallow(d, n, mm, lambda)) {
        case ShallowCase::trivial:
            return minor_side_guarantee(d, n, m);
        case ShallowCase::whole_grid:
            return n - m;
        case ShallowCase::light_partition: {
            const int t = light_partition_t(d, n, mm, lambda);
            return cell_guarantee(d, n, mm, n / t);
        }
        case ShallowCase::capped_partition:
            return cell_guarantee(d, n, mm, capped_cell_side(d, n, mm, lambda));
    }
    return 0;
}

BoundReport bounds(int d, int n, int m, std::optional<int> lambda) {
    check_grid_args(d, n, m);
    if (d == 2) return planar::bounds(n, m, lambda);
    if (lambda && *lambda < 1) throw InvalidInputError("depth bound must be at least 1");

    BoundReport report;
    report.subgraph_side = subgraph_side_guarantee(d, n, m);
    report.minor_side = minor_side_guarantee(d, n, m);
    report.formulas_used.push_back("subgraph: floor(n / ceil((m+1)^(1/d)))");
    if (m < n) {
        report.formulas_used.push_back("minor: undamaged axis-parallel hyperplanes, side n - m");
    } else {
        report.formulas_used.push_back(
            "minor: least damaged cell of side floor((n^d/(2m))^(1/(d-1)))");
    }
    if (lambda) {
        report.shallow_side = shallow_side_guarantee(d, n, m, *lambda);
        report.formulas_used.push_back(
            "shallow: three-regime split, light regime when m*(16*depth)^(d-1) <= n^d");
    } else {
        report.shallow_side = report.minor_side;
        report.formulas_used.push_back("shallow: no depth bound given, equals minor_side");
    }
    return report;
}

SubgridRegion find_subgrid(const DamageSet& damage) {
    require_dim(damage.spec().dim(), "find_subgrid");
    if (damage.spec().dim() == 2) return planar::find_undamaged_subgrid(damage);

    const GridSpec& spec = damage.spec();
    const int d = spec.dim();
    const int n = spec.side();
    const std::uint64_t q64 = ceil_root(damage.size() + 1, d);

    if (q64 <= static_cast<std::uint64_t>(n)) {
        const int q = static_cast<int>(q64);
        const int k = n / q;
        std::set<std::vector<int>> damaged_cells;
        std::vector<int> cell(static_cast<std::size_t>(d));
        for (const Coord& v : damage.vertices()) {
            bool inside = true;
            for (int a = 0; a < d; ++a) {
                cell[static_cast<std::size_t>(a)] = v[a] / k;
                if (cell[static_cast<std::size_t>(a)] >= q) {
                    inside = false;
                    break;
                }
            }
            if (inside) damaged_cells.insert(cell);
        }
        // first cell (lexicographic) that carries no damage
        std::vector<int> idx(static_cast<std::size_t>(d), 0);
        while (true) {
            if (!damaged_cells.count(idx)) {
                Coord origin(static_cast<std::size_t>(d));
                for (int a = 0; a < d; ++a) origin[a] = idx[static_cast<std::size_t>(a)] * k;
                return SubgridRegion{origin, k};
            }
            int a = d - 1;
            while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == q) {
                idx[static_cast<std::size_t>(a)] = 0;
                --a;
            }
            if (a < 0) break;
        }
        throw Error("internal: a partition into more than m cells had no undamaged cell");
    }

    const MinorModel fallback = detail::single_vertex_minor(damage);
    return SubgridRegion{fallback.branches.front().hosts.front(), 1};
}

MinorModel hyperplane_minor(const SubgridRegion& region, const DamageSet& damage) {
    require_dim(damage.spec().dim(), "hyperplane_minor");
    if (damage.spec().dim() == 2) return planar::rows_cols_minor(region, damage);
    return detail::hyperplane_star_minor(region, damage);
}

MinorModel find_minor(const DamageSet& damage) {
    require_dim(damage.spec().dim(), "find_minor");
    if (damage.spec().dim() == 2) return planar::find_grid_minor(damage);

    const GridSpec& spec = damage.spec();
    const std::uint64_t m = damage.size();
    if (m < static_cast<std::uint64_t>(spec.side())) {
        return hyperplane_minor(whole_grid_region(spec), damage);
    }
    return cell_minor_or_fallback(damage, minor_cell_side(spec.dim(), spec.side(), m));
}

MinorModel find_shallow_minor(const DamageSet& damage, int lambda) {
    require_dim(damage.spec().dim(), "find_shallow_minor");
    if (lambda < 1) throw InvalidInputError("depth bound must be at least 1");
    if (damage.spec().dim() == 2) return planar::find_shallow_minor(damage, lambda);

    const GridSpec& spec = damage.spec();
    const int d = spec.dim();
    const int n = spec.side();
    const std::uint64_t m = damage.size();

    switch (classify_shallow(d, n, m, lambda)) {
        case ShallowCase::trivial:
            return find_minor(damage);
        case ShallowCase::whole_grid:
            return hyperplane_minor(whole_grid_region(spec), damage);
        case ShallowCase::light_partition:
            return cell_minor_or_fallback(damage, n / light_partition_t(d, n, m, lambda));
        case ShallowCase::capped_partition:
            return cell_minor_or_fallback(damage, capped_cell_side(d, n, m, lambda));
    }
    throw Error("internal: unreachable shallow case");
}

DamageSet lattice_damage(int d, int n, int k) {
    check_grid_args(d, n, 0);
    if (k < 1 || k >= n) throw InvalidInputError("lattice damage needs 1 <= k < n");
    const GridSpec spec(d, n);
    std::vector<Coord> damaged;
    Coord v(static_cast<std::size_t>(d), k);
    while (true) {
        damaged.push_back(v);
        int a = d - 1;
        while (a >= 0) {
            v[static_cast<std::size_t>(a)] += k + 1;
            if (v[static_cast<std::size_t>(a)] < n) break;
            v[static_cast<std::size_t>(a)] = k;
            --a;
        }
        if (a < 0) break;
    }
    return DamageSet(spec, std::move(damaged));
}

std::vector<int> hyperplane_positions(int n, int count) {
    std::vector<int> positions;
    positions.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        positions.push_back(static_cast<int>(cdiv_u64(
                                static_cast<std::uint64_t>(i + 1) * static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(count) + 1)) -
                            1);
    }
    return positions;
}

DamageSet hyperplane_damage(int d, int n, int m) {
    check_grid_args(d, n, m);
    const std::uint64_t slice = ipow_sat(static_cast<std::uint64_t>(n), d - 1);
    if (static_cast<std::uint64_t>(m) < slice) {
        throw InvalidInputError("budget m below one full hyperplane of n^(d-1) vertices");
    }
    const int h = static_cast<int>(static_cast<std::uint64_t>(m) / slice);
    const std::vector<int> positions = hyperplane_positions(n, h);

    const GridSpec spec(d, n);
    std::vector<Coord> damaged;
    for (int x : positions) {
        // the whole hyperplane axis0 == x
        Coord v(static_cast<std::size_t>(d), 0);
        v[0] = x;
        while (true) {
            damaged.push_back(v);
            int a = d - 1;
            while (a >= 1) {
                if (++v[static_cast<std::size_t>(a)] < n) break;
                v[static_cast<std::size_t>(a)] = 0;
                --a;
            }
            if (a < 1) break;
        }
    }
    return DamageSet(spec, std::move(damaged));
}

}  // namespace gridsalvage::highdim
