#include "minor_builder.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gridsalvage::detail {

namespace {

// Enumerate all index tuples in [0, k)^d in lexicographic order.
bool next_tuple(std::vector<int>& idx, int k) {
    for (int a = static_cast<int>(idx.size()) - 1; a >= 0; --a) {
        if (++idx[static_cast<std::size_t>(a)] < k) return true;
        idx[static_cast<std::size_t>(a)] = 0;
    }
    return false;
}

}  // namespace

MinorModel hyperplane_star_minor(const SubgridRegion& region, const DamageSet& damage) {
    const GridSpec& spec = damage.spec();
    require_region_in_grid(spec, region);
    const int d = spec.dim();
    const int s = region.side;

    // Per axis, which coordinate values (region-relative) carry damage.
    std::vector<std::set<int>> damaged_values(static_cast<std::size_t>(d));
    int damage_inside = 0;
    for (const Coord& v : damage.vertices()) {
        if (!region.contains(v)) continue;
        ++damage_inside;
        for (int a = 0; a < d; ++a) {
            damaged_values[static_cast<std::size_t>(a)].insert(v[a] - region.origin[a]);
        }
    }
    if (damage_inside >= s) {
        throw NoGuaranteeError("region of side " + std::to_string(s) + " holds " +
                               std::to_string(damage_inside) +
                               " damaged vertices; the hyperplane argument needs fewer than the side");
    }

    // First k' undamaged values per axis, k' = min over axes.
    std::vector<std::vector<int>> chosen(static_cast<std::size_t>(d));
    int k = s;
    for (int a = 0; a < d; ++a) {
        auto& vals = chosen[static_cast<std::size_t>(a)];
        for (int x = 0; x < s; ++x) {
            if (!damaged_values[static_cast<std::size_t>(a)].count(x)) vals.push_back(x);
        }
        k = std::min(k, static_cast<int>(vals.size()));
    }
    for (auto& vals : chosen) vals.resize(static_cast<std::size_t>(k));

    MinorModel model;
    model.host = spec;
    model.minor = GridSpec(d, k);
    model.branches.reserve(static_cast<std::size_t>(model.minor.vertex_count()));

    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    do {
        BranchSet branch;
        branch.minor_vertex.assign(idx.begin(), idx.end());

        Coord center(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a) {
            center[a] = region.origin[a] + chosen[static_cast<std::size_t>(a)][static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
        }
        branch.hosts.push_back(center);

        for (int a = 0; a < d; ++a) {
            const auto& vals = chosen[static_cast<std::size_t>(a)];
            const int i = idx[static_cast<std::size_t>(a)];
            if (i > 0) {
                // arm toward the previous chosen value; this branch is the
                // upper side of the gap and takes floor((g-1)/2) cells
                const int gap = vals[static_cast<std::size_t>(i)] - vals[static_cast<std::size_t>(i - 1)];
                for (int off = 1; off <= (gap - 1) / 2; ++off) {
                    Coord h = center;
                    h[a] -= off;
                    branch.hosts.push_back(std::move(h));
                }
            }
            if (i + 1 < k) {
                // arm toward the next chosen value; lower side takes the
                // middle cell of an odd run, i.e. floor(g/2) cells
                const int gap = vals[static_cast<std::size_t>(i + 1)] - vals[static_cast<std::size_t>(i)];
                for (int off = 1; off <= gap / 2; ++off) {
                    Coord h = center;
                    h[a] += off;
                    branch.hosts.push_back(std::move(h));
                }
            }
        }
        std::sort(branch.hosts.begin(), branch.hosts.end());
        model.branches.push_back(std::move(branch));
    } while (next_tuple(idx, k));

    compute_depth(model, damage);
    return model;
}

MinorModel single_vertex_minor(const DamageSet& damage) {
    const GridSpec& spec = damage.spec();
    // The damaged list is sorted lexicographically, so scan coordinates in
    // the same order until a gap appears.
    Coord probe(static_cast<std::size_t>(spec.dim()), 0);
    auto advance = [&](Coord& v) {
        for (int a = spec.dim() - 1; a >= 0; --a) {
            if (++v[static_cast<std::size_t>(a)] < spec.side()) return true;
            v[static_cast<std::size_t>(a)] = 0;
        }
        return false;
    };
    do {
        if (!damage.contains(probe)) {
            MinorModel model;
            model.host = spec;
            model.minor = GridSpec(spec.dim(), 1);
            BranchSet branch;
            branch.minor_vertex.assign(static_cast<std::size_t>(spec.dim()), 0);
            branch.hosts.push_back(probe);
            model.branches.push_back(std::move(branch));
            model.depth = 0;
            return model;
        }
    } while (advance(probe));
    throw EmptyResultError("every vertex of the grid is damaged");
}

SubgridRegion least_damaged_cell(const DamageSet& damage, int cell_side) {
    const GridSpec& spec = damage.spec();
    if (cell_side < 1 || cell_side > spec.side()) {
        throw InvalidInputError("cell side must lie in [1, n]");
    }
    const int d = spec.dim();
    const int cells_per_axis = spec.side() / cell_side;

    // One damage counter per cell, keyed by the lexicographic cell index.
    std::map<std::vector<int>, int> counts;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    do {
        counts.emplace(idx, 0);
    } while (next_tuple(idx, cells_per_axis));

    std::vector<int> cell(static_cast<std::size_t>(d));
    for (const Coord& v : damage.vertices()) {
        bool inside = true;
        for (int a = 0; a < d; ++a) {
            cell[static_cast<std::size_t>(a)] = v[a] / cell_side;
            if (cell[static_cast<std::size_t>(a)] >= cells_per_axis) {
                inside = false;  // leftover strip, not part of any cell
                break;
            }
        }
        if (inside) ++counts[cell];
    }

    const auto best = std::min_element(
        counts.begin(), counts.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });  // ties: first key

    SubgridRegion region;
    region.side = cell_side;
    region.origin.resize(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        region.origin[a] = best->first[static_cast<std::size_t>(a)] * cell_side;
    }
    return region;
}

}  // namespace gridsalvage::detail
