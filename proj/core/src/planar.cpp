#include "gridsalvage/planar.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "int_math.hpp"
#include "minor_builder.hpp"

namespace gridsalvage::planar {

namespace {

using detail::cdiv_u64;
using detail::ceil_sqrt;

void require_planar(const DamageSet& damage, const char* op) {
    if (damage.spec().dim() != 2) {
        throw InvalidInputError(std::string(op) + " requires a two-dimensional grid");
    }
}

int subgraph_side(int n, std::uint64_t m) {
    const std::uint64_t q = ceil_sqrt(m + 1);
    if (q > static_cast<std::uint64_t>(n)) return 0;
    return n / static_cast<int>(q);
}

// Partition parameter for the heavy-damage minor regime (m >= n).
int minor_partition_t(int n, std::uint64_t m) {
    std::uint64_t t = 2 * m / static_cast<std::uint64_t>(n);
    if (t > static_cast<std::uint64_t>(n)) t = static_cast<std::uint64_t>(n);
    if (t < 1) t = 1;
    return static_cast<int>(t);
}

int cell_guarantee(int n, std::uint64_t m, int t) {
    const int s = n / t;
    const std::uint64_t worst = m / (static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t));
    if (worst >= static_cast<std::uint64_t>(s)) return 0;
    return s - static_cast<int>(worst);
}

enum class ShallowCase { trivial, whole_grid, light_partition, capped_partition };

ShallowCase classify_shallow(int n, std::uint64_t m, int lambda) {
    if (2 * static_cast<std::uint64_t>(lambda) >= static_cast<std::uint64_t>(n)) {
        return ShallowCase::trivial;  // every minor this construction emits is shallow
    }
    if (2 * m <= static_cast<std::uint64_t>(n) &&
        m <= 2 * static_cast<std::uint64_t>(lambda) - 1) {
        return ShallowCase::whole_grid;
    }
    const unsigned __int128 lhs =
        static_cast<unsigned __int128>(16) * static_cast<unsigned __int128>(lambda) * m;
    const unsigned __int128 rhs =
        static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(n);
    return lhs <= rhs ? ShallowCase::light_partition : ShallowCase::capped_partition;
}

// Cell count per axis ensuring each least-damaged cell has at most
// 2*lambda-1 damaged vertices: smallest t with t^2 (2l-1) >= m + 2l - 1.
int light_partition_t(int n, std::uint64_t m, int lambda) {
    const std::uint64_t per_cell = 2 * static_cast<std::uint64_t>(lambda) - 1;
    std::uint64_t t = ceil_sqrt(cdiv_u64(m + per_cell, per_cell));
    if (t < 1) t = 1;
    if (t > static_cast<std::uint64_t>(n)) t = static_cast<std::uint64_t>(n);
    return static_cast<int>(t);
}

int capped_partition_t(int n, std::uint64_t m, int lambda) {
    const int t_minor = m < static_cast<std::uint64_t>(n) ? 1 : minor_partition_t(n, m);
    const int t_cap = static_cast<int>(cdiv_u64(static_cast<std::uint64_t>(n),
                                                2 * static_cast<std::uint64_t>(lambda) + 1));
    return std::min(std::max(t_minor, t_cap), n);
}

MinorModel cell_minor_or_fallback(const DamageSet& damage, int t) {
    const int s = damage.spec().side() / t;
    try {
        return rows_cols_minor(detail::least_damaged_cell(damage, s), damage);
    } catch (const NoGuaranteeError&) {
        // only reachable when the guarantee is zero; degrade to a single vertex
        return detail::single_vertex_minor(damage);
    }
}

// Turns an introduction order into bags: bag t holds the universal
// vertices plus every ordered vertex already introduced that still has a
// neighbor at position >= t.
PathDecomposition decomposition_from_order(
    const std::vector<Coord>& universal, const std::vector<Coord>& order,
    const std::function<std::vector<Coord>(const Coord&)>& graph_neighbors) {
    PathDecomposition pd;
    if (order.empty()) {
        if (!universal.empty()) pd.bags.push_back(universal);
        return pd;
    }

    std::map<Coord, int> position;
    for (std::size_t t = 0; t < order.size(); ++t) {
        position.emplace(order[t], static_cast<int>(t));
    }

    std::vector<int> last_needed(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) {
        int last = static_cast<int>(t);
        for (const Coord& u : graph_neighbors(order[t])) {
            auto it = position.find(u);
            if (it != position.end()) last = std::max(last, it->second);
        }
        last_needed[t] = last;
    }

    std::vector<int> alive;
    for (std::size_t t = 0; t < order.size(); ++t) {
        alive.push_back(static_cast<int>(t));
        std::vector<Coord> bag = universal;
        std::vector<int> still;
        for (int s : alive) {
            if (last_needed[static_cast<std::size_t>(s)] >= static_cast<int>(t)) {
                bag.push_back(order[static_cast<std::size_t>(s)]);
                still.push_back(s);
            }
        }
        alive = std::move(still);
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

std::function<std::vector<Coord>(const Coord&)> damaged_grid_neighbors(const DamageSet& damage) {
    return [&damage](const Coord& v) {
        std::vector<Coord> result;
        for (Coord& u : neighbors(damage.spec(), v)) {
            if (!damage.contains(u)) result.push_back(std::move(u));
        }
        return result;
    };
}

// --- radial order for the corner-diagonal decomposition ------------------

struct DoubledVec {
    long long x;
    long long y;
};

long long cross(const DoubledVec& a, const DoubledVec& b) { return a.x * b.y - a.y * b.x; }

// Angular class measured clockwise from the damaged-diagonal direction
// (-1,-1): 0 = strictly clockwise half, 1 = opposite ray, 2 = strictly
// counterclockwise half, 3 = on the damaged ray itself.
int angular_class(const DoubledVec& u) {
    const long long c = u.x - u.y;       // cross((-1,-1), u)
    const long long dot = -u.x - u.y;    // dot((-1,-1), u)
    if (c < 0) return 0;
    if (c > 0) return 2;
    return dot < 0 ? 1 : 3;
}

bool radial_before(const Coord& a, const Coord& b, int n) {
    const DoubledVec ua{2LL * a[0] - (n - 1), 2LL * a[1] - (n - 1)};
    const DoubledVec ub{2LL * b[0] - (n - 1), 2LL * b[1] - (n - 1)};
    const int ca = angular_class(ua);
    const int cb = angular_class(ub);
    if (ca != cb) return ca < cb;
    if (ca == 0 || ca == 2) {
        const long long x = cross(ua, ub);
        if (x != 0) return x < 0;  // b lies clockwise of a, so a comes first
    }
    const long long da = ua.x * ua.x + ua.y * ua.y;
    const long long db = ub.x * ub.x + ub.y * ub.y;
    if (da != db) return da < db;
    return a < b;
}

// --- path handling for realize_minor_from_paths --------------------------

struct PathFamily {
    std::vector<std::vector<Coord>> paths;
    std::unordered_map<std::uint64_t, std::pair<int, int>> where;  // id -> (path, position)
};

std::string path_name(bool horizontal, int index) {
    return (horizontal ? std::string("horizontal") : std::string("vertical")) + " path " +
           std::to_string(index);
}

PathFamily check_path_family(std::vector<std::vector<Coord>> paths, const DamageSet& damage,
                             bool horizontal) {
    const GridSpec& spec = damage.spec();
    const int n = spec.side();
    const int endpoint_axis = horizontal ? 1 : 0;

    PathFamily family;
    for (std::size_t p = 0; p < paths.size(); ++p) {
        auto& path = paths[p];
        const std::string name = path_name(horizontal, static_cast<int>(p));
        if (path.empty()) throw InvalidInputError(name + " is empty");
        for (const Coord& v : path) {
            if (!spec.contains(v)) throw InvalidInputError(name + " leaves the grid");
            if (damage.contains(v)) {
                throw InvalidInputError(name + " visits the damaged vertex (" +
                                        std::to_string(v[0]) + "," + std::to_string(v[1]) + ")");
            }
        }
        if (path.back()[endpoint_axis] == 0 && path.front()[endpoint_axis] == n - 1) {
            std::reverse(path.begin(), path.end());
        }
        if (path.front()[endpoint_axis] != 0 || path.back()[endpoint_axis] != n - 1) {
            throw InvalidInputError(name + " does not cross the grid from side to side");
        }
        for (std::size_t i = 1; i < path.size(); ++i) {
            const int dist = std::abs(path[i][0] - path[i - 1][0]) +
                             std::abs(path[i][1] - path[i - 1][1]);
            if (dist != 1) throw InvalidInputError(name + " is not a path of grid edges");
        }
    }
    for (std::size_t p = 0; p < paths.size(); ++p) {
        for (std::size_t i = 0; i < paths[p].size(); ++i) {
            const auto id = spec.encode(paths[p][i]);
            auto [it, fresh] =
                family.where.emplace(id, std::make_pair(static_cast<int>(p), static_cast<int>(i)));
            if (!fresh) {
                throw InvalidInputError(path_name(horizontal, static_cast<int>(p)) + " and " +
                                        path_name(horizontal, it->second.first) +
                                        " are not vertex-disjoint");
            }
        }
    }
    family.paths = std::move(paths);
    return family;
}

struct Run {
    int begin = -1;  // first position of the partner's vertices along this path
    int end = -1;    // last position (inclusive)
};

// Positions along each path of `a` occupied by each path of `b`; each
// occupied stretch must be one contiguous run.
std::vector<std::vector<Run>> intersection_runs(const PathFamily& a, const PathFamily& b,
                                                const GridSpec& spec, bool a_horizontal) {
    const int ka = static_cast<int>(a.paths.size());
    const int kb = static_cast<int>(b.paths.size());
    std::vector<std::vector<Run>> runs(static_cast<std::size_t>(ka),
                                       std::vector<Run>(static_cast<std::size_t>(kb)));
    for (int i = 0; i < ka; ++i) {
        const auto& path = a.paths[static_cast<std::size_t>(i)];
        int previous_partner = -1;
        for (std::size_t pos = 0; pos < path.size(); ++pos) {
            auto it = b.where.find(spec.encode(path[pos]));
            const int partner = it == b.where.end() ? -1 : it->second.first;
            if (partner >= 0) {
                Run& run = runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(partner)];
                if (run.begin < 0) {
                    run.begin = static_cast<int>(pos);
                    run.end = static_cast<int>(pos);
                } else if (run.end == static_cast<int>(pos) - 1 && previous_partner == partner) {
                    run.end = static_cast<int>(pos);
                } else {
                    throw InvalidInputError("intersection of " + path_name(a_horizontal, i) +
                                            " and " + path_name(!a_horizontal, partner) +
                                            " is not a connected segment");
                }
            }
            previous_partner = partner;
        }
        for (int j = 0; j < kb; ++j) {
            if (runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].begin < 0) {
                throw InvalidInputError(path_name(a_horizontal, i) + " and " +
                                        path_name(!a_horizontal, j) + " do not intersect");
            }
        }
    }
    return runs;
}

// Visiting order of partners along every path of `a` must be identical;
// returns that order.
std::vector<int> consistent_visit_order(const std::vector<std::vector<Run>>& runs,
                                        bool a_horizontal) {
    const int ka = static_cast<int>(runs.size());
    const int kb = static_cast<int>(runs[0].size());
    std::vector<int> order;
    for (int i = 0; i < ka; ++i) {
        std::vector<int> visit(static_cast<std::size_t>(kb));
        for (int j = 0; j < kb; ++j) visit[static_cast<std::size_t>(j)] = j;
        std::sort(visit.begin(), visit.end(), [&](int x, int y) {
            return runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)].begin <
                   runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)].begin;
        });
        if (i == 0) {
            order = visit;
        } else if (visit != order) {
            throw InvalidInputError(path_name(a_horizontal, i) +
                                    " crosses the other family in a different order than " +
                                    path_name(a_horizontal, 0));
        }
    }
    return order;
}

}  // namespace

int minor_side_guarantee(int n, int m) {
    if (n < 1 || m < 0) throw InvalidInputError("need n >= 1 and m >= 0");
    const auto mm = static_cast<std::uint64_t>(m);
    if (mm < static_cast<std::uint64_t>(n)) return n - m;
    return cell_guarantee(n, mm, minor_partition_t(n, mm));
}

int shallow_side_guarantee(int n, int m, int lambda) {
    if (n < 1 || m < 0) throw InvalidInputError("need n >= 1 and m >= 0");
    if (lambda < 1) throw InvalidInputError("depth bound must be at least 1");
    const auto mm = static_cast<std::uint64_t>(m);
    switch (classify_shallow(n, mm, lambda)) {
        case ShallowCase::trivial:
            return minor_side_guarantee(n, m);
        case ShallowCase::whole_grid:
            return n - m;
        case ShallowCase::light_partition:
            return cell_guarantee(n, mm, light_partition_t(n, mm, lambda));
        case ShallowCase::capped_partition:
            return cell_guarantee(n, mm, capped_partition_t(n, mm, lambda));
    }
    return 0;
}

BoundReport bounds(int n, int m, std::optional<int> lambda) {
    if (n < 1) throw InvalidInputError("side length must be at least 1");
    if (m < 0) throw InvalidInputError("damage count must be non-negative");
    if (lambda && *lambda < 1) throw InvalidInputError("depth bound must be at least 1");

    BoundReport report;
    report.subgraph_side = subgraph_side(n, static_cast<std::uint64_t>(m));
    report.minor_side = minor_side_guarantee(n, m);
    report.formulas_used.push_back("subgraph: floor(n / ceil(sqrt(m+1)))");
    if (m < n) {
        report.formulas_used.push_back("minor: undamaged rows and columns, side n - m");
    } else {
        report.formulas_used.push_back(
            "minor: least damaged cell of a t^2 partition, t = floor(2m/n), side floor(n/t) - floor(m/t^2)");
    }
    if (lambda) {
        report.shallow_side = shallow_side_guarantee(n, m, *lambda);
        switch (classify_shallow(n, static_cast<std::uint64_t>(m), *lambda)) {
            case ShallowCase::trivial:
                report.formulas_used.push_back("shallow: depth bound inactive (2*depth >= n)");
                break;
            case ShallowCase::whole_grid:
                report.formulas_used.push_back("shallow: whole-grid rows and columns (m <= min(n/2, 2*depth-1))");
                break;
            case ShallowCase::light_partition:
                report.formulas_used.push_back(
                    "shallow: partition into ceil(sqrt(m/(2*depth-1)+1))^2 cells (depth <= n^2/(16m))");
                break;
            case ShallowCase::capped_partition:
                report.formulas_used.push_back("shallow: minor partition with cell side capped at 2*depth+1");
                break;
        }
    } else {
        report.shallow_side = report.minor_side;
        report.formulas_used.push_back("shallow: no depth bound given, equals minor_side");
    }
    return report;
}

int diagonal_blocking_side(int n, int m) {
    if (n < 1 || m < 1) throw InvalidInputError("need n >= 1 and m >= 1");
    const auto nn = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const auto mm = static_cast<std::uint64_t>(m);
    if (nn <= mm) return 0;
    // ceil(n^2/(2m) - 1/2)
    return static_cast<int>(cdiv_u64(nn - mm, 2 * mm));
}

SubgridRegion find_undamaged_subgrid(const DamageSet& damage) {
    require_planar(damage, "find_undamaged_subgrid");
    const GridSpec& spec = damage.spec();
    const int n = spec.side();
    const std::uint64_t q64 = ceil_sqrt(damage.size() + 1);

    if (q64 <= static_cast<std::uint64_t>(n)) {
        const int q = static_cast<int>(q64);
        const int k = n / q;
        std::set<std::pair<int, int>> damaged_cells;
        for (const Coord& v : damage.vertices()) {
            const int a = v[0] / k;
            const int b = v[1] / k;
            if (a < q && b < q) damaged_cells.emplace(a, b);
        }
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                if (!damaged_cells.count({a, b})) {
                    return SubgridRegion{Coord{a * k, b * k}, k};
                }
            }
        }
        throw Error("internal: a partition into more than m cells had no undamaged cell");
    }

    // Degenerate regime (m + 1 > n^2): any undamaged vertex as a 1x1 region.
    const MinorModel fallback = detail::single_vertex_minor(damage);
    return SubgridRegion{fallback.branches.front().hosts.front(), 1};
}

MinorModel rows_cols_minor(const SubgridRegion& region, const DamageSet& damage) {
    require_planar(damage, "rows_cols_minor");
    return detail::hyperplane_star_minor(region, damage);
}

MinorModel find_grid_minor(const DamageSet& damage) {
    require_planar(damage, "find_grid_minor");
    const int n = damage.spec().side();
    const std::uint64_t m = damage.size();
    if (m < static_cast<std::uint64_t>(n)) {
        return rows_cols_minor(whole_grid_region(damage.spec()), damage);
    }
    return cell_minor_or_fallback(damage, minor_partition_t(n, m));
}

MinorModel find_shallow_minor(const DamageSet& damage, int lambda) {
    require_planar(damage, "find_shallow_minor");
    if (lambda < 1) throw InvalidInputError("depth bound must be at least 1");
    const int n = damage.spec().side();
    const std::uint64_t m = damage.size();

    switch (classify_shallow(n, m, lambda)) {
        case ShallowCase::trivial:
            return find_grid_minor(damage);
        case ShallowCase::whole_grid:
            return rows_cols_minor(whole_grid_region(damage.spec()), damage);
        case ShallowCase::light_partition:
            return cell_minor_or_fallback(damage, light_partition_t(n, m, lambda));
        case ShallowCase::capped_partition:
            return cell_minor_or_fallback(damage, capped_partition_t(n, m, lambda));
    }
    throw Error("internal: unreachable shallow case");
}

MinorModel realize_minor_from_paths(const std::vector<std::vector<Coord>>& h_paths,
                                    const std::vector<std::vector<Coord>>& v_paths,
                                    const DamageSet& damage) {
    require_planar(damage, "realize_minor_from_paths");
    const GridSpec& spec = damage.spec();
    if (h_paths.empty() || h_paths.size() != v_paths.size()) {
        throw InvalidInputError("need equally many (and at least one) horizontal and vertical paths");
    }
    const int k = static_cast<int>(h_paths.size());

    PathFamily h = check_path_family(h_paths, damage, true);
    PathFamily v = check_path_family(v_paths, damage, false);

    // Rank the families by their mutual visiting order so that minor vertex
    // (i, j) means "i-th horizontal crossing, j-th vertical crossing".
    {
        auto h_runs = intersection_runs(h, v, spec, true);
        const std::vector<int> v_order = consistent_visit_order(h_runs, true);
        std::vector<std::vector<Coord>> reordered;
        for (int j : v_order) reordered.push_back(std::move(v.paths[static_cast<std::size_t>(j)]));
        v = check_path_family(std::move(reordered), damage, false);
    }
    {
        auto v_runs = intersection_runs(v, h, spec, false);
        const std::vector<int> h_order = consistent_visit_order(v_runs, false);
        std::vector<std::vector<Coord>> reordered;
        for (int i : h_order) reordered.push_back(std::move(h.paths[static_cast<std::size_t>(i)]));
        h = check_path_family(std::move(reordered), damage, true);
    }

    const auto h_runs = intersection_runs(h, v, spec, true);
    const auto v_runs = intersection_runs(v, h, spec, false);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) {
            if (h_runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].end >=
                h_runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)].begin) {
                throw InvalidInputError(path_name(true, i) +
                                        " does not visit the vertical paths in a consistent order");
            }
            if (v_runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].end >=
                v_runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)].begin) {
                throw InvalidInputError(path_name(false, i) +
                                        " does not visit the horizontal paths in a consistent order");
            }
        }
    }

    MinorModel model;
    model.host = spec;
    model.minor = GridSpec(2, k);
    model.branches.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));

    for (int i = 0; i < k; ++i) {
        const auto& hp = h.paths[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            const auto& vp = v.paths[static_cast<std::size_t>(j)];
            const Run hr = h_runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const Run vr = v_runs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];

            BranchSet branch;
            branch.minor_vertex = Coord{i, j};
            for (int p = hr.begin; p <= hr.end; ++p) {
                branch.hosts.push_back(hp[static_cast<std::size_t>(p)]);
            }

            // half-segments along the horizontal path toward columns j-1, j+1
            if (j > 0) {
                const Run prev = h_runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
                const int between = hr.begin - prev.end - 1;
                for (int off = 1; off <= between / 2; ++off) {
                    branch.hosts.push_back(hp[static_cast<std::size_t>(hr.begin - off)]);
                }
            }
            if (j + 1 < k) {
                const Run next = h_runs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)];
                const int between = next.begin - hr.end - 1;
                for (int off = 1; off <= (between + 1) / 2; ++off) {
                    branch.hosts.push_back(hp[static_cast<std::size_t>(hr.end + off)]);
                }
            }
            // and along the vertical path toward rows i-1, i+1
            if (i > 0) {
                const Run prev = v_runs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
                const int between = vr.begin - prev.end - 1;
                for (int off = 1; off <= between / 2; ++off) {
                    branch.hosts.push_back(vp[static_cast<std::size_t>(vr.begin - off)]);
                }
            }
            if (i + 1 < k) {
                const Run next = v_runs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i + 1)];
                const int between = next.begin - vr.end - 1;
                for (int off = 1; off <= (between + 1) / 2; ++off) {
                    branch.hosts.push_back(vp[static_cast<std::size_t>(vr.end + off)]);
                }
            }

            std::sort(branch.hosts.begin(), branch.hosts.end());
            branch.hosts.erase(std::unique(branch.hosts.begin(), branch.hosts.end()),
                               branch.hosts.end());
            model.branches.push_back(std::move(branch));
        }
    }

    compute_depth(model, damage);
    return model;
}

DamageSet lattice_damage(int n, int k) {
    if (k < 1 || k >= n) throw InvalidInputError("lattice damage needs 1 <= k < n");
    std::vector<Coord> damaged;
    for (int i = k; i < n; i += k + 1) {
        for (int j = k; j < n; j += k + 1) {
            damaged.push_back(Coord{i, j});
        }
    }
    return DamageSet(GridSpec(2, n), std::move(damaged));
}

DamageSet corner_diagonal_damage(int n, int m) {
    if (m < 0 || m > n / 2) {
        throw InvalidInputError("corner-diagonal damage needs 0 <= m <= floor(n/2)");
    }
    std::vector<Coord> damaged;
    for (int i = 0; i < m; ++i) damaged.push_back(Coord{i, i});
    return DamageSet(GridSpec(2, n), std::move(damaged));
}

PathDecomposition corner_diagonal_decomposition(int n, int m) {
    if (m < 1) {
        throw InvalidInputError(
            "corner-diagonal decomposition needs m >= 1; use grid_path_decomposition for the whole grid");
    }
    if (m > n / 2) throw InvalidInputError("corner-diagonal decomposition needs m <= floor(n/2)");

    const DamageSet damage = corner_diagonal_damage(n, m);

    // Undamaged diagonal vertices up to and including the center (odd n)
    // sit in every bag.
    std::vector<Coord> universal;
    for (int i = m; i <= (n + 1) / 2 - 1; ++i) universal.push_back(Coord{i, i});

    std::set<Coord> skip(universal.begin(), universal.end());
    std::vector<Coord> order;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Coord v{i, j};
            if (damage.contains(v) || skip.count(v)) continue;
            order.push_back(v);
        }
    }
    std::sort(order.begin(), order.end(),
              [n](const Coord& a, const Coord& b) { return radial_before(a, b, n); });

    return decomposition_from_order(universal, order, damaged_grid_neighbors(damage));
}

PathDecomposition grid_path_decomposition(int n) {
    if (n < 1) throw InvalidInputError("side length must be at least 1");
    const DamageSet none(GridSpec(2, n), {});
    std::vector<Coord> order;
    order.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) order.push_back(Coord{i, j});  // column sweep
    }
    return decomposition_from_order({}, order, damaged_grid_neighbors(none));
}

namespace {

int best_residue(int n, int k) {
    const int modulus = 2 * k + 1;
    std::vector<long long> count(static_cast<std::size_t>(modulus), 0);
    for (int t = 1; t <= 2 * n - 1; ++t) {
        const long long diag_size = t <= n ? t : 2 * n - t;
        count[static_cast<std::size_t>(t % modulus)] += diag_size;
    }
    int best = 0;
    for (int r = 1; r < modulus; ++r) {
        if (count[static_cast<std::size_t>(r)] < count[static_cast<std::size_t>(best)]) best = r;
    }
    return best;
}

void require_diag_residue_args(int n, int k) {
    if (k < 1) throw InvalidInputError("diagonal residue damage needs k >= 1");
    if (2 * k + 1 > 2 * n - 1) {
        throw InvalidInputError("diagonal residue damage needs 2k+1 <= 2n-1");
    }
}

}  // namespace

DamageSet diagonal_residue_damage(int n, int k) {
    require_diag_residue_args(n, k);
    const int modulus = 2 * k + 1;
    const int r = best_residue(n, k);
    std::vector<Coord> damaged;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if ((i + j + 1) % modulus == r) damaged.push_back(Coord{i, j});
        }
    }
    return DamageSet(GridSpec(2, n), std::move(damaged));
}

PathDecomposition diagonal_residue_decomposition(int n, int k) {
    require_diag_residue_args(n, k);
    const int modulus = 2 * k + 1;
    const int r = best_residue(n, k);
    const DamageSet damage = diagonal_residue_damage(n, k);
    const auto graph_neighbors = damaged_grid_neighbors(damage);

    // Strips of consecutive undamaged diagonals are disconnected from each
    // other; each strip gets its own vertex order sorted primarily by i-j.
    auto strip_of = [&](const Coord& v) { return (v[0] + v[1] + 1 + modulus - r) / modulus; };
    std::map<int, std::vector<Coord>> strips;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!damage.contains(Coord{i, j})) strips[strip_of(Coord{i, j})].push_back(Coord{i, j});
        }
    }

    // Inside one i-j class the tie direction matters: a plain sweep leaves
    // stragglers from the previous class and certifies only k+1, while a
    // boustrophedon order whose turning phase matches the strip's tips
    // reaches k.  The right phase depends on how the strip meets the grid
    // corners, so both snake phases and both monotone orders are evaluated
    // and the first one reaching the smallest width wins.
    std::vector<Coord> order;
    for (auto& [strip_index, cells] : strips) {
        std::sort(cells.begin(), cells.end(), [](const Coord& a, const Coord& b) {
            const int da = a[0] - a[1];
            const int db = b[0] - b[1];
            if (da != db) return da < db;
            return a[0] < b[0];
        });
        const int delta_min = cells.front()[0] - cells.front()[1];

        std::vector<Coord> best;
        int best_width = std::numeric_limits<int>::max();
        for (int variant = 0; variant < 4; ++variant) {
            std::vector<Coord> candidate = cells;
            // stable per-class reversal according to the variant
            std::size_t begin = 0;
            while (begin < candidate.size()) {
                std::size_t end = begin;
                const int delta = candidate[begin][0] - candidate[begin][1];
                while (end < candidate.size() && candidate[end][0] - candidate[end][1] == delta) {
                    ++end;
                }
                const bool reverse_class =
                    variant == 0   ? ((delta - delta_min) % 2 != 0)
                    : variant == 1 ? ((delta - delta_min) % 2 == 0)
                    : variant == 2 ? false
                                   : true;
                if (reverse_class) {
                    std::reverse(candidate.begin() + static_cast<long>(begin),
                                 candidate.begin() + static_cast<long>(end));
                }
                begin = end;
            }
            const int width =
                decomposition_from_order({}, candidate, graph_neighbors).width();
            if (width < best_width) {
                best_width = width;
                best = std::move(candidate);
            }
        }
        order.insert(order.end(), best.begin(), best.end());
    }
    return decomposition_from_order({}, order, graph_neighbors);
}

DamageSet shallow_segments_damage(int n, int m, int lambda) {
    if (lambda < 1) throw InvalidInputError("depth parameter must be at least 1");
    const int segment_length = 2 * lambda + 1;
    if (segment_length > m) {
        throw InvalidInputError("budget m does not cover one segment of 2*depth+1 vertices");
    }
    if (segment_length > n) {
        throw InvalidInputError("segment of 2*depth+1 vertices does not fit in the grid");
    }

    const int segments = m / segment_length;
    const int q = static_cast<int>(ceil_sqrt(static_cast<std::uint64_t>(segments)));
    const int spacing = static_cast<int>(
        cdiv_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(q)));

    std::set<Coord> damaged;
    for (int idx = 0; idx < segments; ++idx) {
        const int a = idx / q;
        const int b = idx % q;
        const int cx = std::min(lambda + a * spacing, n - 1 - lambda);
        const int cy = std::min(lambda + b * spacing, n - 1 - lambda);
        for (int off = -lambda; off <= lambda; ++off) {
            damaged.insert(Coord{cx + off, cy + off});
        }
    }
    return DamageSet(GridSpec(2, n),
                     std::vector<Coord>(damaged.begin(), damaged.end()));
}

}  // namespace gridsalvage::planar
