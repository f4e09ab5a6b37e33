#pragma once

// Shared helpers for the test suites: seeded instance generators, naive
// second-opinion oracles (kept independent of the library code they check),
// and a runner for the command-line binary.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gridsalvage/grid.hpp"
#include "gridsalvage/hypercube.hpp"
#include "gridsalvage/oracle.hpp"

namespace testsupport {

namespace gs = gridsalvage;

// ----------------------------------------------------------- generators --

inline gs::DamageSet random_damage(const gs::GridSpec& spec, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t total = spec.vertex_count();
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = total - static_cast<std::uint64_t>(m); j < total; ++j) {
        const std::uint64_t t = rng() % (j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<gs::Coord> coords;
    for (std::uint64_t id : chosen) coords.push_back(spec.decode(id));
    return gs::DamageSet(spec, std::move(coords));
}

// m < n damaged vertices in pairwise distinct rows.
inline gs::DamageSet random_row_spread_damage(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> rows(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(rows[static_cast<std::size_t>(i)], rows[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    std::vector<gs::Coord> coords;
    for (int i = 0; i < m; ++i) {
        coords.push_back(gs::Coord{rows[static_cast<std::size_t>(i)],
                                   static_cast<int>(rng() % static_cast<std::uint64_t>(n))});
    }
    return gs::DamageSet(gs::GridSpec(2, n), std::move(coords));
}

inline gs::hypercube::HypercubeDamage random_cube_damage(int d, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t total = std::uint64_t{1} << d;
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = total - static_cast<std::uint64_t>(m); j < total; ++j) {
        const std::uint64_t t = rng() % (j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return gs::hypercube::HypercubeDamage(
        d, std::vector<std::uint64_t>(chosen.begin(), chosen.end()));
}

// -------------------------------------------------------- naive oracles --

// All-origins enumeration of the largest undamaged cubical subgrid.
inline int naive_largest_subgrid(const gs::DamageSet& damage) {
    const gs::GridSpec& spec = damage.spec();
    const int d = spec.dim();
    const int n = spec.side();

    auto box_clear = [&](const gs::Coord& origin, int side) {
        gs::Coord v = origin;
        while (true) {
            if (damage.contains(v)) return false;
            int a = d - 1;
            while (a >= 0) {
                if (++v[static_cast<std::size_t>(a)] < origin[a] + side) break;
                v[static_cast<std::size_t>(a)] = origin[a];
                --a;
            }
            if (a < 0) return true;
        }
    };

    int best = 0;
    gs::Coord origin(static_cast<std::size_t>(d), 0);
    while (true) {
        int room = n;
        for (int a = 0; a < d; ++a) room = std::min(room, n - origin[static_cast<std::size_t>(a)]);
        for (int side = best + 1; side <= room; ++side) {
            if (box_clear(origin, side))
                best = side;
            else
                break;
        }
        int a = d - 1;
        while (a >= 0) {
            if (++origin[static_cast<std::size_t>(a)] < n) break;
            origin[static_cast<std::size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return best;
}

// Every {0,1,*}-pattern, no pruning.
inline int naive_largest_subcube(const gs::hypercube::HypercubeDamage& damage) {
    const int d = damage.dim();
    int best = -1;
    std::string symbols(static_cast<std::size_t>(d), '0');
    const std::array<char, 3> alphabet{'0', '1', '*'};
    std::vector<int> digit(static_cast<std::size_t>(d), 0);
    while (true) {
        for (int i = 0; i < d; ++i) {
            symbols[static_cast<std::size_t>(i)] =
                alphabet[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
        }
        const gs::SubcubePattern pattern{symbols};
        bool clear = true;
        for (std::uint64_t mask : damage.masks()) {
            if (pattern.matches(mask)) {
                clear = false;
                break;
            }
        }
        if (clear) best = std::max(best, pattern.dimension());
        int a = d - 1;
        while (a >= 0) {
            if (++digit[static_cast<std::size_t>(a)] < 3) break;
            digit[static_cast<std::size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return best;
}

// Vertex separation number over every ordering; usable up to 8 vertices.
inline int permutation_pathwidth(const gs::oracle::VertexEdgeGraph& graph) {
    const int n = static_cast<int>(graph.vertices.size());
    std::map<gs::Coord, int> index;
    for (const gs::Coord& v : graph.vertices) index.emplace(v, static_cast<int>(index.size()));
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : graph.edges) {
        adj[static_cast<std::size_t>(index.at(u))] |= 1u << index.at(v);
        adj[static_cast<std::size_t>(index.at(v))] |= 1u << index.at(u);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        std::uint32_t placed = 0;
        int cost = 0;
        for (int v : perm) {
            placed |= 1u << v;
            int boundary = 0;
            std::uint32_t rest = placed;
            while (rest) {
                const int u = __builtin_ctz(rest);
                rest &= rest - 1;
                if (adj[static_cast<std::size_t>(u)] & ~placed) ++boundary;
            }
            cost = std::max(cost, boundary);
            if (cost >= best) break;
        }
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Branch radius by a plain distance table, independent of branch_radius.
inline int naive_radius(const gs::GridSpec& spec, const std::vector<gs::Coord>& hosts) {
    const int n = static_cast<int>(hosts.size());
    constexpr int kFar = 1 << 20;
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), kFar));
    for (int i = 0; i < n; ++i) dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int delta = 0;
            for (std::size_t a = 0; a < hosts[static_cast<std::size_t>(i)].size(); ++a) {
                delta += std::abs(hosts[static_cast<std::size_t>(i)][a] - hosts[static_cast<std::size_t>(j)][a]);
            }
            if (delta == 1) {
                dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    std::min(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                 dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
            }
        }
    }
    (void)spec;
    int radius = kFar;
    for (int i = 0; i < n; ++i) {
        int ecc = 0;
        for (int j = 0; j < n; ++j) {
            ecc = std::max(ecc, dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        radius = std::min(radius, ecc);
    }
    return radius;
}

// Column-sweep decomposition of an axis-aligned box of grid vertices.
inline gs::PathDecomposition box_sweep_decomposition(const std::vector<gs::Coord>& cells) {
    std::vector<gs::Coord> order = cells;
    std::sort(order.begin(), order.end(), [](const gs::Coord& a, const gs::Coord& b) {
        if (a[1] != b[1]) return a[1] < b[1];
        return a[0] < b[0];
    });
    std::set<gs::Coord> members(order.begin(), order.end());
    std::map<gs::Coord, int> position;
    for (std::size_t t = 0; t < order.size(); ++t) position.emplace(order[t], static_cast<int>(t));

    std::vector<int> last(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) {
        int furthest = static_cast<int>(t);
        const gs::Coord& v = order[t];
        const std::array<gs::Coord, 4> around{gs::Coord{v[0] - 1, v[1]}, gs::Coord{v[0] + 1, v[1]},
                                              gs::Coord{v[0], v[1] - 1}, gs::Coord{v[0], v[1] + 1}};
        for (const gs::Coord& u : around) {
            auto it = position.find(u);
            if (it != position.end()) furthest = std::max(furthest, it->second);
        }
        last[t] = furthest;
    }
    gs::PathDecomposition pd;
    for (std::size_t t = 0; t < order.size(); ++t) {
        std::vector<gs::Coord> bag;
        for (std::size_t s = 0; s <= t; ++s) {
            if (last[s] >= static_cast<int>(t)) bag.push_back(order[s]);
        }
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

// ------------------------------------------------------------ CLI runner --

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

inline CliResult run_cli(const std::string& args) {
    const std::string command = std::string(GRIDSALVAGE_CLI_PATH) + " " + args + " 2>&1";
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testsupport
