#include "gridsalvage/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace gridsalvage::oracle {

namespace {

std::string coord_to_string(const Coord& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    s += ")";
    return s;
}

constexpr std::uint64_t kGridCapacity = 10'000'000;

}  // namespace

int largest_undamaged_subgrid(const DamageSet& damage) {
    const GridSpec& spec = damage.spec();
    if (spec.vertex_count() > kGridCapacity) {
        throw CapacityError("grid has " + std::to_string(spec.vertex_count()) +
                            " vertices, above the 10^7 subgrid-oracle capacity");
    }
    const int d = spec.dim();
    const int n = spec.side();
    const auto count = spec.vertex_count();

    std::vector<std::uint64_t> stride(static_cast<std::size_t>(d));
    std::uint64_t acc = 1;
    for (int a = 0; a < d; ++a) {
        stride[static_cast<std::size_t>(a)] = acc;
        acc *= static_cast<std::uint64_t>(n);
    }

    // dp[id] = largest k such that the cube with maximum corner id and side
    // k is undamaged; its recurrence takes the min over all 2^d - 1 corner
    // predecessors.
    std::vector<std::uint32_t> dp(count, 0);
    Coord coord(static_cast<std::size_t>(d), 0);
    int best = 0;
    for (std::uint64_t id = 0; id < count; ++id) {
        if (!damage.contains_id(id)) {
            std::uint32_t smallest = std::numeric_limits<std::uint32_t>::max();
            for (unsigned e = 1; e < (1u << d) && smallest > 0; ++e) {
                std::uint64_t prev = id;
                bool valid = true;
                for (int a = 0; a < d; ++a) {
                    if ((e >> a) & 1) {
                        if (coord[static_cast<std::size_t>(a)] == 0) {
                            valid = false;
                            break;
                        }
                        prev -= stride[static_cast<std::size_t>(a)];
                    }
                }
                smallest = std::min(smallest, valid ? dp[prev] : 0);
            }
            dp[id] = (smallest == std::numeric_limits<std::uint32_t>::max()) ? 1 : smallest + 1;
            best = std::max(best, static_cast<int>(dp[id]));
        }
        for (int a = 0; a < d; ++a) {
            if (++coord[static_cast<std::size_t>(a)] < n) break;
            coord[static_cast<std::size_t>(a)] = 0;
        }
    }
    return best;
}

ValidationReport validate_minor_model(const MinorModel& model, const DamageSet& damage) {
    ValidationReport report;
    auto complain = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

    if (model.host != damage.spec()) {
        complain("host grid of the model does not match the damage set's grid");
        return report;
    }
    const GridSpec& host = model.host;
    const GridSpec& minor = model.minor;
    report.side = minor.side();

    // exactly one branch per minor vertex
    std::unordered_map<std::uint64_t, std::size_t> branch_of_minor;
    for (std::size_t b = 0; b < model.branches.size(); ++b) {
        const Coord& mv = model.branches[b].minor_vertex;
        if (!minor.contains(mv)) {
            complain("branch " + coord_to_string(mv) + " is not a vertex of the minor grid");
            continue;
        }
        if (!branch_of_minor.emplace(minor.encode(mv), b).second) {
            complain("minor vertex " + coord_to_string(mv) + " has more than one branch set");
        }
    }
    if (branch_of_minor.size() != minor.vertex_count()) {
        complain("model has branch sets for " + std::to_string(branch_of_minor.size()) + " of " +
                 std::to_string(minor.vertex_count()) + " minor vertices");
    }

    // hosts: in range, undamaged, disjoint across branches
    std::unordered_map<std::uint64_t, std::size_t> branch_of_host;
    for (std::size_t b = 0; b < model.branches.size(); ++b) {
        const BranchSet& branch = model.branches[b];
        if (branch.hosts.empty()) {
            complain("branch " + coord_to_string(branch.minor_vertex) + " has no host vertices");
            continue;
        }
        for (const Coord& h : branch.hosts) {
            if (!host.contains(h)) {
                complain("branch " + coord_to_string(branch.minor_vertex) + " holds " +
                         coord_to_string(h) + " which is outside the host grid");
                continue;
            }
            const std::uint64_t id = host.encode(h);
            if (damage.contains_id(id)) {
                complain("branch " + coord_to_string(branch.minor_vertex) +
                         " holds the damaged vertex " + coord_to_string(h));
            }
            auto [it, fresh] = branch_of_host.emplace(id, b);
            if (!fresh && it->second != b) {
                complain("host vertex " + coord_to_string(h) + " sits in the branches of " +
                         coord_to_string(model.branches[it->second].minor_vertex) + " and " +
                         coord_to_string(branch.minor_vertex));
            }
        }
    }

    // connectivity and depth
    int depth = 0;
    bool depth_known = true;
    for (const BranchSet& branch : model.branches) {
        if (branch.hosts.empty()) {
            depth_known = false;
            continue;
        }
        bool in_range = true;
        for (const Coord& h : branch.hosts) {
            if (!host.contains(h)) in_range = false;
        }
        if (!in_range) {
            depth_known = false;
            continue;
        }
        try {
            depth = std::max(depth, branch_radius(host, branch.hosts));
        } catch (const CertificateError&) {
            complain("branch " + coord_to_string(branch.minor_vertex) +
                     " induces a disconnected subgraph");
            depth_known = false;
        }
    }
    if (depth_known) {
        report.depth = depth;
        if (model.depth != depth) {
            complain("model declares depth " + std::to_string(model.depth) +
                     " but the branch radii give " + std::to_string(depth));
        }
    }

    // every minor edge must be realized by a host edge
    if (branch_of_minor.size() == minor.vertex_count()) {
        for (std::uint64_t id = 0; id < minor.vertex_count(); ++id) {
            const Coord mv = minor.decode(id);
            for (const Coord& mu : neighbors(minor, mv)) {
                if (!(mv < mu)) continue;  // each minor edge once
                const auto& a = model.branches[branch_of_minor.at(minor.encode(mv))];
                const auto& b = model.branches[branch_of_minor.at(minor.encode(mu))];
                const auto& scan = a.hosts.size() <= b.hosts.size() ? a : b;
                const std::size_t other_index =
                    branch_of_minor.at(minor.encode(&scan == &a ? mu : mv));
                bool realized = false;
                for (const Coord& h : scan.hosts) {
                    if (!host.contains(h)) continue;
                    for (const Coord& nb : neighbors(host, h)) {
                        auto it = branch_of_host.find(host.encode(nb));
                        if (it != branch_of_host.end() && it->second == other_index) {
                            realized = true;
                            break;
                        }
                    }
                    if (realized) break;
                }
                if (!realized) {
                    complain("minor edge " + coord_to_string(mv) + "-" + coord_to_string(mu) +
                             " is not realized by any host edge");
                }
            }
        }
    }
    return report;
}

VertexEdgeGraph remaining_graph(const DamageSet& damage) {
    const GridSpec& spec = damage.spec();
    if (spec.vertex_count() > kGridCapacity) {
        throw CapacityError("grid too large to materialize the remaining graph");
    }
    VertexEdgeGraph graph;
    Coord coord(static_cast<std::size_t>(spec.dim()), 0);
    for (std::uint64_t id = 0; id < spec.vertex_count(); ++id) {
        if (!damage.contains_id(id)) {
            graph.vertices.push_back(coord);
            for (int a = 0; a < spec.dim(); ++a) {
                if (coord[static_cast<std::size_t>(a)] + 1 < spec.side()) {
                    Coord up = coord;
                    ++up[static_cast<std::size_t>(a)];
                    if (!damage.contains(up)) graph.edges.emplace_back(coord, up);
                }
            }
        }
        for (int a = 0; a < spec.dim(); ++a) {
            if (++coord[static_cast<std::size_t>(a)] < spec.side()) break;
            coord[static_cast<std::size_t>(a)] = 0;
        }
    }
    return graph;
}

ValidationReport validate_path_decomposition(const VertexEdgeGraph& graph,
                                             const PathDecomposition& pd) {
    ValidationReport report;
    auto complain = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };
    report.width = pd.width();

    std::map<Coord, std::pair<int, int>> span;  // vertex -> [first, last] bag
    std::map<Coord, int> occurrences;
    std::map<Coord, bool> is_vertex;
    for (const Coord& v : graph.vertices) is_vertex[v] = true;

    for (std::size_t t = 0; t < pd.bags.size(); ++t) {
        std::set<Coord> seen;
        for (const Coord& v : pd.bags[t]) {
            if (!seen.insert(v).second) {
                complain("bag " + std::to_string(t) + " lists " + coord_to_string(v) + " twice");
                continue;
            }
            if (!is_vertex.count(v)) {
                complain("bag " + std::to_string(t) + " holds " + coord_to_string(v) +
                         " which is not a vertex of the graph");
                continue;
            }
            auto [it, fresh] = span.emplace(v, std::make_pair(static_cast<int>(t), static_cast<int>(t)));
            if (!fresh) it->second.second = static_cast<int>(t);
            ++occurrences[v];
        }
    }

    for (const Coord& v : graph.vertices) {
        auto it = span.find(v);
        if (it == span.end()) {
            complain("vertex " + coord_to_string(v) + " appears in no bag");
            continue;
        }
        const int run = it->second.second - it->second.first + 1;
        if (occurrences[v] != run) {
            complain("vertex " + coord_to_string(v) + " appears in bags " +
                     std::to_string(it->second.first) + ".." + std::to_string(it->second.second) +
                     " with gaps");
        }
    }

    for (const auto& [u, v] : graph.edges) {
        auto iu = span.find(u);
        auto iv = span.find(v);
        if (iu == span.end() || iv == span.end()) continue;  // already reported
        const bool contiguous_u = occurrences[u] == iu->second.second - iu->second.first + 1;
        const bool contiguous_v = occurrences[v] == iv->second.second - iv->second.first + 1;
        bool covered = false;
        if (contiguous_u && contiguous_v) {
            covered = std::max(iu->second.first, iv->second.first) <=
                      std::min(iu->second.second, iv->second.second);
        } else {
            for (const auto& bag : pd.bags) {
                const bool has_u = std::find(bag.begin(), bag.end(), u) != bag.end();
                if (has_u && std::find(bag.begin(), bag.end(), v) != bag.end()) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) {
            complain("edge " + coord_to_string(u) + "-" + coord_to_string(v) +
                     " has no bag holding both endpoints");
        }
    }
    return report;
}

namespace {

constexpr int kPathwidthCapacity = 24;

// Vertex separation number of one connected component given bitmask
// adjacency; equals the pathwidth.
int component_vsn(const std::vector<std::uint32_t>& adj) {
    const int n = static_cast<int>(adj.size());
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int boundary = 0;
        std::uint32_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[static_cast<std::size_t>(v)] & ~s) ++boundary;
        }
        int smallest = std::numeric_limits<int>::max();
        rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            smallest = std::min(smallest, static_cast<int>(f[s & ~(1u << v)]));
        }
        f[s] = static_cast<std::uint8_t>(std::max(boundary, smallest));
    }
    return f[full];
}

}  // namespace

int pathwidth_exact(const VertexEdgeGraph& graph) {
    if (graph.vertices.empty()) return -1;

    std::map<Coord, int> index;
    for (const Coord& v : graph.vertices) {
        if (!index.emplace(v, static_cast<int>(index.size())).second) {
            throw InvalidInputError("duplicate vertex " + coord_to_string(v));
        }
    }
    std::vector<std::vector<int>> adj(graph.vertices.size());
    for (const auto& [u, v] : graph.edges) {
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu == index.end() || iv == index.end()) {
            throw InvalidInputError("edge endpoint is not a listed vertex");
        }
        adj[static_cast<std::size_t>(iu->second)].push_back(iv->second);
        adj[static_cast<std::size_t>(iv->second)].push_back(iu->second);
    }

    // connected components; the pathwidth of a disjoint union is the
    // maximum over its parts
    std::vector<int> component(graph.vertices.size(), -1);
    int component_count = 0;
    for (std::size_t s = 0; s < graph.vertices.size(); ++s) {
        if (component[s] >= 0) continue;
        std::deque<int> queue{static_cast<int>(s)};
        component[s] = component_count;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y : adj[static_cast<std::size_t>(x)]) {
                if (component[static_cast<std::size_t>(y)] < 0) {
                    component[static_cast<std::size_t>(y)] = component_count;
                    queue.push_back(y);
                }
            }
        }
        ++component_count;
    }

    int result = 0;
    for (int c = 0; c < component_count; ++c) {
        std::vector<int> members;
        for (std::size_t v = 0; v < component.size(); ++v) {
            if (component[v] == c) members.push_back(static_cast<int>(v));
        }
        if (static_cast<int>(members.size()) > kPathwidthCapacity) {
            throw CapacityError("a connected component has " + std::to_string(members.size()) +
                                " vertices, above the " + std::to_string(kPathwidthCapacity) +
                                "-vertex pathwidth-oracle capacity");
        }
        std::vector<int> local(component.size(), -1);
        for (std::size_t i = 0; i < members.size(); ++i) {
            local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
        }
        std::vector<std::uint32_t> bits(members.size(), 0);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (int y : adj[static_cast<std::size_t>(members[i])]) {
                bits[i] |= 1u << local[static_cast<std::size_t>(y)];
            }
        }
        result = std::max(result, component_vsn(bits));
    }
    return result;
}

int largest_subcube(const hypercube::HypercubeDamage& damage) {
    const int d = damage.dim();
    if (d > 16) {
        throw CapacityError("subcube oracle capacity is d <= 16, got d = " + std::to_string(d));
    }

    // axis subsets grouped by how many axes they fix
    std::vector<std::vector<std::uint32_t>> by_fixed(static_cast<std::size_t>(d) + 1);
    for (std::uint32_t f = 0; f < (1u << d); ++f) {
        by_fixed[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    }

    for (int dim = d; dim >= 0; --dim) {
        const int fixed = d - dim;
        for (std::uint32_t f : by_fixed[static_cast<std::size_t>(fixed)]) {
            // a subcube fixing axis set f survives iff some assignment of
            // those axes is hit by no damaged vertex
            std::unordered_set<std::uint64_t> hit;
            hit.reserve(damage.size() * 2);
            for (std::uint64_t mask : damage.masks()) hit.insert(mask & f);
            if (hit.size() < (std::uint64_t{1} << fixed)) return dim;
        }
    }
    return -1;  // every vertex damaged
}

std::uint64_t largest_subcube_vertices(const hypercube::HypercubeDamage& damage) {
    const int dim = largest_subcube(damage);
    return dim < 0 ? 0 : std::uint64_t{1} << dim;
}

}  // namespace gridsalvage::oracle
