#include "gridsalvage/certificates.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <unordered_map>

namespace gridsalvage {

int branch_radius(const GridSpec& host, const std::vector<Coord>& hosts) {
    if (hosts.empty()) throw CertificateError("branch set has no host vertices");
    if (hosts.size() == 1) {
        host.encode(hosts.front());  // range check
        return 0;
    }

    std::unordered_map<std::uint64_t, int> index;
    index.reserve(hosts.size() * 2);
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        index.emplace(host.encode(hosts[i]), static_cast<int>(i));
    }

    // adjacency restricted to the branch set
    std::vector<std::vector<int>> adj(hosts.size());
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        for (const Coord& u : neighbors(host, hosts[i])) {
            auto it = index.find(host.encode(u));
            if (it != index.end()) adj[i].push_back(it->second);
        }
    }

    const int n = static_cast<int>(hosts.size());
    int radius = n;  // upper bound; any eccentricity is below this
    std::vector<int> dist(hosts.size());
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(src)] = 0;
        std::deque<int> queue{src};
        int ecc = 0;
        int seen = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            ecc = std::max(ecc, dist[static_cast<std::size_t>(x)]);
            for (int y : adj[static_cast<std::size_t>(x)]) {
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    ++seen;
                    queue.push_back(y);
                }
            }
        }
        if (seen != n) throw CertificateError("branch set induces a disconnected subgraph");
        radius = std::min(radius, ecc);
    }
    return radius;
}

int compute_depth(MinorModel& model, const DamageSet& damage) {
    if (damage.spec() != model.host) {
        throw InvalidInputError("damage set and minor model disagree on the host grid");
    }
    int depth = 0;
    for (const BranchSet& branch : model.branches) {
        depth = std::max(depth, branch_radius(model.host, branch.hosts));
    }
    model.depth = depth;
    return depth;
}

int PathDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& bag : bags) largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

int SubcubePattern::dimension() const {
    return static_cast<int>(std::count(symbols.begin(), symbols.end(), '*'));
}

std::uint64_t SubcubePattern::vertex_count() const {
    return std::uint64_t{1} << dimension();
}

bool SubcubePattern::matches(std::uint64_t mask) const {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const int bit = static_cast<int>((mask >> i) & 1);
        if (symbols[i] == '0' && bit != 0) return false;
        if (symbols[i] == '1' && bit != 1) return false;
    }
    return true;
}

}  // namespace gridsalvage
