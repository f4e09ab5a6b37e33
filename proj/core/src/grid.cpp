#include "gridsalvage/grid.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gridsalvage {

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

}  // namespace

GridSpec::GridSpec(int dim, int side) : dim_(dim), side_(side), count_(1) {
    if (dim < 1) throw InvalidInputError("grid dimension must be at least 1");
    if (side < 1) throw InvalidInputError("grid side length must be at least 1");
    for (int i = 0; i < dim; ++i) {
        const std::uint64_t next = count_ * static_cast<std::uint64_t>(side);
        if (side > 1 && next / static_cast<std::uint64_t>(side) != count_) {
            throw InvalidInputError("grid vertex count overflows a 64-bit word");
        }
        count_ = next;
    }
}

bool GridSpec::contains(const Coord& v) const {
    if (static_cast<int>(v.size()) != dim_) return false;
    for (int c : v) {
        if (c < 0 || c >= side_) return false;
    }
    return true;
}

std::uint64_t GridSpec::encode(const Coord& v) const {
    if (!contains(v)) {
        throw InvalidInputError("coordinate " + coord_to_string(v) + " is not a vertex of the " +
                                std::to_string(dim_) + "-dimensional side-" + std::to_string(side_) +
                                " grid");
    }
    std::uint64_t id = 0;
    for (int a = dim_ - 1; a >= 0; --a) {
        id = id * static_cast<std::uint64_t>(side_) + static_cast<std::uint64_t>(v[a]);
    }
    return id;
}

Coord GridSpec::decode(std::uint64_t id) const {
    if (id >= count_) throw InvalidInputError("vertex id out of range");
    Coord v(static_cast<std::size_t>(dim_));
    for (int a = 0; a < dim_; ++a) {
        v[a] = static_cast<int>(id % static_cast<std::uint64_t>(side_));
        id /= static_cast<std::uint64_t>(side_);
    }
    return v;
}

std::vector<Coord> neighbors(const GridSpec& spec, const Coord& v) {
    if (!spec.contains(v)) {
        throw InvalidInputError("neighbors: coordinate " + coord_to_string(v) +
                                " is outside the grid");
    }
    std::vector<Coord> result;
    result.reserve(static_cast<std::size_t>(2 * spec.dim()));
    for (int a = 0; a < spec.dim(); ++a) {
        if (v[a] > 0) {
            Coord u = v;
            --u[a];
            result.push_back(std::move(u));
        }
        if (v[a] + 1 < spec.side()) {
            Coord u = v;
            ++u[a];
            result.push_back(std::move(u));
        }
    }
    return result;
}

DamageSet::DamageSet(GridSpec spec, std::vector<Coord> vertices)
    : spec_(spec), vertices_(std::move(vertices)) {
    ids_.reserve(vertices_.size() * 2);
    for (const Coord& v : vertices_) {
        const std::uint64_t id = spec_.encode(v);  // validates the coordinate
        if (!ids_.insert(id).second) {
            throw InvalidInputError("duplicate damaged vertex " + coord_to_string(v));
        }
    }
    std::sort(vertices_.begin(), vertices_.end());
}

bool SubgridRegion::contains(const Coord& v) const {
    if (v.size() != origin.size()) return false;
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a] < origin[a] || v[a] >= origin[a] + side) return false;
    }
    return true;
}

void require_region_in_grid(const GridSpec& spec, const SubgridRegion& region) {
    if (region.side < 1) throw InvalidInputError("region side must be positive");
    if (static_cast<int>(region.origin.size()) != spec.dim()) {
        throw InvalidInputError("region origin dimension does not match the grid");
    }
    for (int a = 0; a < spec.dim(); ++a) {
        if (region.origin[a] < 0 || region.origin[a] + region.side > spec.side()) {
            throw InvalidInputError("region leaves the grid on axis " + std::to_string(a));
        }
    }
}

SubgridRegion whole_grid_region(const GridSpec& spec) {
    return SubgridRegion{Coord(static_cast<std::size_t>(spec.dim()), 0), spec.side()};
}

}  // namespace gridsalvage
