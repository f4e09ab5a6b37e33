#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "gridsalvage/errors.hpp"

namespace gridsalvage {

// A vertex of a cubical grid: one component per axis, axis 0 first.
using Coord = std::vector<int>;

// A d-dimensional cubical grid with `side` vertices per axis.  A hypercube
// is the special case side == 2 with N = 2^d vertices.
class GridSpec {
public:
    GridSpec() : GridSpec(1, 1) {}
    GridSpec(int dim, int side);

    int dim() const { return dim_; }
    int side() const { return side_; }
    std::uint64_t vertex_count() const { return count_; }

    bool contains(const Coord& v) const;

    // Bijection between coordinates and [0, vertex_count): mixed-radix with
    // axis 0 as the least significant digit.
    std::uint64_t encode(const Coord& v) const;
    Coord decode(std::uint64_t id) const;

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.dim_ == b.dim_ && a.side_ == b.side_;
    }
    friend bool operator!=(const GridSpec& a, const GridSpec& b) { return !(a == b); }

private:
    int dim_;
    int side_;
    std::uint64_t count_;
};

// Grid neighbors of v: all coordinates at unit distance.  Emitted in axis
// order, the -1 variant before the +1 variant.
std::vector<Coord> neighbors(const GridSpec& spec, const Coord& v);

// An immutable set of deleted grid vertices.
class DamageSet {
public:
    // Coordinates are validated against the grid, sorted lexicographically
    // and required to be distinct.
    DamageSet(GridSpec spec, std::vector<Coord> vertices);

    const GridSpec& spec() const { return spec_; }
    const std::vector<Coord>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool contains(const Coord& v) const { return ids_.count(spec_.encode(v)) != 0; }
    bool contains_id(std::uint64_t id) const { return ids_.count(id) != 0; }

private:
    GridSpec spec_;
    std::vector<Coord> vertices_;
    std::unordered_set<std::uint64_t> ids_;
};

// An axis-aligned cubical subgrid given by its minimum corner and side.
struct SubgridRegion {
    Coord origin;
    int side = 1;

    bool contains(const Coord& v) const;
};

// Throws InvalidInputError unless the region lies inside the grid.
void require_region_in_grid(const GridSpec& spec, const SubgridRegion& region);

// The whole grid as a region.
SubgridRegion whole_grid_region(const GridSpec& spec);

}  // namespace gridsalvage
