#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridsalvage/certificates.hpp"
#include "gridsalvage/grid.hpp"
#include "gridsalvage/hypercube.hpp"

// Independent brute-force ground truth.  Nothing here shares code with the
// extractors it checks.
namespace gridsalvage::oracle {

// Exact maximum side of an undamaged axis-aligned cubical subgrid, by
// dynamic programming over max-corner positions.  Throws CapacityError when
// the grid has more than 10^7 vertices.
int largest_undamaged_subgrid(const DamageSet& damage);

struct ValidationReport {
    std::vector<std::string> violations;
    int side = 0;    // minor side / region side / pattern dimension
    int depth = -1;  // recomputed depth, -1 when not computable
    int width = -1;  // decomposition width

    bool valid() const { return violations.empty(); }
};

// Checks branch disjointness, branch connectivity, freedom from damage,
// coverage of every minor vertex, realization of every minor edge, and
// recomputes the depth.  Violations are data, not errors.
ValidationReport validate_minor_model(const MinorModel& model, const DamageSet& damage);

// An explicit vertex/edge graph for the decomposition and pathwidth
// oracles.  Coordinates are opaque labels here; only the edge list matters.
struct VertexEdgeGraph {
    std::vector<Coord> vertices;
    std::vector<std::pair<Coord, Coord>> edges;
};

// The grid minus its damaged vertices, as an explicit graph.
VertexEdgeGraph remaining_graph(const DamageSet& damage);

// Contiguity and edge-coverage checks; reports the width.
ValidationReport validate_path_decomposition(const VertexEdgeGraph& graph,
                                             const PathDecomposition& pd);

// Exact pathwidth via the vertex-separation-number subset DP, applied per
// connected component (the pathwidth of a disjoint union is the maximum
// over components).  Throws CapacityError when a component has more than
// 24 vertices.  Returns -1 for the empty graph.
int pathwidth_exact(const VertexEdgeGraph& graph);

// Exact maximum dimension of a damage-free subcube, scanning patterns top
// down by dimension so dense damage terminates early.  Returns -1 when
// every vertex is damaged.  Throws CapacityError for d > 16.
int largest_subcube(const hypercube::HypercubeDamage& damage);

// Vertex count form of largest_subcube (0 when nothing survives).
std::uint64_t largest_subcube_vertices(const hypercube::HypercubeDamage& damage);

}  // namespace gridsalvage::oracle
