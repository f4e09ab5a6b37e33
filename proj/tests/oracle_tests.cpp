#include <doctest.h>

#include <string>

#include "gridsalvage/oracle.hpp"
#include "gridsalvage/planar.hpp"
#include "test_support.hpp"

using namespace gridsalvage;
namespace ts = testsupport;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("largest undamaged subgrid on trivial inputs") {
    const GridSpec spec(2, 7);
    CHECK(oracle::largest_undamaged_subgrid(DamageSet(spec, {})) == 7);

    std::vector<Coord> all;
    for (std::uint64_t id = 0; id < spec.vertex_count(); ++id) all.push_back(spec.decode(id));
    CHECK(oracle::largest_undamaged_subgrid(DamageSet(spec, all)) == 0);
}

TEST_CASE("subgrid oracle agrees with all-origins enumeration") {
    std::uint64_t seed = 100;
    for (int d = 1; d <= 3; ++d) {
        for (int n : {4, 6, 9}) {
            const GridSpec spec(d, n);
            for (int trial = 0; trial < 8; ++trial) {
                const int m = static_cast<int>(seed % (spec.vertex_count() / 2 + 1));
                const DamageSet damage = ts::random_damage(spec, m, seed++);
                CHECK(oracle::largest_undamaged_subgrid(damage) ==
                      ts::naive_largest_subgrid(damage));
            }
        }
    }
}

TEST_CASE("subgrid oracle certifies the lattice adversary") {
    CHECK(oracle::largest_undamaged_subgrid(planar::lattice_damage(25, 2)) == 2);
    CHECK(oracle::largest_undamaged_subgrid(planar::lattice_damage(6, 1)) == 1);
}

TEST_CASE("subgrid oracle rejects oversized grids") {
    const DamageSet big(GridSpec(2, 4000), {});
    CHECK_THROWS_AS(oracle::largest_undamaged_subgrid(big), CapacityError);
}

namespace {

MinorModel small_identity_model(int n) {
    MinorModel model;
    model.host = GridSpec(2, n);
    model.minor = GridSpec(2, n);
    model.depth = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            model.branches.push_back(BranchSet{{i, j}, {Coord{i, j}}});
        }
    }
    return model;
}

}  // namespace

TEST_CASE("minor validation accepts the identity model") {
    const auto model = small_identity_model(3);
    const auto report = oracle::validate_minor_model(model, DamageSet(GridSpec(2, 3), {}));
    CHECK(report.valid());
    CHECK(report.side == 3);
    CHECK(report.depth == 0);
}

TEST_CASE("minor validation catches each kind of defect") {
    const DamageSet none(GridSpec(2, 3), {});

    SUBCASE("disconnected branch is named") {
        auto model = small_identity_model(3);
        model.branches[0].hosts = {{0, 0}, {2, 2}};  // two components, also overlaps (2,2)
        const auto report = oracle::validate_minor_model(model, none);
        CHECK_FALSE(report.valid());
        bool found = false;
        for (const auto& v : report.violations) {
            if (v.find("disconnected") != std::string::npos && v.find("(0,0)") != std::string::npos) {
                found = true;
            }
        }
        CHECK(found);
    }
    SUBCASE("damaged host vertex") {
        const auto model = small_identity_model(3);
        const DamageSet dmg(GridSpec(2, 3), {{1, 1}});
        const auto report = oracle::validate_minor_model(model, dmg);
        CHECK_FALSE(report.valid());
    }
    SUBCASE("missing minor edge") {
        auto model = small_identity_model(3);
        model.branches[0].hosts = {{0, 0}};
        // break the (0,0)-(0,1) adjacency by moving the (0,1) branch away
        model.branches[1].hosts = {{2, 2}};  // overlaps branch (2,2) too
        const auto report = oracle::validate_minor_model(model, none);
        CHECK_FALSE(report.valid());
        bool edge_violation = false;
        for (const auto& v : report.violations) {
            if (v.find("not realized") != std::string::npos) edge_violation = true;
        }
        CHECK(edge_violation);
    }
    SUBCASE("wrong depth field") {
        auto model = small_identity_model(3);
        model.depth = 2;
        const auto report = oracle::validate_minor_model(model, none);
        CHECK_FALSE(report.valid());
    }
    SUBCASE("duplicate minor vertex") {
        auto model = small_identity_model(2);
        model.branches[1].minor_vertex = model.branches[0].minor_vertex;
        const auto report = oracle::validate_minor_model(model, none);
        CHECK_FALSE(report.valid());
    }
}

TEST_CASE("path decomposition validation") {
    SUBCASE("single vertex, single bag") {
        oracle::VertexEdgeGraph graph;
        graph.vertices = {{0, 0}};
        PathDecomposition pd;
        pd.bags = {{{0, 0}}};
        const auto report = oracle::validate_path_decomposition(graph, pd);
        CHECK(report.valid());
        CHECK(report.width == 0);
    }
    SUBCASE("column sweep of the 4x4 grid has width 4") {
        const auto graph = oracle::remaining_graph(DamageSet(GridSpec(2, 4), {}));
        const auto report =
            oracle::validate_path_decomposition(graph, planar::grid_path_decomposition(4));
        CHECK(report.valid());
        CHECK(report.width == 4);
    }
    SUBCASE("an uncovered edge is named") {
        oracle::VertexEdgeGraph graph;
        graph.vertices = {{0, 0}, {0, 1}};
        graph.edges = {{{0, 0}, {0, 1}}};
        PathDecomposition pd;
        pd.bags = {{{0, 0}}, {{0, 1}}};
        const auto report = oracle::validate_path_decomposition(graph, pd);
        CHECK_FALSE(report.valid());
        CHECK(report.violations.size() == 1);
        CHECK(report.violations[0].find("edge") != std::string::npos);
    }
    SUBCASE("a gap in a vertex's bag run is caught") {
        oracle::VertexEdgeGraph graph;
        graph.vertices = {{0, 0}, {0, 1}};
        graph.edges = {{{0, 0}, {0, 1}}};
        PathDecomposition pd;
        pd.bags = {{{0, 0}, {0, 1}}, {{0, 1}}, {{0, 0}, {0, 1}}};
        CHECK_FALSE(oracle::validate_path_decomposition(graph, pd).valid());
    }
}

namespace {

oracle::VertexEdgeGraph path_graph(int n) {
    oracle::VertexEdgeGraph graph;
    for (int i = 0; i < n; ++i) graph.vertices.push_back({i});
    for (int i = 0; i + 1 < n; ++i) graph.edges.push_back({{i}, {i + 1}});
    return graph;
}

}  // namespace

TEST_CASE("exact pathwidth of simple graphs") {
    CHECK(oracle::pathwidth_exact(path_graph(6)) == 1);
    CHECK(oracle::pathwidth_exact(path_graph(1)) == 0);

    oracle::VertexEdgeGraph cycle = path_graph(6);
    cycle.edges.push_back({{5}, {0}});
    CHECK(oracle::pathwidth_exact(cycle) == 2);

    CHECK(oracle::pathwidth_exact(oracle::remaining_graph(DamageSet(GridSpec(2, 4), {}))) == 4);
}

TEST_CASE("pathwidth of the corner-diagonal instance from the worked example") {
    const DamageSet damage = planar::corner_diagonal_damage(5, 2);
    CHECK(oracle::pathwidth_exact(oracle::remaining_graph(damage)) == 3);
}

TEST_CASE("pathwidth DP agrees with the permutation brute force") {
    // all damage patterns of the 3x3 grid leaving at most 7 vertices
    const GridSpec spec(2, 3);
    for (unsigned mask = 0; mask < 512; ++mask) {
        if (9 - __builtin_popcount(mask) > 7) continue;
        std::vector<Coord> damaged;
        for (int id = 0; id < 9; ++id) {
            if ((mask >> id) & 1) damaged.push_back(spec.decode(static_cast<std::uint64_t>(id)));
        }
        const auto graph = oracle::remaining_graph(DamageSet(spec, std::move(damaged)));
        if (graph.vertices.empty()) continue;
        CHECK(oracle::pathwidth_exact(graph) == ts::permutation_pathwidth(graph));
    }
    // one rectangular case at the brute-force limit
    std::vector<Coord> none;
    const auto rect = oracle::remaining_graph(DamageSet(GridSpec(2, 3), {{2, 0}}));
    CHECK(oracle::pathwidth_exact(rect) == ts::permutation_pathwidth(rect));
}

TEST_CASE("pathwidth splits into components and enforces the per-component cap") {
    // two far-apart path segments in one grid
    std::vector<Coord> damaged;
    const GridSpec spec(2, 5);
    for (int i = 0; i < 5; ++i) damaged.push_back(Coord{2, i});  // middle row gone
    const auto graph = oracle::remaining_graph(DamageSet(spec, std::move(damaged)));
    CHECK(oracle::pathwidth_exact(graph) == 2);  // two 2x5 slabs

    // a connected 5x5 grid has 25 > 24 vertices
    const auto too_big = oracle::remaining_graph(DamageSet(spec, {}));
    CHECK_THROWS_AS(oracle::pathwidth_exact(too_big), CapacityError);
}

TEST_CASE("accepted grid minors never exceed the host's pathwidth") {
    std::uint64_t seed = 40;
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + static_cast<int>(seed % 2);
        const int m = 1 + static_cast<int>(seed % (n));
        const DamageSet damage = ts::random_damage(GridSpec(2, n), m, seed++);
        const MinorModel model = planar::find_grid_minor(damage);
        REQUIRE(oracle::validate_minor_model(model, damage).valid());
        const auto remaining = oracle::remaining_graph(damage);
        if (remaining.vertices.size() <= 24) {
            CHECK(oracle::pathwidth_exact(remaining) >= model.minor.side());
        }
    }
}

TEST_CASE("subcube oracle basics") {
    using hypercube::HypercubeDamage;
    CHECK(oracle::largest_subcube(HypercubeDamage(5, {})) == 5);
    CHECK(oracle::largest_subcube(HypercubeDamage(4, {0b0110})) == 3);
    CHECK(oracle::largest_subcube(HypercubeDamage(1, {0, 1})) == -1);
    CHECK(oracle::largest_subcube_vertices(HypercubeDamage(3, {0})) == 4);
    CHECK_THROWS_AS(oracle::largest_subcube(HypercubeDamage(17, {})), CapacityError);
}

TEST_CASE("pruned subcube scan agrees with full pattern enumeration") {
    std::uint64_t seed = 2024;
    for (int d = 2; d <= 10; d += 2) {
        for (int trial = 0; trial < 6; ++trial) {
            const int m = static_cast<int>(seed % (std::uint64_t{1} << std::min(d, 5)));
            const auto damage = ts::random_cube_damage(d, m, seed++);
            CHECK(oracle::largest_subcube(damage) == ts::naive_largest_subcube(damage));
        }
    }
}

TEST_SUITE_END();
