#include <doctest.h>

#include <string>

#include "gridsalvage/json_io.hpp"
#include "gridsalvage/oracle.hpp"
#include "gridsalvage/planar.hpp"
#include "test_support.hpp"

using namespace gridsalvage;
namespace ts = testsupport;

TEST_SUITE_BEGIN("planar");

TEST_CASE("guarantee values for the 25x25 worked example") {
    const BoundReport report = planar::bounds(25, 72);
    CHECK(report.subgraph_side == 2);  // ceil(sqrt(73)) = 9, floor(25/9) = 2
    CHECK(report.minor_side >= 3);
    CHECK(planar::bounds(25, 70).subgraph_side == 2);
    CHECK(planar::diagonal_blocking_side(25, 70) == 4);
}

TEST_CASE("no damage gives the whole grid in every bound") {
    for (int n : {1, 4, 9}) {
        const BoundReport report = planar::bounds(n, 0, 1);
        CHECK(report.subgraph_side == n);
        CHECK(report.minor_side == n);
        CHECK(report.shallow_side == n);
    }
}

TEST_CASE("bounds clamp to zero when everything is damaged") {
    const BoundReport report = planar::bounds(5, 26);
    CHECK(report.subgraph_side == 0);
    CHECK(report.minor_side == 0);
}

TEST_CASE("undamaged subgrid extraction meets its guarantee") {
    SUBCASE("whole grid when m = 0") {
        const DamageSet none(GridSpec(2, 7), {});
        const SubgridRegion region = planar::find_undamaged_subgrid(none);
        CHECK(region.side == 7);
        CHECK(region.origin == Coord{0, 0});
    }
    SUBCASE("lattice damage forces side 1 on the 6x6 grid") {
        const DamageSet damage = planar::lattice_damage(6, 1);
        const SubgridRegion region = planar::find_undamaged_subgrid(damage);
        CHECK(region.side == 1);
        CHECK(oracle::largest_undamaged_subgrid(damage) == 1);
    }
    SUBCASE("random damage: guaranteed side, region clear") {
        std::uint64_t seed = 500;
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 6 + static_cast<int>(seed % 15);
            const GridSpec spec(2, n);
            const int m = static_cast<int>(seed % (spec.vertex_count() / 2));
            const DamageSet damage = ts::random_damage(spec, m, seed++);
            const SubgridRegion region = planar::find_undamaged_subgrid(damage);
            CHECK(region.side >= planar::bounds(n, m).subgraph_side);
            for (const Coord& v : damage.vertices()) CHECK_FALSE(region.contains(v));
        }
    }
    SUBCASE("fully damaged grid yields no region") {
        std::vector<Coord> all;
        const GridSpec spec(2, 3);
        for (std::uint64_t id = 0; id < spec.vertex_count(); ++id) all.push_back(spec.decode(id));
        CHECK_THROWS_AS(planar::find_undamaged_subgrid(DamageSet(spec, all)), EmptyResultError);
    }
}

TEST_CASE("rows-and-columns minor inside a region") {
    const GridSpec spec(2, 5);
    SUBCASE("one damaged vertex leaves a 4x4 minor") {
        const DamageSet damage(spec, {{2, 2}});
        const MinorModel model = planar::rows_cols_minor(whole_grid_region(spec), damage);
        CHECK(model.minor.side() == 4);
        CHECK(oracle::validate_minor_model(model, damage).valid());
    }
    SUBCASE("two damaged vertices in one row still give side 3 or more") {
        const DamageSet damage(spec, {{2, 1}, {2, 3}});
        const MinorModel model = planar::rows_cols_minor(whole_grid_region(spec), damage);
        CHECK(model.minor.side() >= 3);
        CHECK(oracle::validate_minor_model(model, damage).valid());
    }
    SUBCASE("damage matching the side is refused") {
        const DamageSet damage(spec, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
        CHECK_THROWS_AS(planar::rows_cols_minor(whole_grid_region(spec), damage), NoGuaranteeError);
    }
    SUBCASE("damage outside the region does not count") {
        const DamageSet damage(spec, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
        const SubgridRegion region{{1, 1}, 4};
        const MinorModel model = planar::rows_cols_minor(region, damage);
        CHECK(model.minor.side() == 4);
        CHECK(oracle::validate_minor_model(model, damage).valid());
    }
}

TEST_CASE("grid minor extraction across both regimes") {
    SUBCASE("no damage gives the identity minor at depth 0") {
        const DamageSet none(GridSpec(2, 6), {});
        const MinorModel model = planar::find_grid_minor(none);
        CHECK(model.minor.side() == 6);
        CHECK(model.depth == 0);
        CHECK(oracle::validate_minor_model(model, none).valid());
    }
    SUBCASE("the 25x25, 72-damage example always reaches side 3") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const DamageSet damage = ts::random_damage(GridSpec(2, 25), 72, seed);
            const MinorModel model = planar::find_grid_minor(damage);
            CHECK(model.minor.side() >= 3);
            CHECK(oracle::validate_minor_model(model, damage).valid());
        }
    }
    SUBCASE("heavy random damage still meets the published guarantee") {
        for (std::uint64_t seed = 60; seed < 66; ++seed) {
            const DamageSet damage = ts::random_damage(GridSpec(2, 50), 500, seed);
            const MinorModel model = planar::find_grid_minor(damage);
            CHECK(model.minor.side() >= planar::bounds(50, 500).minor_side);
            CHECK(oracle::validate_minor_model(model, damage).valid());
        }
    }
    SUBCASE("light damage: side at least max(n-m, minor_side), 100 trials per point") {
        for (const auto& [n, m] : std::vector<std::pair<int, int>>{{8, 3}, {10, 7}, {12, 11}}) {
            for (std::uint64_t trial = 0; trial < 100; ++trial) {
                const DamageSet damage = ts::random_damage(GridSpec(2, n), m, 7000 + trial);
                const MinorModel model = planar::find_grid_minor(damage);
                CHECK(model.minor.side() >=
                      std::max(n - m, planar::bounds(n, m).minor_side));
                CHECK(oracle::validate_minor_model(model, damage).valid());
            }
        }
    }
    SUBCASE("everything damaged yields the empty-result signal") {
        const GridSpec spec(2, 3);
        std::vector<Coord> all;
        for (std::uint64_t id = 0; id < spec.vertex_count(); ++id) all.push_back(spec.decode(id));
        CHECK_THROWS_AS(planar::find_grid_minor(DamageSet(spec, all)), EmptyResultError);
    }
}

TEST_CASE("minor realization from explicit path families") {
    SUBCASE("straight rows and columns of an undamaged grid") {
        const GridSpec spec(2, 4);
        const DamageSet none(spec, {});
        std::vector<std::vector<Coord>> h_paths, v_paths;
        for (int i = 0; i < 4; ++i) {
            std::vector<Coord> h, v;
            for (int j = 0; j < 4; ++j) {
                h.push_back(Coord{i, j});
                v.push_back(Coord{j, i});
            }
            h_paths.push_back(h);
            v_paths.push_back(v);
        }
        const MinorModel model = planar::realize_minor_from_paths(h_paths, v_paths, none);
        CHECK(model.minor.side() == 4);
        CHECK(model.depth == 0);
        CHECK(oracle::validate_minor_model(model, none).valid());
    }
    SUBCASE("5x5 grid, one damaged vertex, four rows and four columns") {
        const GridSpec spec(2, 5);
        const DamageSet damage(spec, {{2, 2}});
        std::vector<std::vector<Coord>> h_paths, v_paths;
        for (int i : {0, 1, 3, 4}) {
            std::vector<Coord> h, v;
            for (int j = 0; j < 5; ++j) {
                h.push_back(Coord{i, j});
                v.push_back(Coord{j, i});
            }
            h_paths.push_back(h);
            v_paths.push_back(v);
        }
        const MinorModel model = planar::realize_minor_from_paths(h_paths, v_paths, damage);
        CHECK(model.minor.side() == 4);
        CHECK(oracle::validate_minor_model(model, damage).valid());
    }
    SUBCASE("five straight paths beat the n-m bound after four damaged vertices") {
        const GridSpec spec(2, 8);
        const DamageSet damage(spec, {{2, 2}, {2, 5}, {5, 2}, {5, 5}});
        std::vector<std::vector<Coord>> h_paths, v_paths;
        for (int i : {0, 1, 3, 4, 6}) {
            std::vector<Coord> h, v;
            for (int j = 0; j < 8; ++j) {
                h.push_back(Coord{i, j});
                v.push_back(Coord{j, i});
            }
            h_paths.push_back(h);
            v_paths.push_back(v);
        }
        const MinorModel model = planar::realize_minor_from_paths(h_paths, v_paths, damage);
        CHECK(model.minor.side() == 5);
        CHECK(model.minor.side() > 8 - 4);
        CHECK(oracle::validate_minor_model(model, damage).valid());
    }
    SUBCASE("wiggling paths cross two half-damaged rows") {
        const GridSpec spec(2, 8);
        const DamageSet damage(spec, {{2, 0}, {2, 1}, {2, 2}, {2, 3},
                                      {5, 4}, {5, 5}, {5, 6}, {5, 7}});
        const std::vector<Coord> v0{{0, 4}, {1, 4}, {2, 4}, {3, 4}, {3, 3}, {3, 2},
                                    {3, 1}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}};
        const std::vector<Coord> v1{{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 4},
                                    {4, 3}, {4, 2}, {4, 1}, {5, 1}, {6, 1}, {7, 1}};
        std::vector<Coord> h0, h1;
        for (int j = 0; j < 8; ++j) {
            h0.push_back(Coord{0, j});
            h1.push_back(Coord{7, j});
        }
        const MinorModel model = planar::realize_minor_from_paths({h0, h1}, {v0, v1}, damage);
        CHECK(model.minor.side() == 2);
        CHECK(model.minor.side() > 0);  // n - m is 0 here
        CHECK(oracle::validate_minor_model(model, damage).valid());
    }
    SUBCASE("precondition violations are named") {
        const GridSpec spec(2, 4);
        const DamageSet damage(spec, {{1, 1}});
        std::vector<Coord> row0{{0, 0}, {0, 1}, {0, 2}, {0, 3}};
        std::vector<Coord> row1{{1, 0}, {1, 1}, {1, 2}, {1, 3}};  // hits the damage
        std::vector<Coord> col0{{0, 0}, {1, 0}, {2, 0}, {3, 0}};  // shares (0,0) with row0
        std::vector<Coord> col3{{0, 3}, {1, 3}, {2, 3}, {3, 3}};

        CHECK_THROWS_WITH_AS(planar::realize_minor_from_paths({row0, row1}, {col0, col3}, damage),
                             doctest::Contains("damaged"), InvalidInputError);

        const DamageSet none(spec, {});
        CHECK_THROWS_WITH_AS(planar::realize_minor_from_paths({row0, row0}, {col0, col3}, none),
                             doctest::Contains("disjoint"), InvalidInputError);

        // touches column 0 at three vertices with a gap in between
        const std::vector<Coord> weave{{2, 0}, {2, 1}, {1, 1}, {1, 0},
                                       {0, 0}, {0, 1}, {0, 2}, {0, 3}};
        const std::vector<Coord> bottom{{3, 0}, {3, 1}, {3, 2}, {3, 3}};
        const std::vector<Coord> v_left{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
        CHECK_THROWS_WITH_AS(
            planar::realize_minor_from_paths({weave, bottom}, {v_left, col3}, none),
            doctest::Contains("connected segment"), InvalidInputError);
    }
}

TEST_CASE("shallow minors meet their depth and side guarantees") {
    SUBCASE("an inactive depth bound reproduces find_grid_minor exactly") {
        const DamageSet damage = ts::random_damage(GridSpec(2, 9), 20, 11);
        const MinorModel shallow = planar::find_shallow_minor(damage, 5);  // 2*5 >= 9
        const MinorModel plain = planar::find_grid_minor(damage);
        CHECK(serialize(shallow) == serialize(plain));
    }
    SUBCASE("light damage, whole-grid case") {
        for (std::uint64_t seed = 300; seed < 310; ++seed) {
            const DamageSet damage = ts::random_damage(GridSpec(2, 16), 4, seed);
            const MinorModel model = planar::find_shallow_minor(damage, 3);
            CHECK(model.minor.side() >= 12);
            CHECK(model.depth <= 3);
            CHECK(oracle::validate_minor_model(model, damage).valid());
        }
    }
    SUBCASE("heavy damage, capped partition case") {
        for (std::uint64_t seed = 320; seed < 326; ++seed) {
            const DamageSet damage = ts::random_damage(GridSpec(2, 32), 128, seed);
            const MinorModel model = planar::find_shallow_minor(damage, 2);
            CHECK(model.depth <= 2);
            CHECK(model.minor.side() >= planar::bounds(32, 128, 2).shallow_side);
            CHECK(oracle::validate_minor_model(model, damage).valid());
        }
    }
    SUBCASE("depth never exceeds the bound across random instances") {
        std::uint64_t seed = 900;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 8 + static_cast<int>(seed % 20);
            const int m = static_cast<int>(seed % (static_cast<std::uint64_t>(n) * n / 2));
            const int lambda = 1 + static_cast<int>(seed % 4);
            const DamageSet damage = ts::random_damage(GridSpec(2, n), m, seed++);
            try {
                const MinorModel model = planar::find_shallow_minor(damage, lambda);
                CHECK(model.depth <= lambda);
                CHECK(model.minor.side() >= planar::bounds(n, m, lambda).shallow_side);
                CHECK(oracle::validate_minor_model(model, damage).valid());
            } catch (const EmptyResultError&) {
                CHECK(planar::bounds(n, m, lambda).shallow_side == 0);
            }
        }
    }
    SUBCASE("invalid depth bound") {
        const DamageSet none(GridSpec(2, 4), {});
        CHECK_THROWS_AS(planar::find_shallow_minor(none, 0), InvalidInputError);
    }
}

TEST_CASE("lattice damage counts and tightness") {
    const DamageSet big = planar::lattice_damage(25, 2);
    CHECK(big.size() == 64);
    CHECK(oracle::largest_undamaged_subgrid(big) == 2);

    const DamageSet one = planar::lattice_damage(7, 6);
    CHECK(one.size() == 1);
    CHECK(one.vertices() == std::vector<Coord>{{6, 6}});
    CHECK(oracle::largest_undamaged_subgrid(one) == 6);

    const DamageSet nine = planar::lattice_damage(6, 1);
    CHECK(nine.size() == 9);
    CHECK(oracle::largest_undamaged_subgrid(nine) == 1);

    CHECK_THROWS_AS(planar::lattice_damage(5, 0), InvalidInputError);
    CHECK_THROWS_AS(planar::lattice_damage(5, 5), InvalidInputError);
}

TEST_CASE("corner-diagonal damage and its decomposition") {
    SUBCASE("damage layout") {
        const DamageSet damage = planar::corner_diagonal_damage(5, 2);
        CHECK(damage.vertices() == std::vector<Coord>{{0, 0}, {1, 1}});
        CHECK(planar::corner_diagonal_damage(6, 0).empty());
        CHECK_THROWS_AS(planar::corner_diagonal_damage(5, 3), InvalidInputError);
    }
    SUBCASE("undamaged 4x4 grid has pathwidth 4, matching the column sweep") {
        CHECK(oracle::pathwidth_exact(oracle::remaining_graph(DamageSet(GridSpec(2, 4), {}))) == 4);
        CHECK(planar::grid_path_decomposition(4).width() == 4);
    }
    SUBCASE("width 3 decomposition after two damaged vertices on the 5x5 grid") {
        const PathDecomposition pd = planar::corner_diagonal_decomposition(5, 2);
        const auto graph = oracle::remaining_graph(planar::corner_diagonal_damage(5, 2));
        const auto report = oracle::validate_path_decomposition(graph, pd);
        CHECK(report.valid());
        CHECK(report.width == 3);
        CHECK(oracle::pathwidth_exact(graph) == 3);
    }
    SUBCASE("width follows n - m across small cases") {
        for (int n = 2; n <= 9; ++n) {
            for (int m = 1; m <= n / 2; ++m) {
                const PathDecomposition pd = planar::corner_diagonal_decomposition(n, m);
                const auto graph = oracle::remaining_graph(planar::corner_diagonal_damage(n, m));
                const auto report = oracle::validate_path_decomposition(graph, pd);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(report.valid());
                CHECK(report.width <= n - m);
            }
        }
    }
    SUBCASE("m = 0 is out of this builder's domain") {
        CHECK_THROWS_AS(planar::corner_diagonal_decomposition(4, 0), InvalidInputError);
    }
}

TEST_CASE("column-sweep decomposition of the full grid") {
    CHECK(planar::grid_path_decomposition(1).bags.size() == 1);
    CHECK(planar::grid_path_decomposition(1).width() == 0);
    for (int n : {4, 6}) {
        const PathDecomposition pd = planar::grid_path_decomposition(n);
        const auto graph = oracle::remaining_graph(DamageSet(GridSpec(2, n), {}));
        const auto report = oracle::validate_path_decomposition(graph, pd);
        CHECK(report.valid());
        CHECK(report.width == n);
    }
}

TEST_CASE("diagonal residue damage blocks larger minors") {
    SUBCASE("69 vertices suffice on the 25x25 grid") {
        const DamageSet damage = planar::diagonal_residue_damage(25, 4);
        CHECK(damage.size() == 69);
    }
    SUBCASE("budget never exceeds ceil(n^2/(2k+1))") {
        for (int n = 3; n <= 12; ++n) {
            for (int k = 1; 2 * k + 1 <= 2 * n - 1 && k <= 4; ++k) {
                const DamageSet damage = planar::diagonal_residue_damage(n, k);
                const std::uint64_t cap =
                    (static_cast<std::uint64_t>(n) * n + 2 * k) / (2 * k + 1);
                CHECK(damage.size() <= cap);
            }
        }
    }
    SUBCASE("remaining pathwidth is at most k on instances the oracle can cover") {
        for (int n = 3; n <= 7; ++n) {
            for (int k = 1; k <= 2; ++k) {
                const DamageSet damage = planar::diagonal_residue_damage(n, k);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(oracle::pathwidth_exact(oracle::remaining_graph(damage)) <= k);
            }
        }
    }
    SUBCASE("the strip ordering witnesses the width directly") {
        for (int n : {4, 5, 7, 9, 12, 14, 19, 26}) {
            for (int k = 1; k <= 5 && 2 * k + 1 <= 2 * n - 1; ++k) {
                const PathDecomposition pd = planar::diagonal_residue_decomposition(n, k);
                const auto graph =
                    oracle::remaining_graph(planar::diagonal_residue_damage(n, k));
                const auto report = oracle::validate_path_decomposition(graph, pd);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(report.valid());
                CHECK(report.width <= k);
            }
        }
    }
}

TEST_CASE("diagonal damage segments for the shallow adversary") {
    SUBCASE("a single affordable segment sits at the corner lattice cell") {
        const DamageSet damage = planar::shallow_segments_damage(9, 5, 2);
        CHECK(damage.size() == 5);
        // one segment of 2*2+1 vertices along a diagonal
        int on_diagonal = 0;
        const Coord first = damage.vertices().front();
        for (const Coord& v : damage.vertices()) {
            if (v[0] - first[0] == v[1] - first[1]) ++on_diagonal;
        }
        CHECK(on_diagonal == 5);
    }
    SUBCASE("the 25x25 example packs 14 segments of 5") {
        const DamageSet damage = planar::shallow_segments_damage(25, 72, 2);
        CHECK(damage.size() == 70);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(planar::shallow_segments_damage(25, 4, 2), InvalidInputError);
        CHECK_THROWS_AS(planar::shallow_segments_damage(4, 72, 2), InvalidInputError);
        CHECK_THROWS_AS(planar::shallow_segments_damage(25, 72, 0), InvalidInputError);
    }
}

TEST_SUITE_END();
