#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"
#include "polytuple/gen.hpp"
#include "polytuple/hypergraph.hpp"
#include "polytuple/ranges.hpp"

using namespace polytuple;

TEST_CASE("pair depth on small fixtures") {
    SUBCASE("triangle: every pair admits an empty disk") {
        const PointSet p = PointSet::make(2, {{0, 0}, {4, 0}, {1, 3}});
        CHECK(pair_depth_disks(p, 0, 1) == 0);
        CHECK(pair_depth_disks(p, 0, 2) == 0);
        CHECK(pair_depth_disks(p, 1, 2) == 0);
    }
    SUBCASE("collinear middle point is unavoidable") {
        const PointSet p = PointSet::make(2, {{0, 0}, {1, 0}, {2, 0}});
        CHECK(pair_depth_disks(p, 0, 2) == 1);
        CHECK(pair_depth_disks(p, 2, 0) == 1);
        CHECK(pair_depth_disks(p, 0, 1) == 0);
        CHECK(pair_depth_disks(p, 1, 2) == 0);
    }
    SUBCASE("square diagonal always drags in a side corner") {
        const PointSet p = PointSet::make(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
        CHECK(pair_depth_disks(p, 0, 3) == 1);
        CHECK(pair_depth_disks(p, 1, 2) == 1);
        CHECK(pair_depth_disks(p, 0, 1) == 0);
    }
    SUBCASE("bad arguments") {
        const PointSet p = PointSet::make(2, {{0, 0}, {1, 0}, {0, 0}});
        CHECK_THROWS_AS(pair_depth_disks(p, 1, 1), input_error);
        CHECK_THROWS_AS(pair_depth_disks(p, 0, 3), input_error);
        CHECK_THROWS_AS(pair_depth_disks(p, 0, 2), input_error);  // coincident
        CHECK_THROWS_AS(pair_depth_disks(PointSet::make(1, {{0}, {1}}), 0, 1),
                        input_error);
    }
}

TEST_CASE("pair depth sweep matches the enumerated disk family") {
    // Two fully independent routes to the same number: the pencil sweep versus
    // minimizing |e \ {x, y}| over the canonical disk ranges.
    for (uint64_t seed : {101, 102, 103, 104, 105, 106, 107, 108, 109, 110}) {
        const PointSet p = gen_random_general_position(10, 2, 2000, seed);
        const Hypergraph h = enumerate_ranges(p, RangeKind::disks2d);
        for (Vertex i = 0; i < p.size(); ++i)
            for (Vertex j = i + 1; j < p.size(); ++j) {
                CAPTURE(seed);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(pair_depth_disks(p, i, j) == depth_of(h, {i, j}));
            }
    }
}

TEST_CASE("all-pairs depths agree with single-pair calls") {
    const PointSet p = gen_random_general_position(14, 2, 3000, 55);
    const auto depths = all_pair_depths_disks(p);
    REQUIRE(depths.size() == binom(14, 2));
    for (Vertex i = 0; i < p.size(); ++i)
        for (Vertex j = i + 1; j < p.size(); ++j)
            CHECK(depths[pair_rank(p.size(), i, j)] == pair_depth_disks(p, i, j));

    // Deterministic under any worker count.
    setenv("POLYTUPLE_THREADS", "3", 1);
    CHECK(all_pair_depths_disks(p) == depths);
    setenv("POLYTUPLE_THREADS", "1", 1);
    CHECK(all_pair_depths_disks(p) == depths);
    unsetenv("POLYTUPLE_THREADS");
}

TEST_CASE("pair depth scales to mid-size instances") {
    // Smoke check that the sweep stays exact away from tiny n: depths are
    // bounded by n - 2 and symmetric in the pair order.
    const PointSet p = gen_random_general_position(60, 2, 100000, 99);
    int64_t max_depth = -1;
    for (Vertex i = 0; i < 60; i += 7)
        for (Vertex j = i + 1; j < 60; j += 3) {
            const int64_t d = pair_depth_disks(p, i, j);
            CHECK(d >= 0);
            CHECK(d <= 58);
            CHECK(pair_depth_disks(p, j, i) == d);
            max_depth = std::max(max_depth, d);
        }
    CHECK(max_depth >= 1);  // 60 points cannot all be mutually shallow
}
