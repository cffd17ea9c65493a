#include <doctest.h>

#include <vector>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"
#include "polytuple/exact.hpp"

using namespace polytuple;

namespace {

// Independent 4x4 lifted determinant; equals the translated 3x3 form.
int incircle_reference(const Coord* a, const Coord* b, const Coord* c, const Coord* p) {
    std::vector<std::vector<BigInt>> m(4, std::vector<BigInt>(4));
    const Coord* rows[4] = {a, b, c, p};
    for (int i = 0; i < 4; ++i) {
        m[i][0] = rows[i][0];
        m[i][1] = rows[i][1];
        m[i][2] = BigInt(rows[i][0]) * rows[i][0] + BigInt(rows[i][1]) * rows[i][1];
        m[i][3] = 1;
    }
    return sign_of(determinant(std::move(m)));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("37/10") == BigRat(37, 10));
    CHECK(parse_rational("3.7") == BigRat(37, 10));
    CHECK(parse_rational("126") == BigRat(126));
    CHECK(parse_rational("-0.25") == BigRat(-1, 4));
    CHECK(parse_rational("1e-2") == BigRat(1, 100));
    CHECK(parse_rational("2.5e3") == BigRat(2500));
    CHECK(parse_rational(" 0.3 ") == BigRat(3, 10));
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("abc"), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK(rational_to_string(BigRat(37, 10)) == "37/10");
    CHECK(rational_to_string(BigRat(4)) == "4");
    CHECK(rational_from_double(0.3) == BigRat(3, 10));
    CHECK(rational_from_double(4.7) == BigRat(47, 10));
    CHECK(rational_to_double(BigRat(1, 2)) == 0.5);
}

TEST_CASE("floor, ceil, powers, roots") {
    CHECK(floor_rat(BigRat(7, 2)) == 3);
    CHECK(floor_rat(BigRat(-7, 2)) == -4);
    CHECK(ceil_rat(BigRat(7, 2)) == 4);
    CHECK(ceil_rat(BigRat(-7, 2)) == -3);
    CHECK(ceil_rat(BigRat(6)) == 6);
    CHECK(pow_rat(BigRat(37, 10), 2) == BigRat(1369, 100));

    // Frozen thresholds: ceil(3.7^2) and ceil(3.7^3).
    CHECK(ceil_pow_clamped(BigRat(37, 10), 2) == 14);
    CHECK(ceil_pow_clamped(BigRat(37, 10), 3) == 51);
    CHECK(ceil_pow_clamped(BigRat(37, 10), 1) == 4);
    CHECK(ceil_pow_clamped(BigRat(37, 10), 64) > 1'000'000'000);

    CHECK(ceil_root(BigInt(900), 2) == 30);
    CHECK(ceil_root(BigInt(904), 2) == 31);
    CHECK(ceil_root(BigInt(16), 4) == 2);
    CHECK(ceil_root(BigInt(17), 4) == 3);
    CHECK(ceil_root(BigInt(7), 1) == 7);
    CHECK(ceil_root(BigInt(0), 3) == 0);

    CHECK(euler_lo() < euler_hi());
    CHECK(euler_lo() > BigRat(27182, 10000));
    CHECK(euler_hi() < BigRat(27183, 10000));
    CHECK(euler_hi() - euler_lo() == BigRat(1, BigInt("1000000000000000")));
}

TEST_CASE("orientation and incircle match the big-integer reference") {
    Coord a[2] = {0, 0}, b[2] = {4, 0}, c[2] = {0, 4};
    Coord in[2] = {1, 1}, out[2] = {9, 9}, on[2] = {4, 4};
    CHECK(orient2d(a, b, c) > 0);
    CHECK(orient2d(a, c, b) < 0);
    Coord col[2] = {8, 0};
    CHECK(orient2d(a, b, col) == 0);

    CHECK(side_of_circumcircle(a, b, c, in) == -1);
    CHECK(side_of_circumcircle(a, b, c, out) == 1);
    CHECK(side_of_circumcircle(a, b, c, on) == 0);   // (4,4) lies on the circle
    CHECK(side_of_circumcircle(a, c, b, in) == -1);  // orientation-independent
    CHECK(side_of_circumcircle(a, c, b, on) == 0);

    CounterRng rng(123);
    for (int trial = 0; trial < 400; ++trial) {
        Coord pts[4][2];
        for (auto& pt : pts) {
            pt[0] = rng.in_range(-coord_limit, coord_limit);
            pt[1] = rng.in_range(-coord_limit, coord_limit);
        }
        CHECK(incircle2d(pts[0], pts[1], pts[2], pts[3]) ==
              incircle_reference(pts[0], pts[1], pts[2], pts[3]));
    }
}

TEST_CASE("diametral side test") {
    Coord a[2] = {0, 0}, b[2] = {4, 0};
    Coord mid[2] = {2, 0}, apex[2] = {2, 2}, outside[2] = {5, 0};
    CHECK(side_of_diametral(a, b, mid, 2) == -1);
    CHECK(side_of_diametral(a, b, apex, 2) == 0);  // right angle: on the circle
    CHECK(side_of_diametral(a, b, outside, 2) == 1);
    CHECK(side_of_diametral(a, b, a, 2) == 0);
    CHECK(side_of_diametral(a, b, b, 2) == 0);
}

TEST_CASE("sphere through subsets: closed forms and degeneracies") {
    // Circumcircle of a right triangle: center (2,2), r^2 = 8.
    Coord a[2] = {0, 0}, b[2] = {4, 0}, c[2] = {0, 4};
    auto s3 = sphere_through({a, b, c}, 2);
    REQUIRE(s3.has_value());
    CHECK(BigRat(s3->center_num[0], s3->den) == BigRat(2));
    CHECK(BigRat(s3->center_num[1], s3->den) == BigRat(2));
    CHECK(BigRat(s3->radius2_scaled, s3->den * s3->den) == BigRat(8));

    // Minimum sphere through two points is the diametral one.
    auto s2 = sphere_through({a, b}, 2);
    REQUIRE(s2.has_value());
    CHECK(BigRat(s2->center_num[0], s2->den) == BigRat(2));
    CHECK(BigRat(s2->center_num[1], s2->den) == BigRat(0));
    CHECK(BigRat(s2->radius2_scaled, s2->den * s2->den) == BigRat(4));

    // Collinear triple: no circle through them.
    Coord d[2] = {8, 0};
    CHECK_FALSE(sphere_through({a, b, d}, 2).has_value());

    // Four cocircular points admit a common circle.
    Coord q1[2] = {0, 0}, q2[2] = {2, 0}, q3[2] = {2, 2}, q4[2] = {0, 2};
    auto s4 = sphere_through({q1, q2, q3, q4}, 2);
    REQUIRE(s4.has_value());
    CHECK(BigRat(s4->center_num[0], s4->den) == BigRat(1));
    CHECK(BigRat(s4->radius2_scaled, s4->den * s4->den) == BigRat(2));

    // Singleton: zero-radius sphere at the point.
    auto s1 = sphere_through({a}, 2);
    REQUIRE(s1.has_value());
    CHECK(s1->radius2_scaled == 0);
    CHECK(s1->side_of(a) == 0);
    CHECK(s1->side_of(b) == 1);
}

TEST_CASE("sphere classification agrees with the 2-D integer predicates") {
    CounterRng rng(321);
    int done = 0;
    while (done < 200) {
        Coord pts[3][2];
        for (auto& pt : pts) {
            pt[0] = rng.in_range(-1000, 1000);
            pt[1] = rng.in_range(-1000, 1000);
        }
        if (orient2d(pts[0], pts[1], pts[2]) == 0) continue;
        auto sphere = sphere_through({pts[0], pts[1], pts[2]}, 2);
        REQUIRE(sphere.has_value());
        for (int probe = 0; probe < 20; ++probe) {
            Coord q[2] = {rng.in_range(-1200, 1200), rng.in_range(-1200, 1200)};
            CHECK(sphere->side_of(q) == side_of_circumcircle(pts[0], pts[1], pts[2], q));
        }
        // Pair route against the diametral predicate.
        auto dia = sphere_through({pts[0], pts[1]}, 2);
        REQUIRE(dia.has_value());
        for (int probe = 0; probe < 20; ++probe) {
            Coord q[2] = {rng.in_range(-1200, 1200), rng.in_range(-1200, 1200)};
            CHECK(dia->side_of(q) == side_of_diametral(pts[0], pts[1], q, 2));
        }
        ++done;
    }
}

TEST_CASE("sphere through subsets in higher dimension") {
    // Regular simplex corners in 3-D share a sphere centered at the centroid-ish point.
    Coord a[3] = {0, 0, 0}, b[3] = {2, 0, 0}, c[3] = {0, 2, 0}, d[3] = {0, 0, 2};
    auto s = sphere_through({a, b, c, d}, 3);
    REQUIRE(s.has_value());
    CHECK(BigRat(s->center_num[0], s->den) == BigRat(1));
    CHECK(BigRat(s->center_num[1], s->den) == BigRat(1));
    CHECK(BigRat(s->center_num[2], s->den) == BigRat(1));
    CHECK(s->side_of(a) == 0);
    CHECK(s->side_of(b) == 0);
    Coord center[3] = {1, 1, 1};
    CHECK(s->side_of(center) == -1);

    // Three collinear points in 3-D: no common sphere.
    Coord l1[3] = {0, 0, 0}, l2[3] = {1, 0, 0}, l3[3] = {2, 0, 0};
    CHECK_FALSE(sphere_through({l1, l2, l3}, 3).has_value());

    // Two points in 3-D: diametral ball.
    auto dia = sphere_through({a, b}, 3);
    REQUIRE(dia.has_value());
    CHECK(BigRat(dia->radius2_scaled, dia->den * dia->den) == BigRat(1));
}

TEST_CASE("degeneracy determinants") {
    Coord a[2] = {0, 0}, b[2] = {2, 0}, c[2] = {4, 0}, t[2] = {1, 5};
    CHECK(affinely_dependent({a, b, c}, 2));
    CHECK_FALSE(affinely_dependent({a, b, t}, 2));

    Coord q1[2] = {0, 0}, q2[2] = {2, 0}, q3[2] = {2, 2}, q4[2] = {0, 2};
    CHECK(cospherical_or_flat({q1, q2, q3, q4}, 2));
    Coord q5[2] = {1, 7};
    CHECK(cospherical_or_flat({q1, q2, q3, q5}, 2) ==
          (incircle2d(q1, q2, q3, q5) == 0));

    std::vector<std::vector<BigInt>> id3(3, std::vector<BigInt>(3, 0));
    for (int i = 0; i < 3; ++i) id3[i][i] = 1;
    CHECK(determinant(id3) == 1);
    CHECK(determinant({{BigInt(2), BigInt(3)}, {BigInt(4), BigInt(6)}}) == 0);
    CHECK(determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
}

TEST_CASE("integer roots in both directions") {
    CHECK(floor_root(BigInt(900), 2) == 30);
    CHECK(floor_root(BigInt(899), 2) == 29);
    CHECK(floor_root(BigInt(16), 4) == 2);
    CHECK(floor_root(BigInt(15), 4) == 1);
    CHECK(floor_root(BigInt(0), 3) == 0);
    CHECK(floor_root_big(pow(BigInt(10), 30), 2) == pow(BigInt(10), 15));
    CHECK(ceil_root_big(pow(BigInt(10), 30) + 1, 2) == pow(BigInt(10), 15) + 1);

    // Roots beyond int64 stay available through the wide variants only.
    CHECK_THROWS_AS(ceil_root(pow(BigInt(2), 130), 1), resource_error);
    CHECK(ceil_root_big(pow(BigInt(2), 130), 1) == pow(BigInt(2), 130));
}

TEST_CASE("logarithm brackets pin the known digits") {
    const auto [lo2, hi2] = ln_bounds(2, 64);
    CHECK(lo2 <= hi2);
    CHECK(lo2 > BigRat(BigInt("6931471805599453"), pow(BigInt(10), 16)));
    CHECK(hi2 < BigRat(BigInt("6931471805599454"), pow(BigInt(10), 16)));

    const auto [lo3, hi3] = ln_bounds(3, 64);
    CHECK(lo3 > BigRat(BigInt("10986122886681096"), pow(BigInt(10), 16)));
    CHECK(hi3 < BigRat(BigInt("10986122886681097"), pow(BigInt(10), 16)));

    const auto [lo1, hi1] = ln_bounds(1, 8);
    CHECK(lo1 == 0);
    CHECK(hi1 == 0);

    // Powers of two exercise the pure s * ln 2 path.
    const auto [lo8, hi8] = ln_bounds(8, 64);
    CHECK(lo8 > BigRat(BigInt("20794415416798359"), pow(BigInt(10), 16)));
    CHECK(hi8 < BigRat(BigInt("20794415416798360"), pow(BigInt(10), 16)));

    // Brackets tighten monotonically with more terms.
    const auto [coarse_lo, coarse_hi] = ln_bounds(126, 4);
    const auto [fine_lo, fine_hi] = ln_bounds(126, 32);
    CHECK(coarse_lo <= fine_lo);
    CHECK(fine_hi <= coarse_hi);
    CHECK(fine_lo > BigRat(BigInt("48362819069514779"), pow(BigInt(10), 16)));
    CHECK(fine_hi < BigRat(BigInt("48362819069514780"), pow(BigInt(10), 16)));

    CHECK_THROWS_AS(ln_bounds(0, 16), input_error);
}
