#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "polytuple/errors.hpp"
#include "polytuple/gen.hpp"
#include "polytuple/ranges.hpp"
#include "polytuple/search.hpp"
#include "test_util.hpp"

using namespace polytuple;
using namespace polytuple::testutil;

namespace {

Hypergraph all_pairs(uint32_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Hypergraph::normalized(n, std::move(edges));
}

Hypergraph cycle(uint32_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Hypergraph::normalized(n, std::move(edges));
}

}  // namespace

TEST_CASE("one big edge is vertex-bichromatic from f = 1") {
    const Hypergraph h = Hypergraph::normalized(3, {{0, 1, 2}});
    const ExactFResult result = exact_f(h, 1, 2);
    CHECK(result.status == SearchStatus::found);
    CHECK(result.f == 1);
}

TEST_CASE("all pairs of four vertices force f = 3 for two vertex colors") {
    const Hypergraph h = all_pairs(4);
    const ExactFResult result = exact_f(h, 1, 2);
    CHECK(result.status == SearchStatus::found);
    CHECK(result.f == 3);

    CHECK(exists_polychromatic(h, 1, 2, 2).status == SearchStatus::none);
    const SearchResult at3 = exists_polychromatic(h, 1, 2, 3);
    CHECK(at3.status == SearchStatus::found);  // vacuous: no edge reaches size 3
    CHECK(at3.coloring.has_value());
    CHECK(naive_poly_violations(h, *at3.coloring, 3).empty());
}

TEST_CASE("cycles behave like proper coloring at f = 2") {
    const SearchResult even = exists_polychromatic(cycle(6), 1, 2, 2);
    CHECK(even.status == SearchStatus::found);
    CHECK(naive_poly_violations(cycle(6), *even.coloring, 2).empty());

    CHECK(exists_polychromatic(cycle(5), 1, 2, 2).status == SearchStatus::none);

    // Three colors on two-vertex edges can never fit: decided without search.
    const SearchResult three = exists_polychromatic(cycle(5), 1, 3, 2);
    CHECK(three.status == SearchStatus::none);
    CHECK(three.nodes == 0);
}

TEST_CASE("edgeless and vacuous instances succeed with the zero coloring") {
    const Hypergraph empty = Hypergraph::normalized(4, {});
    const ExactFResult result = exact_f(empty, 2, 3);
    CHECK(result.status == SearchStatus::found);
    CHECK(result.f == 1);

    const Hypergraph h = Hypergraph::normalized(4, {{0, 1, 2}});
    const SearchResult vacuous = exists_polychromatic(h, 2, 2, 4);
    CHECK(vacuous.status == SearchStatus::found);
    CHECK(vacuous.coloring->colors ==
          std::vector<uint32_t>(vacuous.coloring->colors.size(), 0));
}

TEST_CASE("search decisions match exhaustive enumeration") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        CounterRng rng(seed * 977);
        const uint32_t n = 3 + static_cast<uint32_t>(rng.below(4));  // 3..6
        const Hypergraph h = random_hypergraph(rng, n, 7);
        for (const uint32_t t : {1u, 2u}) {
            if (t > n) continue;
            for (const uint32_t k : {2u, 3u}) {
                if (k == 3 && binom(n, t) > 10) continue;  // keep 3^C(n,t) small
                for (uint32_t f = 1; f <= 5; ++f) {
                    const SearchResult got = exists_polychromatic(h, t, k, f);
                    const bool expected = naive_exists_polychromatic(h, t, k, f);
                    REQUIRE(got.status != SearchStatus::indeterminate);
                    CHECK((got.status == SearchStatus::found) == expected);
                    if (got.status == SearchStatus::found) {
                        got.coloring->validate();
                        CHECK(naive_poly_violations(h, *got.coloring, f).empty());
                    }
                }
            }
        }
    }
}

TEST_CASE("exact f is the first feasible constraint level") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        CounterRng rng(seed * 1311);
        const uint32_t n = 3 + static_cast<uint32_t>(rng.below(4));
        const Hypergraph h = random_hypergraph(rng, n, 6);
        const ExactFResult result = exact_f(h, 1, 2);
        REQUIRE(result.status == SearchStatus::found);
        uint32_t expected = 1;
        while (!naive_exists_polychromatic(h, 1, 2, expected)) ++expected;
        CHECK(result.f == expected);
        CHECK(result.f <= h.max_edge_size() + 1);
    }
}

TEST_CASE("disk ranges never admit pair colorings below f = 3") {
    const PointSet points = gen_random_general_position(7, 2, 1000, 4242);
    const Hypergraph h = enumerate_ranges(points, RangeKind::disks2d);
    const ExactFResult result = exact_f(h, 2, 2);
    REQUIRE(result.status == SearchStatus::found);
    // A two-point edge holds a single pair, which cannot carry two colors.
    CHECK(result.f >= 3);
}

TEST_CASE("budget exhaustion is reported as indeterminate, never as an answer") {
    const Hypergraph h = Hypergraph::normalized(6, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4, 5}});
    SearchBudget tiny;
    tiny.max_nodes = 1;
    const SearchResult result = exists_polychromatic(h, 1, 2, 2, tiny);
    CHECK(result.status == SearchStatus::indeterminate);

    const ExactFResult exact = exact_f(h, 1, 2, tiny);
    CHECK(exact.status == SearchStatus::indeterminate);
}

TEST_CASE("vertex coloring search round-trips through the tuple machinery") {
    const Hypergraph h = cycle(6);
    const VertexSearchResult result = find_vertex_coloring(h, 2, 2);
    REQUIRE(result.status == SearchStatus::found);
    result.coloring->validate();
    for (const Edge& e : h.edges) {
        CHECK(result.coloring->assignment[e[0]] != result.coloring->assignment[e[1]]);
    }
}

TEST_CASE("verifier agrees with the naive violation walk") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        CounterRng rng(seed * 733);
        const uint32_t n = 4 + static_cast<uint32_t>(rng.below(4));  // 4..7
        const Hypergraph h = random_hypergraph(rng, n, 9);
        for (const uint32_t t : {1u, 2u}) {
            const uint32_t k = 2 + static_cast<uint32_t>(rng.below(2));
            TupleColoring coloring{n, t, k, {}};
            coloring.colors.resize(binom(n, t));
            for (auto& c : coloring.colors) c = static_cast<uint32_t>(rng.below(k));
            for (uint32_t f = 0; f <= 4; ++f) {
                const VerificationReport report = verify_polychromatic(h, coloring, f);
                const std::vector<Edge> expected = naive_poly_violations(h, coloring, f);
                CHECK(report.ok == expected.empty());
                REQUIRE(report.violations.size() == expected.size());
                for (size_t i = 0; i < expected.size(); ++i) {
                    CHECK(report.violations[i].edge == expected[i]);
                    const auto seen = tuple_colors_in_edge(coloring, expected[i]);
                    for (const uint32_t c : report.violations[i].missing_colors) {
                        CHECK(seen.count(c) == 0);
                    }
                    CHECK(seen.size() + report.violations[i].missing_colors.size() == k);
                }
                uint64_t qualifying = 0;
                for (const Edge& e : h.edges) qualifying += e.size() >= f;
                CHECK(report.edges_checked == qualifying);
            }
        }
    }
}

TEST_CASE("verifier caps the violation list but not the verdict") {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < 10; ++v) edges.push_back({v, static_cast<Vertex>(v + 1)});
    const Hypergraph h = Hypergraph::normalized(10, std::move(edges));
    TupleColoring coloring{10, 1, 2, std::vector<uint32_t>(10, 0)};  // color 1 never used
    const VerificationReport report = verify_polychromatic(h, coloring, 1, 3);
    CHECK_FALSE(report.ok);
    CHECK(report.violations.size() == 3);
    CHECK(report.violations[0].missing_colors == std::vector<uint32_t>{1});
    CHECK(report.edges_checked == h.edges.size());
}

TEST_CASE("search and verify reject malformed shapes") {
    const Hypergraph h = Hypergraph::normalized(4, {{0, 1}});
    CHECK_THROWS_AS(exists_polychromatic(h, 0, 2, 1), input_error);
    CHECK_THROWS_AS(exists_polychromatic(h, 1, 0, 1), input_error);
    CHECK_THROWS_AS(exists_polychromatic(h, 5, 2, 1), input_error);

    TupleColoring wrong_n{5, 1, 2, std::vector<uint32_t>(5, 0)};
    CHECK_THROWS_AS(verify_polychromatic(h, wrong_n, 1), input_error);
    TupleColoring not_total{4, 1, 2, std::vector<uint32_t>(3, 0)};
    CHECK_THROWS_AS(verify_polychromatic(h, not_total, 1), input_error);
    TupleColoring bad_color{4, 1, 2, std::vector<uint32_t>(4, 7)};
    CHECK_THROWS_AS(verify_polychromatic(h, bad_color, 1), input_error);
}
