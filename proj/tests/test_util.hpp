#ifndef POLYTUPLE_TEST_UTIL_HPP
#define POLYTUPLE_TEST_UTIL_HPP

#include <set>
#include <vector>

#include "polytuple/coloring.hpp"
#include "polytuple/combinatorics.hpp"
#include "polytuple/hypergraph.hpp"

namespace polytuple::testutil {

// Colors seen among the t-subsets of e, via the public per-tuple lookup.
inline std::set<uint32_t> tuple_colors_in_edge(const TupleColoring& coloring, const Edge& e) {
    std::set<uint32_t> colors;
    if (e.size() < coloring.t) return colors;
    std::vector<uint32_t> idx = first_combination(coloring.t);
    do {
        Tuple tuple(coloring.t);
        for (uint32_t i = 0; i < coloring.t; ++i) tuple[i] = e[idx[i]];
        colors.insert(coloring.color_of(tuple));
    } while (next_combination(static_cast<uint32_t>(e.size()), idx));
    return colors;
}

// Violated edges by exhaustive re-walk; the slow reference for the verifier.
inline std::vector<Edge> naive_poly_violations(const Hypergraph& h,
                                               const TupleColoring& coloring, uint32_t f) {
    std::vector<Edge> bad;
    for (const Edge& e : h.edges) {
        if (e.size() < f) continue;
        if (tuple_colors_in_edge(coloring, e).size() < coloring.k) bad.push_back(e);
    }
    return bad;
}

// Feasibility decided by trying every coloring of all C(n, t) tuples.
inline bool naive_exists_polychromatic(const Hypergraph& h, uint32_t t, uint32_t k,
                                       uint32_t f) {
    const uint64_t total = binom(h.n, t);
    TupleColoring coloring{h.n, t, k, std::vector<uint32_t>(total, 0)};
    for (;;) {
        if (naive_poly_violations(h, coloring, f).empty()) return true;
        size_t i = 0;
        while (i < total && ++coloring.colors[i] == k) coloring.colors[i++] = 0;
        if (i == total) return false;
    }
}

// Random hypergraph with edge members drawn independently; may produce empty edges.
inline Hypergraph random_hypergraph(CounterRng& rng, uint32_t n, uint32_t max_edges) {
    uint32_t m = static_cast<uint32_t>(rng.below(max_edges + 1));
    std::vector<Edge> edges(m);
    for (Edge& e : edges) {
        for (Vertex v = 0; v < n; ++v) {
            if (rng.below(2) == 1) e.push_back(v);
        }
    }
    return Hypergraph::normalized(n, std::move(edges));
}

// Exhaustive shattering check used as the oracle for vc_dimension.
inline uint32_t vc_dimension_oracle(const Hypergraph& h) {
    if (h.edges.empty()) return 0;
    uint32_t best = 0;
    for (uint32_t s = 1; s <= h.n; ++s) {
        bool any = false;
        std::vector<uint32_t> combo = first_combination(s);
        do {
            std::vector<bool> seen(size_t{1} << s, false);
            size_t found = 0;
            for (const Edge& e : h.edges) {
                size_t mask = 0;
                for (uint32_t b = 0; b < s; ++b) {
                    if (edge_contains(e, combo[b])) mask |= size_t{1} << b;
                }
                if (!seen[mask]) {
                    seen[mask] = true;
                    ++found;
                }
            }
            if (found == (size_t{1} << s)) {
                any = true;
                break;
            }
        } while (next_combination(h.n, combo));
        if (!any) break;
        best = s;
    }
    return best;
}

}  // namespace polytuple::testutil

#endif
