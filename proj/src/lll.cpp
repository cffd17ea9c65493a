#include "polytuple/lll.hpp"

#include <algorithm>
#include <utility>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"

namespace polytuple {

uint32_t derive_m(uint32_t t, uint32_t k, const BigRat& c) {
    if (t == 0) throw input_error("tuple arity must be positive");
    if (k < 2) throw input_error("resampling needs at least two colors");
    if (c <= 0) throw input_error("the constant c must be positive");
    for (uint32_t terms = 16; terms <= 4096; terms *= 2) {
        const auto [ln_lo, ln_hi] = ln_bounds(k, terms);
        const int64_t m_lo = ceil_root(ceil_rat(c * k * ln_lo), t);
        const int64_t m_hi = ceil_root(ceil_rat(c * k * ln_hi), t);
        if (m_lo == m_hi) return static_cast<uint32_t>(m_lo);
    }
    throw resource_error("ln brackets did not converge to a single threshold");
}

namespace {

// Coordinate boxes with point count in [m_lo, m_hi], ordered lexicographically
// by (lo, hi) value-index pairs with axis 0 most significant. Members are
// ascending vertex ids.
std::vector<std::vector<Vertex>> box_events(const PointSet& p, uint32_t m_lo, uint32_t m_hi) {
    const uint32_t dim = p.dim;
    const uint32_t n = p.size();
    std::vector<std::vector<Vertex>> events;
    if (n == 0) return events;

    std::vector<std::vector<Coord>> values(dim);
    for (uint32_t a = 0; a < dim; ++a) {
        values[a].reserve(n);
        for (uint32_t i = 0; i < n; ++i) values[a].push_back(p.coords[i][a]);
        std::sort(values[a].begin(), values[a].end());
        values[a].erase(std::unique(values[a].begin(), values[a].end()), values[a].end());
    }

    Int128 candidates = 1;
    uint64_t grid_cells = 1;
    for (uint32_t a = 0; a < dim; ++a) {
        const uint64_t v = values[a].size();
        candidates *= static_cast<Int128>(v * (v + 1) / 2);
        grid_cells *= v;
        if (candidates > (Int128{1} << 22))
            throw resource_error("too many candidate boxes for resampling events");
    }

    // On a full grid the count of a box is the product of its index widths,
    // letting off-window boxes skip the membership scan.
    bool full_grid = grid_cells == n;
    if (full_grid) {
        auto sorted = p.coords;
        std::sort(sorted.begin(), sorted.end());
        full_grid = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> ranges(dim);
    for (uint32_t a = 0; a < dim; ++a) {
        const auto v = static_cast<uint32_t>(values[a].size());
        for (uint32_t lo = 0; lo < v; ++lo)
            for (uint32_t hi = lo; hi < v; ++hi) ranges[a].emplace_back(lo, hi);
    }

    std::vector<size_t> idx(dim, 0);
    std::vector<Vertex> members;
    for (;;) {
        uint64_t width_product = 1;
        for (uint32_t a = 0; a < dim; ++a) {
            const auto [lo, hi] = ranges[a][idx[a]];
            width_product *= hi - lo + 1;
        }
        if (!full_grid || (width_product >= m_lo && width_product <= m_hi)) {
            members.clear();
            for (uint32_t i = 0; i < n; ++i) {
                bool inside = true;
                for (uint32_t a = 0; a < dim && inside; ++a) {
                    const auto [lo, hi] = ranges[a][idx[a]];
                    const Coord coord = p.coords[i][a];
                    inside = coord >= values[a][lo] && coord <= values[a][hi];
                }
                if (inside) members.push_back(i);
            }
            if (members.size() >= m_lo && members.size() <= m_hi) events.push_back(members);
        }
        uint32_t a = dim;
        while (a > 0) {
            --a;
            if (++idx[a] < ranges[a].size()) break;
            idx[a] = 0;
            if (a == 0) return events;
        }
    }
}

bool event_violated(const TupleColoring& coloring, const std::vector<Vertex>& members,
                    std::vector<char>& seen) {
    const uint32_t t = coloring.t;
    const auto size = static_cast<uint32_t>(members.size());
    std::fill(seen.begin(), seen.end(), 0);
    uint32_t distinct = 0;
    std::vector<uint32_t> idx = first_combination(t);
    Tuple tuple(t);
    do {
        for (uint32_t i = 0; i < t; ++i) tuple[i] = members[idx[i]];
        const uint64_t rank = t == 2 ? pair_rank(coloring.n, tuple[0], tuple[1])
                                     : combination_rank(coloring.n, tuple);
        if (!seen[coloring.colors[rank]]) {
            seen[coloring.colors[rank]] = 1;
            if (++distinct == coloring.k) return false;
        }
    } while (next_combination(size, idx));
    return true;
}

LLLResult run_resampling(uint32_t n, const LLLParams& params, uint32_t m,
                         std::vector<std::vector<Vertex>> events) {
    const uint32_t t = params.t;
    const uint32_t k = params.k;
    if (t == 0 || t > n) throw input_error("tuple arity out of range for the point set");
    const uint64_t total = binom(n, t);
    if (total == binom_saturated || total > (uint64_t{1} << 26))
        throw resource_error("tuple space too large for resampling");

    TupleColoring coloring{n, t, k, std::vector<uint32_t>(total)};
    CounterRng rng(params.seed);
    for (auto& color : coloring.colors) color = static_cast<uint32_t>(rng.below(k));

    LLLResult result{std::move(coloring), {}, 0, m, events.size()};
    std::vector<char> seen(k);
    for (;;) {
        size_t violated = events.size();
        for (size_t e = 0; e < events.size(); ++e) {
            if (event_violated(result.coloring, events[e], seen)) {
                violated = e;
                break;
            }
        }
        if (violated == events.size()) break;
        if (result.rounds == params.max_rounds)
            throw nontermination_error("resampling exceeded the round cap", result.rounds);
        ++result.rounds;
        const auto& members = events[violated];
        uint64_t redrawn = 0;
        std::vector<uint32_t> idx = first_combination(t);
        Tuple tuple(t);
        do {
            for (uint32_t i = 0; i < t; ++i) tuple[i] = members[idx[i]];
            const uint64_t rank = t == 2 ? pair_rank(n, tuple[0], tuple[1])
                                         : combination_rank(n, tuple);
            result.coloring.colors[rank] = static_cast<uint32_t>(rng.below(k));
            ++redrawn;
        } while (next_combination(static_cast<uint32_t>(members.size()), idx));
        result.log.push_back({result.rounds, violated, redrawn});
    }
    return result;
}

void check_common_params(const LLLParams& params) {
    if (params.k < 2) throw input_error("resampling needs at least two colors");
    if (params.t == 0) throw input_error("tuple arity must be positive");
    if (params.c <= 0) throw input_error("the constant c must be positive");
    if (params.t == 2 && params.shape == LLLShape::rectangles2d && params.c < 126)
        throw input_error("c must be at least 126 for pair rectangle events");
}

uint32_t resolve_m(const LLLParams& params) {
    const uint32_t m = params.m != 0 ? params.m : derive_m(params.t, params.k, params.c);
    if (m < params.t + 1) throw input_error("the window floor m must be at least t + 1");
    return m;
}

}  // namespace

LLLResult lll_grid_pair_coloring(const PointSet& grid, const LLLParams& params) {
    if (grid.dim != 2) throw input_error("grid pair resampling needs planar points");
    if (params.t != 2) throw input_error("grid pair resampling is a t = 2 routine");
    if (params.shape != LLLShape::rectangles2d)
        throw input_error("grid pair resampling uses rectangle events");
    check_common_params(params);

    std::vector<std::vector<Coord>> values(2);
    for (uint32_t a = 0; a < 2; ++a) {
        for (uint32_t i = 0; i < grid.size(); ++i) values[a].push_back(grid.coords[i][a]);
        std::sort(values[a].begin(), values[a].end());
        values[a].erase(std::unique(values[a].begin(), values[a].end()), values[a].end());
    }
    auto sorted = grid.coords;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!distinct || values[0].size() * values[1].size() != grid.size())
        throw input_error("points must form a full coordinate grid");

    const uint32_t m = resolve_m(params);
    return run_resampling(grid.size(), params, m, box_events(grid, m, 2 * m));
}

LLLResult lll_tuple_coloring(const PointSet& points, const LLLParams& params,
                             const EnumerateOptions& options) {
    check_common_params(params);
    const uint32_t m = resolve_m(params);
    std::vector<std::vector<Vertex>> events;
    switch (params.shape) {
        case LLLShape::rectangles2d:
            if (points.dim != 2) throw input_error("rectangle events need planar points");
            events = box_events(points, m, 2 * m);
            break;
        case LLLShape::boxes:
            events = box_events(points, m, 2 * m);
            break;
        case LLLShape::balls: {
            const Hypergraph ranges = enumerate_ranges(points, RangeKind::balls, options);
            for (const Edge& e : ranges.edges)
                if (e.size() >= m && e.size() <= 2ull * m) events.push_back(e);
            break;
        }
    }
    return run_resampling(points.size(), params, m, std::move(events));
}

VerificationReport lll_direct_check(const PointSet& points, const TupleColoring& coloring,
                                    uint32_t m, LLLShape shape,
                                    const EnumerateOptions& options) {
    RangeKind kind = RangeKind::boxes;
    switch (shape) {
        case LLLShape::rectangles2d:
            kind = RangeKind::rects2d;
            break;
        case LLLShape::boxes:
            kind = RangeKind::boxes;
            break;
        case LLLShape::balls:
            kind = RangeKind::balls;
            break;
    }
    const Hypergraph ranges = enumerate_ranges(points, kind, options);
    return verify_polychromatic(ranges, coloring, m);
}

}  // namespace polytuple
