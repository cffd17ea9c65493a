#include "polytuple/coloring.hpp"

#include <algorithm>
#include <string>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"

namespace polytuple {
namespace {

void check_sorted_tuple(uint32_t n, const Tuple& tuple) {
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] >= n) throw input_error("tuple member out of range");
        if (i > 0 && tuple[i - 1] >= tuple[i]) throw input_error("tuple must be strictly increasing");
    }
}

}  // namespace

uint32_t TupleColoring::color_of(const Tuple& tuple) const {
    if (tuple.size() != t) throw input_error("tuple arity mismatch");
    check_sorted_tuple(n, tuple);
    const uint64_t rank = t == 2 ? pair_rank(n, tuple[0], tuple[1]) : combination_rank(n, tuple);
    return colors[rank];
}

void TupleColoring::validate() const {
    if (t == 0) throw input_error("tuple arity must be positive");
    if (t > n) throw input_error("tuple arity exceeds the ground set");
    if (k == 0) throw input_error("color count must be positive");
    const uint64_t total = binom(n, t);
    if (total == binom_saturated) throw input_error("tuple space too large to index");
    if (colors.size() != total) throw input_error("coloring is not total over the tuple space");
    for (const uint32_t c : colors)
        if (c >= k) throw input_error("color out of range");
}

void VertexColoring::validate() const {
    if (x == 0) throw input_error("vertex palette must be nonempty");
    if (assignment.size() != n) throw input_error("vertex coloring is not total");
    for (const uint32_t c : assignment)
        if (c >= x) throw input_error("vertex color out of range");
}

TupleColoring depth_threshold_coloring(const DepthTable& depths, uint32_t k,
                                       const BigRat& base) {
    if (k == 0) throw input_error("color count must be positive");
    if (base <= 1) throw input_error("threshold base must exceed 1");
    TupleColoring out{depths.n, depths.t, k,
                      std::vector<uint32_t>(depths.depths.size(), 0)};
    if (k == 1) return out;
    // thresholds[i] = ceil(base^i); integer depth d >= base^i iff d >= ceil(base^i).
    std::vector<int64_t> thresholds(k - 1);
    for (uint32_t i = 0; i + 1 < k; ++i) thresholds[i] = ceil_pow_clamped(base, i);
    for (size_t r = 0; r < depths.depths.size(); ++r) {
        const int64_t d = depths.depths[r];
        if (d <= 0) continue;
        const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), d);
        out.colors[r] = static_cast<uint32_t>(it - thresholds.begin());
    }
    return out;
}

TupleColoring disks_pair_coloring(const PointSet& points, uint32_t k) {
    if (points.dim != 2) throw input_error("disk pair coloring needs planar points");
    if (!points.general_position)
        throw input_error("disk pair coloring needs points in general position");
    if (points.size() < 2) throw input_error("disk pair coloring needs at least two points");
    DepthTable table{points.size(), 2, all_pair_depths_disks(points)};
    return depth_threshold_coloring(table, k, BigRat(37, 10));
}

int64_t disks_threshold(uint32_t k) { return ceil_pow_clamped(BigRat(37, 10), k); }

uint32_t balls_tuple_arity(uint32_t d) {
    if (d == 0) throw input_error("dimension must be positive");
    return (d + 3) / 2;
}

BigRat balls_base(uint32_t d) {
    if (d == 0) throw input_error("dimension must be positive");
    return BigRat(5) * euler_lo() * BigRat(BigInt(d) * d * d) / 4;
}

int64_t balls_threshold(uint32_t d, uint32_t k) { return ceil_pow_clamped(balls_base(d), k); }

TupleColoring balls_tuple_coloring(const PointSet& points, uint32_t k,
                                   const EnumerateOptions& options) {
    if (points.dim < 3) throw input_error("ball tuple coloring needs dimension at least 3");
    if (!points.general_position)
        throw input_error("ball tuple coloring needs points in general position");
    const uint32_t t = balls_tuple_arity(points.dim);
    if (points.size() < t) throw input_error("fewer points than the tuple arity");
    const Hypergraph ranges = enumerate_ranges(points, RangeKind::balls, options);
    const DepthTable table = tuple_depth_table(ranges, t);
    return depth_threshold_coloring(table, k, balls_base(points.dim));
}

int64_t vc_threshold(uint32_t d, uint32_t k) {
    if (k == 0) throw input_error("color count must be positive");
    const BigRat base(4 * pow(BigInt(d) + 1, d + 1));
    return ceil_pow_clamped(base, k - 1);
}

TupleColoring vc_tuple_coloring(const Hypergraph& h, uint32_t d, uint32_t k) {
    if (const auto witness = shrinkability_violation(h)) {
        std::string msg = "hypergraph is not shrinkable: edge {";
        for (size_t i = 0; i < witness->edge.size(); ++i) {
            if (i) msg += ',';
            msg += std::to_string(witness->edge[i]);
        }
        msg += "} has no sub-edge of size " + std::to_string(witness->missing_size);
        throw input_error(msg);
    }
    const uint32_t vc = vc_dimension(h);
    if (vc > d)
        throw input_error("VC dimension " + std::to_string(vc) + " exceeds the bound " +
                          std::to_string(d));
    if (h.n < 2 * d + 2)
        throw input_error("need at least " + std::to_string(2 * d + 2) + " vertices, have " +
                          std::to_string(h.n));
    const uint32_t t = d + 1;
    const DepthTable table = tuple_depth_table(h, t);
    const BigRat base(4 * pow(BigInt(d) + 1, d + 1));
    return depth_threshold_coloring(table, k, base);
}

TupleColoring combination_coloring(const VertexColoring& vertex_colors, uint32_t t,
                                   uint32_t k) {
    vertex_colors.validate();
    if (t == 0) throw input_error("tuple arity must be positive");
    if (k == 0) throw input_error("color count must be positive");
    if (t > vertex_colors.n) throw input_error("tuple arity exceeds the ground set");
    if (vertex_colors.x < t || binom(vertex_colors.x, t) < k)
        throw input_error("vertex palette too small: need C(x, t) >= k");
    const uint32_t n = vertex_colors.n;
    const uint64_t total = binom(n, t);
    if (total == binom_saturated || total > (uint64_t{1} << 26))
        throw resource_error("tuple space too large to color");
    TupleColoring out{n, t, k, std::vector<uint32_t>(total, 0)};
    std::vector<uint32_t> tuple = first_combination(t);
    std::vector<uint32_t> palette(t);
    uint64_t rank = 0;
    do {
        for (uint32_t i = 0; i < t; ++i) palette[i] = vertex_colors.assignment[tuple[i]];
        std::sort(palette.begin(), palette.end());
        const bool distinct =
            std::adjacent_find(palette.begin(), palette.end()) == palette.end();
        if (distinct)
            out.colors[rank] =
                static_cast<uint32_t>(combination_rank(vertex_colors.x, palette) % k);
        ++rank;
    } while (next_combination(n, tuple));
    return out;
}

TupleColoring parity_coloring(const VertexColoring& vertex_colors, uint32_t t) {
    vertex_colors.validate();
    if (vertex_colors.x != 2) throw input_error("parity coloring needs exactly two vertex colors");
    if (t == 0) throw input_error("tuple arity must be positive");
    if (t > vertex_colors.n) throw input_error("tuple arity exceeds the ground set");
    const uint32_t n = vertex_colors.n;
    const uint64_t total = binom(n, t);
    if (total == binom_saturated || total > (uint64_t{1} << 26))
        throw resource_error("tuple space too large to color");
    TupleColoring out{n, t, 2, std::vector<uint32_t>(total, 0)};
    std::vector<uint32_t> tuple = first_combination(t);
    uint64_t rank = 0;
    do {
        uint32_t ones = 0;
        for (const uint32_t v : tuple) ones += vertex_colors.assignment[v];
        out.colors[rank] = ones % 2;
        ++rank;
    } while (next_combination(n, tuple));
    return out;
}

VertexColoring cyclic_vertex_coloring(const PointSet& points, uint32_t x) {
    if (points.dim != 1) throw input_error("cyclic coloring needs points on a line");
    if (x == 0) throw input_error("vertex palette must be nonempty");
    const uint32_t n = points.size();
    std::vector<uint32_t> order(n);
    for (uint32_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        const Coord ca = points.coords[a][0];
        const Coord cb = points.coords[b][0];
        return ca != cb ? ca < cb : a < b;
    });
    VertexColoring out{n, x, std::vector<uint32_t>(n, 0)};
    for (uint32_t r = 0; r < n; ++r) out.assignment[order[r]] = r % x;
    return out;
}

int64_t vertex_colors_needed(uint32_t t, uint64_t k) {
    if (t == 0) throw input_error("tuple arity must be positive");
    if (k == 0) throw input_error("color count must be positive");
    return ceil_root(BigInt(k) * pow(BigInt(t), t), t);
}

LowerBound lower_bound_f(uint32_t t, uint64_t k) {
    if (t == 0) throw input_error("tuple arity must be positive");
    if (k == 0) throw input_error("color count must be positive");
    LowerBound out;
    // root_lo / 10^15 <= k^(1/t), so the quotient stays a certified bracket.
    const BigInt scale = pow(BigInt(10), 15);
    const BigInt root_lo = floor_root_big(BigInt(k) * pow(scale, t), t);
    out.analytic = BigRat(BigInt(t) * root_lo) / (BigRat(scale) * euler_hi());
    if (t == 1) {
        out.combinatorial = k;
        return out;
    }
    // C(m, t) >= (m/t)^t, so m = t * ceil(k^(1/t)) already satisfies C(m, t) >= k.
    uint64_t lo = t;
    uint64_t hi = t * ceil_root_big(BigInt(k), t).convert_to<uint64_t>();
    hi = std::max(hi, lo);
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo) / 2;
        if (binom(mid, t) >= k) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    out.combinatorial = lo;
    return out;
}

}  // namespace polytuple
