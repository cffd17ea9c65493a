#ifndef POLYTUPLE_COLORING_HPP
#define POLYTUPLE_COLORING_HPP

#include <cstdint>
#include <vector>

#include "polytuple/exact.hpp"
#include "polytuple/hypergraph.hpp"
#include "polytuple/points.hpp"
#include "polytuple/ranges.hpp"

namespace polytuple {

// Total map from sorted t-tuples of [0, n) to colors in {0..k-1}, indexed by
// lexicographic tuple rank.
struct TupleColoring {
    uint32_t n = 0;
    uint32_t t = 0;
    uint32_t k = 1;
    std::vector<uint32_t> colors;

    uint32_t color_of(const Tuple& tuple) const;
    // Throws input_error unless the mapping is total with colors in range.
    void validate() const;
};

struct VertexColoring {
    uint32_t n = 0;
    uint32_t x = 1;
    std::vector<uint32_t> assignment;

    void validate() const;
};

// The three-case rule shared by every depth-based colorer: depth 0 gets color
// 0, depth in [base^i, base^(i+1)) gets color i+1 for i up to k-3, and depth
// >= base^(k-2) gets color k-1. k=1 collapses to the constant coloring and
// k=2 to "zero depth vs. positive depth". Comparisons are exact rationals.
TupleColoring depth_threshold_coloring(const DepthTable& depths, uint32_t k,
                                       const BigRat& base);

// Pair coloring for disk ranges: exact pair depths fed through the threshold
// rule with base 3.7. Every disk range with >= disks_threshold(k) points
// contains pairs of all k colors.
TupleColoring disks_pair_coloring(const PointSet& points, uint32_t k);
int64_t disks_threshold(uint32_t k);  // ceil(3.7^k), saturating

// Tuple arity used by the ball colorer in dimension d.
uint32_t balls_tuple_arity(uint32_t d);
// Threshold base 5*e*d^3/4, taken with a rational lower bracket of e so the
// implied point-count threshold never overstates the guarantee.
BigRat balls_base(uint32_t d);
int64_t balls_threshold(uint32_t d, uint32_t k);  // ceil(balls_base(d)^k), saturating

// Depth-threshold coloring of floor((d+3)/2)-tuples over enumerated ball
// ranges. Requires dim >= 3 and a validated point set.
TupleColoring balls_tuple_coloring(const PointSet& points, uint32_t k,
                                   const EnumerateOptions& options = {});

// Depth-threshold coloring of (d+1)-tuples for abstract hypergraphs of VC
// dimension at most d, base 4(d+1)^(d+1). Preconditions (shrinkable, vc <= d,
// n >= 2d+2) are checked and reported with witnesses.
TupleColoring vc_tuple_coloring(const Hypergraph& h, uint32_t d, uint32_t k);
int64_t vc_threshold(uint32_t d, uint32_t k);  // (4(d+1)^(d+1))^(k-1), saturating

// Tuples whose members carry t pairwise distinct vertex colors get the
// lexicographic rank of that color set mod k; repeated-color tuples get 0.
// Requires C(vertex_colors.x, t) >= k so every tuple color is hit.
TupleColoring combination_coloring(const VertexColoring& vertex_colors, uint32_t t,
                                   uint32_t k);

// Two-coloring of t-tuples by the parity of their color-1 members.
TupleColoring parity_coloring(const VertexColoring& vertex_colors, uint32_t t);

// Vertex color = rank of the point along the line, mod x. The workhorse for
// interval families, where any x consecutive points show all x colors.
VertexColoring cyclic_vertex_coloring(const PointSet& points, uint32_t x);

// Smallest x with x^t >= k * t^t, i.e. ceil(t * k^(1/t)): the vertex palette
// size whose t-combinations cover k tuple colors.
int64_t vertex_colors_needed(uint32_t t, uint64_t k);

struct LowerBound {
    BigRat analytic;         // certified rational lower bracket of (1/e)*t*k^(1/t)
    uint64_t combinatorial;  // min f with C(f, t) >= k
};
LowerBound lower_bound_f(uint32_t t, uint64_t k);

}  // namespace polytuple

#endif  // POLYTUPLE_COLORING_HPP
