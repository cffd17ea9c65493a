#ifndef POLYTUPLE_LLL_HPP
#define POLYTUPLE_LLL_HPP

#include <cstdint>
#include <vector>

#include "polytuple/coloring.hpp"
#include "polytuple/points.hpp"
#include "polytuple/ranges.hpp"
#include "polytuple/search.hpp"

namespace polytuple {

enum class LLLShape { rectangles2d, boxes, balls };

struct LLLParams {
    uint32_t k = 2;
    uint32_t t = 2;
    LLLShape shape = LLLShape::rectangles2d;
    BigRat c = BigRat(126);
    uint32_t m = 0;  // 0 derives ceil((c*k*ln k)^(1/t)) from the other fields
    uint64_t seed = 0;
    uint64_t max_rounds = 1'000'000;
};

// Smallest m with m^t >= c*k*ln(k), decided by exact rational brackets of
// ln(k) tightened until the ceiling is unambiguous.
uint32_t derive_m(uint32_t t, uint32_t k, const BigRat& c);

struct ResampleRecord {
    uint64_t round;
    uint64_t event;  // index into the deterministic bad-event order
    uint64_t pairs_resampled;
};

struct LLLResult {
    TupleColoring coloring;
    std::vector<ResampleRecord> log;
    uint64_t rounds = 0;
    uint32_t m = 0;
    uint64_t event_count = 0;
};

// Moser-Tardos resampling over the bad events "some range with point count in
// [m, 2m] misses a tuple color". Pair colors start uniformly at random from
// the seed; the first violated event in deterministic order is resampled
// until none is violated. Throws nontermination_error past max_rounds.
LLLResult lll_grid_pair_coloring(const PointSet& grid, const LLLParams& params);

// Same loop for t-tuples against box ranges (any full grid dimension) or
// enumerated ball ranges.
LLLResult lll_tuple_coloring(const PointSet& points, const LLLParams& params,
                             const EnumerateOptions& options = {});

// The unconditional check: every range of the shape with >= m points must
// contain tuples of all colors, not only the [m, 2m] event window.
VerificationReport lll_direct_check(const PointSet& points, const TupleColoring& coloring,
                                    uint32_t m, LLLShape shape,
                                    const EnumerateOptions& options = {});

}  // namespace polytuple

#endif  // POLYTUPLE_LLL_HPP
