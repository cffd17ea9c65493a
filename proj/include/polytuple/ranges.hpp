#ifndef POLYTUPLE_RANGES_HPP
#define POLYTUPLE_RANGES_HPP

#include <cstdint>
#include <string>

#include "polytuple/hypergraph.hpp"
#include "polytuple/points.hpp"

namespace polytuple {

// Geometric range families whose realized subsets we can enumerate exactly.
enum class RangeKind {
    disks2d,
    balls,
    halfplanes2d,
    rects2d,
    boxes,
    squares2d,
    intervals1d,
};

std::string to_string(RangeKind kind);
RangeKind range_kind_from_string(const std::string& name);

struct EnumerateOptions {
    // Caps on work and output; exceeding either raises resource_error.
    std::uint64_t max_candidates = 64u << 20;
    std::uint64_t max_ranges = 8u << 20;
    // The ball enumerator solves exact rational systems per subset, so it is
    // held to small inputs unless the caller raises these.
    std::uint32_t balls_max_dim = 4;
    std::uint32_t balls_max_n = 16;
};

// Builds the hypergraph of subsets of P realized by closed ranges of the
// given kind.  Every realized subset appears exactly once; each edge carries
// the point indices of a defining witness as its generator.  disks2d and
// balls require a validated point set (see validate_general_position).
Hypergraph enumerate_ranges(const PointSet& points, RangeKind kind,
                            const EnumerateOptions& options = {});

// Finds an edge of exactly target_size contained in e, or throws
// certification_error if the family has no such sub-edge.  Tries greedy
// single-element removals first and falls back to exhaustive search.
Edge shrink_range(const Hypergraph& h, const Edge& e, std::uint32_t target_size);

struct SharpnessReport {
    bool ok = false;            // true when every small subset has depth 0
    std::uint32_t threshold = 0;  // subsets strictly below this size were checked
    Tuple witness;              // first subset with positive depth, if any
    std::int64_t witness_depth = 0;
};

// Checks that on the degree-d moment curve with n points, every subset of
// size < floor((d + 3) / 2) is realized exactly by some closed ball.
SharpnessReport moment_curve_sharpness_check(std::uint32_t n, std::uint32_t d,
                                             const EnumerateOptions& options = {});

// Exact depth of the pair {x, y} with respect to all closed disks containing
// both points: the minimum, over such disks D, of |D ∩ P| - 2.  Runs a sweep
// over the one-parameter pencil of disks through x and y instead of touching
// the full range enumeration.
std::int64_t pair_depth_disks(const PointSet& points, Vertex x, Vertex y);

// pair_depth_disks for every pair, indexed by pair_rank.
std::vector<std::int64_t> all_pair_depths_disks(const PointSet& points);

}  // namespace polytuple

#endif  // POLYTUPLE_RANGES_HPP
