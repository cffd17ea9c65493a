#ifndef POLYTUPLE_GEN_HPP
#define POLYTUPLE_GEN_HPP

#include <cstdint>
#include <vector>

#include "polytuple/points.hpp"

namespace polytuple {

// Samples n lattice points from [-bbox, bbox]^dim, rejecting candidates that
// would break general position (affine degeneracy or a common sphere).  The
// result carries general_position = true.  Throws resource_error when the
// lattice is too small relative to n for rejection sampling to be safe, or
// when a single point exhausts max_attempts_per_point rejections.
PointSet gen_random_general_position(std::uint32_t n, std::uint32_t dim,
                                     std::int64_t bbox, std::uint64_t seed,
                                     std::uint32_t max_attempts_per_point = 400);

// Full integer grid {0..extents[0]-1} x ... in row-major order (last axis
// fastest).  Grids are deliberately degenerate; general_position stays false.
PointSet gen_grid(const std::vector<std::uint32_t>& extents);

// Points (i, i^2, ..., i^dim) for i = 1..n.
PointSet gen_moment_curve(std::uint32_t n, std::uint32_t dim);

}  // namespace polytuple

#endif  // POLYTUPLE_GEN_HPP
