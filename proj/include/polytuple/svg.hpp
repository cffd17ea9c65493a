#ifndef POLYTUPLE_SVG_HPP
#define POLYTUPLE_SVG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "polytuple/hypergraph.hpp"
#include "polytuple/points.hpp"
#include "polytuple/ranges.hpp"

namespace polytuple {

// A range to emphasize: its member points plus the generator that defines the
// drawn shape (circle for disk kinds, box for rectangle kinds, boundary line
// for halfplanes).
struct SvgHighlight {
    Edge edge;
    std::vector<uint32_t> generator;
    RangeKind kind = RangeKind::disks2d;
};

struct SvgOptions {
    uint32_t canvas = 640;            // square viewport side, px
    uint32_t max_pair_overlays = 64;  // cap on highlighted pair segments
};

// Deterministic SVG plot of a 2-D point set.  The highlight, when present,
// draws its range shape under the points, enlarges its member points, and
// overlays color-coded segments between the edge's pairs up to the cap.
// Throws input_error unless points.dim == 2.
std::string emit_svg(const PointSet& points,
                     const std::optional<SvgHighlight>& highlight = std::nullopt,
                     const SvgOptions& options = {});

}  // namespace polytuple

#endif  // POLYTUPLE_SVG_HPP
