#ifndef POLYTUPLE_POINTS_HPP
#define POLYTUPLE_POINTS_HPP

#include <cstdint>
#include <vector>

#include "polytuple/exact.hpp"

namespace polytuple {

// Point set with exact integer coordinates. `general_position` records that no
// dim+1 points share a hyperplane and no dim+2 share a sphere; it is set by the
// validator or by generators that enforce it during sampling.
struct PointSet {
    uint32_t dim = 0;
    std::vector<std::vector<Coord>> coords;
    bool general_position = false;

    static PointSet make(uint32_t dim, std::vector<std::vector<Coord>> coords,
                         bool general_position = false);

    uint32_t size() const { return static_cast<uint32_t>(coords.size()); }
    const Coord* point(uint32_t i) const { return coords[i].data(); }
};

struct PositionViolation {
    enum class Kind { on_common_hyperplane, on_common_sphere };
    Kind kind;
    std::vector<uint32_t> indices;
};

struct PositionReport {
    bool ok = true;
    std::vector<PositionViolation> violations;
};

struct ValidationBudget {
    uint64_t max_subsets = uint64_t{1} << 25;
    size_t max_violations = 64;
};

// Exhaustive exact check of all (dim+1)- and (dim+2)-subsets. Does not mutate
// the flag; callers apply `report.ok` themselves or use validated().
PositionReport validate_general_position(const PointSet& p, const ValidationBudget& budget = {});

// Convenience: runs the validator and returns the point set with the flag set.
PointSet validated(PointSet p, const ValidationBudget& budget = {});

}  // namespace polytuple

#endif
