#include "polytuple/points.hpp"

#include <string>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"

namespace polytuple {

PointSet PointSet::make(uint32_t dim, std::vector<std::vector<Coord>> coords,
                        bool general_position) {
    if (dim == 0) throw input_error("dimension must be positive");
    for (const auto& pt : coords) {
        if (pt.size() != dim) {
            throw input_error("point arity mismatch: expected " + std::to_string(dim) +
                              " coordinates");
        }
        for (Coord c : pt) {
            if (c > coord_limit || c < -coord_limit) {
                throw input_error("coordinate " + std::to_string(c) +
                                  " outside supported range [-" + std::to_string(coord_limit) +
                                  ", " + std::to_string(coord_limit) + "]");
            }
        }
    }
    PointSet p;
    p.dim = dim;
    p.coords = std::move(coords);
    p.general_position = general_position;
    return p;
}

PositionReport validate_general_position(const PointSet& p, const ValidationBudget& budget) {
    PositionReport report;
    const uint32_t n = p.size();
    const uint32_t d = p.dim;
    uint64_t work = binom(n, d + 1);
    uint64_t work2 = binom(n, d + 2);
    if (work == binom_saturated || work2 == binom_saturated ||
        work + work2 > budget.max_subsets) {
        throw resource_error("general-position validation subset budget exceeded");
    }

    auto add = [&](PositionViolation::Kind kind, const std::vector<uint32_t>& combo) {
        report.ok = false;
        if (report.violations.size() < budget.max_violations) {
            report.violations.push_back({kind, combo});
        }
    };

    if (n >= d + 1) {
        std::vector<uint32_t> combo = first_combination(d + 1);
        std::vector<const Coord*> pts(d + 1);
        do {
            bool flat;
            if (d == 2) {
                flat = orient2d(p.point(combo[0]), p.point(combo[1]), p.point(combo[2])) == 0;
            } else {
                for (uint32_t i = 0; i <= d; ++i) pts[i] = p.point(combo[i]);
                flat = affinely_dependent(pts, d);
            }
            if (flat) add(PositionViolation::Kind::on_common_hyperplane, combo);
        } while (next_combination(n, combo));
    }

    if (n >= d + 2) {
        std::vector<uint32_t> combo = first_combination(d + 2);
        std::vector<const Coord*> pts(d + 2);
        do {
            bool degenerate;
            if (d == 2) {
                // The translated 3x3 form equals the 4-point lifted determinant,
                // so this covers cocircular and 4-collinear alike.
                degenerate = incircle2d(p.point(combo[0]), p.point(combo[1]),
                                        p.point(combo[2]), p.point(combo[3])) == 0;
            } else {
                for (uint32_t i = 0; i < d + 2; ++i) pts[i] = p.point(combo[i]);
                degenerate = cospherical_or_flat(pts, d);
            }
            if (degenerate) add(PositionViolation::Kind::on_common_sphere, combo);
        } while (next_combination(n, combo));
    }
    return report;
}

PointSet validated(PointSet p, const ValidationBudget& budget) {
    p.general_position = validate_general_position(p, budget).ok;
    return p;
}

}  // namespace polytuple
