#include "polytuple/gen.hpp"

#include <string>
#include <vector>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"
#include "polytuple/exact.hpp"

namespace polytuple {

namespace {

// True when appending cand keeps every (dim+1)-subset off a common hyperplane
// and every (dim+2)-subset off a common sphere. Only subsets containing cand
// need checking; the accepted prefix is already clean.
bool keeps_general_position(const std::vector<std::vector<Coord>>& accepted,
                            const std::vector<Coord>& cand, uint32_t dim) {
    const uint32_t k = static_cast<uint32_t>(accepted.size());
    for (const auto& p : accepted)
        if (p == cand) return false;
    if (dim == 1) return true;  // distinct coordinates say it all on a line

    if (dim == 2) {
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = i + 1; j < k; ++j)
                if (orient2d(accepted[i].data(), accepted[j].data(), cand.data()) == 0)
                    return false;
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t j = i + 1; j < k; ++j)
                for (uint32_t l = j + 1; l < k; ++l)
                    if (incircle2d(accepted[i].data(), accepted[j].data(),
                                   accepted[l].data(), cand.data()) == 0)
                        return false;
        return true;
    }

    std::vector<const Coord*> pts;
    if (k >= dim) {
        auto subset = first_combination(dim);
        do {
            pts.clear();
            for (uint32_t v : subset) pts.push_back(accepted[v].data());
            pts.push_back(cand.data());
            if (affinely_dependent(pts, dim)) return false;
        } while (next_combination(k, subset));
    }
    if (k >= dim + 1) {
        auto subset = first_combination(dim + 1);
        do {
            pts.clear();
            for (uint32_t v : subset) pts.push_back(accepted[v].data());
            pts.push_back(cand.data());
            if (cospherical_or_flat(pts, dim)) return false;
        } while (next_combination(k, subset));
    }
    return true;
}

}  // namespace

PointSet gen_random_general_position(uint32_t n, uint32_t dim, int64_t bbox,
                                     uint64_t seed, uint32_t max_attempts_per_point) {
    if (dim == 0) throw input_error("dimension must be positive");
    if (bbox < 1 || bbox > coord_limit)
        throw input_error("bbox must lie in [1, " + std::to_string(coord_limit) + "]");
    BigInt cells = 1;
    for (uint32_t d = 0; d < dim; ++d) cells *= 2 * BigInt(bbox) + 1;
    if (cells < BigInt(10) * n * n)
        throw resource_error("too few lattice cells: need (2*bbox+1)^dim >= 10*n^2");

    CounterRng rng(seed);
    std::vector<std::vector<Coord>> accepted;
    accepted.reserve(n);
    std::vector<Coord> cand(dim);
    while (accepted.size() < n) {
        uint32_t attempts = 0;
        for (;;) {
            if (++attempts > max_attempts_per_point)
                throw resource_error("rejection sampling stalled after " +
                                     std::to_string(max_attempts_per_point) +
                                     " attempts; increase bbox");
            for (uint32_t d = 0; d < dim; ++d) cand[d] = rng.in_range(-bbox, bbox);
            if (keeps_general_position(accepted, cand, dim)) break;
        }
        accepted.push_back(cand);
    }
    return PointSet::make(dim, std::move(accepted), true);
}

PointSet gen_grid(const std::vector<uint32_t>& extents) {
    if (extents.empty()) throw input_error("grid needs at least one extent");
    uint64_t total = 1;
    for (uint32_t e : extents) {
        if (e == 0) throw input_error("grid extents must be positive");
        if (e > static_cast<uint64_t>(coord_limit))
            throw input_error("grid extent exceeds the coordinate limit");
        total *= e;
        if (total > (uint64_t{1} << 20)) throw input_error("grid too large");
    }
    const uint32_t dim = static_cast<uint32_t>(extents.size());
    std::vector<std::vector<Coord>> coords;
    coords.reserve(total);
    std::vector<Coord> cur(dim, 0);
    for (;;) {
        coords.push_back(cur);
        uint32_t d = dim;
        while (d > 0) {
            --d;
            if (++cur[d] < static_cast<Coord>(extents[d])) break;
            cur[d] = 0;
            if (d == 0) return PointSet::make(dim, std::move(coords), false);
        }
    }
}

PointSet gen_moment_curve(uint32_t n, uint32_t dim) {
    if (dim == 0) throw input_error("dimension must be positive");
    std::vector<std::vector<Coord>> coords;
    coords.reserve(n);
    for (uint32_t i = 1; i <= n; ++i) {
        std::vector<Coord> p(dim);
        BigInt power = 1;
        for (uint32_t d = 0; d < dim; ++d) {
            power *= i;
            if (power > coord_limit)
                throw input_error("moment curve coordinate " + power.str() +
                                  " exceeds the coordinate limit");
            p[d] = static_cast<Coord>(power);
        }
        coords.push_back(std::move(p));
    }
    return PointSet::make(dim, std::move(coords), false);
}

}  // namespace polytuple
