#include <algorithm>
#include <vector>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"
#include "polytuple/parallel.hpp"
#include "polytuple/ranges.hpp"

namespace polytuple {

namespace {

// Disks through the fixed pair form a pencil: center = midpoint + tau * w
// with w the rotated chord. Point q is inside the disk at tau iff
// num <= tau * den, so q's membership flips exactly once, at tau = num / den.
struct CriticalEvent {
    int64_t num;
    int64_t den;  // nonzero; sign says whether q enters (+) or leaves (-)
};

bool event_less(const CriticalEvent& lhs, const CriticalEvent& rhs) {
    const Int128 l = static_cast<Int128>(lhs.num) * rhs.den;
    const Int128 r = static_cast<Int128>(rhs.num) * lhs.den;
    return (lhs.den > 0) == (rhs.den > 0) ? l < r : l > r;
}

bool event_equal(const CriticalEvent& lhs, const CriticalEvent& rhs) {
    return static_cast<Int128>(lhs.num) * rhs.den ==
           static_cast<Int128>(rhs.num) * lhs.den;
}

}  // namespace

int64_t pair_depth_disks(const PointSet& points, Vertex x, Vertex y) {
    if (points.dim != 2) throw input_error("pair_depth_disks expects dimension 2");
    const uint32_t n = points.size();
    if (x >= n || y >= n) throw input_error("pair index out of range");
    if (x == y) throw input_error("pair must consist of two distinct indices");
    const Coord* a = points.point(x);
    const Coord* b = points.point(y);
    if (a[0] == b[0] && a[1] == b[1])
        throw input_error("pair points coincide; the disk pencil is undefined");

    int64_t count = 0;  // coverage of the leftmost open interval (tau -> -inf)
    std::vector<CriticalEvent> events;
    events.reserve(n - 2);
    for (Vertex q = 0; q < n; ++q) {
        if (q == x || q == y) continue;
        const Coord* p = points.point(q);
        const int64_t num = (p[0] - a[0]) * (p[0] - b[0]) + (p[1] - a[1]) * (p[1] - b[1]);
        const int64_t den = 2 * ((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]));
        if (den == 0) {
            // Collinear with the pair: every containing disk meets the line in
            // exactly the chord, so q is always inside iff it lies between.
            if (num <= 0) ++count;
        } else {
            if (den < 0) ++count;
            events.push_back({num, den});
        }
    }

    std::sort(events.begin(), events.end(), event_less);
    int64_t best = count;
    size_t i = 0;
    while (i < events.size()) {
        size_t j = i;
        int64_t delta = 0;
        while (j < events.size() && event_equal(events[i], events[j])) {
            delta += events[j].den > 0 ? 1 : -1;
            ++j;
        }
        count += delta;
        best = std::min(best, count);
        i = j;
    }
    return best;
}

std::vector<int64_t> all_pair_depths_disks(const PointSet& points) {
    const uint32_t n = points.size();
    if (n < 2) return {};
    const size_t pairs = static_cast<size_t>(binom(n, 2));
    std::vector<int64_t> depths(pairs, 0);
    parallel_chunks(0, pairs, [&](size_t begin, size_t end) {
        for (size_t rank = begin; rank < end; ++rank) {
            const auto pair = combination_unrank(n, 2, rank);
            depths[rank] = pair_depth_disks(points, pair[0], pair[1]);
        }
    });
    return depths;
}

}  // namespace polytuple
