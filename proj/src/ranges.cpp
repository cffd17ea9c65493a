#include "polytuple/ranges.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <unordered_map>
#include <utility>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"
#include "polytuple/exact.hpp"
#include "polytuple/gen.hpp"

namespace polytuple {

std::string to_string(RangeKind kind) {
    switch (kind) {
        case RangeKind::disks2d: return "disks2d";
        case RangeKind::balls: return "balls";
        case RangeKind::halfplanes2d: return "halfplanes2d";
        case RangeKind::rects2d: return "rects2d";
        case RangeKind::boxes: return "boxes";
        case RangeKind::squares2d: return "squares2d";
        case RangeKind::intervals1d: return "intervals1d";
    }
    throw input_error("unknown range kind");
}

RangeKind range_kind_from_string(const std::string& name) {
    if (name == "disks2d") return RangeKind::disks2d;
    if (name == "balls") return RangeKind::balls;
    if (name == "halfplanes2d") return RangeKind::halfplanes2d;
    if (name == "rects2d") return RangeKind::rects2d;
    if (name == "boxes") return RangeKind::boxes;
    if (name == "squares2d") return RangeKind::squares2d;
    if (name == "intervals1d") return RangeKind::intervals1d;
    throw input_error("unknown range kind '" + name + "'");
}

namespace {

using Words = std::vector<uint64_t>;

struct WordsHash {
    size_t operator()(const Words& w) const noexcept {
        uint64_t h = 0x9E3779B97F4A7C15ull ^ (w.size() * 0x2545F4914F6CDD1Dull);
        for (uint64_t x : w) {
            x *= 0xBF58476D1CE4E5B9ull;
            x ^= x >> 31;
            h = (h ^ x) * 0x94D049BB133111EBull;
        }
        return static_cast<size_t>(h ^ (h >> 29));
    }
};

// Realized subsets are deduplicated as fixed-width bitmaps: the disk family
// on 100 points already has over a million distinct ranges, so edges stay
// packed until the final hypergraph is assembled.
class RangeAccum {
  public:
    RangeAccum(uint32_t n, uint64_t max_ranges)
        : n_(n), words_((n + 63) / 64), max_ranges_(max_ranges), key_(words_, 0) {}

    void add(const std::vector<Vertex>& members, const std::vector<uint32_t>& generator) {
        std::fill(key_.begin(), key_.end(), 0);
        for (Vertex v : members) key_[v >> 6] |= uint64_t{1} << (v & 63);
        auto it = ranges_.find(key_);
        if (it == ranges_.end()) {
            if (ranges_.size() >= max_ranges_)
                throw resource_error("range enumeration exceeded the budget of " +
                                     std::to_string(max_ranges_) + " distinct ranges");
            ranges_.emplace(key_, generator);
        } else if (generator < it->second) {
            // Duplicate realizations keep the lexicographically least witness.
            it->second = generator;
        }
    }

    Hypergraph finish() {
        std::vector<Edge> edges;
        std::vector<std::vector<uint32_t>> generators;
        edges.reserve(ranges_.size());
        generators.reserve(ranges_.size());
        for (auto& [words, generator] : ranges_) {
            Edge e;
            for (size_t w = 0; w < words_; ++w) {
                uint64_t bits = words[w];
                while (bits != 0) {
                    const unsigned b = static_cast<unsigned>(std::countr_zero(bits));
                    e.push_back(static_cast<Vertex>(w * 64 + b));
                    bits &= bits - 1;
                }
            }
            edges.push_back(std::move(e));
            generators.push_back(std::move(generator));
        }
        return Hypergraph::normalized(n_, std::move(edges), std::move(generators));
    }

  private:
    uint32_t n_;
    size_t words_;
    uint64_t max_ranges_;
    Words key_;
    std::unordered_map<Words, std::vector<uint32_t>, WordsHash> ranges_;
};

struct CandidateBudget {
    uint64_t cap;
    uint64_t used = 0;

    void spend(uint64_t amount = 1) {
        used += amount;
        if (used > cap)
            throw resource_error("range enumeration exceeded the candidate budget of " +
                                 std::to_string(cap));
    }
};

// Emits interior ∪ T for every T ⊆ boundary. Valid whenever the boundary
// points are affinely independent (guaranteed by general position), since the
// sphere then admits perturbations realizing every boundary sign pattern.
void emit_power_variants(RangeAccum& acc, const std::vector<Vertex>& inside,
                         const std::vector<Vertex>& boundary,
                         const std::vector<uint32_t>& generator) {
    if (boundary.size() > 24)
        throw resource_error("degenerate input: " + std::to_string(boundary.size()) +
                             " points on one circle boundary");
    std::vector<Vertex> members = inside;
    const size_t base = members.size();
    for (uint32_t mask = 0; mask < (1u << boundary.size()); ++mask) {
        members.resize(base);
        for (size_t b = 0; b < boundary.size(); ++b)
            if ((mask >> b) & 1u) members.push_back(boundary[b]);
        acc.add(members, generator);
    }
}

void add_empty_and_singletons(RangeAccum& acc, uint32_t n) {
    acc.add({}, {});
    std::vector<Vertex> single(1);
    for (Vertex i = 0; i < n; ++i) {
        single[0] = i;
        acc.add(single, {i});
    }
}

Hypergraph enumerate_disks2d(const PointSet& points, const EnumerateOptions& options) {
    const uint32_t n = points.size();
    RangeAccum acc(n, options.max_ranges);
    CandidateBudget budget{options.max_candidates};
    add_empty_and_singletons(acc, n);

    std::vector<Vertex> inside, boundary;
    for (Vertex i = 0; i < n; ++i) {
        const Coord* a = points.point(i);
        for (Vertex j = i + 1; j < n; ++j) {
            budget.spend();
            const Coord* b = points.point(j);
            inside.clear();
            boundary.clear();
            for (Vertex q = 0; q < n; ++q) {
                const int s = side_of_diametral(a, b, points.point(q), 2);
                if (s < 0) inside.push_back(q);
                else if (s == 0) boundary.push_back(q);
            }
            emit_power_variants(acc, inside, boundary, {i, j});
        }
    }
    for (Vertex i = 0; i < n; ++i) {
        const Coord* a = points.point(i);
        for (Vertex j = i + 1; j < n; ++j) {
            const Coord* b = points.point(j);
            for (Vertex k = j + 1; k < n; ++k) {
                const Coord* c = points.point(k);
                if (orient2d(a, b, c) == 0) continue;  // collinear: no circumdisk
                budget.spend();
                inside.clear();
                boundary.clear();
                for (Vertex q = 0; q < n; ++q) {
                    const int s = side_of_circumcircle(a, b, c, points.point(q));
                    if (s < 0) inside.push_back(q);
                    else if (s == 0) boundary.push_back(q);
                }
                emit_power_variants(acc, inside, boundary, {i, j, k});
            }
        }
    }
    return acc.finish();
}

Hypergraph enumerate_balls(const PointSet& points, const EnumerateOptions& options) {
    const uint32_t n = points.size();
    const uint32_t dim = points.dim;
    if (dim > options.balls_max_dim || n > options.balls_max_n)
        throw resource_error("ball enumeration limited to dim <= " +
                             std::to_string(options.balls_max_dim) + " and n <= " +
                             std::to_string(options.balls_max_n) +
                             " by default; raise the budget to override");
    RangeAccum acc(n, options.max_ranges);
    CandidateBudget budget{options.max_candidates};
    add_empty_and_singletons(acc, n);

    std::vector<const Coord*> subset_pts;
    std::vector<Vertex> inside, boundary;
    const uint32_t max_size = std::min(dim + 1, n);
    for (uint32_t size = 2; size <= max_size; ++size) {
        std::vector<uint32_t> subset = first_combination(size);
        do {
            budget.spend();
            subset_pts.clear();
            for (uint32_t v : subset) subset_pts.push_back(points.point(v));
            const auto sphere = sphere_through(subset_pts, dim);
            if (!sphere) continue;  // no common sphere centered in the affine hull
            inside.clear();
            boundary.clear();
            for (Vertex q = 0; q < n; ++q) {
                const int s = sphere->side_of(points.point(q));
                if (s < 0) inside.push_back(q);
                else if (s == 0) boundary.push_back(q);
            }
            emit_power_variants(acc, inside, boundary, subset);
        } while (next_combination(n, subset));
    }
    return acc.finish();
}

Hypergraph enumerate_halfplanes2d(const PointSet& points, const EnumerateOptions& options) {
    const uint32_t n = points.size();
    RangeAccum acc(n, options.max_ranges);
    CandidateBudget budget{options.max_candidates};
    add_empty_and_singletons(acc, n);

    std::vector<Vertex> left, right, on_line, members;
    std::vector<std::pair<int64_t, Vertex>> along;  // position along the line
    for (Vertex i = 0; i < n; ++i) {
        const Coord* a = points.point(i);
        for (Vertex j = i + 1; j < n; ++j) {
            const Coord* b = points.point(j);
            if (a[0] == b[0] && a[1] == b[1]) continue;  // coincident: no line
            budget.spend();
            left.clear();
            right.clear();
            along.clear();
            for (Vertex q = 0; q < n; ++q) {
                const Coord* p = points.point(q);
                const int o = orient2d(a, b, p);
                if (o > 0) {
                    left.push_back(q);
                } else if (o < 0) {
                    right.push_back(q);
                } else {
                    const int64_t pos = (b[0] - a[0]) * (p[0] - a[0]) +
                                        (b[1] - a[1]) * (p[1] - a[1]);
                    along.emplace_back(pos, q);
                }
            }
            std::sort(along.begin(), along.end());
            // Tilting the boundary line about a pivot keeps one run of the
            // collinear points inside, so the realizable boundary subsets are
            // exactly the prefixes and suffixes in line order. Points sharing
            // a position move together.
            on_line.clear();
            std::vector<size_t> cuts{0};  // group boundaries in on_line
            for (size_t s = 0; s < along.size(); ++s) {
                on_line.push_back(along[s].second);
                if (s + 1 == along.size() || along[s + 1].first != along[s].first)
                    cuts.push_back(s + 1);
            }
            for (const auto* side : {&left, &right}) {
                for (size_t cut : cuts) {
                    members = *side;
                    members.insert(members.end(), on_line.begin(), on_line.begin() + cut);
                    acc.add(members, {i, j});
                    members = *side;
                    members.insert(members.end(), on_line.begin() + cut, on_line.end());
                    acc.add(members, {i, j});
                }
            }
        }
    }
    return acc.finish();
}

Hypergraph enumerate_boxes(const PointSet& points, const EnumerateOptions& options) {
    const uint32_t n = points.size();
    const uint32_t dim = points.dim;
    RangeAccum acc(n, options.max_ranges);

    // Distinct coordinate values and each point's value index, per axis.
    std::vector<std::vector<Coord>> values(dim);
    std::vector<std::vector<uint32_t>> vid(dim, std::vector<uint32_t>(n));
    for (uint32_t d = 0; d < dim; ++d) {
        for (uint32_t q = 0; q < n; ++q) values[d].push_back(points.coords[q][d]);
        std::sort(values[d].begin(), values[d].end());
        values[d].erase(std::unique(values[d].begin(), values[d].end()), values[d].end());
        for (uint32_t q = 0; q < n; ++q) {
            const auto it = std::lower_bound(values[d].begin(), values[d].end(),
                                             points.coords[q][d]);
            vid[d][q] = static_cast<uint32_t>(it - values[d].begin());
        }
    }

    Int128 total = 1;
    for (uint32_t d = 0; d < dim; ++d) {
        const Int128 m = values[d].size();
        total *= m * (m + 1) / 2;
        if (total > static_cast<Int128>(options.max_candidates))
            throw resource_error("box enumeration exceeds the candidate budget of " +
                                 std::to_string(options.max_candidates));
    }

    acc.add({}, {});
    if (n == 0) return acc.finish();

    // Odometer over one (lo, hi) value-index interval per axis.
    std::vector<uint32_t> lo(dim, 0), hi(dim, 0);
    std::vector<Vertex> members;
    std::vector<uint32_t> generator;
    for (;;) {
        members.clear();
        for (Vertex q = 0; q < n; ++q) {
            bool in = true;
            for (uint32_t d = 0; d < dim; ++d)
                if (vid[d][q] < lo[d] || vid[d][q] > hi[d]) {
                    in = false;
                    break;
                }
            if (in) members.push_back(q);
        }
        generator.clear();
        for (uint32_t d = 0; d < dim; ++d) {
            for (uint32_t bound : {lo[d], hi[d]}) {
                for (uint32_t q = 0; q < n; ++q)
                    if (vid[d][q] == bound) {
                        generator.push_back(q);
                        break;
                    }
            }
        }
        std::sort(generator.begin(), generator.end());
        generator.erase(std::unique(generator.begin(), generator.end()), generator.end());
        acc.add(members, generator);

        uint32_t d = 0;
        for (; d < dim; ++d) {
            if (hi[d] + 1 < values[d].size()) {
                ++hi[d];
                break;
            }
            if (lo[d] + 1 < values[d].size()) {
                ++lo[d];
                hi[d] = lo[d];
                break;
            }
            lo[d] = hi[d] = 0;
        }
        if (d == dim) break;
    }
    return acc.finish();
}

Hypergraph enumerate_squares2d(const PointSet& points, const EnumerateOptions& options) {
    const uint32_t n = points.size();
    RangeAccum acc(n, options.max_ranges);
    CandidateBudget budget{options.max_candidates};
    add_empty_and_singletons(acc, n);

    // Candidate squares: two points span the side length along one axis and a
    // third pins the square's offset on the other axis (either edge).
    std::vector<Vertex> members;
    std::vector<uint32_t> generator;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            for (uint32_t axis = 0; axis < 2; ++axis) {
                const uint32_t other = 1 - axis;
                const Coord lo = std::min(points.coords[i][axis], points.coords[j][axis]);
                const Coord hi = std::max(points.coords[i][axis], points.coords[j][axis]);
                const Coord s = hi - lo;
                if (s == 0) continue;
                for (Vertex c = 0; c < n; ++c) {
                    const Coord pin = points.coords[c][other];
                    for (const Coord off : {pin, pin - s}) {
                        budget.spend();
                        members.clear();
                        for (Vertex q = 0; q < n; ++q) {
                            const Coord u = points.coords[q][axis];
                            const Coord v = points.coords[q][other];
                            if (lo <= u && u <= hi && off <= v && v <= off + s)
                                members.push_back(q);
                        }
                        generator = {i, j, c};
                        std::sort(generator.begin(), generator.end());
                        generator.erase(std::unique(generator.begin(), generator.end()),
                                        generator.end());
                        acc.add(members, generator);
                    }
                }
            }
        }
    }
    return acc.finish();
}

Hypergraph enumerate_intervals1d(const PointSet& points, const EnumerateOptions& options) {
    const uint32_t n = points.size();
    RangeAccum acc(n, options.max_ranges);
    CandidateBudget budget{options.max_candidates};
    acc.add({}, {});

    std::vector<Coord> values;
    for (uint32_t q = 0; q < n; ++q) values.push_back(points.coords[q][0]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::vector<Vertex>> group(values.size());
    for (Vertex q = 0; q < n; ++q) {
        const auto it = std::lower_bound(values.begin(), values.end(), points.coords[q][0]);
        group[it - values.begin()].push_back(q);
    }

    std::vector<Vertex> members;
    for (size_t lo = 0; lo < values.size(); ++lo) {
        members.clear();
        for (size_t hi = lo; hi < values.size(); ++hi) {
            budget.spend();
            members.insert(members.end(), group[hi].begin(), group[hi].end());
            std::vector<uint32_t> generator{group[lo].front(), group[hi].front()};
            std::sort(generator.begin(), generator.end());
            generator.erase(std::unique(generator.begin(), generator.end()), generator.end());
            acc.add(members, generator);
        }
    }
    return acc.finish();
}

void require_dim(const PointSet& points, uint32_t dim, const char* kind) {
    if (points.dim != dim)
        throw input_error(std::string(kind) + " requires dimension " + std::to_string(dim) +
                          ", got " + std::to_string(points.dim));
}

}  // namespace

Hypergraph enumerate_ranges(const PointSet& points, RangeKind kind,
                            const EnumerateOptions& options) {
    switch (kind) {
        case RangeKind::disks2d:
            require_dim(points, 2, "disks2d");
            if (!points.general_position)
                throw input_error("disks2d needs a point set validated for general position");
            return enumerate_disks2d(points, options);
        case RangeKind::balls:
            if (!points.general_position)
                throw input_error("balls needs a point set validated for general position");
            return enumerate_balls(points, options);
        case RangeKind::halfplanes2d:
            require_dim(points, 2, "halfplanes2d");
            return enumerate_halfplanes2d(points, options);
        case RangeKind::rects2d:
            require_dim(points, 2, "rects2d");
            return enumerate_boxes(points, options);
        case RangeKind::boxes:
            return enumerate_boxes(points, options);
        case RangeKind::squares2d:
            require_dim(points, 2, "squares2d");
            return enumerate_squares2d(points, options);
        case RangeKind::intervals1d:
            require_dim(points, 1, "intervals1d");
            return enumerate_intervals1d(points, options);
    }
    throw input_error("unknown range kind");
}

Edge shrink_range(const Hypergraph& h, const Edge& e, uint32_t target_size) {
    const auto pos = std::lower_bound(h.edges.begin(), h.edges.end(), e);
    if (pos == h.edges.end() || *pos != e) throw input_error("shrink_range: e is not an edge");
    if (target_size > e.size())
        throw input_error("shrink_range: target size exceeds |e|");

    std::vector<std::vector<const Edge*>> by_size(e.size() + 1);
    for (const Edge& other : h.edges)
        if (other.size() <= e.size()) by_size[other.size()].push_back(&other);

    Edge current = e;
    while (current.size() > target_size) {
        const Edge* next = nullptr;
        for (const Edge* cand : by_size[current.size() - 1])
            if (is_subset(*cand, current)) {
                next = cand;
                break;
            }
        if (next == nullptr) break;  // greedy chain stuck; try the direct level
        current = *next;
    }
    if (current.size() == target_size) return current;
    for (const Edge* cand : by_size[target_size])
        if (is_subset(*cand, e)) return *cand;
    throw certification_error("shrinkability violated: no sub-edge of size " +
                              std::to_string(target_size) + " inside the given edge");
}

SharpnessReport moment_curve_sharpness_check(uint32_t n, uint32_t d,
                                             const EnumerateOptions& options) {
    if (d < 3) throw input_error("sharpness check needs dimension >= 3");
    const PointSet points = validated(gen_moment_curve(n, d));
    const Hypergraph ranges = enumerate_ranges(points, RangeKind::balls, options);

    SharpnessReport report;
    report.threshold = (d + 3) / 2;
    report.ok = true;
    for (uint32_t size = 1; size < report.threshold && size <= n; ++size) {
        Tuple subset = first_combination(size);
        do {
            const int64_t depth = depth_of(ranges, subset);
            if (depth != 0) {
                report.ok = false;
                report.witness = subset;
                report.witness_depth = depth;
                return report;
            }
        } while (next_combination(n, subset));
    }
    return report;
}

}  // namespace polytuple
