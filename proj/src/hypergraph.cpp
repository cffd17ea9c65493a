#include "polytuple/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"

namespace polytuple {

Hypergraph Hypergraph::normalized(uint32_t n, std::vector<Edge> raw_edges,
                                  std::vector<std::vector<uint32_t>> raw_generators) {
    if (!raw_generators.empty() && raw_generators.size() != raw_edges.size()) {
        throw input_error("generator list must align with edge list");
    }
    for (Edge& e : raw_edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (!e.empty() && e.back() >= n) {
            throw input_error("edge index " + std::to_string(e.back()) +
                              " out of range for n=" + std::to_string(n));
        }
    }
    Hypergraph h;
    h.n = n;
    if (raw_generators.empty()) {
        std::sort(raw_edges.begin(), raw_edges.end());
        raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());
        h.edges = std::move(raw_edges);
    } else {
        std::vector<size_t> order(raw_edges.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (raw_edges[a] != raw_edges[b]) return raw_edges[a] < raw_edges[b];
            return raw_generators[a] < raw_generators[b];
        });
        for (size_t idx : order) {
            if (!h.edges.empty() && h.edges.back() == raw_edges[idx]) continue;
            h.edges.push_back(std::move(raw_edges[idx]));
            h.generators.push_back(std::move(raw_generators[idx]));
        }
    }
    return h;
}

size_t Hypergraph::max_edge_size() const {
    size_t best = 0;
    for (const Edge& e : edges) best = std::max(best, e.size());
    return best;
}

bool edge_contains(const Edge& e, Vertex v) {
    return std::binary_search(e.begin(), e.end(), v);
}

bool is_subset(const Edge& sub, const Edge& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

int64_t depth_of(const Hypergraph& h, const Tuple& s) {
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw input_error("tuple must be sorted and duplicate-free");
    }
    if (!s.empty() && s.back() >= h.n) throw input_error("tuple index out of range");
    int64_t best = static_cast<int64_t>(h.n) - static_cast<int64_t>(s.size());
    for (const Edge& e : h.edges) {
        if (e.size() < s.size()) continue;
        if (!is_subset(s, e)) continue;
        int64_t slack = static_cast<int64_t>(e.size() - s.size());
        if (slack < best) {
            best = slack;
            if (best == 0) break;
        }
    }
    return best;
}

Projection project(const Hypergraph& h, const std::vector<Vertex>& x) {
    if (!std::is_sorted(x.begin(), x.end()) ||
        std::adjacent_find(x.begin(), x.end()) != x.end()) {
        throw input_error("projection set must be sorted and duplicate-free");
    }
    if (!x.empty() && x.back() >= h.n) throw input_error("projection index out of range");
    std::vector<uint32_t> new_index(h.n, UINT32_MAX);
    for (uint32_t i = 0; i < x.size(); ++i) new_index[x[i]] = i;
    std::vector<Edge> traced;
    traced.reserve(h.edges.size());
    for (const Edge& e : h.edges) {
        Edge cut;
        for (Vertex v : e) {
            if (new_index[v] != UINT32_MAX) cut.push_back(new_index[v]);
        }
        traced.push_back(std::move(cut));
    }
    Projection result;
    result.h = Hypergraph::normalized(static_cast<uint32_t>(x.size()), std::move(traced));
    result.index_map = x;
    return result;
}

namespace {

struct VectorHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        uint64_t acc = 0x9E3779B97F4A7C15ull;
        for (uint32_t x : v) {
            acc ^= x + 0x9E3779B97F4A7C15ull + (acc << 6) + (acc >> 2);
        }
        return static_cast<size_t>(acc);
    }
};

// True when every intersection pattern of `subset` with the edges occurs.
bool is_shattered(const Hypergraph& h, const std::vector<Vertex>& subset) {
    const uint32_t s = static_cast<uint32_t>(subset.size());
    const uint64_t want = uint64_t{1} << s;
    if (h.edges.size() < want) return false;
    std::vector<bool> seen(want, false);
    uint64_t found = 0;
    for (const Edge& e : h.edges) {
        uint64_t mask = 0;
        size_t ei = 0;
        for (uint32_t bit = 0; bit < s; ++bit) {
            Vertex v = subset[bit];
            while (ei < e.size() && e[ei] < v) ++ei;
            if (ei < e.size() && e[ei] == v) mask |= uint64_t{1} << bit;
        }
        if (!seen[mask]) {
            seen[mask] = true;
            if (++found == want) return true;
        }
    }
    return false;
}

}  // namespace

uint32_t vc_dimension(const Hypergraph& h, const VcBudget& budget) {
    if (h.edges.empty() || h.n == 0) return 0;
    uint32_t cap = std::min<uint32_t>(budget.size_cap, h.n);
    // 2^d <= |edges| is necessary for a shattered d-set.
    while (cap > 0 && (cap >= 63 || (uint64_t{1} << cap) > h.edges.size())) --cap;
    uint64_t tested = 0;
    std::unordered_set<std::vector<uint32_t>, VectorHash> shattered_prev;
    shattered_prev.insert(std::vector<uint32_t>{});
    uint32_t dimension = 0;
    for (uint32_t s = 1; s <= cap; ++s) {
        std::unordered_set<std::vector<uint32_t>, VectorHash> shattered_here;
        std::vector<uint32_t> combo = first_combination(s);
        do {
            if (++tested > budget.subset_budget) {
                throw resource_error("vc_dimension subset budget exceeded");
            }
            // A set can be shattered only if all its (s-1)-subsets are.
            bool eligible = true;
            if (s > 1) {
                std::vector<uint32_t> sub(combo.begin() + 1, combo.end());
                for (uint32_t skip = 0; skip < s; ++skip) {
                    if (!shattered_prev.count(sub)) {
                        eligible = false;
                        break;
                    }
                    if (skip + 1 < s) sub[skip] = combo[skip];
                }
            }
            if (!eligible) continue;
            if (is_shattered(h, combo)) shattered_here.insert(combo);
        } while (next_combination(h.n, combo));
        if (shattered_here.empty()) break;
        dimension = s;
        shattered_prev = std::move(shattered_here);
    }
    return dimension;
}

std::optional<ShrinkabilityWitness> shrinkability_violation(const Hypergraph& h) {
    size_t max_size = h.max_edge_size();
    std::vector<std::vector<const Edge*>> by_size(max_size + 1);
    for (const Edge& e : h.edges) by_size[e.size()].push_back(&e);
    for (const Edge& e : h.edges) {
        for (uint32_t i = 1; i + 1 <= e.size(); ++i) {
            bool found = false;
            for (const Edge* cand : by_size[i]) {
                if (is_subset(*cand, e)) {
                    found = true;
                    break;
                }
            }
            if (!found) return ShrinkabilityWitness{e, i};
        }
    }
    return std::nullopt;
}

bool is_shrinkable(const Hypergraph& h) { return !shrinkability_violation(h).has_value(); }

bool sauer_shelah_check(const Hypergraph& h, const VcBudget& budget) {
    uint32_t d = vc_dimension(h, budget);
    unsigned __int128 bound = 0;
    const unsigned __int128 edges = h.edges.size();
    for (uint32_t i = 0; i <= d; ++i) {
        uint64_t term = binom(h.n, i);
        if (term == binom_saturated) return true;
        bound += term;
        if (bound >= edges) return true;
    }
    return bound >= edges;
}

int64_t DepthTable::at(const Tuple& s) const {
    return depths[combination_rank(n, s)];
}

DepthTable tuple_depth_table(const Hypergraph& h, uint32_t t, const TableBudget& budget) {
    if (t == 0 || t > h.n) throw input_error("tuple size must be in [1, n]");
    uint64_t entries = binom(h.n, t);
    if (entries == binom_saturated || entries > budget.max_entries) {
        throw resource_error("depth table entry budget exceeded");
    }
    DepthTable table;
    table.n = h.n;
    table.t = t;
    table.depths.assign(entries, static_cast<int64_t>(h.n) - t);
    for (const Edge& e : h.edges) {
        if (e.size() < t) continue;
        int64_t slack = static_cast<int64_t>(e.size()) - t;
        if (t == 2) {
            for (size_t i = 0; i < e.size(); ++i) {
                for (size_t j = i + 1; j < e.size(); ++j) {
                    uint64_t r = pair_rank(h.n, e[i], e[j]);
                    if (slack < table.depths[r]) table.depths[r] = slack;
                }
            }
        } else {
            std::vector<uint32_t> pick = first_combination(t);
            Tuple s(t);
            do {
                for (uint32_t i = 0; i < t; ++i) s[i] = e[pick[i]];
                uint64_t r = combination_rank(h.n, s);
                if (slack < table.depths[r]) table.depths[r] = slack;
            } while (next_combination(static_cast<uint32_t>(e.size()), pick));
        }
    }
    return table;
}

DeepTuple max_deep_tuple(const Hypergraph& h, uint32_t t, const TableBudget& budget) {
    DepthTable table = tuple_depth_table(h, t, budget);
    size_t best_rank = 0;
    for (size_t r = 1; r < table.depths.size(); ++r) {
        if (table.depths[r] > table.depths[best_rank]) best_rank = r;
    }
    DeepTuple result;
    result.tuple = combination_unrank(h.n, t, best_rank);
    result.depth = table.depths[best_rank];
    return result;
}

}  // namespace polytuple
