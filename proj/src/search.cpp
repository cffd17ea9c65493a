#include "polytuple/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"

namespace polytuple {
namespace {

uint64_t tuple_rank(uint32_t n, uint32_t t, const Tuple& tuple) {
    return t == 2 ? pair_rank(n, tuple[0], tuple[1]) : combination_rank(n, tuple);
}

// Calls fn for every sorted t-subset of e (itself sorted); stops when fn
// returns false.
template <typename Fn>
void for_each_tuple_in(const Edge& e, uint32_t t, Fn&& fn) {
    const auto size = static_cast<uint32_t>(e.size());
    if (size < t || t == 0) return;
    std::vector<uint32_t> idx = first_combination(t);
    Tuple tuple(t);
    do {
        for (uint32_t i = 0; i < t; ++i) tuple[i] = e[idx[i]];
        if (!fn(tuple)) return;
    } while (next_combination(size, idx));
}

constexpr uint32_t unassigned_color = UINT32_MAX;

// Backtracking state over the tuples that occur in constrained edges.
// Propagation is the pigeonhole pair: an edge with more missing colors than
// unassigned tuples is dead, and one with exactly one of each forces a value.
class Solver {
  public:
    Solver(uint32_t n, uint32_t t, uint32_t k, std::vector<const Edge*> edges,
           const SearchBudget& budget)
        : n_(n), t_(t), k_(k), edges_(std::move(edges)), budget_(budget) {
        vars_of_edge_.resize(edges_.size());
        for (uint32_t ei = 0; ei < edges_.size(); ++ei) {
            for_each_tuple_in(*edges_[ei], t_, [&](const Tuple& tuple) {
                const uint64_t rank = tuple_rank(n_, t_, tuple);
                auto [it, fresh] = var_of_rank_.try_emplace(rank, num_vars());
                if (fresh) {
                    rank_of_var_.push_back(rank);
                    edges_of_var_.emplace_back();
                }
                edges_of_var_[it->second].push_back(ei);
                vars_of_edge_[ei].push_back(it->second);
                return true;
            });
        }
        color_of_var_.assign(num_vars(), unassigned_color);
        missing_.assign(edges_.size(), k_);
        unassigned_.assign(edges_.size(), 0);
        color_count_.assign(static_cast<size_t>(edges_.size()) * k_, 0);
        for (uint32_t ei = 0; ei < edges_.size(); ++ei)
            unassigned_[ei] = static_cast<uint32_t>(vars_of_edge_[ei].size());
        usage_.assign(k_, 0);

        order_.resize(num_vars());
        std::iota(order_.begin(), order_.end(), 0u);
        std::sort(order_.begin(), order_.end(), [&](uint32_t a, uint32_t b) {
            if (edges_of_var_[a].size() != edges_of_var_[b].size())
                return edges_of_var_[a].size() > edges_of_var_[b].size();
            return rank_of_var_[a] < rank_of_var_[b];
        });
    }

    uint32_t num_vars() const { return static_cast<uint32_t>(rank_of_var_.size()); }

    SearchResult run() {
        const auto deadline = std::chrono::steady_clock::now() +
                              std::chrono::duration<double>(budget_.time_limit_seconds);
        SearchResult result;
        for (uint32_t ei = 0; ei < edges_.size(); ++ei) {
            if (unassigned_[ei] < missing_[ei]) {
                result.status = SearchStatus::none;
                return result;
            }
        }
        struct Frame {
            uint32_t var;
            uint32_t next;
            size_t trail_mark;
            std::vector<uint32_t> color_order;
        };
        std::vector<Frame> stack;
        if (const auto v = next_var()) {
            stack.push_back({*v, 0, trail_.size(), ranked_colors()});
        } else {
            result.status = SearchStatus::found;
            result.coloring = extract();
            return result;
        }
        while (!stack.empty()) {
            Frame& frame = stack.back();
            if (frame.next == k_) {
                rollback(frame.trail_mark);
                stack.pop_back();
                continue;
            }
            const uint32_t color = frame.color_order[frame.next++];
            if (nodes_ >= budget_.max_nodes ||
                (nodes_ % 1024 == 0 && std::chrono::steady_clock::now() >= deadline)) {
                result.status = SearchStatus::indeterminate;
                result.nodes = nodes_;
                return result;
            }
            if (!assign_and_propagate(frame.var, color, frame.trail_mark)) continue;
            if (const auto v = next_var()) {
                stack.push_back({*v, 0, trail_.size(), ranked_colors()});
            } else {
                result.status = SearchStatus::found;
                result.coloring = extract();
                result.nodes = nodes_;
                return result;
            }
        }
        result.status = SearchStatus::none;
        result.nodes = nodes_;
        return result;
    }

  private:
    std::optional<uint32_t> next_var() const {
        for (const uint32_t v : order_)
            if (color_of_var_[v] == unassigned_color) return v;
        return std::nullopt;
    }

    // Colors by current scarcity; stable toward the smaller color index.
    std::vector<uint32_t> ranked_colors() const {
        std::vector<uint32_t> colors(k_);
        std::iota(colors.begin(), colors.end(), 0u);
        std::sort(colors.begin(), colors.end(), [&](uint32_t a, uint32_t b) {
            return usage_[a] != usage_[b] ? usage_[a] < usage_[b] : a < b;
        });
        return colors;
    }

    uint32_t& count(uint32_t ei, uint32_t color) {
        return color_count_[static_cast<size_t>(ei) * k_ + color];
    }

    void apply(uint32_t var, uint32_t color) {
        color_of_var_[var] = color;
        trail_.push_back(var);
        ++usage_[color];
        ++nodes_;
        for (const uint32_t ei : edges_of_var_[var]) {
            --unassigned_[ei];
            if (count(ei, color)++ == 0) --missing_[ei];
        }
    }

    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            const uint32_t var = trail_.back();
            trail_.pop_back();
            const uint32_t color = color_of_var_[var];
            color_of_var_[var] = unassigned_color;
            --usage_[color];
            for (const uint32_t ei : edges_of_var_[var]) {
                ++unassigned_[ei];
                if (--count(ei, color) == 0) ++missing_[ei];
            }
        }
    }

    bool assign_and_propagate(uint32_t var, uint32_t color, size_t mark) {
        std::vector<std::pair<uint32_t, uint32_t>> queue{{var, color}};
        size_t head = 0;
        while (head < queue.size()) {
            const auto [v, c] = queue[head++];
            if (color_of_var_[v] != unassigned_color) {
                if (color_of_var_[v] != c) {
                    rollback(mark);
                    return false;
                }
                continue;
            }
            apply(v, c);
            for (const uint32_t ei : edges_of_var_[v]) {
                if (missing_[ei] > unassigned_[ei]) {
                    rollback(mark);
                    return false;
                }
                if (missing_[ei] == 1 && unassigned_[ei] == 1) {
                    uint32_t forced_var = 0;
                    for (const uint32_t w : vars_of_edge_[ei])
                        if (color_of_var_[w] == unassigned_color) forced_var = w;
                    uint32_t forced_color = 0;
                    for (uint32_t cc = 0; cc < k_; ++cc)
                        if (count(ei, cc) == 0) forced_color = cc;
                    queue.emplace_back(forced_var, forced_color);
                }
            }
        }
        return true;
    }

    TupleColoring extract() const {
        const uint64_t total = binom(n_, t_);
        TupleColoring out{n_, t_, k_, std::vector<uint32_t>(total, 0)};
        for (uint32_t v = 0; v < num_vars(); ++v) out.colors[rank_of_var_[v]] = color_of_var_[v];
        return out;
    }

    uint32_t n_;
    uint32_t t_;
    uint32_t k_;
    std::vector<const Edge*> edges_;
    SearchBudget budget_;

    std::unordered_map<uint64_t, uint32_t> var_of_rank_;
    std::vector<uint64_t> rank_of_var_;
    std::vector<std::vector<uint32_t>> edges_of_var_;
    std::vector<std::vector<uint32_t>> vars_of_edge_;
    std::vector<uint32_t> order_;

    std::vector<uint32_t> color_of_var_;
    std::vector<uint32_t> trail_;
    std::vector<uint32_t> missing_;
    std::vector<uint32_t> unassigned_;
    std::vector<uint32_t> color_count_;
    std::vector<uint64_t> usage_;
    uint64_t nodes_ = 0;
};

}  // namespace

SearchResult exists_polychromatic(const Hypergraph& h, uint32_t t, uint32_t k, uint32_t f,
                                  const SearchBudget& budget) {
    if (t == 0) throw input_error("tuple arity must be positive");
    if (k == 0) throw input_error("color count must be positive");
    if (t > h.n) throw input_error("tuple arity exceeds the ground set");
    const uint64_t total = binom(h.n, t);
    if (total == binom_saturated || total > (uint64_t{1} << 26))
        throw resource_error("tuple space too large for exact search");

    std::vector<const Edge*> constrained;
    for (const Edge& e : h.edges)
        if (e.size() >= f) constrained.push_back(&e);

    uint64_t incidences = 0;
    for (const Edge* e : constrained) {
        if (e->size() < t || binom(e->size(), t) < k)
            return {SearchStatus::none, std::nullopt, 0};
        incidences += binom(e->size(), t);
        if (incidences > (uint64_t{1} << 25))
            throw resource_error("constrained tuple incidences exceed the search budget");
    }

    Solver solver(h.n, t, k, std::move(constrained), budget);
    return solver.run();
}

ExactFResult exact_f(const Hypergraph& h, uint32_t t, uint32_t k, const SearchBudget& budget) {
    ExactFResult result;
    uint32_t lo = 1;
    uint32_t hi = static_cast<uint32_t>(h.max_edge_size()) + 1;  // vacuously feasible
    while (lo < hi) {
        const uint32_t mid = lo + (hi - lo) / 2;
        SearchResult probe = exists_polychromatic(h, t, k, mid, budget);
        result.nodes += probe.nodes;
        if (probe.status == SearchStatus::found) {
            hi = mid;
        } else if (probe.status == SearchStatus::none) {
            lo = mid + 1;
        } else {
            result.status = SearchStatus::indeterminate;
            result.f = mid;
            return result;
        }
    }
    result.status = SearchStatus::found;
    result.f = lo;
    return result;
}

VertexSearchResult find_vertex_coloring(const Hypergraph& h, uint32_t k, uint32_t f,
                                        const SearchBudget& budget) {
    SearchResult inner = exists_polychromatic(h, 1, k, f, budget);
    VertexSearchResult result;
    result.status = inner.status;
    result.nodes = inner.nodes;
    if (inner.coloring) {
        // 1-tuple ranks coincide with vertex indices.
        result.coloring = VertexColoring{h.n, k, std::move(inner.coloring->colors)};
    }
    return result;
}

VerificationReport verify_polychromatic(const Hypergraph& h, const TupleColoring& coloring,
                                        uint32_t f, size_t max_violations) {
    if (coloring.n != h.n) throw input_error("coloring ground set does not match the hypergraph");
    coloring.validate();
    const uint32_t t = coloring.t;
    const uint32_t k = coloring.k;
    VerificationReport report;
    report.f = f;
    std::vector<char> seen(k);
    for (const Edge& e : h.edges) {
        if (e.size() < f) continue;
        ++report.edges_checked;
        std::fill(seen.begin(), seen.end(), 0);
        uint32_t distinct = 0;
        for_each_tuple_in(e, t, [&](const Tuple& tuple) {
            ++report.nodes;
            const uint32_t c = coloring.colors[tuple_rank(h.n, t, tuple)];
            if (!seen[c]) {
                seen[c] = 1;
                ++distinct;
            }
            return distinct < k;
        });
        if (distinct < k) {
            report.ok = false;
            if (report.violations.size() < max_violations) {
                Violation violation;
                violation.edge = e;
                for (uint32_t c = 0; c < k; ++c)
                    if (!seen[c]) violation.missing_colors.push_back(c);
                report.violations.push_back(std::move(violation));
            }
        }
    }
    return report;
}

}  // namespace polytuple
