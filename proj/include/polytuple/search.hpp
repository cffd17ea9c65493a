#ifndef POLYTUPLE_SEARCH_HPP
#define POLYTUPLE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polytuple/coloring.hpp"
#include "polytuple/hypergraph.hpp"

namespace polytuple {

struct SearchBudget {
    uint64_t max_nodes = uint64_t{1} << 22;
    double time_limit_seconds = 120.0;
};

// A search may prove existence, prove non-existence, or run out of budget.
// The third outcome is deliberately distinct: a timeout is never a proof.
enum class SearchStatus { found, none, indeterminate };

struct SearchResult {
    SearchStatus status = SearchStatus::indeterminate;
    std::optional<TupleColoring> coloring;  // set iff status == found
    uint64_t nodes = 0;
};

// Complete backtracking for a (t,k,f)-polychromatic coloring: every edge with
// at least f vertices must contain t-tuples of all k colors. Only tuples
// inside some constrained edge are decision variables; the rest stay color 0.
SearchResult exists_polychromatic(const Hypergraph& h, uint32_t t, uint32_t k,
                                  uint32_t f, const SearchBudget& budget = {});

struct ExactFResult {
    SearchStatus status = SearchStatus::indeterminate;
    uint32_t f = 0;  // the least feasible f when status == found
    uint64_t nodes = 0;
};

// Least f >= 1 admitting a (t,k,f)-coloring, by binary search over the
// monotone feasibility predicate. Edgeless hypergraphs yield f = 1.
ExactFResult exact_f(const Hypergraph& h, uint32_t t, uint32_t k,
                     const SearchBudget& budget = {});

struct VertexSearchResult {
    SearchStatus status = SearchStatus::indeterminate;
    std::optional<VertexColoring> coloring;
    uint64_t nodes = 0;
};

// t = 1 specialization: k-color the vertices so that every edge with >= f
// vertices carries all k colors.
VertexSearchResult find_vertex_coloring(const Hypergraph& h, uint32_t k, uint32_t f,
                                        const SearchBudget& budget = {});

struct Violation {
    Edge edge;
    std::vector<uint32_t> missing_colors;
};

struct VerificationReport {
    bool ok = true;
    uint32_t f = 0;
    std::vector<Violation> violations;  // capped; ok is exact regardless
    uint64_t edges_checked = 0;
    uint64_t nodes = 0;
};

// Checks every edge with >= f vertices for all k colors among its t-subsets,
// with early exit per edge once every color is seen.
VerificationReport verify_polychromatic(const Hypergraph& h, const TupleColoring& coloring,
                                        uint32_t f, size_t max_violations = 64);

}  // namespace polytuple

#endif  // POLYTUPLE_SEARCH_HPP
