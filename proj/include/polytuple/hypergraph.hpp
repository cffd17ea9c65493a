#ifndef POLYTUPLE_HYPERGRAPH_HPP
#define POLYTUPLE_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace polytuple {

using Vertex = uint32_t;
// Sorted, duplicate-free index set over [0, n).
using Edge = std::vector<Vertex>;
// Sorted t-subset of vertices.
using Tuple = std::vector<Vertex>;

// Finite hypergraph with canonically ordered edges. Edges are kept sorted
// lexicographically and deduplicated; `generators` (when nonempty) is aligned
// with `edges` and names the defining point indices of each geometric range.
struct Hypergraph {
    uint32_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<uint32_t>> generators;

    // Validates indices, sorts and dedups members, edge list, and tags.
    static Hypergraph normalized(uint32_t n, std::vector<Edge> raw_edges,
                                 std::vector<std::vector<uint32_t>> raw_generators = {});

    bool has_generators() const { return !generators.empty(); }
    size_t max_edge_size() const;
};

bool edge_contains(const Edge& e, Vertex v);
bool is_subset(const Edge& sub, const Edge& super);

// Depth of S: minimum |e \ S| over edges e containing S, or n - |S| when no
// edge contains S. S must be sorted and duplicate-free.
int64_t depth_of(const Hypergraph& h, const Tuple& s);

struct Projection {
    Hypergraph h;
    // index_map[new_vertex] = original vertex.
    std::vector<Vertex> index_map;
};

// Trace of the hypergraph on X (sorted vertex subset), vertices re-indexed.
Projection project(const Hypergraph& h, const std::vector<Vertex>& x);

struct VcBudget {
    // Largest candidate subset size that will be examined.
    uint32_t size_cap = 32;
    // Total candidate subsets examined before giving up.
    uint64_t subset_budget = uint64_t{1} << 24;
};

// Size of the largest shattered vertex subset, computed exhaustively level by
// level (a set can be shattered only if all its subsets are). Throws
// resource_error when the subset budget is exhausted.
uint32_t vc_dimension(const Hypergraph& h, const VcBudget& budget = {});

struct ShrinkabilityWitness {
    Edge edge;
    uint32_t missing_size;
};

// A hypergraph is shrinkable when every edge has sub-edges of every smaller
// positive cardinality. Returns the first (edge, size) counterexample in
// canonical order, or nullopt when shrinkable.
std::optional<ShrinkabilityWitness> shrinkability_violation(const Hypergraph& h);
bool is_shrinkable(const Hypergraph& h);

// Checks |edges| <= sum_{i=0}^{d} C(n, i) where d is the VC dimension.
bool sauer_shelah_check(const Hypergraph& h, const VcBudget& budget = {});

// Depth of every t-subset, indexed by lexicographic tuple rank.
struct DepthTable {
    uint32_t n = 0;
    uint32_t t = 0;
    std::vector<int64_t> depths;

    int64_t at(const Tuple& s) const;
};

struct TableBudget {
    uint64_t max_entries = uint64_t{1} << 24;
};

DepthTable tuple_depth_table(const Hypergraph& h, uint32_t t, const TableBudget& budget = {});

struct DeepTuple {
    Tuple tuple;
    int64_t depth;
};

// Maximum-depth t-tuple; ties broken toward the lexicographically smallest.
DeepTuple max_deep_tuple(const Hypergraph& h, uint32_t t, const TableBudget& budget = {});

}  // namespace polytuple

#endif
