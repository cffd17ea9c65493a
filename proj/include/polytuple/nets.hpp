#ifndef POLYTUPLE_NETS_HPP
#define POLYTUPLE_NETS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polytuple/coloring.hpp"
#include "polytuple/hypergraph.hpp"

namespace polytuple {

struct NetCheck {
    bool ok = true;
    std::optional<Edge> violating_edge;
};

// A tuple set is an eps-t-net when every edge with |e| >= eps*n contains one
// of its tuples. The size comparison is exact (eps stays rational).
NetCheck is_eps_t_net(const Hypergraph& h, const BigRat& eps,
                      const std::vector<Tuple>& tuples);

// A colorer family parameterized by the number of classes k, together with
// its certified threshold: every edge with >= threshold(k) vertices contains
// tuples of all k colors.
struct Colorer {
    std::function<TupleColoring(uint64_t)> make;
    std::function<int64_t(uint64_t)> threshold;
};

// Interval colorer on a 1-D point set: t = 1 uses the cyclic vertex coloring
// with threshold k; t >= 2 combines a cyclic coloring with
// vertex_colors_needed(t, k) colors, threshold equal to that palette size.
Colorer interval_colorer(const PointSet& points, uint32_t t);

struct NetDecomposition {
    BigRat eps;
    uint32_t t = 0;
    uint64_t k = 0;
    TupleColoring coloring;               // class of each tuple, by lex rank
    std::vector<std::vector<Tuple>> classes;
};

// Splits all t-tuples into the largest certified number of pairwise disjoint
// eps-t-nets: finds the largest k with threshold(k) <= eps*n (doubling plus
// binary search over the monotone threshold), colors once, then certifies
// every class via is_eps_t_net. Certification failure throws
// certification_error naming the class and a witness edge.
NetDecomposition decompose_into_nets(const Hypergraph& h, uint32_t t, const BigRat& eps,
                                     const Colorer& colorer);

}  // namespace polytuple

#endif  // POLYTUPLE_NETS_HPP
