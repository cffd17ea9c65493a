#include "polytuple/nets.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"

namespace polytuple {

NetCheck is_eps_t_net(const Hypergraph& h, const BigRat& eps,
                      const std::vector<Tuple>& tuples) {
    if (eps <= 0 || eps >= 1) throw input_error("eps must lie strictly between 0 and 1");
    const BigInt num = numerator(eps);
    const BigInt den = denominator(eps);
    for (const Edge& e : h.edges) {
        // |e| >= eps * n, compared exactly as |e| * den >= num * n.
        if (BigInt(e.size()) * den < num * h.n) continue;
        bool hit = false;
        for (const Tuple& tuple : tuples) {
            if (std::includes(e.begin(), e.end(), tuple.begin(), tuple.end())) {
                hit = true;
                break;
            }
        }
        if (!hit) return {false, e};
    }
    return {true, std::nullopt};
}

Colorer interval_colorer(const PointSet& points, uint32_t t) {
    if (points.dim != 1) throw input_error("interval colorer needs points on a line");
    if (t == 0) throw input_error("tuple arity must be positive");
    if (t == 1) {
        return Colorer{
            [points](uint64_t k) {
                if (k == 0 || k > points.size())
                    throw input_error("class count out of range for a cyclic coloring");
                VertexColoring vertex = cyclic_vertex_coloring(points, static_cast<uint32_t>(k));
                return TupleColoring{vertex.n, 1, vertex.x, std::move(vertex.assignment)};
            },
            [](uint64_t k) {
                // Any k consecutive points along the line carry all k residues.
                return static_cast<int64_t>(k);
            },
        };
    }
    return Colorer{
        [points, t](uint64_t k) {
            const int64_t x = vertex_colors_needed(t, k);
            if (x > points.size()) throw input_error("palette exceeds the point count");
            const VertexColoring vertex =
                cyclic_vertex_coloring(points, static_cast<uint32_t>(x));
            return combination_coloring(vertex, t, static_cast<uint32_t>(k));
        },
        [t](uint64_t k) {
            // x consecutive points show all x vertex colors, hence all C(x, t)
            // color sets, whose ranks cover every residue class mod k.
            return vertex_colors_needed(t, k);
        },
    };
}

NetDecomposition decompose_into_nets(const Hypergraph& h, uint32_t t, const BigRat& eps,
                                     const Colorer& colorer) {
    if (eps <= 0 || eps >= 1) throw input_error("eps must lie strictly between 0 and 1");
    if (t == 0) throw input_error("tuple arity must be positive");
    if (t > h.n) throw input_error("tuple arity exceeds the ground set");
    const BigRat slack = eps * h.n;
    if (BigRat(t + 1) > slack)
        throw input_error("eps * n is below t + 1; no edge can be required to hold a tuple");
    if (BigRat(colorer.threshold(1)) > slack)
        throw input_error("eps * n is below the single-class threshold");

    const uint64_t cap = binom(h.n, t);  // more classes than tuples must leave one empty
    if (cap == binom_saturated || cap > (uint64_t{1} << 26))
        throw resource_error("tuple space too large to decompose");
    uint64_t lo = 1;  // feasible: threshold(1) <= slack was checked above
    uint64_t hi = cap;
    uint64_t probe = 1;
    while (probe < cap) {
        probe = probe > cap / 2 ? cap : probe * 2;
        if (BigRat(colorer.threshold(probe)) <= slack) {
            lo = probe;
        } else {
            hi = probe - 1;
            break;
        }
    }
    while (lo < hi) {
        const uint64_t mid = lo + (hi - lo + 1) / 2;
        if (BigRat(colorer.threshold(mid)) <= slack) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    const uint64_t k = lo;

    TupleColoring coloring = colorer.make(k);
    coloring.validate();
    if (coloring.n != h.n || coloring.t != t || coloring.k != k)
        throw input_error("colorer output does not match the requested shape");

    std::vector<std::vector<Tuple>> classes(k);
    std::vector<uint32_t> tuple = first_combination(t);
    uint64_t rank = 0;
    do {
        classes[coloring.colors[rank]].push_back(tuple);
        ++rank;
    } while (next_combination(h.n, tuple));

    for (uint64_t c = 0; c < k; ++c) {
        const NetCheck check = is_eps_t_net(h, eps, classes[c]);
        if (!check.ok) {
            std::string msg = "class " + std::to_string(c) + " misses edge {";
            for (size_t i = 0; i < check.violating_edge->size(); ++i) {
                if (i) msg += ',';
                msg += std::to_string((*check.violating_edge)[i]);
            }
            msg += "}";
            throw certification_error(msg);
        }
    }
    return NetDecomposition{eps, t, k, std::move(coloring), std::move(classes)};
}

}  // namespace polytuple
