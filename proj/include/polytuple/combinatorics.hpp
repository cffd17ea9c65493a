#ifndef POLYTUPLE_COMBINATORICS_HPP
#define POLYTUPLE_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace polytuple {

// Saturating binomial coefficient; values that would overflow return binom_saturated.
inline constexpr uint64_t binom_saturated = UINT64_MAX;
uint64_t binom(uint64_t n, uint64_t k);

// Lexicographic rank of a strictly increasing k-tuple among all k-subsets of [0, n).
uint64_t combination_rank(uint32_t n, const std::vector<uint32_t>& combo);

// Inverse of combination_rank.
std::vector<uint32_t> combination_unrank(uint32_t n, uint32_t k, uint64_t rank);

// Advances combo to its lexicographic successor; returns false after the last one.
bool next_combination(uint32_t n, std::vector<uint32_t>& combo);

// First k-subset of [0, n) in lex order, i.e. {0, 1, ..., k-1}.
std::vector<uint32_t> first_combination(uint32_t k);

// Rank of a pair {a < b}; the t = 2 hot path used by depth tables and colorings.
inline uint64_t pair_rank(uint32_t n, uint32_t a, uint32_t b) {
    return static_cast<uint64_t>(a) * (2ull * n - a - 1) / 2 + (b - a - 1);
}

// Counter-based pseudo-random stream: draw i is a pure function of (seed, i), so
// sequences are reproducible and independent of platform library details.
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed);
    uint64_t next();
    // Unbiased uniform draw in [0, bound); bound must be nonzero.
    uint64_t below(uint64_t bound);
    // Uniform draw in [lo, hi] inclusive.
    int64_t in_range(int64_t lo, int64_t hi);

  private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace polytuple

#endif
