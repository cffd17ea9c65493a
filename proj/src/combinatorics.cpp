#include "polytuple/combinatorics.hpp"

#include <cassert>

namespace polytuple {

uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t result = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step.
        uint64_t num = n - k + i;
        uint64_t g = result / i * i == result ? i : 1;  // cheap path when i divides result
        if (g == i) {
            uint64_t base = result / i;
            if (base != 0 && num > binom_saturated / base) return binom_saturated;
            result = base * num;
        } else {
            if (result > binom_saturated / num) return binom_saturated;
            result = result * num / i;
        }
    }
    return result;
}

uint64_t combination_rank(uint32_t n, const std::vector<uint32_t>& combo) {
    const uint32_t t = static_cast<uint32_t>(combo.size());
    uint64_t rank = 0;
    uint32_t prev = 0;
    for (uint32_t i = 0; i < t; ++i) {
        // Count combos whose i-th member is smaller than combo[i], via the hockey stick.
        uint32_t lo = (i == 0) ? 0 : prev + 1;
        rank += binom(n - lo, t - i) - binom(n - combo[i], t - i);
        prev = combo[i];
    }
    return rank;
}

std::vector<uint32_t> combination_unrank(uint32_t n, uint32_t k, uint64_t rank) {
    std::vector<uint32_t> combo(k);
    uint32_t v = 0;
    for (uint32_t i = 0; i < k; ++i) {
        while (true) {
            uint64_t block = binom(n - 1 - v, k - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        combo[i] = v++;
    }
    return combo;
}

bool next_combination(uint32_t n, std::vector<uint32_t>& combo) {
    const uint32_t t = static_cast<uint32_t>(combo.size());
    if (t == 0) return false;
    uint32_t i = t;
    while (i-- > 0) {
        if (combo[i] < n - (t - i)) {
            uint32_t v = ++combo[i];
            for (uint32_t j = i + 1; j < t; ++j) combo[j] = ++v;
            return true;
        }
    }
    return false;
}

std::vector<uint32_t> first_combination(uint32_t k) {
    std::vector<uint32_t> combo(k);
    for (uint32_t i = 0; i < k; ++i) combo[i] = i;
    return combo;
}

namespace {

// SplitMix64 finalizer; full-avalanche 64-bit mix.
uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(uint64_t seed) : key_(mix64(seed ^ 0xA02BDBF7BB3C0A7ull)) {}

uint64_t CounterRng::next() { return mix64(key_ + 0x9E3779B97F4A7C15ull * ++counter_); }

uint64_t CounterRng::below(uint64_t bound) {
    assert(bound != 0);
    // Rejection sampling over the largest multiple of bound below 2^64.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        uint64_t draw = next();
        if (draw < limit) return draw % bound;
    }
}

int64_t CounterRng::in_range(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(span == 0 ? next() : below(span));
}

}  // namespace polytuple
