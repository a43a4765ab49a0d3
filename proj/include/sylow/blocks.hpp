#pragma once

#include <utility>
#include <vector>

#include "sylow/bigint.hpp"

namespace sylow {

// Closed intervals [lo, hi] of degree exponents; rendered closed to match
// the usual notation, handled half-open internally where convenient.
struct Interval {
    int lo = 1;
    int hi = 0;  // empty when hi < lo
    int size() const { return hi < lo ? 0 : hi - lo + 1; }
    bool contains(int k) const { return k >= lo && k <= hi; }
    auto operator<=>(const Interval&) const = default;
};

// Largest k with p^k an irreducible character degree of the Sylow
// p-subgroup of the symmetric group on n points.  Computed additively over
// the p-adic digits and cross-checked against the p-adic valuation of
// floor(n/p)! on every call.
int max_degree_exponent(long long n, int p);

// Same for the prime power p^e, taking the exponent directly.
int max_degree_exponent_prime_power(int e, int p);

// Attained degree exponents of the Sylow subgroup: the full interval
// [0, max].
Interval degree_exponent_range(long long n, int p);

// Block length for the prime power p^e and block index x in [1, p^{e-2}]:
// e - m_x + 1 where m_x = min{m : x <= p^{m-2}}.
int block_length_prime_power(int e, int x, int p);

// The consecutive intervals of exponents sharing one box size, for the
// prime power p^e (e >= 2).  blocks[x-1] covers block index x.
struct PrimePowerBlocks {
    int exponent = 0;
    int p = 0;
    std::vector<Interval> blocks;   // partition of [1, alpha]
    std::vector<int> lengths;       // lengths[x-1] = |blocks[x-1]|
    int alpha = 0;

    int index_of(int k) const;  // x with k in blocks[x-1]; throws otherwise
};

PrimePowerBlocks prime_power_blocks(int e, int p);

// The merged block system for arbitrary n >= p^2: pairs (term index, block
// index) over the p-adic terms of n, totally ordered by decreasing block
// length with ties broken by term then block index, then cut into
// intervals partitioning [1, alpha_n].
struct MergedBlocks {
    long long n = 0;
    int p = 0;
    std::vector<int> term_exponents;          // p-adic exponents of n
    std::vector<std::pair<int, int>> order;   // (term, block) pairs, sorted
    std::vector<int> lengths;                 // lengths[x-1], weakly decreasing
    std::vector<Interval> blocks;             // partition of [1, alpha]
    int block_count = 0;                      // floor(n / p^2)
    int alpha = 0;

    int index_of(int k) const;
};

MergedBlocks merged_blocks(long long n, int p);

// The unique x with k in block x.  Throws std::out_of_range for
// k > alpha_n (no such degree).
int block_index(long long n, int p, int k);

}  // namespace sylow
