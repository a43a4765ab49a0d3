#pragma once

#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/partition.hpp"

namespace sylow {

// Cycle type of a permutation: a partition of the symmetric-group degree.
using CycleType = Partition;

Bint factorial(int n);

// Degree of the irreducible character labelled by lambda (hook length
// formula).
Bint dimension(const Partition& lambda);

// Character value at any permutation of the given cycle type, by the
// memoized border-strip recursion over beta-sets, largest cycle first.
Bint mn_value(const Partition& lambda, const CycleType& type);

// Size of the conjugacy class of S_n with the given cycle type.
Bint symmetric_class_size(const CycleType& type);

// +1 / -1 for even / odd permutations of the given cycle type.
int cycle_type_sign(const CycleType& type);

// Multiplicities of the p characters of the cyclic group of order p in
// the restriction of the character of lambda (a partition of p), indexed
// by j in [0, p-1] with j = 0 the trivial character.
std::vector<Bint> restrict_to_cyclic(const Partition& lambda, int p);

// Scale every cycle length by f (the cycle type of a block permutation
// acting above a point stabiliser).
CycleType scale_cycle_type(const CycleType& type, int f);

// Concatenation of cycle types (disjoint supports).
CycleType concat_cycle_types(const std::vector<CycleType>& types);

size_t mn_cache_size();
void mn_cache_clear();

}  // namespace sylow
