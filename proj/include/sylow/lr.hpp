#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/partition.hpp"

namespace sylow {

// Multiplicity of the irreducible labelled by lambda in the outer product
// of the irreducibles labelled by mu and nu: the number of column-strict
// skew tableaux of shape lambda/mu and content nu whose reverse reading
// word is a lattice word.  Zero whenever the weights do not add up or
// mu is not contained in lambda.
Bint lr_coefficient(const Partition& lambda, const Partition& mu,
                    const Partition& nu);

// Positivity only; exits at the first witness tableau.
bool lr_positive(const Partition& lambda, const Partition& mu,
                 const Partition& nu);

// Multi-factor coefficient, folding two-factor coefficients left to right
// over intermediate shapes.  Intermediates violating the first-part bound
// (lambda_1 <= sum of factor first parts), its conjugate, or containment
// in lambda are pruned; the pruning is what keeps 27-box factors usable.
Bint multi_lr(const Partition& lambda, const std::vector<Partition>& mus);

bool multi_lr_positive(const Partition& lambda,
                       const std::vector<Partition>& mus);

// Full decomposition of the iterated outer product: every lambda with a
// positive coefficient, with the coefficient.
std::map<Partition, Bint> outer_decompose(const std::vector<Partition>& mus);

// All (sigma |- m1, mu |- |lambda|-m1) with lr(lambda; sigma, mu) > 0,
// with the coefficient.  This is the restriction of the character of
// lambda to a two-block Young subgroup.
std::vector<std::tuple<Partition, Partition, Bint>> restrict_two_blocks(
    const Partition& lambda, int m1);

// Set-level outer product: all partitions of n+n' with a positive
// coefficient against some pair of factors.  Every member of a must
// partition the same n, likewise b.
std::vector<Partition> star_product(const std::vector<Partition>& a,
                                    const std::vector<Partition>& b);

// Size of the shared two-factor memo (diagnostics).
size_t lr_cache_size();
void lr_cache_clear();

}  // namespace sylow
