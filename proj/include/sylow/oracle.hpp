#pragma once

#include <map>
#include <set>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/partition.hpp"
#include "sylow/wreath.hpp"

namespace sylow {

enum class OracleMethod { direct, recursive, automatic };

// Exact multiplicities of the irreducible labels of one wreath level in
// the restriction of a symmetric-group character.  Only positive entries
// are stored.
struct MultVector {
    int p = 0;
    int level = 0;
    std::map<int, Bint> mult;

    std::set<int> exponents(const WreathLevel& lvl) const;
    Bint total_dimension(const WreathLevel& lvl) const;
    // labels of the given exponent with positive multiplicity
    int labels_at_exponent(const WreathLevel& lvl, int k) const;
};

class ResultCache;

// Ground truth for the branching sets: decomposes restrictions by two
// independent routes and sweeps whole degrees.
//
// The direct route trusts only border-strip character values and the
// wreath value tables (one inner product per label, aggregated over
// cycle types).  The recursive route trusts only Littlewood-Richardson
// decompositions, Frobenius reciprocity for the induced labels, and the
// twisted-class correction for the extension labels.  They must agree;
// any disagreement is a defect, not a tolerance question.
class RestrictionOracle {
  public:
    explicit RestrictionOracle(int p, int max_level = -1);

    int p() const { return p_; }
    const WreathTower& tower() const { return tower_; }

    int level_of(long long n) const;  // m with n = p^m; ScopeError otherwise

    MultVector decompose(const Partition& lambda,
                         OracleMethod method = OracleMethod::automatic);
    MultVector decompose_direct(const Partition& lambda);
    MultVector decompose_recursive(const Partition& lambda);

    // Attained degree exponents.  Prime-power weights read the chosen
    // decomposition; other weights use the degree-sum rule over positive
    // outer decompositions along the p-adic parts.
    std::set<int> degree_set(const Partition& lambda,
                             OracleMethod method = OracleMethod::automatic);

    // Largest attained exponent by the branching recursion (prime-power
    // weights).  Needs no character tables, only coefficients, so it
    // reaches one level above the tower bound.
    int max_exponent(const Partition& lambda);

    // All partitions of n whose restriction attains exponent k, in the
    // enumeration order of partitions of n.
    std::vector<Partition> branching_set(long long n, int k,
                                         OracleMethod method = OracleMethod::automatic);

    // Persist per-partition results between runs.  Optional; null detaches.
    void attach_cache(ResultCache* cache) { cache_ = cache; }

  private:
    MultVector recursive_uncached(const Partition& lambda, int m);
    MultVector direct_uncached(const Partition& lambda, int m);
    const std::map<Partition, MultVector>& lower_vectors(int m);
    const std::map<Partition, std::vector<long long>>& prefix_tensors(int m, int j);
    int max_exponent_inner(const Partition& lambda, int m);
    int max_fold(int m, int j, const Partition& sigma);
    std::vector<std::pair<int, Partition>> sorted_partials(int m);

    int p_;
    WreathTower tower_;
    ResultCache* cache_ = nullptr;

    std::mutex mutex_;
    std::map<Partition, MultVector> direct_cache_;
    std::map<Partition, MultVector> recursive_cache_;
    std::map<int, std::map<Partition, MultVector>> lower_snapshots_;
    std::map<std::pair<int, int>, std::map<Partition, std::vector<long long>>> prefix_;
    std::map<std::pair<int, Partition>, std::set<int>> degree_cache_;
    std::map<Partition, int> partial_cache_;
    std::map<std::pair<int, Partition>, int> fold_cache_;
    std::map<int, std::vector<std::pair<int, Partition>>> sorted_partials_;
};

// Convenience wrapper used by the harness: the brute-force branching set.
std::vector<Partition> omega_oracle(long long n, int p, int k,
                                    OracleMethod method = OracleMethod::automatic);

}  // namespace sylow
