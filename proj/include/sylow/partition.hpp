#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sylow/bigint.hpp"

namespace sylow {

// A partition is a weakly decreasing sequence of positive integers.  The
// empty sequence is the unique partition of 0 and is a first-class value:
// it is the base case of the Littlewood-Richardson recursions and the
// floor of every restriction recursion.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    // Row r (0-based); 0 beyond the last row, so skew-shape loops need no
    // bounds checks.
    int row(int r) const {
        return (r >= 0 && r < length()) ? parts_[size_t(r)] : 0;
    }

    Partition conjugate() const;
    bool fits_in_box(int t) const { return first() <= t && length() <= t; }
    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // e.g. "(3,1,1)"; "()" for the empty one

  private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// Compositions may contain zeros.
using Composition = std::vector<int>;

// The set of partitions of n whose diagram fits in a t x t grid.  Nonempty
// iff n <= t^2, and closed under conjugation.
struct BoxSpec {
    int n = 0;
    int t = 0;

    bool contains(const Partition& lambda) const {
        return lambda.sum() == n && lambda.fits_in_box(t);
    }
    bool nonempty() const { return n <= t * t; }
    std::vector<Partition> members() const;
    Bint count() const;

    auto operator<=>(const BoxSpec&) const = default;
};

bool in_box(const Partition& lambda, int t);

// All partitions of n, each exactly once, in reverse-lexicographic order
// starting from (n).  The order is fixed so emitted tables and cache files
// are deterministic.
std::vector<Partition> enumerate_partitions(int n);

// Partitions of n with first part <= max_part and at most max_len parts,
// in the same reverse-lexicographic order.
std::vector<Partition> enumerate_partitions_bounded(int n, int max_part,
                                                    int max_len);

// |B_n(t)| by dynamic programming over (remaining weight, largest allowed
// part, remaining rows).  Exact; |P(200)| overflows 64-bit.
Bint count_in_box(int n, int t);

// |P(n)|.
Bint partition_count(int n);

bool is_prime(int p);

// Exponents (n_1 >= n_2 >= ... >= n_t) with n = sum p^{n_i}, each exponent
// repeated according to its digit, so at most p-1 times.
std::vector<int> p_adic_exponents(long long n, int p);

// Strict parser for the CLI literal syntax: comma-separated parts with
// exponent shorthand, e.g. "8,1" or "2^3,1" for (2,2,2,1).  Parts must be
// weakly decreasing.  "" and "0" denote the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace sylow

template <>
struct std::hash<sylow::Partition> {
    size_t operator()(const sylow::Partition& p) const noexcept {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts()) h = h * 1099511628211ull + size_t(v);
        return h;
    }
};
