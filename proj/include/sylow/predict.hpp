#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/blocks.hpp"
#include "sylow/partition.hpp"

namespace sylow {

// Predicted branching set for (n, k): the box of partitions of n whose
// restriction to the Sylow p-subgroup admits a constituent of degree p^k.
// Empty when k exceeds the maximal degree exponent.
struct BoxPrediction {
    long long n = 0;
    int p = 0;
    int k = 0;
    std::optional<long long> side;  // box side, or nullopt for the empty set
    enum class Source { recursive, closed_form } source = Source::closed_form;

    bool empty() const { return !side.has_value(); }
    std::string to_string() const;  // "B_81(79)" or "empty"
};

// Weakly decreasing exponent tuples (contents of the composition sets the
// recursions maximise over): all c_1 >= ... >= c_slots >= 0 with sum
// `total` and every entry <= cap.
std::vector<std::vector<int>> bounded_contents(int total, int slots, int cap);

// Box side for the prime power p^e by the branching recursion: maximum of
// p-term sums of level-(e-1) sides over exponent tuples summing to k-1.
// nullopt when k is out of [0, alpha].
std::optional<long long> box_side_prime_power_recursive(int e, int k, int p);

// Box side for the prime power p^e by the closed form p^e - x with x the
// block index of k.  Always equals the recursive value.
std::optional<long long> box_side_prime_power_closed(int e, int k, int p);

// General n: maximum over exponent distributions across the p-adic terms
// of sums of prime-power sides.
std::optional<long long> box_side_recursive(long long n, int k, int p);

// General n: n - x with x the merged block index of k.
std::optional<long long> box_side_closed(long long n, int k, int p);

BoxPrediction predicted_box(long long n, int k, int p,
                            BoxPrediction::Source source =
                                BoxPrediction::Source::closed_form);

// |B_n(n - floor(n/p^2))| / |P(n)| as an exact fraction.
Brat omega_ratio(int n, int p);

enum class TableFormat { markdown, csv, json };

struct TableCell {
    long long n = 0;
    int k = 0;
    std::optional<long long> side;
    std::string text() const;  // "B_27(25)" or the empty-set symbol
};

std::vector<TableCell> table_cells(const std::vector<long long>& ns, int k_max,
                                   int p);

std::string render_table(const std::vector<long long>& ns, int k_max, int p,
                         TableFormat format);

// Odd primes only on every prediction path; the p = 2 branching sets are not
// box sets (the four-point case already fails), so requests are rejected.
void require_odd_prime(int p);

}  // namespace sylow
