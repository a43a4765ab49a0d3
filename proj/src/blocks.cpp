#include "sylow/blocks.hpp"

#include <algorithm>
#include <stdexcept>

#include "sylow/partition.hpp"

namespace sylow {

namespace {

int legendre_valuation(long long m, int p) {
    // v_p(m!)
    int v = 0;
    while (m > 0) {
        m /= p;
        v += int(m);
    }
    return v;
}

long long ipow(int p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

}  // namespace

int max_degree_exponent_prime_power(int e, int p) {
    if (e <= 1) return 0;
    return int((ipow(p, e - 1) - 1) / (p - 1));
}

int max_degree_exponent(long long n, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    int total = 0;
    if (n >= 1)
        for (int e : p_adic_exponents(n, p))
            total += max_degree_exponent_prime_power(e, p);
    int check = legendre_valuation(n / p, p);
    if (total != check)
        throw std::logic_error("degree exponent formulas disagree");
    return total;
}

Interval degree_exponent_range(long long n, int p) {
    return Interval{0, max_degree_exponent(n, p)};
}

int block_length_prime_power(int e, int x, int p) {
    if (e < 2) throw std::invalid_argument("prime power exponent must be >= 2");
    if (x < 1 || x > ipow(p, e - 2))
        throw std::out_of_range("block index out of range");
    int m = 2;
    while (ipow(p, m - 2) < x) ++m;
    return e - m + 1;
}

int PrimePowerBlocks::index_of(int k) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].contains(k)) return int(i) + 1;
    throw std::out_of_range("no block contains this exponent");
}

PrimePowerBlocks prime_power_blocks(int e, int p) {
    if (e < 2) throw std::invalid_argument("prime power exponent must be >= 2");
    PrimePowerBlocks out;
    out.exponent = e;
    out.p = p;
    out.alpha = max_degree_exponent_prime_power(e, p);
    long long count = ipow(p, e - 2);
    int cursor = 0;
    for (long long x = 1; x <= count; ++x) {
        int len = block_length_prime_power(e, int(x), p);
        out.lengths.push_back(len);
        out.blocks.push_back(Interval{cursor + 1, cursor + len});
        cursor += len;
    }
    if (cursor != out.alpha)
        throw std::logic_error("block lengths do not sum to the maximal exponent");

    // Cross-check against the step-sequence construction: cut points
    // 0 = a_0 < a_1 < ... with a_1 - a_0 = e-1, then p-1 steps of e-2,
    // then p(p-1) steps of e-3, and so on down to step size 1.
    std::vector<int> cuts{0};
    int value = 0;
    for (int step = e - 1; step >= 1; --step) {
        long long reps = step == e - 1 ? 1 : ipow(p, e - 1 - step) - ipow(p, e - 2 - step);
        for (long long r = 0; r < reps; ++r) {
            value += step;
            cuts.push_back(value);
        }
    }
    if (cuts.size() != size_t(count) + 1 || cuts.back() != out.alpha)
        throw std::logic_error("step-sequence block construction is inconsistent");
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (Interval{cuts[i] + 1, cuts[i + 1]} != out.blocks[i])
            throw std::logic_error("step-sequence blocks disagree with the length formula");
    return out;
}

int MergedBlocks::index_of(int k) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].contains(k)) return int(i) + 1;
    throw std::out_of_range("no block contains this exponent");
}

MergedBlocks merged_blocks(long long n, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < ipow(p, 2))
        throw std::domain_error("abelian Sylow subgroup: no blocks below p^2");
    MergedBlocks out;
    out.n = n;
    out.p = p;
    out.term_exponents = p_adic_exponents(n, p);
    out.alpha = max_degree_exponent(n, p);
    out.block_count = int(n / ipow(p, 2));

    // Terms with exponent 0 or 1 have an empty block index range and
    // simply contribute nothing.
    for (size_t i = 0; i < out.term_exponents.size(); ++i) {
        int e = out.term_exponents[i];
        if (e < 2) continue;
        for (long long y = 1; y <= ipow(p, e - 2); ++y)
            out.order.emplace_back(int(i), int(y));
    }
    if (int(out.order.size()) != out.block_count)
        throw std::logic_error("merged block count mismatch");

    auto length_of = [&](const std::pair<int, int>& item) {
        return block_length_prime_power(out.term_exponents[size_t(item.first)],
                                        item.second, p);
    };
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](const auto& a, const auto& b) {
                         int la = length_of(a), lb = length_of(b);
                         if (la != lb) return la > lb;
                         if (a.first != b.first) return a.first < b.first;
                         return a.second < b.second;
                     });

    int cursor = 0;
    for (const auto& item : out.order) {
        int len = length_of(item);
        out.lengths.push_back(len);
        out.blocks.push_back(Interval{cursor + 1, cursor + len});
        cursor += len;
    }
    if (cursor != out.alpha)
        throw std::logic_error("merged block lengths do not sum to the maximal exponent");
    for (size_t i = 0; i + 1 < out.lengths.size(); ++i)
        if (out.lengths[i] < out.lengths[i + 1])
            throw std::logic_error("merged block lengths are not weakly decreasing");
    return out;
}

int block_index(long long n, int p, int k) {
    if (k < 1) throw std::out_of_range("block index needs k >= 1");
    return merged_blocks(n, p).index_of(k);
}

}  // namespace sylow
