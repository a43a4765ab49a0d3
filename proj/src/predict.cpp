#include "sylow/predict.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sylow {

void require_odd_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (p == 2)
        throw std::invalid_argument(
            "p = 2 is not supported on prediction paths: the branching sets "
            "are not box sets there (n = 4, k = 1 already fails)");
}

std::string BoxPrediction::to_string() const {
    if (!side) return "empty";
    std::ostringstream os;
    os << "B_" << n << "(" << *side << ")";
    return os.str();
}

std::vector<std::vector<int>> bounded_contents(int total, int slots, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int remaining_slots, int max_entry) -> void {
        if (remaining_slots == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int v = std::min({rest, max_entry, cap}); v >= 0; --v) {
            if (Bint(v) * remaining_slots < rest) break;
            cur.push_back(v);
            self(self, rest - v, remaining_slots - 1, v);
            cur.pop_back();
        }
    };
    rec(rec, total, slots, total);
    return out;
}

namespace {

long long ipow(int p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

long long side_prime_power(int e, int k, int p);

long long side_prime_power_uncached(int e, int k, int p) {
    if (k == 0) return ipow(p, e);
    if (k == 1) return ipow(p, e) - 1;
    int inner_cap = max_degree_exponent_prime_power(e - 1, p);
    long long best = -1;
    for (const std::vector<int>& content : bounded_contents(k - 1, p, inner_cap)) {
        long long total = 0;
        for (int j : content) total += side_prime_power(e - 1, j, p);
        best = std::max(best, total);
    }
    if (best < 0) throw std::logic_error("empty exponent tuple set in side recursion");
    return best;
}

long long side_prime_power(int e, int k, int p) {
    static std::map<std::tuple<int, int, int>, long long> memo;
    static std::mutex mutex;
    std::tuple<int, int, int> key{p, e, k};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long value = side_prime_power_uncached(e, k, p);
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, value);
    return value;
}

// Ordered exponent tuples over slots with per-slot caps.
void ordered_compositions(int rest, size_t slot, const std::vector<int>& caps,
                          std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& sink) {
    if (slot == caps.size()) {
        if (rest == 0) sink(cur);
        return;
    }
    int remaining_cap = 0;
    for (size_t i = slot; i < caps.size(); ++i) remaining_cap += caps[i];
    if (rest > remaining_cap) return;
    for (int v = std::min(rest, caps[slot]); v >= 0; --v) {
        cur.push_back(v);
        ordered_compositions(rest - v, slot + 1, caps, cur, sink);
        cur.pop_back();
    }
}

}  // namespace

std::optional<long long> box_side_prime_power_recursive(int e, int k, int p) {
    require_odd_prime(p);
    if (k < 0 || k > max_degree_exponent_prime_power(e, p)) return std::nullopt;
    return side_prime_power(e, k, p);
}

std::optional<long long> box_side_prime_power_closed(int e, int k, int p) {
    require_odd_prime(p);
    if (k < 0 || k > max_degree_exponent_prime_power(e, p)) return std::nullopt;
    if (k == 0) return ipow(p, e);
    return ipow(p, e) - prime_power_blocks(e, p).index_of(k);
}

std::optional<long long> box_side_recursive(long long n, int k, int p) {
    require_odd_prime(p);
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 0 || k > max_degree_exponent(n, p)) return std::nullopt;
    std::vector<int> exponents = p_adic_exponents(n, p);
    std::vector<int> caps;
    for (int e : exponents) caps.push_back(max_degree_exponent_prime_power(e, p));
    long long best = -1;
    std::vector<int> cur;
    ordered_compositions(k, 0, caps, cur, [&](const std::vector<int>& d) {
        long long total = 0;
        for (size_t i = 0; i < d.size(); ++i)
            total += side_prime_power(exponents[i], d[i], p);
        best = std::max(best, total);
    });
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<long long> box_side_closed(long long n, int k, int p) {
    require_odd_prime(p);
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 0 || k > max_degree_exponent(n, p)) return std::nullopt;
    if (k == 0) return n;
    // k >= 1 forces alpha_n >= 1 and hence n >= p^2.
    return n - merged_blocks(n, p).index_of(k);
}

BoxPrediction predicted_box(long long n, int k, int p,
                            BoxPrediction::Source source) {
    require_odd_prime(p);
    BoxPrediction out;
    out.n = n;
    out.p = p;
    out.k = k;
    out.source = source;
    out.side = source == BoxPrediction::Source::closed_form
                   ? box_side_closed(n, k, p)
                   : box_side_recursive(n, k, p);
    return out;
}

Brat omega_ratio(int n, int p) {
    require_odd_prime(p);
    if (n < 1) throw std::invalid_argument("n must be positive");
    int shrink = n / (p * p);
    return Brat(count_in_box(n, n - shrink), partition_count(n));
}

std::string TableCell::text() const {
    if (!side) return "∅";
    std::ostringstream os;
    os << "B_" << n << "(" << *side << ")";
    return os.str();
}

std::vector<TableCell> table_cells(const std::vector<long long>& ns, int k_max,
                                   int p) {
    std::vector<TableCell> out;
    for (int k = 0; k <= k_max; ++k)
        for (long long n : ns)
            out.push_back(TableCell{n, k, box_side_closed(n, k, p)});
    return out;
}

std::string render_table(const std::vector<long long>& ns, int k_max, int p,
                         TableFormat format) {
    std::vector<TableCell> cells = table_cells(ns, k_max, p);
    std::ostringstream os;
    switch (format) {
        case TableFormat::markdown: {
            os << "| k \\ n |";
            for (long long n : ns) os << ' ' << n << " |";
            os << "\n|---|";
            for (size_t i = 0; i < ns.size(); ++i) os << "---|";
            os << '\n';
            size_t idx = 0;
            for (int k = 0; k <= k_max; ++k) {
                os << "| " << k << " |";
                for (size_t i = 0; i < ns.size(); ++i)
                    os << ' ' << cells[idx++].text() << " |";
                os << '\n';
            }
            break;
        }
        case TableFormat::csv: {
            os << "n,k,T,empty\n";
            for (const TableCell& c : cells) {
                os << c.n << ',' << c.k << ',';
                if (c.side) os << *c.side;
                os << ',' << (c.side ? 0 : 1) << '\n';
            }
            break;
        }
        case TableFormat::json: {
            os << "[";
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i) os << ',';
                os << "{\"n\":" << cells[i].n << ",\"k\":" << cells[i].k
                   << ",\"side\":";
                if (cells[i].side)
                    os << *cells[i].side;
                else
                    os << "null";
                os << '}';
            }
            os << "]\n";
            break;
        }
    }
    return os.str();
}

}  // namespace sylow
