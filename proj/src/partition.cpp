#include "sylow/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sylow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out(size_t(first()), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++out[size_t(c)];
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int r = 0; r < inner.length(); ++r)
        if (inner.row(r) > row(r)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool in_box(const Partition& lambda, int t) { return lambda.fits_in_box(t); }

std::vector<Partition> BoxSpec::members() const {
    return enumerate_partitions_bounded(n, t, t);
}

Bint BoxSpec::count() const { return count_in_box(n, t); }

namespace {

void emit(std::vector<int>& stack, int rest, int max_part, int max_len,
          std::vector<Partition>& out) {
    if (rest == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_len <= 0) return;
    for (int p = std::min(rest, max_part); p >= 1; --p) {
        // Largest-part-first descent yields reverse-lexicographic order.
        if (Bint(p) * max_len < rest) break;
        stack.push_back(p);
        emit(stack, rest - p, p, max_len - 1, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    return enumerate_partitions_bounded(n, n, n);
}

std::vector<Partition> enumerate_partitions_bounded(int n, int max_part,
                                                    int max_len) {
    if (n < 0) throw std::invalid_argument("negative partition weight");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit(stack, n, std::min(n, max_part), max_len, out);
    return out;
}

Bint count_in_box(int n, int t) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (t <= 0) return 0;
    // table[l][m] = partitions of m with parts <= v (loop variable) and
    // exactly l parts.
    std::vector<std::vector<Bint>> table(size_t(t) + 1,
                                         std::vector<Bint>(size_t(n) + 1, 0));
    table[0][0] = 1;
    for (int v = 1; v <= t; ++v)
        for (int l = 1; l <= t; ++l)
            for (int m = v; m <= n; ++m)
                table[size_t(l)][size_t(m)] += table[size_t(l) - 1][size_t(m - v)];
    Bint total = 0;
    for (int l = 0; l <= t; ++l) total += table[size_t(l)][size_t(n)];
    return total;
}

Bint partition_count(int n) { return count_in_box(n, n); }

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; Bint(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> p_adic_exponents(long long n, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> digits;  // digits[e] in [0, p-1]
    long long rest = n;
    while (rest > 0) {
        digits.push_back(int(rest % p));
        rest /= p;
    }
    std::vector<int> out;
    for (int e = int(digits.size()) - 1; e >= 0; --e)
        for (int rep = 0; rep < digits[size_t(e)]; ++rep) out.push_back(e);
    return out;
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    if (s.empty() || s == "0") return Partition();
    std::vector<int> parts;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in partition literal");
        size_t caret = item.find('^');
        auto parse_int = [](const std::string& w) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(w, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer in partition literal: " + w);
            }
            if (used != w.size() || v <= 0)
                throw std::invalid_argument("bad integer in partition literal: " + w);
            return v;
        };
        if (caret == std::string::npos) {
            parts.push_back(parse_int(item));
        } else {
            int base = parse_int(item.substr(0, caret));
            int rep = parse_int(item.substr(caret + 1));
            for (int i = 0; i < rep; ++i) parts.push_back(base);
        }
    }
    return Partition(std::move(parts));  // throws unless weakly decreasing
}

}  // namespace sylow
