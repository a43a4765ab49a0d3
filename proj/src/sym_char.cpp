#include "sylow/sym_char.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace sylow {

Bint factorial(int n) {
    Bint r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Bint dimension(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    Bint hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.row(r); ++c)
            hooks *= lambda.row(r) - c + conj.row(c) - r - 1;
    return factorial(lambda.sum()) / hooks;
}

namespace {

struct PairKey {
    Partition shape, cycles;
    bool operator==(const PairKey&) const = default;
};

struct PairHash {
    size_t operator()(const PairKey& k) const noexcept {
        std::hash<Partition> h;
        return h(k.shape) * 0x9e3779b97f4a7c15ull + h(k.cycles);
    }
};

std::mutex mn_mutex;
std::unordered_map<PairKey, Bint, PairHash> mn_memo;

Partition drop_first(const Partition& cycles) {
    std::vector<int> rest(cycles.parts().begin() + 1, cycles.parts().end());
    return Partition(std::move(rest));
}

Partition from_betas(std::vector<int> betas) {
    // betas: distinct nonnegative values, any order; length L fixed.
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    int L = int(betas.size());
    std::vector<int> parts;
    for (int i = 0; i < L; ++i) {
        int part = betas[size_t(i)] - (L - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Bint mn_rec(const Partition& lambda, const Partition& cycles) {
    if (lambda.empty()) return 1;
    PairKey key{lambda, cycles};
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_memo.find(key);
        if (it != mn_memo.end()) return it->second;
    }
    int strip = cycles.row(0);
    Partition rest = drop_first(cycles);
    int L = lambda.length();
    std::vector<int> betas(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) betas[size_t(i)] = lambda.row(i) + (L - 1 - i);
    Bint total = 0;
    for (int i = 0; i < L; ++i) {
        int b = betas[size_t(i)];
        if (b < strip) continue;
        int target = b - strip;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < L; ++j) {
            if (betas[size_t(j)] == target) occupied = true;
            if (betas[size_t(j)] > target && betas[size_t(j)] < b) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> moved = betas;
        moved[size_t(i)] = target;
        Bint sub = mn_rec(from_betas(std::move(moved)), rest);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Bint mn_value(const Partition& lambda, const CycleType& type) {
    if (lambda.sum() != type.sum())
        throw std::invalid_argument("cycle type weight must match the partition");
    return mn_rec(lambda, type);
}

Bint symmetric_class_size(const CycleType& type) {
    Bint centralizer = 1;
    int run = 0;
    for (int i = 0; i < type.length(); ++i) {
        centralizer *= type.row(i);
        run = (i > 0 && type.row(i) == type.row(i - 1)) ? run + 1 : 1;
        centralizer *= run;
    }
    return factorial(type.sum()) / centralizer;
}

int cycle_type_sign(const CycleType& type) {
    return (type.sum() - type.length()) % 2 == 0 ? 1 : -1;
}

std::vector<Bint> restrict_to_cyclic(const Partition& lambda, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (lambda.sum() != p)
        throw std::invalid_argument("cyclic restriction needs a partition of p");
    Bint degree = dimension(lambda);
    Bint at_cycle = mn_value(lambda, Partition({p}));
    std::vector<Bint> out(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) {
        Bint numerator = degree + at_cycle * ((j == 0 ? p : 0) - 1);
        if (numerator % p != 0 || numerator < 0)
            throw std::logic_error("cyclic restriction multiplicities must be "
                                   "nonnegative integers");
        out[size_t(j)] = numerator / p;
    }
    return out;
}

CycleType scale_cycle_type(const CycleType& type, int f) {
    std::vector<int> parts;
    parts.reserve(size_t(type.length()));
    for (int v : type.parts()) parts.push_back(v * f);
    return Partition(std::move(parts));
}

CycleType concat_cycle_types(const std::vector<CycleType>& types) {
    std::vector<int> parts;
    for (const CycleType& t : types)
        parts.insert(parts.end(), t.parts().begin(), t.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

size_t mn_cache_size() {
    std::lock_guard<std::mutex> lock(mn_mutex);
    return mn_memo.size();
}

void mn_cache_clear() {
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_memo.clear();
}

}  // namespace sylow
