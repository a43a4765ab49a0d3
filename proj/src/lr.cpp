#include "sylow/lr.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <unordered_map>

namespace sylow {

namespace {

struct TripleKey {
    Partition lambda, mu, nu;
    bool operator==(const TripleKey&) const = default;
};

struct TripleHash {
    size_t operator()(const TripleKey& k) const noexcept {
        std::hash<Partition> h;
        size_t a = h(k.lambda), b = h(k.mu), c = h(k.nu);
        a = a * 0x9e3779b97f4a7c15ull + b;
        a = a * 0x9e3779b97f4a7c15ull + c;
        return a;
    }
};

// Shared memo, concurrent readers with sharded insertion.
class LrCache {
  public:
    static LrCache& instance() {
        static LrCache cache;
        return cache;
    }

    bool lookup(const TripleKey& k, Bint& out) {
        Shard& s = shard(k);
        std::lock_guard<std::mutex> lock(s.mutex);
        auto it = s.counts.find(k);
        if (it == s.counts.end()) return false;
        out = it->second;
        return true;
    }

    void store(const TripleKey& k, const Bint& v) {
        Shard& s = shard(k);
        std::lock_guard<std::mutex> lock(s.mutex);
        s.counts.emplace(k, v);
    }

    bool lookup_positive(const TripleKey& k, bool& out) {
        Shard& s = shard(k);
        std::lock_guard<std::mutex> lock(s.mutex);
        auto it = s.counts.find(k);
        if (it != s.counts.end()) {
            out = it->second > 0;
            return true;
        }
        auto jt = s.positive.find(k);
        if (jt == s.positive.end()) return false;
        out = jt->second;
        return true;
    }

    void store_positive(const TripleKey& k, bool v) {
        Shard& s = shard(k);
        std::lock_guard<std::mutex> lock(s.mutex);
        s.positive.emplace(k, v);
    }

    size_t size() {
        size_t total = 0;
        for (Shard& s : shards_) {
            std::lock_guard<std::mutex> lock(s.mutex);
            total += s.counts.size() + s.positive.size();
        }
        return total;
    }

    void clear() {
        for (Shard& s : shards_) {
            std::lock_guard<std::mutex> lock(s.mutex);
            s.counts.clear();
            s.positive.clear();
        }
    }

  private:
    struct Shard {
        std::mutex mutex;
        std::unordered_map<TripleKey, Bint, TripleHash> counts;
        std::unordered_map<TripleKey, bool, TripleHash> positive;
    };
    static constexpr size_t kShards = 16;
    std::array<Shard, kShards> shards_;

    Shard& shard(const TripleKey& k) {
        return shards_[TripleHash{}(k) % kShards];
    }
};

// Filling state for the skew tableau search.  Cells are visited in the
// reverse reading order (rows top to bottom, each row right to left), so
// the lattice property can be checked one letter at a time.
struct Filler {
    const Partition& lambda;
    const Partition& mu;
    int letters;
    std::vector<int> remaining;          // per letter, from nu
    std::vector<int> placed;             // lattice prefix counts
    std::vector<std::vector<int>> grid;  // entries; 0 = unfilled
    Bint count = 0;
    bool stop_at_first = false;
    bool done = false;

    Filler(const Partition& l, const Partition& m, const Partition& nu)
        : lambda(l), mu(m), letters(nu.length()) {
        remaining.assign(size_t(letters) + 1, 0);
        placed.assign(size_t(letters) + 1, 0);
        for (int i = 0; i < letters; ++i) remaining[size_t(i) + 1] = nu.row(i);
        grid.resize(size_t(lambda.length()));
        for (int r = 0; r < lambda.length(); ++r)
            grid[size_t(r)].assign(size_t(lambda.row(r)), 0);
    }

    void fill(int r, int c) {
        if (done) return;
        // advance to the next skew cell
        while (r < lambda.length() && c < mu.row(r)) {
            ++r;
            c = r < lambda.length() ? lambda.row(r) - 1 : 0;
        }
        if (r >= lambda.length()) {
            ++count;
            if (stop_at_first) done = true;
            return;
        }
        int above = (r > 0 && c < lambda.row(r - 1) && c >= mu.row(r - 1))
                        ? grid[size_t(r) - 1][size_t(c)]
                        : 0;
        int right = (c + 1 < lambda.row(r)) ? grid[size_t(r)][size_t(c) + 1]
                                            : letters;
        for (int a = above + 1; a <= right; ++a) {
            if (remaining[size_t(a)] == 0) continue;
            if (a > 1 && placed[size_t(a) - 1] <= placed[size_t(a)]) continue;
            --remaining[size_t(a)];
            ++placed[size_t(a)];
            grid[size_t(r)][size_t(c)] = a;
            if (c > mu.row(r))
                fill(r, c - 1);
            else
                fill(r + 1, r + 1 < lambda.length() ? lambda.row(r + 1) - 1 : 0);
            grid[size_t(r)][size_t(c)] = 0;
            ++remaining[size_t(a)];
            --placed[size_t(a)];
            if (done) return;
        }
    }
};

// Only the definitional zeros; in particular no first-part or length
// shortcut, so the coefficient search itself witnesses the support
// bounds the callers prune with.
bool trivially_zero(const Partition& lambda, const Partition& mu,
                    const Partition& nu) {
    if (lambda.sum() != mu.sum() + nu.sum()) return true;
    if (!lambda.contains(mu)) return true;
    return false;
}

Bint run_filler(const Partition& lambda, const Partition& mu,
                const Partition& nu, bool stop_at_first) {
    Filler f(lambda, mu, nu);
    f.stop_at_first = stop_at_first;
    f.fill(0, lambda.length() ? lambda.row(0) - 1 : 0);
    return f.count;
}

}  // namespace

Bint lr_coefficient(const Partition& lambda, const Partition& mu,
                    const Partition& nu) {
    if (trivially_zero(lambda, mu, nu)) return 0;
    if (nu.empty()) return 1;  // lambda == mu here
    TripleKey key{lambda, mu, nu};
    Bint cached;
    if (LrCache::instance().lookup(key, cached)) return cached;
    Bint value = run_filler(lambda, mu, nu, false);
    LrCache::instance().store(key, value);
    return value;
}

bool lr_positive(const Partition& lambda, const Partition& mu,
                 const Partition& nu) {
    if (trivially_zero(lambda, mu, nu)) return false;
    if (nu.empty()) return true;
    TripleKey key{lambda, mu, nu};
    bool cached;
    if (LrCache::instance().lookup_positive(key, cached)) return cached;
    bool value = run_filler(lambda, mu, nu, true) > 0;
    LrCache::instance().store_positive(key, value);
    return value;
}

namespace {

// Intermediate shapes for the left-to-right fold: partitions sigma of the
// running weight with sigma inside lambda and first part / length within
// the running first-part and length budgets.
std::vector<Partition> fold_candidates(const Partition& lambda, int weight,
                                       int max_first, int max_len) {
    max_first = std::min(max_first, lambda.first());
    max_len = std::min(max_len, lambda.length());
    std::vector<Partition> out;
    for (Partition& sigma : enumerate_partitions_bounded(weight, max_first, max_len))
        if (lambda.contains(sigma)) out.push_back(std::move(sigma));
    return out;
}

}  // namespace

Bint multi_lr(const Partition& lambda, const std::vector<Partition>& mus) {
    if (mus.empty()) return lambda.empty() ? 1 : 0;
    if (mus.size() == 1) return lambda == mus[0] ? 1 : 0;
    int total = 0;
    for (const Partition& mu : mus) total += mu.sum();
    if (total != lambda.sum()) return 0;

    std::map<Partition, Bint> state;
    if (!lambda.contains(mus[0])) return 0;
    state[mus[0]] = 1;
    int weight = mus[0].sum();
    int first_budget = mus[0].first();
    int len_budget = mus[0].length();
    for (size_t i = 1; i + 1 < mus.size(); ++i) {
        const Partition& mu = mus[i];
        weight += mu.sum();
        first_budget += mu.first();
        len_budget += mu.length();
        std::map<Partition, Bint> next;
        for (const Partition& tau : fold_candidates(lambda, weight, first_budget, len_budget)) {
            Bint acc = 0;
            for (const auto& [sigma, c] : state) {
                Bint lr = lr_coefficient(tau, sigma, mu);
                if (lr != 0) acc += c * lr;
            }
            if (acc != 0) next.emplace(tau, std::move(acc));
        }
        state = std::move(next);
        if (state.empty()) return 0;
    }
    Bint result = 0;
    for (const auto& [sigma, c] : state) {
        Bint lr = lr_coefficient(lambda, sigma, mus.back());
        if (lr != 0) result += c * lr;
    }
    return result;
}

bool multi_lr_positive(const Partition& lambda,
                       const std::vector<Partition>& mus) {
    if (mus.size() <= 2) {
        if (mus.empty()) return lambda.empty();
        if (mus.size() == 1) return lambda == mus[0];
        return lr_positive(lambda, mus[0], mus[1]);
    }
    int total = 0;
    for (const Partition& mu : mus) total += mu.sum();
    if (total != lambda.sum()) return false;
    // Positivity factors through the fold: some intermediate chain must be
    // positive at every step.
    std::set<Partition> state;
    if (!lambda.contains(mus[0])) return false;
    state.insert(mus[0]);
    int weight = mus[0].sum();
    int first_budget = mus[0].first();
    int len_budget = mus[0].length();
    for (size_t i = 1; i + 1 < mus.size(); ++i) {
        const Partition& mu = mus[i];
        weight += mu.sum();
        first_budget += mu.first();
        len_budget += mu.length();
        std::set<Partition> next;
        for (const Partition& tau : fold_candidates(lambda, weight, first_budget, len_budget))
            for (const Partition& sigma : state)
                if (lr_positive(tau, sigma, mu)) {
                    next.insert(tau);
                    break;
                }
        state = std::move(next);
        if (state.empty()) return false;
    }
    for (const Partition& sigma : state)
        if (lr_positive(lambda, sigma, mus.back())) return true;
    return false;
}

std::map<Partition, Bint> outer_decompose(const std::vector<Partition>& mus) {
    int total = 0, first_budget = 0, len_budget = 0;
    for (const Partition& mu : mus) {
        total += mu.sum();
        first_budget += mu.first();
        len_budget += mu.length();
    }
    std::map<Partition, Bint> out;
    for (const Partition& lambda :
         enumerate_partitions_bounded(total, first_budget, len_budget)) {
        Bint c = multi_lr(lambda, mus);
        if (c != 0) out.emplace(lambda, std::move(c));
    }
    return out;
}

std::vector<std::tuple<Partition, Partition, Bint>> restrict_two_blocks(
    const Partition& lambda, int m1) {
    int m2 = lambda.sum() - m1;
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("block size out of range");
    std::vector<std::tuple<Partition, Partition, Bint>> out;
    for (const Partition& sigma :
         enumerate_partitions_bounded(m1, lambda.first(), lambda.length())) {
        if (!lambda.contains(sigma)) continue;
        int min_first = lambda.first() - sigma.first();
        int min_len = lambda.length() - sigma.length();
        for (const Partition& mu :
             enumerate_partitions_bounded(m2, lambda.first(), lambda.length())) {
            if (mu.first() < min_first || mu.length() < min_len) continue;
            Bint c = lr_coefficient(lambda, sigma, mu);
            if (c != 0) out.emplace_back(sigma, mu, std::move(c));
        }
    }
    return out;
}

std::vector<Partition> star_product(const std::vector<Partition>& a,
                                    const std::vector<Partition>& b) {
    auto check_uniform = [](const std::vector<Partition>& v) {
        if (v.empty()) throw std::invalid_argument("star factor must be nonempty");
        for (const Partition& p : v)
            if (p.sum() != v.front().sum())
                throw std::invalid_argument("mixed weights in star factor");
        return v.front().sum();
    };
    int n = check_uniform(a), n2 = check_uniform(b);
    int first_budget = 0, len_budget = 0;
    for (const Partition& p : a) {
        first_budget = std::max(first_budget, p.first());
        len_budget = std::max(len_budget, p.length());
    }
    int fb2 = 0, lb2 = 0;
    for (const Partition& p : b) {
        fb2 = std::max(fb2, p.first());
        lb2 = std::max(lb2, p.length());
    }
    std::vector<Partition> out;
    for (const Partition& lambda :
         enumerate_partitions_bounded(n + n2, first_budget + fb2, len_budget + lb2)) {
        bool hit = false;
        for (const Partition& mu : a) {
            for (const Partition& nu : b)
                if (lr_positive(lambda, mu, nu)) {
                    hit = true;
                    break;
                }
            if (hit) break;
        }
        if (hit) out.push_back(lambda);
    }
    return out;
}

size_t lr_cache_size() { return LrCache::instance().size(); }
void lr_cache_clear() { LrCache::instance().clear(); }

}  // namespace sylow
