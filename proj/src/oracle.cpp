#include "sylow/oracle.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "sylow/blocks.hpp"
#include "sylow/cache.hpp"
#include "sylow/lr.hpp"

namespace sylow {

namespace {

long long to_ll(const Bint& v) {
    if (v > Bint(std::numeric_limits<long long>::max()) ||
        v < Bint(std::numeric_limits<long long>::min()))
        throw std::logic_error("value exceeds the 64-bit fast path");
    return (long long)v;
}

long long ll_pow(int p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

std::string serialize_mult(const MultVector& mv) {
    nlohmann::json j;
    j["p"] = mv.p;
    j["level"] = mv.level;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [idx, m] : mv.mult)
        entries.push_back({idx, m.str()});
    j["mult"] = entries;
    return j.dump();
}

MultVector deserialize_mult(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    MultVector mv;
    mv.p = j.at("p").get<int>();
    mv.level = j.at("level").get<int>();
    for (const auto& e : j.at("mult"))
        mv.mult[e.at(0).get<int>()] = Bint(e.at(1).get<std::string>());
    return mv;
}

std::string serialize_degs(const std::set<int>& degs) {
    nlohmann::json j = nlohmann::json::array();
    for (int d : degs) j.push_back(d);
    return j.dump();
}

std::set<int> deserialize_degs(const std::string& text) {
    std::set<int> out;
    for (const auto& e : nlohmann::json::parse(text)) out.insert(e.get<int>());
    return out;
}

}  // namespace

std::set<int> MultVector::exponents(const WreathLevel& lvl) const {
    std::set<int> out;
    for (const auto& [idx, m] : mult)
        if (m > 0) out.insert(lvl.irr[size_t(idx)].degree_exponent);
    return out;
}

Bint MultVector::total_dimension(const WreathLevel& lvl) const {
    Bint total = 0;
    for (const auto& [idx, m] : mult) {
        Bint d = 1;
        for (int i = 0; i < lvl.irr[size_t(idx)].degree_exponent; ++i) d *= lvl.p;
        total += m * d;
    }
    return total;
}

int MultVector::labels_at_exponent(const WreathLevel& lvl, int k) const {
    int count = 0;
    for (const auto& [idx, m] : mult)
        if (m > 0 && lvl.irr[size_t(idx)].degree_exponent == k) ++count;
    return count;
}

RestrictionOracle::RestrictionOracle(int p, int max_level)
    : p_(p), tower_(p, max_level) {}

int RestrictionOracle::level_of(long long n) const {
    int m = 0;
    long long rest = n;
    while (rest > 1 && rest % p_ == 0) {
        rest /= p_;
        ++m;
    }
    if (rest != 1) {
        std::ostringstream os;
        os << n << " is not a power of " << p_;
        throw std::invalid_argument(os.str());
    }
    if (m > tower_.max_level()) {
        std::ostringstream os;
        os << "scope exceeded: decomposition at level " << m << " for p = " << p_
           << " is beyond the tower bound " << tower_.max_level();
        throw ScopeError(os.str());
    }
    return m;
}

MultVector RestrictionOracle::decompose(const Partition& lambda,
                                        OracleMethod method) {
    int m = level_of(lambda.sum());
    if (method == OracleMethod::automatic)
        method = m <= 2 ? OracleMethod::direct : OracleMethod::recursive;
    return method == OracleMethod::direct ? decompose_direct(lambda)
                                          : decompose_recursive(lambda);
}

MultVector RestrictionOracle::decompose_direct(const Partition& lambda) {
    int m = level_of(lambda.sum());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = direct_cache_.find(lambda);
        if (it != direct_cache_.end()) return it->second;
    }
    std::string key;
    if (cache_ && cache_->enabled()) {
        key = ResultCache::make_key("mv-direct", p_, m, lambda);
        if (auto hit = cache_->get(key)) {
            MultVector mv = deserialize_mult(*hit);
            std::lock_guard<std::mutex> lock(mutex_);
            direct_cache_.emplace(lambda, mv);
            return mv;
        }
    }
    MultVector mv = direct_uncached(lambda, m);
    if (cache_ && cache_->enabled()) cache_->put(key, serialize_mult(mv));
    std::lock_guard<std::mutex> lock(mutex_);
    direct_cache_.emplace(lambda, mv);
    return mv;
}

MultVector RestrictionOracle::direct_uncached(const Partition& lambda, int m) {
    const WreathLevel& lvl = tower_.level(m);
    const auto& agg = tower_.aggregates(m);
    std::vector<Bint> char_values(lvl.type_reps.size());
    for (size_t t = 0; t < lvl.type_reps.size(); ++t)
        char_values[t] = mn_value(lambda, lvl.type_reps[t]);

    MultVector mv;
    mv.p = p_;
    mv.level = m;
    for (size_t i = 0; i < lvl.irr.size(); ++i) {
        CycB acc(p_, m);
        for (size_t t = 0; t < lvl.type_reps.size(); ++t) {
            if (char_values[t] == 0) continue;
            acc.add_scaled(agg[i][t], char_values[t]);
        }
        acc.divide_exact(lvl.group_order);
        const Bint& value = acc.rational();  // throws unless rational
        if (value < 0)
            throw std::logic_error("negative multiplicity in direct decomposition");
        if (value > 0) mv.mult[int(i)] = value;
    }
    if (mv.total_dimension(lvl) != dimension(lambda))
        throw std::logic_error("dimension count fails in direct decomposition");
    return mv;
}

MultVector RestrictionOracle::decompose_recursive(const Partition& lambda) {
    int m = level_of(lambda.sum());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = recursive_cache_.find(lambda);
        if (it != recursive_cache_.end()) return it->second;
    }
    std::string key;
    if (cache_ && cache_->enabled()) {
        key = ResultCache::make_key("mv-rec", p_, m, lambda);
        if (auto hit = cache_->get(key)) {
            MultVector mv = deserialize_mult(*hit);
            std::lock_guard<std::mutex> lock(mutex_);
            recursive_cache_.emplace(lambda, mv);
            return mv;
        }
    }
    MultVector mv = recursive_uncached(lambda, m);
    if (cache_ && cache_->enabled()) cache_->put(key, serialize_mult(mv));
    std::lock_guard<std::mutex> lock(mutex_);
    recursive_cache_.emplace(lambda, mv);
    return mv;
}

const std::map<Partition, MultVector>& RestrictionOracle::lower_vectors(int m) {
    // All recursive vectors one level down; the recursion floor is the
    // closed-form cyclic restriction.
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = lower_snapshots_.find(m);
        if (it != lower_snapshots_.end()) return it->second;
    }
    long long q = ll_pow(p_, m);
    std::map<Partition, MultVector> snap;
    for (const Partition& mu : enumerate_partitions(int(q)))
        snap.emplace(mu, decompose_recursive(mu));
    std::lock_guard<std::mutex> lock(mutex_);
    return lower_snapshots_.emplace(m, std::move(snap)).first->second;
}

MultVector RestrictionOracle::recursive_uncached(const Partition& lambda, int m) {
    MultVector mv;
    mv.p = p_;
    mv.level = m;
    if (m == 0) {
        mv.mult[0] = 1;
        return mv;
    }
    if (m == 1) {
        std::vector<Bint> mults = restrict_to_cyclic(lambda, p_);
        const WreathLevel& lvl = tower_.level(1);
        for (int j = 0; j < p_; ++j)
            if (mults[size_t(j)] > 0) mv.mult[lvl.extension_at(0, j)] = mults[size_t(j)];
        return mv;
    }

    const WreathLevel& lvl = tower_.level(m);
    const WreathLevel& low = tower_.level(m - 1);
    const size_t k = low.irr.size();
    double tensor_size = 1;
    for (int i = 0; i < p_; ++i) tensor_size *= double(k);
    if (tensor_size > 2e6)
        throw ScopeError("recursive decomposition tensor too large at this level");
    const size_t kp = size_t(tensor_size);
    const size_t kp1 = kp / k;

    const auto& lower = lower_vectors(m - 1);
    const auto& prefix = prefix_tensors(m, p_ - 1);

    std::vector<long long> tensor(kp, 0);
    int w = int((p_ - 1) * ll_pow(p_, m - 1));
    for (const auto& [sigma, mu, coeff] : restrict_two_blocks(lambda, w)) {
        long long c = to_ll(coeff);
        auto pit = prefix.find(sigma);
        if (pit == prefix.end()) continue;
        const std::vector<long long>& pref = pit->second;
        const MultVector& mu_vec = lower.at(mu);
        for (size_t i = 0; i < kp1; ++i) {
            if (pref[i] == 0) continue;
            long long scaled = c * pref[i];
            for (const auto& [phi, mult] : mu_vec.mult)
                tensor[i * k + size_t(phi)] += scaled * to_ll(mult);
        }
    }

    auto encode = [&](const std::vector<int>& tuple) {
        size_t idx = 0;
        for (int v : tuple) idx = idx * k + size_t(v);
        return idx;
    };

    // Induced labels: Frobenius reciprocity against any one tuple in the
    // rotation orbit; all rotations must agree.
    for (size_t i = 0; i < lvl.irr.size(); ++i) {
        const IrrLabel& lab = lvl.irr[i];
        if (lab.kind != IrrLabel::Kind::induced) continue;
        long long value = tensor[encode(lab.tuple)];
        std::vector<int> rotated = lab.tuple;
        for (int r = 1; r < p_; ++r) {
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
            if (tensor[encode(rotated)] != value)
                throw std::logic_error(
                    "induced multiplicity differs across tuple rotations");
        }
        if (value < 0)
            throw std::logic_error("negative induced multiplicity");
        if (value > 0) mv.mult[int(i)] = value;
    }

    // Extension labels: the base-group pairing spread over the top twists
    // by the twisted-class sums.
    const auto& low_table = tower_.table(m - 1);
    const Bint& lower_order = low.group_order;
    std::vector<Bint> scaled_char(low.classes.size());
    for (size_t d = 0; d < low.classes.size(); ++d)
        scaled_char[d] =
            low.classes[d].size *
            mn_value(lambda, scale_cycle_type(low.classes[d].cycle_type, p_));
    for (size_t theta = 0; theta < k; ++theta) {
        std::vector<int> diag(static_cast<size_t>(p_), int(theta));
        Bint aggregate = tensor[encode(diag)];
        CycB twisted(p_, m - 1);
        for (size_t d = 0; d < low.classes.size(); ++d) {
            if (scaled_char[d] == 0) continue;
            twisted.add_scaled(low_table[theta][d].conj(), scaled_char[d]);
        }
        for (int j = 0; j < p_; ++j) {
            CycB numerator = twisted;
            numerator.scale(Bint((j == 0 ? p_ : 0) - 1));
            numerator += CycB::integer(p_, m - 1, aggregate * lower_order);
            numerator.divide_exact(Bint(p_) * lower_order);
            const Bint& value = numerator.rational();
            if (value < 0)
                throw std::logic_error("negative extension multiplicity");
            if (value > 0) mv.mult[lvl.extension_at(int(theta), j)] = value;
        }
    }

    if (mv.total_dimension(lvl) != dimension(lambda))
        throw std::logic_error("dimension count fails in recursive decomposition");
    return mv;
}

const std::map<Partition, std::vector<long long>>&
RestrictionOracle::prefix_tensors(int m, int j) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = prefix_.find({m, j});
        if (it != prefix_.end()) return it->second;
    }
    const size_t k = tower_.level(m - 1).irr.size();
    long long q = ll_pow(p_, m - 1);
    std::map<Partition, std::vector<long long>> built;
    if (j == 1) {
        const auto& lower = lower_vectors(m - 1);
        for (const auto& [mu, vec] : lower) {
            std::vector<long long> dense(k, 0);
            for (const auto& [phi, mult] : vec.mult)
                dense[size_t(phi)] = to_ll(mult);
            built.emplace(mu, std::move(dense));
        }
    } else {
        const auto& smaller = prefix_tensors(m, j - 1);
        const auto& lower = lower_vectors(m - 1);
        size_t kj1 = 1;
        for (int i = 0; i < j - 1; ++i) kj1 *= k;
        for (const Partition& sigma : enumerate_partitions(int(q) * j)) {
            std::vector<long long> dense(kj1 * k, 0);
            bool any = false;
            for (const auto& [tau, mu, coeff] :
                 restrict_two_blocks(sigma, int(q) * (j - 1))) {
                long long c = to_ll(coeff);
                const std::vector<long long>& pref = smaller.at(tau);
                const MultVector& mu_vec = lower.at(mu);
                for (size_t i = 0; i < kj1; ++i) {
                    if (pref[i] == 0) continue;
                    long long scaled = c * pref[i];
                    for (const auto& [phi, mult] : mu_vec.mult) {
                        dense[i * k + size_t(phi)] += scaled * to_ll(mult);
                        any = true;
                    }
                }
            }
            if (any) built.emplace(sigma, std::move(dense));
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = prefix_.emplace(std::make_pair(m, j), std::move(built));
    (void)fresh;
    return it->second;
}

std::set<int> RestrictionOracle::degree_set(const Partition& lambda,
                                            OracleMethod method) {
    long long n = lambda.sum();
    if (n == 0) return {0};
    std::pair<int, Partition> cache_key{int(method), lambda};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = degree_cache_.find(cache_key);
        if (it != degree_cache_.end()) return it->second;
    }
    std::vector<int> exponents = p_adic_exponents(n, p_);
    std::set<int> result;
    if (exponents.size() == 1) {
        result = decompose(lambda, method).exponents(tower_.level(level_of(n)));
    } else {
        // Degree-sum rule over positive outer decompositions along the
        // p-adic parts; the Sylow subgroup is the direct product of the
        // prime-power pieces.
        std::map<Partition, std::set<int>> state;
        long long w = ll_pow(p_, exponents[0]);
        for (const Partition& mu :
             enumerate_partitions_bounded(int(w), lambda.first(), lambda.length()))
            if (lambda.contains(mu)) state.emplace(mu, degree_set(mu, method));
        for (size_t i = 1; i < exponents.size(); ++i) {
            long long q = ll_pow(p_, exponents[i]);
            long long neww = w + q;
            bool last = i + 1 == exponents.size();
            std::map<Partition, std::set<int>> next;
            std::vector<Partition> targets;
            if (last) {
                targets.push_back(lambda);
            } else {
                for (const Partition& t : enumerate_partitions_bounded(
                         int(neww), lambda.first(), lambda.length()))
                    if (lambda.contains(t)) targets.push_back(t);
            }
            std::vector<std::pair<Partition, std::set<int>>> parts;
            for (const Partition& mu : enumerate_partitions(int(q)))
                parts.emplace_back(mu, degree_set(mu, method));
            for (const Partition& target : targets) {
                std::set<int> degs;
                for (const auto& [sigma, sdegs] : state) {
                    if (!target.contains(sigma)) continue;
                    for (const auto& [mu, mdegs] : parts) {
                        if (!lr_positive(target, sigma, mu)) continue;
                        for (int a : sdegs)
                            for (int b : mdegs) degs.insert(a + b);
                    }
                }
                if (!degs.empty()) next.emplace(target, std::move(degs));
            }
            state = std::move(next);
            w = neww;
        }
        auto it = state.find(lambda);
        if (it == state.end())
            throw std::logic_error("empty degree set for a nonzero character");
        result = it->second;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    degree_cache_.emplace(std::move(cache_key), result);
    return result;
}

int RestrictionOracle::max_exponent(const Partition& lambda) {
    long long n = lambda.sum();
    int m = 0;
    long long rest = n;
    while (rest > 1 && rest % p_ == 0) {
        rest /= p_;
        ++m;
    }
    if (rest != 1)
        throw std::invalid_argument("branching maximum needs a prime-power weight");
    return max_exponent_inner(lambda, m);
}

int RestrictionOracle::max_exponent_inner(const Partition& lambda, int m) {
    if (m <= 1) return 0;
    long long n = lambda.sum();
    if (lambda.first() == n || lambda.length() == n) return 0;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = partial_cache_.find(lambda);
        if (it != partial_cache_.end()) return it->second;
    }
    int value = 1 + max_fold(m, p_, lambda);
    std::lock_guard<std::mutex> lock(mutex_);
    partial_cache_.emplace(lambda, value);
    return value;
}

std::vector<std::pair<int, Partition>> RestrictionOracle::sorted_partials(int m) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = sorted_partials_.find(m);
        if (it != sorted_partials_.end()) return it->second;
    }
    std::vector<std::pair<int, Partition>> out;
    for (const Partition& mu : enumerate_partitions(int(ll_pow(p_, m))))
        out.emplace_back(max_exponent_inner(mu, m), mu);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::lock_guard<std::mutex> lock(mutex_);
    return sorted_partials_.emplace(m, std::move(out)).first->second;
}

int RestrictionOracle::max_fold(int m, int j, const Partition& sigma) {
    if (j == 1) return max_exponent_inner(sigma, m - 1);
    std::pair<int, Partition> key{(m << 8) | j, sigma};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = fold_cache_.find(key);
        if (it != fold_cache_.end()) return it->second;
    }
    int alpha_low = max_degree_exponent_prime_power(m - 1, p_);
    int cap = j * alpha_low;
    long long q = ll_pow(p_, m - 1);
    std::vector<std::pair<int, Partition>> partials = sorted_partials(m - 1);

    // candidates for the leading j-1 factors, best fold value first
    std::vector<std::pair<int, Partition>> leads;
    for (const Partition& tau : enumerate_partitions_bounded(
             int(q * (j - 1)), sigma.first(), sigma.length()))
        if (sigma.contains(tau)) leads.emplace_back(max_fold(m, j - 1, tau), tau);
    std::stable_sort(leads.begin(), leads.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    int best = -1;
    for (const auto& [lead_value, tau] : leads) {
        if (lead_value + alpha_low <= best) break;
        for (const auto& [dmu, mu] : partials) {
            if (lead_value + dmu <= best) break;
            if (lr_positive(sigma, tau, mu)) {
                best = lead_value + dmu;
                break;
            }
        }
        if (best == cap) break;
    }
    if (best < 0)
        throw std::logic_error("no positive factorisation in the branching fold");
    std::lock_guard<std::mutex> lock(mutex_);
    fold_cache_.emplace(std::move(key), best);
    return best;
}

std::vector<Partition> RestrictionOracle::branching_set(long long n, int k,
                                                        OracleMethod method) {
    std::vector<Partition> out;
    for (const Partition& lambda : enumerate_partitions(int(n)))
        if (degree_set(lambda, method).count(k)) out.push_back(lambda);
    return out;
}

std::vector<Partition> omega_oracle(long long n, int p, int k,
                                    OracleMethod method) {
    static std::mutex registry_mutex;
    static std::map<int, std::unique_ptr<RestrictionOracle>> registry;
    RestrictionOracle* oracle;
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto& slot = registry[p];
        if (!slot) slot = std::make_unique<RestrictionOracle>(p);
        oracle = slot.get();
    }
    return oracle->branching_set(n, k, method);
}

}  // namespace sylow
