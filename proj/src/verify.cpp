#include "sylow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "sylow/blocks.hpp"
#include "sylow/lr.hpp"
#include "sylow/predict.hpp"

namespace sylow {

RestrictionOracle& Harness::oracle(int p) {
    auto& slot = oracles_[p];
    if (!slot) slot = std::make_unique<RestrictionOracle>(p);
    return *slot;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

struct Failures {
    std::ostringstream os;
    int count = 0;
    void add(const std::string& msg) {
        if (count < 8) os << (count ? "; " : "") << msg;
        ++count;
    }
    bool ok() const { return count == 0; }
    std::string text() const {
        std::ostringstream out;
        out << os.str();
        if (count > 8) out << "; ... (" << count << " failures)";
        return out.str();
    }
};

std::string time_note(const Timer& t) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << t.seconds() << "s";
    return os.str();
}

bool same_set(std::vector<Partition> a, std::vector<Partition> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Expected Table 1 cells (p = 3): box side offsets from n per column, or
// -1 for the empty set.
const std::map<long long, std::vector<int>>& table1_offsets() {
    static const std::map<long long, std::vector<int>> t = {
        {3, {0}},
        {9, {0, 1}},
        {27, {0, 1, 1, 2, 3}},
        {81, {0, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 8, 9}},
    };
    return t;
}

// Expected Table 2 cells (p = 3), same encoding.
const std::map<long long, std::vector<int>>& table2_offsets() {
    static const std::map<long long, std::vector<int>> t = {
        {30, {0, 1, 1, 2, 3}},
        {33, {0, 1, 1, 2, 3}},
        {36, {0, 1, 1, 2, 3, 4}},
        {54, {0, 1, 1, 2, 2, 3, 4, 5, 6}},
        {108, {0, 1, 1, 1, 2, 2, 3, 3, 4, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
    };
    return t;
}

CheckResult table_criterion(const std::string& name,
                            const std::map<long long, std::vector<int>>& expected,
                            int k_max, double budget_seconds) {
    Timer timer;
    Failures fails;
    std::vector<long long> ns;
    for (const auto& [n, offs] : expected) ns.push_back(n);
    std::vector<TableCell> cells = table_cells(ns, k_max, 3);
    for (const TableCell& cell : cells) {
        const std::vector<int>& offs = expected.at(cell.n);
        std::optional<long long> want;
        if (cell.k < int(offs.size())) want = cell.n - offs[size_t(cell.k)];
        if (cell.side != want) {
            std::ostringstream os;
            os << "cell (n=" << cell.n << ",k=" << cell.k << ") = " << cell.text();
            fails.add(os.str());
        }
    }
    double elapsed = timer.seconds();
    if (elapsed >= budget_seconds) fails.add("over time budget");
    CheckResult out{name, fails.ok(),
                    fails.ok() ? std::to_string(cells.size()) + " cells match, " +
                                     time_note(timer)
                               : fails.text(),
                    elapsed};
    return out;
}

CheckResult criterion1() {
    return table_criterion("table 1 reproduction (p=3, n=3..81, k<=14)",
                           table1_offsets(), 14, 5.0);
}

CheckResult criterion2() {
    return table_criterion("table 2 reproduction (p=3, composite n, k<=18)",
                           table2_offsets(), 18, 5.0);
}

CheckResult criterion3() {
    Timer timer;
    Failures fails;
    // exponent tuple set maximised over at (e=4, k=4)
    std::vector<std::vector<int>> want = {{3, 0, 0}, {2, 1, 0}, {1, 1, 1}};
    std::vector<std::vector<int>> got = bounded_contents(3, 3, 4);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (got != want) fails.add("exponent tuple set for k-1=3 differs");
    auto rec = box_side_prime_power_recursive(4, 4, 3);
    auto closed = box_side_prime_power_closed(4, 4, 3);
    if (!rec || *rec != 79) fails.add("recursive side at (e=4,k=4) != 79");
    if (rec != closed) fails.add("closed side at (e=4,k=4) differs");
    auto general = box_side_recursive(39, 2, 3);
    if (!general || *general != 38) fails.add("recursive side at (39,2) != 38");
    MergedBlocks mb = merged_blocks(39, 3);
    std::vector<Interval> want_blocks = {{1, 2}, {3, 3}, {4, 4}, {5, 5}};
    if (mb.blocks != want_blocks) fails.add("merged blocks at n=39 differ");
    return {"worked examples (side recursion at 81, merged blocks at 39)",
            fails.ok(), fails.ok() ? "4 checks, " + time_note(timer) : fails.text(),
            timer.seconds()};
}

CheckResult criterion4(Harness& harness) {
    Timer timer;
    Failures fails;
    RestrictionOracle& oracle = harness.oracle(3);
    for (int k : {0, 1}) {
        std::vector<Partition> got = oracle.branching_set(9, k, OracleMethod::direct);
        auto side = box_side_closed(9, k, 3);
        std::vector<Partition> want = BoxSpec{9, int(*side)}.members();
        if (!same_set(got, want)) {
            std::ostringstream os;
            os << "branching set (9, k=" << k << ") differs from the box";
            fails.add(os.str());
        }
    }
    double elapsed = timer.seconds();
    if (elapsed >= 60.0) fails.add("over time budget");
    return {"direct decomposition sweep at n=9 matches the predicted boxes",
            fails.ok(),
            fails.ok() ? "30 partitions x k in {0,1}, " + time_note(timer)
                       : fails.text(),
            elapsed};
}

CheckResult criterion5(Harness& harness, unsigned seed) {
    Timer timer;
    Failures fails;
    RestrictionOracle& oracle = harness.oracle(3);
    for (int k = 0; k <= 4; ++k) {
        std::vector<Partition> got =
            oracle.branching_set(27, k, OracleMethod::recursive);
        auto side = box_side_prime_power_closed(3, k, 3);
        std::vector<Partition> want = BoxSpec{27, int(*side)}.members();
        if (!same_set(got, want)) {
            std::ostringstream os;
            os << "branching set (27, k=" << k << ") differs from the box";
            fails.add(os.str());
        }
    }
    // seeded direct-vs-recursive cross-check
    std::vector<Partition> all = enumerate_partitions(27);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::set<size_t> chosen;
    while (chosen.size() < 20) chosen.insert(pick(rng));
    for (size_t idx : chosen) {
        MultVector a = oracle.decompose_direct(all[idx]);
        MultVector b = oracle.decompose_recursive(all[idx]);
        if (a.mult != b.mult) {
            fails.add("direct and recursive decompositions differ at " +
                      all[idx].to_string());
        }
    }
    double elapsed = timer.seconds();
    if (elapsed >= 1800.0) fails.add("over time budget");
    return {"recursive sweep at n=27 matches the boxes; routes agree on 20 seeds",
            fails.ok(),
            fails.ok() ? "3010 partitions x k in [0,4], " + time_note(timer)
                       : fails.text(),
            elapsed};
}

CheckResult criterion6(Harness& harness) {
    Timer timer;
    Failures fails;
    RestrictionOracle& oracle = harness.oracle(5);
    std::vector<Partition> got = oracle.branching_set(25, 1, OracleMethod::direct);
    std::vector<Partition> want = BoxSpec{25, 24}.members();
    if (!same_set(got, want)) fails.add("branching set (25, k=1) differs from B_25(24)");
    double elapsed = timer.seconds();
    if (elapsed >= 600.0) fails.add("over time budget");
    return {"direct sweep at n=25 (p=5) matches B_25(24)", fails.ok(),
            fails.ok() ? "1958 partitions, " + time_note(timer) : fails.text(),
            elapsed};
}

CheckResult criterion7(Harness& harness) {
    Timer timer;
    Failures fails;
    RestrictionOracle& oracle = harness.oracle(3);
    std::vector<Partition> got = oracle.branching_set(12, 1, OracleMethod::direct);
    std::vector<Partition> want = BoxSpec{12, 11}.members();
    if (!same_set(got, want)) fails.add("branching set (12, k=1) differs from B_12(11)");
    return {"composite degree-sum sweep at n=12 matches B_12(11)", fails.ok(),
            fails.ok() ? "77 partitions, " + time_note(timer) : fails.text(),
            timer.seconds()};
}

CheckResult criterion8(Harness& harness) {
    Timer timer;
    Failures fails;
    RestrictionOracle& oracle = harness.oracle(2);
    std::vector<Partition> got = oracle.branching_set(4, 1, OracleMethod::direct);
    std::vector<Partition> want = {Partition({3, 1}), Partition({2, 1, 1})};
    if (!same_set(got, want)) fails.add("branching set (4, k=1, p=2) differs");
    bool box_shaped = false;
    for (int t = 0; t <= 4; ++t)
        if (same_set(got, BoxSpec{4, t}.members())) box_shaped = true;
    if (box_shaped) fails.add("p=2 branching set unexpectedly is a box set");
    return {"p=2 control: branching set at n=4 is {(3,1),(2,1,1)}, not a box",
            fails.ok(), fails.ok() ? "checked T in [0,4], " + time_note(timer)
                                   : fails.text(),
            timer.seconds()};
}

CheckResult criterion9(Harness& harness, unsigned seed) {
    Timer timer;
    Failures fails;

    // wreath tables: orthogonality, degrees, class data
    const std::vector<std::pair<int, int>> levels = {{3, 1}, {3, 2}, {3, 3}, {5, 2}};
    for (auto [p, m] : levels) {
        const WreathTower& tower = harness.oracle(p).tower();
        TableCheck check = verify_table(tower, m, seed);
        if (!check.pass()) {
            std::ostringstream os;
            os << "table check fails at (p=" << p << ", m=" << m
               << "): " << check.failures.front();
            fails.add(os.str());
        }
        // every attained exponent is carried by at least p labels
        const WreathLevel& lvl = tower.level(m);
        std::set<int> attained;
        for (const IrrLabel& lab : lvl.irr) attained.insert(lab.degree_exponent);
        for (int k : attained)
            if (int(lvl.labels_of_degree(k).size()) < p) {
                std::ostringstream os;
                os << "fewer than p labels of exponent " << k << " at (p=" << p
                   << ", m=" << m << ")";
                fails.add(os.str());
            }
    }

    // block-length identities
    for (int p : {3, 5})
        for (int e = 2; e <= 7; ++e) {
            long long count = 1;
            for (int i = 0; i < e - 2; ++i) count *= p;
            long long total = 0;
            for (long long x = 1; x <= count; ++x)
                total += block_length_prime_power(e, int(x), p);
            if (total != max_degree_exponent_prime_power(e, p))
                fails.add("block lengths do not sum to the maximal exponent");
            if (e >= 3)
                for (long long x = 1; x <= count; ++x) {
                    long long a = x / p;
                    int r = int(x % p);
                    long long left = 0;
                    for (long long j = 1; j <= a; ++j)
                        left += block_length_prime_power(e - 1, int(j), p);
                    left *= p;
                    if (r > 0)
                        left += (long long)r *
                                block_length_prime_power(e - 1, int(a) + 1, p);
                    long long right = -1;
                    for (long long j = 1; j <= x; ++j)
                        right += block_length_prime_power(e, int(j), p);
                    if (left != right) {
                        fails.add("block-length refinement identity fails");
                        break;
                    }
                }
        }

    // star products of box sets
    for (int n = 1; n <= 6; ++n)
        for (int n2 = n; n2 <= 6; ++n2)
            for (int t = n / 2 + 1; t <= n; ++t)
                for (int t2 = n2 / 2 + 1; t2 <= n2; ++t2) {
                    std::vector<Partition> got = star_product(
                        BoxSpec{n, t}.members(), BoxSpec{n2, t2}.members());
                    if (!same_set(got, BoxSpec{n + n2, t + t2}.members())) {
                        std::ostringstream os;
                        os << "star product of boxes fails at (" << n << "," << t
                           << ")x(" << n2 << "," << t2 << ")";
                        fails.add(os.str());
                    }
                }

    // at least two constituents of every attained degree, n in {9, 27}
    for (long long n : {9LL, 27LL}) {
        RestrictionOracle& oracle = harness.oracle(3);
        OracleMethod method = n == 9 ? OracleMethod::direct : OracleMethod::recursive;
        const WreathLevel& lvl = oracle.tower().level(n == 9 ? 2 : 3);
        for (const Partition& lambda : enumerate_partitions(int(n))) {
            if (lambda.first() == n || lambda.length() == n) continue;
            MultVector mv = oracle.decompose(lambda, method);
            for (int k : mv.exponents(lvl))
                if (mv.labels_at_exponent(lvl, k) < 2) {
                    fails.add("unique constituent of exponent " + std::to_string(k) +
                              " at " + lambda.to_string());
                }
        }
    }

    // degree sets are downward-closed intervals and conjugation-symmetric
    struct SweepSpec {
        int p;
        long long n;
        OracleMethod method;
    };
    for (const SweepSpec& spec :
         {SweepSpec{3, 9, OracleMethod::direct},
          SweepSpec{3, 12, OracleMethod::direct},
          SweepSpec{3, 27, OracleMethod::recursive},
          SweepSpec{5, 25, OracleMethod::direct}}) {
        RestrictionOracle& oracle = harness.oracle(spec.p);
        for (const Partition& lambda : enumerate_partitions(int(spec.n))) {
            std::set<int> degs = oracle.degree_set(lambda, spec.method);
            if (degs.empty()) {
                fails.add("empty degree set at " + lambda.to_string());
                continue;
            }
            int top = *degs.rbegin();
            if (int(degs.size()) != top + 1 || *degs.begin() != 0)
                fails.add("degree set is not the interval [0,max] at " +
                          lambda.to_string());
            if (oracle.degree_set(lambda.conjugate(), spec.method) != degs)
                fails.add("degree set not conjugation-symmetric at " +
                          lambda.to_string());
        }
    }

    // step and block-count corollaries of the closed form, n <= 250
    for (long long n = 9; n <= 250; ++n) {
        int alpha = max_degree_exponent(n, 3);
        std::map<long long, int> count_per_side;
        long long prev = n;
        for (int k = 1; k <= alpha; ++k) {
            long long side = *box_side_closed(n, k, 3);
            if (side != prev && side != prev - 1) {
                fails.add("box side step property fails at n=" + std::to_string(n));
                break;
            }
            prev = side;
            ++count_per_side[side];
        }
        MergedBlocks mb = merged_blocks(n, 3);
        for (int x = 1; x <= mb.block_count; ++x)
            if (count_per_side[n - x] != mb.lengths[size_t(x) - 1]) {
                fails.add("block length count fails at n=" + std::to_string(n));
                break;
            }
    }

    return {"property suites (tables, blocks, star, constituents, intervals)",
            fails.ok(), fails.ok() ? "all exact, " + time_note(timer) : fails.text(),
            timer.seconds()};
}

CheckResult criterion10() {
    Timer timer;
    Failures fails;
    for (int n = 0; n <= 30; ++n) {
        std::vector<Partition> all = enumerate_partitions(n);
        for (int t = 0; t <= n; ++t) {
            Bint direct = 0;
            for (const Partition& lambda : all)
                if (lambda.fits_in_box(t)) ++direct;
            if (count_in_box(n, t) != direct) {
                fails.add("box count DP differs from enumeration at n=" +
                          std::to_string(n));
                break;
            }
        }
    }
    if (!(omega_ratio(200, 3) > omega_ratio(9, 3)))
        fails.add("coverage ratio does not grow from n=9 to n=200");
    std::ostringstream ratios;
    for (int n : {9, 27, 81, 200}) {
        Brat r = omega_ratio(n, 3);
        ratios << " " << n << ": " << r.str();
    }
    return {"box-count DP vs enumeration; coverage ratios", fails.ok(),
            fails.ok() ? "ratios:" + ratios.str() + ", " + time_note(timer)
                       : fails.text(),
            timer.seconds()};
}

}  // namespace

CheckResult run_criterion(int index, Harness& harness, unsigned seed) {
    switch (index) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4(harness);
        case 5: return criterion5(harness, seed);
        case 6: return criterion6(harness);
        case 7: return criterion7(harness);
        case 8: return criterion8(harness);
        case 9: return criterion9(harness, seed);
        case 10: return criterion10();
        default: throw std::invalid_argument("criterion index out of range");
    }
}

std::vector<int> tier_criteria(VerifyTier tier) {
    switch (tier) {
        case VerifyTier::smoke: return {1, 2, 3, 4, 8};
        case VerifyTier::standard: return {1, 2, 3, 4, 7, 8, 10};
        case VerifyTier::full: return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    }
    return {};
}

std::vector<CheckResult> run_tier(VerifyTier tier, Harness& harness, unsigned seed) {
    std::vector<CheckResult> out;
    for (int idx : tier_criteria(tier)) out.push_back(run_criterion(idx, harness, seed));
    return out;
}

}  // namespace sylow
