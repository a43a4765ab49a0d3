#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylow/lr.hpp"
#include "sylow/oracle.hpp"
#include "sylow/predict.hpp"

using namespace sylow;

namespace {

std::vector<Partition> sorted_copy(std::vector<Partition> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("trivial and sign restrictions") {
    RestrictionOracle oracle(3);
    for (int m : {1, 2, 3}) {
        int n = 1;
        for (int i = 0; i < m; ++i) n *= 3;
        const WreathLevel& lvl = oracle.tower().level(m);
        MultVector triv = oracle.decompose(Partition({n}), OracleMethod::recursive);
        REQUIRE(triv.mult.size() == 1);
        CHECK(triv.mult.begin()->first == 0);  // the all-trivial extension label
        CHECK(triv.mult.begin()->second == 1);
        CHECK(lvl.irr[0].degree_exponent == 0);

        MultVector sign =
            oracle.decompose(Partition(std::vector<int>(size_t(n), 1)),
                             OracleMethod::recursive);
        REQUIRE(sign.mult.size() == 1);
        CHECK(sign.mult.begin()->second == 1);
        CHECK(lvl.irr[size_t(sign.mult.begin()->first)].degree_exponent == 0);
    }
}

TEST_CASE("level-1 decompositions match the closed form") {
    RestrictionOracle oracle(3);
    const WreathLevel& lvl = oracle.tower().level(1);
    MultVector mv = oracle.decompose_direct(Partition({2, 1}));
    REQUIRE(mv.mult.size() == 2);
    CHECK(mv.mult.at(lvl.extension_at(0, 1)) == 1);
    CHECK(mv.mult.at(lvl.extension_at(0, 2)) == 1);
    CHECK(oracle.decompose_recursive(Partition({2, 1})).mult == mv.mult);
}

TEST_CASE("hook shape decomposition at nine") {
    RestrictionOracle oracle(3);
    const WreathLevel& lvl = oracle.tower().level(2);
    MultVector mv = oracle.decompose_direct(Partition({8, 1}));
    CHECK(mv.total_dimension(lvl) == 8);
    std::set<int> degs = mv.exponents(lvl);
    CHECK(degs == std::set<int>{0, 1});
    CHECK(oracle.decompose_recursive(Partition({8, 1})).mult == mv.mult);
}

TEST_CASE("direct and recursive routes agree on all of weight nine") {
    RestrictionOracle oracle(3);
    const WreathLevel& lvl = oracle.tower().level(2);
    for (const Partition& lambda : enumerate_partitions(9)) {
        MultVector a = oracle.decompose_direct(lambda);
        MultVector b = oracle.decompose_recursive(lambda);
        CHECK(a.mult == b.mult);
        CHECK(a.total_dimension(lvl) == dimension(lambda));
    }
}

TEST_CASE("degree sets at prime powers and their maxima") {
    RestrictionOracle oracle(3);
    CHECK(oracle.degree_set(Partition({9})) == std::set<int>{0});
    CHECK(oracle.degree_set(Partition({8, 1})) == std::set<int>{0, 1});
    CHECK(oracle.max_exponent(Partition({9})) == 0);
    CHECK(oracle.max_exponent(Partition({8, 1})) == 1);
    for (const Partition& lambda : enumerate_partitions(9)) {
        std::set<int> degs = oracle.degree_set(lambda);
        CHECK(*degs.rbegin() == oracle.max_exponent(lambda));
    }
}

TEST_CASE("branching maxima follow the closed form at 27") {
    RestrictionOracle oracle(3);
    // boundary shapes around each box side
    CHECK(oracle.max_exponent(Partition({26, 1})) == 2);
    CHECK(oracle.max_exponent(Partition({25, 2})) == 3);
    CHECK(oracle.max_exponent(Partition({25, 1, 1})) == 3);
    CHECK(oracle.max_exponent(Partition({24, 2, 1})) == 4);
    CHECK(oracle.max_exponent(Partition({9, 9, 9})) == 4);
    CHECK(oracle.max_exponent(Partition({27})) == 0);
    // and at 81 the first-part pruning keeps extreme shapes cheap
    CHECK(oracle.max_exponent(Partition({80, 1})) == 3);
    CHECK(oracle.max_exponent(Partition({81})) == 0);
}

TEST_CASE("composite degree sets") {
    RestrictionOracle oracle(3);
    CHECK(oracle.degree_set(Partition({11, 1})) == std::set<int>{0, 1});
    CHECK(oracle.degree_set(Partition({12})) == std::set<int>{0});
    // every composite weight keeps the interval property
    for (const Partition& lambda : enumerate_partitions(12)) {
        std::set<int> degs = oracle.degree_set(lambda);
        CHECK(*degs.begin() == 0);
        CHECK(int(degs.size()) == *degs.rbegin() + 1);
        CHECK(oracle.degree_set(lambda.conjugate()) == degs);
    }
}

TEST_CASE("branching sets match the predicted boxes at nine") {
    for (int k : {0, 1}) {
        auto got = sorted_copy(omega_oracle(9, 3, k, OracleMethod::direct));
        auto want = sorted_copy(BoxSpec{9, k == 0 ? 9 : 8}.members());
        CHECK(got == want);
    }
    CHECK(omega_oracle(9, 3, 2, OracleMethod::direct).empty());
}

TEST_CASE("p=2 control at four") {
    auto got = sorted_copy(omega_oracle(4, 2, 1, OracleMethod::direct));
    auto want = sorted_copy({Partition({3, 1}), Partition({2, 1, 1})});
    CHECK(got == want);
    for (int t = 0; t <= 4; ++t)
        CHECK(got != sorted_copy(BoxSpec{4, t}.members()));
    // every character still restricts with a linear constituent
    CHECK(sorted_copy(omega_oracle(4, 2, 0, OracleMethod::direct)) ==
          sorted_copy(enumerate_partitions(4)));
}

TEST_CASE("star closure lands inside the bigger branching set") {
    RestrictionOracle oracle(3);
    std::vector<Partition> omega9_1 =
        oracle.branching_set(9, 1, OracleMethod::direct);
    std::vector<Partition> all9 = enumerate_partitions(9);
    std::vector<Partition> first = star_product(omega9_1, all9);
    std::vector<Partition> closure = star_product(first, all9);
    CHECK(!closure.empty());
    for (size_t i = 0; i < closure.size(); i += 60)
        CHECK(oracle.degree_set(closure[i], OracleMethod::recursive).count(2) == 1);
}

TEST_CASE("scope errors") {
    RestrictionOracle oracle(5);
    CHECK_THROWS_AS(oracle.decompose(Partition({125})), ScopeError);
    CHECK_THROWS_AS(oracle.decompose(Partition({10})), std::invalid_argument);
}
