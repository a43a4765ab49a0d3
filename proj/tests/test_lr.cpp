#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylow/lr.hpp"
#include "sylow/sym_char.hpp"

using namespace sylow;

namespace {

// Independent oracle for two-factor coefficients at small weight: expand
// the induced product over the full character table by explicit class
// sums, using only border-strip values and class sizes.
Bint induced_multiplicity(const Partition& lambda, const Partition& mu,
                          const Partition& nu) {
    int n = lambda.sum();
    if (mu.sum() + nu.sum() != n) return 0;
    // [ind(chi^mu x chi^nu), chi^lambda] = [chi^mu x chi^nu, res chi^lambda]
    // evaluated as an inner product over the Young subgroup.
    Bint acc = 0;
    for (const Partition& a : enumerate_partitions(mu.sum()))
        for (const Partition& b : enumerate_partitions(nu.sum())) {
            std::vector<int> joined;
            for (int v : a.parts()) joined.push_back(v);
            for (int v : b.parts()) joined.push_back(v);
            std::sort(joined.begin(), joined.end(), std::greater<int>());
            Partition united(joined);
            acc += symmetric_class_size(a) * symmetric_class_size(b) *
                   mn_value(mu, a) * mn_value(nu, b) * mn_value(lambda, united);
        }
    Bint order = factorial(mu.sum()) * factorial(nu.sum());
    if (acc % order != 0) throw std::logic_error("inner product not integral");
    return acc / order;
}

}  // namespace

TEST_CASE("two-factor coefficients: pinned values") {
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2}), Partition({1})) == 1);
    CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
    for (const Partition& lambda : enumerate_partitions(6))
        CHECK(lr_coefficient(lambda, lambda, Partition()) == 1);
    CHECK(lr_coefficient(Partition({2, 2}), Partition({2}), Partition({1})) == 0);
    CHECK(lr_coefficient(Partition({4, 1}), Partition({2}), Partition({2, 1})) == 1);
}

TEST_CASE("two-factor coefficients against the character-theoretic oracle") {
    for (int n : {4, 5, 6, 7})
        for (int m = 1; m < n; ++m)
            for (const Partition& lambda : enumerate_partitions(n))
                for (const Partition& mu : enumerate_partitions(m))
                    for (const Partition& nu : enumerate_partitions(n - m)) {
                        Bint fast = lr_coefficient(lambda, mu, nu);
                        CHECK(fast == induced_multiplicity(lambda, mu, nu));
                        CHECK(lr_positive(lambda, mu, nu) == (fast > 0));
                    }
}

TEST_CASE("symmetry and conjugation invariance") {
    for (int n = 2; n <= 10; ++n)
        for (int m = 1; m < n; ++m)
            for (const Partition& lambda : enumerate_partitions(n))
                for (const Partition& mu : enumerate_partitions(m))
                    for (const Partition& nu : enumerate_partitions(n - m)) {
                        Bint c = lr_coefficient(lambda, mu, nu);
                        CHECK(c == lr_coefficient(lambda, nu, mu));
                        if (n <= 8)
                            CHECK(c == lr_coefficient(lambda.conjugate(),
                                                      mu.conjugate(),
                                                      nu.conjugate()));
                    }
}

TEST_CASE("support bounds on positive coefficients") {
    // first-part and length bounds, checked against the raw tableau
    // search over unbounded shapes
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m <= n / 2; ++m)
            for (const Partition& mu : enumerate_partitions(m))
                for (const Partition& nu : enumerate_partitions(n - m))
                    for (const Partition& lambda : enumerate_partitions(n))
                        if (lr_positive(lambda, mu, nu)) {
                            CHECK(lambda.first() <= mu.first() + nu.first());
                            CHECK(lambda.length() <= mu.length() + nu.length());
                        }
    // multi-factor version through the fold
    for (int a = 1; a <= 3; ++a)
        for (const Partition& m1 : enumerate_partitions(a))
            for (const Partition& m2 : enumerate_partitions(3))
                for (const Partition& m3 : enumerate_partitions(4))
                    for (const Partition& lambda : enumerate_partitions(a + 7))
                        if (multi_lr_positive(lambda, {m1, m2, m3}))
                            CHECK(lambda.first() <=
                                  m1.first() + m2.first() + m3.first());
}

TEST_CASE("multi-factor folding") {
    CHECK(multi_lr(Partition({3, 2, 1}),
                   {Partition({2, 1}), Partition({2, 1})}) == 2);
    CHECK(multi_lr(Partition({6}),
                   {Partition({3}), Partition({2}), Partition({1})}) == 1);
    // the trivial tower: only constant tuples of one-row shapes survive
    for (const Partition& mu : enumerate_partitions(3)) {
        Bint c = multi_lr(Partition({9}), {mu, Partition({3}), Partition({3})});
        CHECK(c == (mu == Partition({3}) ? 1 : 0));
    }
    // agreement with an explicit double fold
    for (const Partition& lambda : enumerate_partitions(9)) {
        Bint direct = multi_lr(
            lambda, {Partition({2, 1}), Partition({2, 1}), Partition({2, 1})});
        Bint folded = 0;
        for (const Partition& sigma : enumerate_partitions(6))
            folded += lr_coefficient(sigma, Partition({2, 1}), Partition({2, 1})) *
                      lr_coefficient(lambda, sigma, Partition({2, 1}));
        CHECK(direct == folded);
    }
}

TEST_CASE("outer decomposition support and dimension count") {
    auto two_boxes = outer_decompose({Partition({1}), Partition({1})});
    REQUIRE(two_boxes.size() == 2);
    CHECK(two_boxes.at(Partition({2})) == 1);
    CHECK(two_boxes.at(Partition({1, 1})) == 1);

    auto mixed = outer_decompose({Partition({2}), Partition({1, 1})});
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.at(Partition({3, 1})) == 1);
    CHECK(mixed.at(Partition({2, 1, 1})) == 1);

    // dimension bookkeeping: sum of coeff * dim equals the induced degree
    std::vector<std::vector<Partition>> inputs = {
        {Partition({2, 1}), Partition({2, 1})},
        {Partition({3, 1}), Partition({2, 2})},
        {Partition({2, 1}), Partition({2}), Partition({1, 1})},
    };
    for (const auto& mus : inputs) {
        int total = 0;
        Bint expect = 1;
        for (const Partition& mu : mus) {
            total += mu.sum();
            expect *= dimension(mu);
        }
        expect *= factorial(total);
        for (const Partition& mu : mus) expect /= factorial(mu.sum());
        Bint got = 0;
        for (const auto& [lambda, c] : outer_decompose(mus)) {
            CHECK(lambda.first() <= [&] {
                int bound = 0;
                for (const Partition& mu : mus) bound += mu.first();
                return bound;
            }());
            got += c * dimension(lambda);
        }
        CHECK(got == expect);
    }
}

TEST_CASE("star products") {
    // identity element
    auto singles = star_product({Partition()}, {Partition({2, 1}), Partition({3})});
    CHECK(singles == std::vector<Partition>{Partition({3}), Partition({2, 1})});

    // one-row factors give the two-row strip set
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            auto got = star_product({Partition({n})}, {Partition({m})});
            std::vector<Partition> want;
            for (const Partition& lambda : enumerate_partitions(n + m))
                if (lambda.length() <= 2 && lambda.row(1) <= std::min(n, m))
                    want.push_back(lambda);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }

    // box sets multiply to box sets
    auto got = star_product(BoxSpec{4, 3}.members(), BoxSpec{5, 4}.members());
    auto want = BoxSpec{9, 7}.members();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    CHECK_THROWS_AS(star_product({Partition({2}), Partition({1})}, {Partition()}),
                    std::invalid_argument);
}
