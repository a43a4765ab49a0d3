#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>


#include "sylow/partition.hpp"

using namespace sylow;

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four.front() == Partition({4}));
    CHECK(four.back() == Partition({1, 1, 1, 1}));
    CHECK(enumerate_partitions(9).size() == 30);
    // reverse-lexicographic: strictly decreasing part lists
    auto nine = enumerate_partitions(9);
    for (size_t i = 0; i + 1 < nine.size(); ++i)
        CHECK(nine[i].parts() > nine[i + 1].parts());
}

TEST_CASE("conjugation") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    for (int n = 0; n <= 20; n += 5)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK(lambda.conjugate().conjugate() == lambda);
}

TEST_CASE("box membership") {
    CHECK(in_box(Partition({2, 2}), 2));
    CHECK_FALSE(in_box(Partition({3, 1}), 2));
    CHECK_FALSE(in_box(Partition({9}), 8));
    for (const Partition& lambda : enumerate_partitions(12))
        for (int t = 0; t <= 12; ++t)
            CHECK(in_box(lambda, t) == in_box(lambda.conjugate(), t));
}

TEST_CASE("box counting") {
    CHECK(count_in_box(4, 2) == 1);
    CHECK(count_in_box(9, 8) == 28);
    CHECK(partition_count(12) == 77);
    CHECK(partition_count(25) == 1958);
    CHECK(partition_count(27) == 3010);
    CHECK(partition_count(200) == Bint("3972999029388"));
    for (int n = 0; n <= 18; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(partition_count(n) == Bint(all.size()));
        for (int t = 0; t <= n; ++t) {
            size_t direct = 0;
            for (const Partition& lambda : all)
                if (lambda.fits_in_box(t)) ++direct;
            CHECK(count_in_box(n, t) == Bint(direct));
        }
    }
}

TEST_CASE("p-adic exponent lists") {
    CHECK(p_adic_exponents(39, 3) == std::vector<int>{3, 2, 1});
    CHECK(p_adic_exponents(12, 3) == std::vector<int>{2, 1});
    CHECK(p_adic_exponents(81, 3) == std::vector<int>{4});
    CHECK(p_adic_exponents(33, 3) == std::vector<int>{3, 1, 1});
    CHECK_THROWS_AS(p_adic_exponents(10, 4), std::invalid_argument);
    for (int p : {3, 5, 7})
        for (long long n = 1; n <= 10000; ++n) {
            long long total = 0;
            int prev = 1 << 20;
            int run = 0;
            for (int e : p_adic_exponents(n, p)) {
                CHECK(e <= prev);
                run = e == prev ? run + 1 : 1;
                CHECK(run <= p - 1);
                prev = e;
                long long power = 1;
                for (int i = 0; i < e; ++i) power *= p;
                total += power;
            }
            CHECK(total == n);
        }
}

TEST_CASE("partition literals") {
    CHECK(parse_partition("8,1") == Partition({8, 1}));
    CHECK(parse_partition("2^3,1") == Partition({2, 2, 2, 1}));
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition("0") == Partition());
    CHECK(parse_partition("(3,1)") == Partition({3, 1}));
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3^0"), std::invalid_argument);
}

TEST_CASE("invalid partitions rejected") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}
