#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylow/blocks.hpp"
#include "sylow/partition.hpp"

using namespace sylow;

TEST_CASE("maximal degree exponents") {
    CHECK(max_degree_exponent(1, 3) == 0);
    CHECK(max_degree_exponent(3, 3) == 0);
    CHECK(max_degree_exponent(12, 3) == 1);
    CHECK(max_degree_exponent(27, 3) == 4);
    CHECK(max_degree_exponent(81, 3) == 13);
    CHECK(max_degree_exponent(54, 3) == 8);
    CHECK(max_degree_exponent(108, 3) == 17);
    CHECK(max_degree_exponent(25, 5) == 1);
    // additive formula vs the factorial valuation runs inside the call;
    // sweep a range to exercise it
    for (int p : {3, 5, 7})
        for (long long n = 1; n <= 5000; ++n) CHECK(max_degree_exponent(n, p) >= 0);
    CHECK(degree_exponent_range(27, 3) == Interval{0, 4});
    CHECK(degree_exponent_range(12, 3) == Interval{0, 1});
    CHECK(degree_exponent_range(8, 3) == Interval{0, 0});
}

TEST_CASE("block lengths for prime powers") {
    CHECK(block_length_prime_power(4, 1, 3) == 3);
    CHECK(block_length_prime_power(4, 2, 3) == 2);
    CHECK(block_length_prime_power(4, 3, 3) == 2);
    for (int x = 4; x <= 9; ++x) CHECK(block_length_prime_power(4, x, 3) == 1);
    for (int p : {3, 5, 7}) CHECK(block_length_prime_power(2, 1, p) == 1);
    CHECK_THROWS_AS(block_length_prime_power(4, 10, 3), std::out_of_range);
    CHECK_THROWS_AS(block_length_prime_power(1, 1, 3), std::invalid_argument);
}

TEST_CASE("prime-power blocks") {
    PrimePowerBlocks b4 = prime_power_blocks(4, 3);
    REQUIRE(b4.blocks.size() == 9);
    CHECK(b4.blocks[0] == Interval{1, 3});
    CHECK(b4.blocks[1] == Interval{4, 5});
    CHECK(b4.blocks[2] == Interval{6, 7});
    CHECK(b4.blocks[3] == Interval{8, 8});
    CHECK(b4.blocks[8] == Interval{13, 13});

    PrimePowerBlocks b3 = prime_power_blocks(3, 3);
    REQUIRE(b3.blocks.size() == 3);
    CHECK(b3.blocks[0] == Interval{1, 2});
    CHECK(b3.blocks[1] == Interval{3, 3});
    CHECK(b3.blocks[2] == Interval{4, 4});

    for (int p : {3, 5, 7}) {
        PrimePowerBlocks b2 = prime_power_blocks(2, p);
        REQUIRE(b2.blocks.size() == 1);
        CHECK(b2.blocks[0] == Interval{1, 1});
    }

    // lengths sum to the maximal exponent and stay weakly decreasing
    for (int p : {3, 5})
        for (int e = 2; e <= (p == 3 ? 8 : 6); ++e) {
            PrimePowerBlocks b = prime_power_blocks(e, p);
            int total = 0;
            for (size_t i = 0; i < b.lengths.size(); ++i) {
                total += b.lengths[i];
                if (i) CHECK(b.lengths[i] <= b.lengths[i - 1]);
            }
            CHECK(total == max_degree_exponent_prime_power(e, p));
        }
}

TEST_CASE("merged blocks for composite n") {
    MergedBlocks m39 = merged_blocks(39, 3);
    CHECK(m39.block_count == 4);
    REQUIRE(m39.order.size() == 4);
    CHECK(m39.order[0] == std::pair<int, int>{0, 1});
    CHECK(m39.order[1] == std::pair<int, int>{0, 2});
    CHECK(m39.order[2] == std::pair<int, int>{0, 3});
    CHECK(m39.order[3] == std::pair<int, int>{1, 1});
    CHECK(m39.lengths == std::vector<int>{2, 1, 1, 1});
    CHECK(m39.blocks == std::vector<Interval>{{1, 2}, {3, 3}, {4, 4}, {5, 5}});

    MergedBlocks m54 = merged_blocks(54, 3);
    CHECK(m54.block_count == 6);
    CHECK(m54.alpha == 8);
    int total = 0;
    for (int len : m54.lengths) total += len;
    CHECK(total == 8);

    // prime powers agree with the direct construction
    MergedBlocks m81 = merged_blocks(81, 3);
    PrimePowerBlocks b4 = prime_power_blocks(4, 3);
    CHECK(m81.blocks == b4.blocks);
    CHECK(m81.lengths == b4.lengths);

    CHECK_THROWS_AS(merged_blocks(8, 3), std::domain_error);
}

TEST_CASE("merged block invariants up to n = 500") {
    for (long long n = 9; n <= 500; ++n) {
        MergedBlocks mb = merged_blocks(n, 3);
        CHECK(int(mb.blocks.size()) == mb.block_count);
        CHECK(mb.block_count == int(n / 9));
        int cursor = 0;
        for (size_t i = 0; i < mb.blocks.size(); ++i) {
            CHECK(mb.blocks[i].lo == cursor + 1);
            cursor = mb.blocks[i].hi;
            if (i) CHECK(mb.lengths[i] <= mb.lengths[i - 1]);
        }
        CHECK(cursor == mb.alpha);
    }
}

TEST_CASE("block index lookups") {
    CHECK(block_index(81, 3, 7) == 3);
    CHECK(block_index(39, 3, 5) == 4);
    CHECK(block_index(81, 3, 1) == 1);
    CHECK(block_index(54, 3, 1) == 1);
    CHECK_THROWS_AS(block_index(39, 3, 6), std::out_of_range);
    CHECK_THROWS_AS(block_index(39, 3, 0), std::out_of_range);
}
