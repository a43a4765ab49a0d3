#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylow/predict.hpp"

using namespace sylow;

TEST_CASE("prime-power sides: pinned paper values") {
    CHECK(*box_side_prime_power_recursive(4, 4, 3) == 79);
    CHECK(*box_side_prime_power_recursive(3, 3, 3) == 25);
    CHECK(*box_side_prime_power_recursive(5, 0, 3) == 243);
    CHECK(*box_side_prime_power_closed(4, 8, 3) == 77);
    CHECK(*box_side_prime_power_closed(4, 13, 3) == 72);
    CHECK(*box_side_prime_power_closed(3, 1, 3) == 26);
    CHECK_FALSE(box_side_prime_power_recursive(3, 5, 3).has_value());
    CHECK_FALSE(box_side_prime_power_closed(2, 2, 3).has_value());
}

TEST_CASE("closed form equals recursion for prime powers") {
    for (int p : {3, 5}) {
        int max_e = 1;
        long long power = p;
        while (power * p <= 2187) {
            power *= p;
            ++max_e;
        }
        for (int e = 1; e <= max_e; ++e) {
            int alpha = max_degree_exponent_prime_power(e, p);
            long long prev = 0;
            for (int k = 0; k <= alpha; ++k) {
                auto rec = box_side_prime_power_recursive(e, k, p);
                auto closed = box_side_prime_power_closed(e, k, p);
                REQUIRE(rec.has_value());
                CHECK(rec == closed);
                long long pe = 1;
                for (int i = 0; i < e; ++i) pe *= p;
                CHECK(*rec >= (pe + 1) / 2);
                CHECK(*rec <= pe);
                if (k > 0) {
                    CHECK(*rec <= prev);
                    CHECK(*rec >= prev - 1);
                }
                prev = *rec;
            }
        }
    }
}

TEST_CASE("maximal-exponent box uses the quarter-square shrink") {
    for (int e = 2; e <= 7; ++e) {
        long long pe = 1, pe2 = 1;
        for (int i = 0; i < e; ++i) pe *= 3;
        for (int i = 0; i < e - 2; ++i) pe2 *= 3;
        int alpha = max_degree_exponent_prime_power(e, 3);
        CHECK(*box_side_prime_power_closed(e, alpha, 3) == pe - pe2);
    }
}

TEST_CASE("general sides: pinned paper values") {
    CHECK(*box_side_recursive(39, 2, 3) == 38);
    CHECK(*box_side_recursive(108, 17, 3) == 96);
    CHECK(*box_side_recursive(12, 1, 3) == 11);
    CHECK(*box_side_closed(39, 5, 3) == 35);
    CHECK(*box_side_closed(54, 6, 3) == 50);
    CHECK(*box_side_closed(30, 4, 3) == 27);
    CHECK(*box_side_closed(36, 5, 3) == 32);
}

TEST_CASE("closed form equals recursion for general n") {
    for (long long n = 1; n <= 250; ++n) {
        int alpha = max_degree_exponent(n, 3);
        for (int k = 0; k <= alpha; ++k)
            CHECK(box_side_closed(n, k, 3) == box_side_recursive(n, k, 3));
        CHECK_FALSE(box_side_closed(n, alpha + 1, 3).has_value());
    }
}

TEST_CASE("adding a fixed prime part shifts every side by that part") {
    // the closed form gives side(39, k) = side(36, k) + 3; the printed
    // example in the source text carries the opposite sign
    for (int k = 1; k <= 5; ++k)
        CHECK(*box_side_closed(39, k, 3) == *box_side_closed(36, k, 3) + 3);
    for (int k = 1; k <= 4; ++k)
        CHECK(*box_side_closed(33, k, 3) == *box_side_closed(30, k, 3) + 3);
}

TEST_CASE("predictions") {
    CHECK(predicted_box(9, 1, 3).to_string() == "B_9(8)");
    CHECK(predicted_box(81, 6, 3).to_string() == "B_81(78)");
    CHECK(predicted_box(36, 5, 3).to_string() == "B_36(32)");
    CHECK(predicted_box(81, 4, 3).to_string() == "B_81(79)");
    CHECK(predicted_box(9, 2, 3).empty());
    CHECK(predicted_box(8, 0, 3).to_string() == "B_8(8)");
    CHECK(predicted_box(8, 1, 3).empty());
    CHECK_THROWS_AS(predicted_box(4, 1, 2), std::invalid_argument);
}

TEST_CASE("coverage ratios") {
    CHECK(omega_ratio(12, 3) == Brat(75, 77));
    CHECK(omega_ratio(8, 3) == 1);
    CHECK(omega_ratio(200, 3) > omega_ratio(9, 3));
}

TEST_CASE("table rendering formats") {
    std::string csv = render_table({9}, 2, 3, TableFormat::csv);
    CHECK(csv == "n,k,T,empty\n9,0,9,0\n9,1,8,0\n9,2,,1\n");
    std::string md = render_table({9}, 2, 3, TableFormat::markdown);
    CHECK(md.find("B_9(8)") != std::string::npos);
    CHECK(md.find("∅") != std::string::npos);
    std::string js = render_table({9}, 1, 3, TableFormat::json);
    CHECK(js.find("{\"n\":9,\"k\":1,\"side\":8}") != std::string::npos);
}

TEST_CASE("exponent tuple enumeration") {
    auto tuples = bounded_contents(3, 3, 4);
    CHECK(tuples.size() == 3);
    CHECK(bounded_contents(0, 3, 4) ==
          std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(bounded_contents(13, 3, 4).size() == 0);
    CHECK(bounded_contents(12, 3, 4) == std::vector<std::vector<int>>{{4, 4, 4}});
}
