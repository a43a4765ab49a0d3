#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sylow/blocks.hpp"
#include "sylow/cyclotomic.hpp"
#include "sylow/wreath.hpp"

using namespace sylow;

TEST_CASE("cyclotomic ring basics") {
    // zeta^order = 1, and the reduction is idempotent under products
    std::mt19937 rng(11);
    for (auto [p, m] : {std::pair<int, int>{3, 2}, {3, 3}, {5, 2}, {2, 2}}) {
        int order = CycI::order_of(p, m);
        CycI z = CycI::zeta_pow(p, m, 1);
        CycI acc = CycI::integer(p, m, 1);
        for (int i = 0; i < order; ++i) acc = acc * z;
        CHECK(acc == CycI::integer(p, m, 1));
        // primitive p-th roots sum to -1
        CycI sum(p, m);
        for (int c = 1; c < p; ++c)
            sum += CycI::zeta_pow(p, m, (long long)c * (order / p));
        CHECK(sum == CycI::integer(p, m, -1));
        std::uniform_int_distribution<int> coeff(-4, 4);
        for (int trial = 0; trial < 50; ++trial) {
            CycI a(p, m), b(p, m);
            for (int i = 0; i < order; ++i) {
                a.coeff(size_t(i)) = coeff(rng);
                b.coeff(size_t(i)) = coeff(rng);
            }
            a.reduce();
            b.reduce();
            CycI ab = a * b;
            CHECK(ab == b * a);
            // conjugation is a ring map
            CHECK(ab.conj() == a.conj() * b.conj());
            // norm-like product is fixed by conjugation
            CycI na = a * a.conj();
            CHECK(na == na.conj());
        }
    }
    // embedding sends the small root to a power of the big one
    CycI small = CycI::zeta_pow(3, 1, 1);
    CHECK(small.embed_into(3) == CycI::zeta_pow(3, 3, 9));
}

TEST_CASE("level sizes and degrees") {
    WreathTower t3(3);
    CHECK(t3.level(1).irr.size() == 3);
    CHECK(t3.level(2).irr.size() == 17);
    CHECK(t3.level(3).irr.size() == 1683);
    CHECK(t3.level(2).classes.size() == 17);
    CHECK(t3.level(3).classes.size() == 1683);
    CHECK(t3.level(3).group_order == Bint(1594323));  // 3^13

    int base2 = 0, twisted2 = 0;
    for (const ClassLabel& c : t3.level(2).classes)
        (c.kind == ClassLabel::Kind::base ? base2 : twisted2) += 1;
    CHECK(base2 == 11);
    CHECK(twisted2 == 6);

    // degree census at level 2: nine linears, eight of degree 3
    int linears = 0, cubics = 0;
    for (const IrrLabel& lab : t3.level(2).irr) {
        if (lab.degree_exponent == 0) ++linears;
        if (lab.degree_exponent == 1) ++cubics;
    }
    CHECK(linears == 9);
    CHECK(cubics == 8);
    CHECK(t3.level(2).labels_of_degree(5).empty());
    CHECK(t3.level(3).labels_of_degree(4).size() >= 3);

    WreathTower t5(5);
    CHECK(t5.level(2).irr.size() == 649);
    CHECK_THROWS_AS(t5.level(3), ScopeError);

    WreathTower t2(2);
    CHECK(t2.level(2).irr.size() == 5);
}

TEST_CASE("level-1 classes have the cyclic shape") {
    WreathTower t3(3);
    const WreathLevel& lvl = t3.level(1);
    REQUIRE(lvl.classes.size() == 3);
    CHECK(lvl.classes[0].cycle_type == Partition({1, 1, 1}));
    CHECK(lvl.classes[1].cycle_type == Partition({3}));
    CHECK(lvl.classes[2].cycle_type == Partition({3}));
    for (const ClassLabel& c : lvl.classes) CHECK(c.size == 1);
}

TEST_CASE("inflated top characters take root-of-unity values") {
    WreathTower t3(3);
    const WreathLevel& lvl = t3.level(2);
    // X(trivial; psi_1) at a twisted class with top power 1
    int irr = lvl.extension_at(0, 1);
    int cls = lvl.twisted_at(0, 1);
    CHECK(t3.value(2, irr, cls) == CycI::zeta_pow(3, 2, 3));  // zeta_3
    // at level 1 directly
    CHECK(t3.value(1, t3.level(1).extension_at(0, 1), t3.level(1).twisted_at(0, 1)) ==
          CycI::zeta_pow(3, 1, 1));
}

TEST_CASE("identity values are degrees at sampled labels") {
    WreathTower t3(3);
    std::mt19937 rng(5);
    for (int m : {2, 3}) {
        const WreathLevel& lvl = t3.level(m);
        std::uniform_int_distribution<size_t> pick(0, lvl.irr.size() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            size_t i = pick(rng);
            CycI v = t3.value(m, int(i), 0);
            long long expect = 1;
            for (int e = 0; e < lvl.irr[i].degree_exponent; ++e) expect *= 3;
            CHECK(v.is_rational());
            CHECK(v.rational() == expect);
        }
    }
}

TEST_CASE("even permutations only, odd primes") {
    WreathTower t3(3);
    for (int m = 0; m <= 3; ++m)
        for (const ClassLabel& c : t3.level(m).classes) {
            int moved = c.cycle_type.sum() - c.cycle_type.length();
            CHECK(moved % 2 == 0);
        }
}

TEST_CASE("column orthogonality of the full level-2 table") {
    WreathTower t3(3);
    const WreathLevel& lvl = t3.level(2);
    const auto& table = t3.table(2);
    for (size_t c = 0; c < lvl.classes.size(); ++c)
        for (size_t d = 0; d < lvl.classes.size(); ++d) {
            CycI acc(3, 2);
            for (size_t i = 0; i < lvl.irr.size(); ++i)
                acc += table[i][c] * table[i][d].conj();
            Bint expect = c == d ? lvl.group_order / lvl.classes[c].size : Bint(0);
            REQUIRE(acc.is_rational());
            CHECK(Bint(acc.rational()) == expect);
        }
}

TEST_CASE("full verification at the small levels") {
    WreathTower t3(3);
    for (int m : {0, 1, 2}) {
        TableCheck check = verify_table(t3, m);
        INFO("level ", m);
        for (const std::string& f : check.failures) INFO(f);
        CHECK(check.pass());
    }
    WreathTower t2(2);
    TableCheck check2 = verify_table(t2, 2);
    CHECK(check2.pass());

    WreathTower t5(5);
    TableCheck check5 = verify_table(t5, 2, 99, 100);
    CHECK(check5.pass());
    CHECK(check5.label_count == 649);
}
