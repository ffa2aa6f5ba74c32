#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twozero/characters.hpp"
#include "twozero/gauss_index2.hpp"

using namespace twozero;

TEST_CASE("class numbers") {
    CHECK(class_number(11) == 1);
    CHECK(class_number(7) == 1);
    CHECK(class_number(23) == 3);
    CHECK(class_number(19) == 1);
    CHECK(class_number(47) == 5);
    for (std::uint64_t p1 = 7; p1 < 200; p1 += 4)
        if (is_prime_u64(p1)) CHECK(class_number(p1) == class_number_legendre(p1));
    CHECK_THROWS_AS(class_number(3), std::invalid_argument);
    CHECK_THROWS_AS(class_number(13), std::invalid_argument);
}

TEST_CASE("index-2 condition") {
    CHECK(is_index2_pair(3, 11));
    CHECK(is_index2_pair(11, 7));
    CHECK(is_index2_pair(5, 19));
    CHECK(is_index2_pair(23, 7));
    CHECK(is_index2_pair(2, 7));
    CHECK(!is_index2_pair(3, 7));   // ord_7(3) = 6
    CHECK(!is_index2_pair(2, 11));  // ord_11(2) = 10
    CHECK(!is_index2_pair(3, 13));  // 13 = 1 (mod 4)
}

TEST_CASE("normalized Diophantine solutions 4p^c = a^2 + p1 b^2") {
    Diophantine d = solve_diophantine(3, 11, 1);
    CHECK(d.a == 1);
    CHECK(d.b == 1);
    d = solve_diophantine(11, 7, 1);
    CHECK(d.a == -4);
    CHECK(d.b == 2);
    d = solve_diophantine(5, 19, 1);
    CHECK(d.a == 1);
    CHECK(d.b == 1);
    d = solve_diophantine(23, 7, 1);
    CHECK(d.a == -8);
    CHECK(d.b == 2);
    CHECK_THROWS_AS(solve_diophantine(3, 7, 1), std::invalid_argument);
}

TEST_CASE("closed-form index-2 Gauss sums at ell = 1") {
    Index2Gauss g = index2_gauss(3, 11, 1, 0);
    CHECK(g.prefactor_exp == 2);
    CHECK(g.reduced == QuadInt(11, 1, 1));
    g = index2_gauss(11, 7, 1, 0);
    CHECK(g.prefactor_exp == 1);
    CHECK(g.reduced == QuadInt(7, -4, 2));
    // 11^1 * (-4 + 2 sqrt(-7))/2 = 11 * (-2 + sqrt(-7))
    CHECK(to_cyclotomic(g, 77) == QuadInt(7, -4, 2).to_cyclotomic(77) * BigInt(11));

    // exact equality against brute force over F_243, whole orbit
    FieldCtx F(3, 5);
    GaussTable table = gauss_brute_all(F, 11);
    Index2Gauss closed = index2_gauss(3, 11, 1, 0);
    CyclotomicInt plus = to_cyclotomic(closed, 33);
    Index2Gauss conj = closed;
    conj.reduced = closed.reduced.conj();
    CyclotomicInt minus = to_cyclotomic(conj, 33);
    REQUIRE((table.value[1] == plus || table.value[1] == minus));
    for (std::uint64_t j : {3ull, 9ull, 5ull, 4ull})  // <3> mod 11
        CHECK(table.value[j] == table.value[1]);
    for (std::uint64_t j : {2ull, 6ull, 7ull, 8ull, 10ull})
        CHECK(table.value[j] == (table.value[1] == plus ? minus : plus));
}

TEST_CASE("theorem also covers prime-power orders: N = 49 over F_2^21") {
    // ord_49(2) = 21 = phi(49)/2, so (2, 7) is an index-2 pair at ell = 2.
    Index2Gauss g0 = index2_gauss(2, 7, 2, 0);
    Index2Gauss g1 = index2_gauss(2, 7, 2, 1);
    CHECK(g0.prefactor_exp == 10);  // (21 - 1)/2
    CHECK(g1.prefactor_exp == 7);   // (21 - 7)/2
    CHECK(g0.reduced == QuadInt(7, -1, 1));
    CHECK(g1.reduced == QuadInt(7, 13, 7));  // ((-1+sqrt(-7))/2)^7, norm 2^7

    FieldCtx F(2, 21);
    GaussTable table = gauss_brute_all(F, 49);
    for (const Index2Gauss* g : {&g0, &g1}) {
        std::uint64_t j = (g->s_idx == 0) ? 1 : 7;
        unsigned m = (g->s_idx == 0) ? 98u : 14u;
        CyclotomicInt brute =
            (g->s_idx == 0) ? table.value[j] : gauss_brute(F, 7, 1);
        CyclotomicInt plus = to_cyclotomic(*g, m);
        Index2Gauss c = *g;
        c.reduced = g->reduced.conj();
        CyclotomicInt minus = to_cyclotomic(c, m);
        CHECK((brute == plus || brute == minus));
    }
}

TEST_CASE("Davenport-Hasse lift") {
    SUBCASE("s = 1 is the identity") {
        CyclotomicInt g = gauss_brute(FieldCtx(3, 2), 4, 1);
        CHECK(dh_lift(g, 1) == g);
    }
    SUBCASE("brute-force lift F_9 -> F_81 at N = 4") {
        TowerCtx tower(3, 2, 2);
        FieldElem norm_gen = tower.norm(tower.big().generator());
        std::uint64_t w = CosetIndexer(tower.subfield(), 4).index(norm_gen);
        CyclotomicInt lifted = gauss_brute(tower.big(), 4, w);
        CyclotomicInt expect = dh_lift(gauss_brute(tower.subfield(), 4, 1), 2);
        CHECK(lifted == expect);
    }
    SUBCASE("lifting the (3,11) value to s = 11 reproduces (67, 253)") {
        LiftedGauss l = lifted_index2(3, 11, 11);
        CHECK(l.sign == +1);
        CHECK(l.prefactor_exp == 22);
        CHECK(l.reduced == QuadInt(11, 67, 253));
        // same value through the generic cyclotomic lift of the base case
        CyclotomicInt base = to_cyclotomic(index2_gauss(3, 11, 1, 0), 11);
        CHECK(dh_lift(base, 11) == to_cyclotomic(l, 11));
    }
}

TEST_CASE("lifted closed forms") {
    LiftedGauss l = lifted_index2(3, 11, 1);
    CHECK(l.prefactor_exp == 2);
    CHECK(l.reduced == QuadInt(11, 1, 1));

    l = lifted_index2(11, 7, 2);
    CHECK(l.prefactor_exp == 2);
    CHECK(l.sign == -1);
    CHECK(l.reduced == QuadInt(7, -6, -8));
    CHECK(l.reduced.norm() == 121);  // 4 * 11^2 / 4

    // norm identity a_s^2 + p1 b_s^2 = 4 p^{cs} for a range of s
    for (unsigned s = 1; s <= 8; ++s) {
        LiftedGauss ls = lifted_index2(5, 19, s);
        CHECK(ls.reduced.norm() == pow_big(BigInt(5), s));
    }
}

TEST_CASE("calibration pins the sign at enumerable lifts") {
    SUBCASE("F_3^5 inside F_3^10") {
        TowerCtx tower(3, 5, 2);
        int eps = calibrate_b_sign(tower, 11);
        LiftedGauss l = lifted_index2(3, 11, 2, eps);
        CHECK(to_cyclotomic(l, 33) == gauss_brute(tower.big(), 11, 1));
    }
    SUBCASE("F_11^3 inside F_11^6") {
        TowerCtx tower(11, 3, 2);
        int eps = calibrate_b_sign(tower, 7);
        LiftedGauss l = lifted_index2(11, 7, 2, eps);
        CHECK(to_cyclotomic(l, 77) == gauss_brute(tower.big(), 7, 1));
    }
}
