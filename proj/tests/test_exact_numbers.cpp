#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <complex>

#include "twozero/cyclotomic.hpp"
#include "twozero/quadratic.hpp"

using namespace twozero;

namespace {

CyclotomicInt random_cyc(unsigned m, gmp_randclass& rng) {
    std::vector<BigInt> counts(m, 0);
    for (unsigned i = 0; i < m; ++i) counts[i] = rng.get_z_range(21) - 10;
    return CyclotomicInt::from_root_counts(m, counts);
}

double rel_err(std::complex<double> got, std::complex<double> want) {
    double scale = std::max(1.0, std::abs(want));
    return std::abs(got - want) / scale;
}

}  // namespace

TEST_CASE("cyclotomic ring basics") {
    CHECK(CyclotomicInt::root_power(4, 1) * CyclotomicInt::root_power(4, 1) ==
          CyclotomicInt::integer(4, -1));
    CyclotomicInt x = CyclotomicInt::root_power(12, 5) + CyclotomicInt::integer(12, 3);
    CHECK(x * CyclotomicInt::integer(12, 1) == x);
    // (1 + zeta_3)(1 + zeta_3^2) = 1
    CyclotomicInt one3 = CyclotomicInt::integer(3, 1);
    CHECK((one3 + CyclotomicInt::root_power(3, 1)) * (one3 + CyclotomicInt::root_power(3, 2)) == one3);
    // zeta_m^m = 1
    for (unsigned m : {5u, 8u, 12u, 15u})
        CHECK(CyclotomicInt::root_power(m, m) == CyclotomicInt::integer(m, 1));
    CHECK_THROWS_AS(CyclotomicInt::integer(5, 1) + CyclotomicInt::integer(7, 1), std::invalid_argument);
}

TEST_CASE("galois action") {
    CHECK(CyclotomicInt::root_power(7, 3).galois(1) == CyclotomicInt::root_power(7, 3));
    for (unsigned m : {5u, 7u, 12u})
        CHECK(CyclotomicInt::root_power(m, 1).galois(m - 1) == CyclotomicInt::root_power(m, m - 1));
    CHECK_THROWS_AS(CyclotomicInt::root_power(12, 1).galois(4), std::invalid_argument);

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(42ul);
    for (unsigned m : {5u, 7u, 12u, 15u}) {
        for (std::uint64_t t = 1; t < m; ++t) {
            if (std::gcd(static_cast<std::uint64_t>(m), t) != 1) continue;
            CyclotomicInt a = random_cyc(m, rng), b = random_cyc(m, rng);
            CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
            CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
        }
    }
}

TEST_CASE("ring axioms on random samples") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(7ul);
    for (unsigned m : {7u, 12u}) {
        for (int i = 0; i < 10; ++i) {
            CyclotomicInt a = random_cyc(m, rng), b = random_cyc(m, rng), c = random_cyc(m, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("complex embedding") {
    CHECK(rel_err(CyclotomicInt::integer(5, 1).embed(), {1.0, 0.0}) < 1e-12);
    CHECK(rel_err(CyclotomicInt::root_power(4, 1).embed(), {0.0, 1.0}) < 1e-12);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(11ul);
    for (unsigned m : {7u, 16u, 21u}) {
        for (int i = 0; i < 10; ++i) {
            CyclotomicInt a = random_cyc(m, rng), b = random_cyc(m, rng);
            CHECK(rel_err((a * b).embed(), a.embed() * b.embed()) < 1e-9);
        }
    }
}

TEST_CASE("conductor embedding preserves values") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(13ul);
    CyclotomicInt a = random_cyc(5, rng);
    CyclotomicInt lifted = a.to_conductor(15);
    CHECK(rel_err(lifted.embed(), a.embed()) < 1e-9);
    CHECK(CyclotomicInt::root_power(5, 2).to_conductor(15) == CyclotomicInt::root_power(15, 6));
    CHECK_THROWS_AS(a.to_conductor(12), std::invalid_argument);
}

TEST_CASE("rationality detection") {
    CHECK(CyclotomicInt::integer(7, -5).is_rational());
    CHECK(CyclotomicInt::integer(7, -5).rational_value() == -5);
    CHECK(!CyclotomicInt::root_power(7, 1).is_rational());
    CHECK_THROWS_AS(CyclotomicInt::root_power(7, 1).rational_value(), std::logic_error);
    // sum over all nonzero powers of zeta_7 is -1
    CyclotomicInt s(7);
    for (unsigned i = 1; i < 7; ++i) s = s + CyclotomicInt::root_power(7, i);
    CHECK(s == CyclotomicInt::integer(7, -1));
}

TEST_CASE("quadratic ring arithmetic") {
    QuadInt z(11, 1, 1);  // (1 + sqrt(-11))/2
    SUBCASE("powers by the hand recurrence z^2 = z - 3") {
        CHECK(z * z == QuadInt(11, -5, 1));
        CHECK(z.pow(1) == z);
        CHECK(z.pow(5) == QuadInt(11, 31, 1));
        CHECK(z.pow(11) == QuadInt(11, 67, 253));
    }
    SUBCASE("identity and parity") {
        QuadInt one(11, 2, 0);
        CHECK(z * one == z);
        CHECK_THROWS_AS(QuadInt(11, 1, 2), std::invalid_argument);   // parity breach
        CHECK_THROWS_AS(QuadInt(13, 1, 1), std::invalid_argument);   // 13 = 1 (mod 4)
        CHECK_THROWS_AS(z * QuadInt(7, 1, 1), std::invalid_argument);  // p1 mismatch
    }
    SUBCASE("norms") {
        CHECK(z.norm() == 3);  // (1 + 11)/4
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(3ul);
        for (int i = 0; i < 20; ++i) {
            BigInt a1 = rng.get_z_range(41) - 20, b1 = rng.get_z_range(41) - 20;
            BigInt a2 = rng.get_z_range(41) - 20, b2 = rng.get_z_range(41) - 20;
            if ((a1 - b1) % 2 != 0) a1 += 1;
            if ((a2 - b2) % 2 != 0) a2 += 1;
            QuadInt x(19, a1, b1), y(19, a2, b2);
            CHECK((x * y).norm() == x.norm() * y.norm());
            unsigned s = 1 + static_cast<unsigned>(BigInt(rng.get_z_range(5)).get_ui());
            BigInt ns;
            mpz_pow_ui(ns.get_mpz_t(), x.norm().get_mpz_t(), s);
            CHECK(x.pow(s).norm() == ns);
        }
    }
    SUBCASE("power additivity") {
        for (unsigned s = 0; s <= 4; ++s)
            for (unsigned t = 0; t <= 4; ++t) CHECK(z.pow(s + t) == z.pow(s) * z.pow(t));
    }
    SUBCASE("embedding") {
        CHECK(rel_err(z.embed(), {0.5, 1.6583123951777}) < 1e-9);
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(17ul);
        for (int i = 0; i < 20; ++i) {
            BigInt a = rng.get_z_range(201) - 100, b = rng.get_z_range(201) - 100;
            if ((a - b) % 2 != 0) a += 1;
            QuadInt x(11, a, b);
            double n4 = std::norm(x.embed()) * 4.0;
            double want = x.norm().get_d() * 4.0;
            CHECK(std::abs(n4 - want) <= 1e-6 * std::max(1.0, want));
        }
    }
    SUBCASE("exact cyclotomic image") {
        // sqrt(-11) squared must be exactly -11 inside Z[zeta_11]
        QuadInt root(11, 0, 2);
        CyclotomicInt s = root.to_cyclotomic(11);
        CHECK(s * s == CyclotomicInt::integer(11, -11));
        CHECK(rel_err(z.to_cyclotomic(11).embed(), z.embed()) < 1e-9);
        CHECK(rel_err(z.to_cyclotomic(33).embed(), z.embed()) < 1e-9);
    }
}
