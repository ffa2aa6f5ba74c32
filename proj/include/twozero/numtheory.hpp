// Arbitrary-precision and machine-word number theory helpers shared by the
// whole library: primality, integer factorization, multiplicative orders,
// Legendre symbols.  All big-integer arithmetic is exact (GMP).
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace twozero {

using BigInt = mpz_class;
using BigRat = mpq_class;

// One prime power in a factorization, sorted ascending by prime.
struct PrimePower {
    BigInt prime;
    unsigned exponent;
};

bool is_prime_u64(std::uint64_t n);
bool is_prime(const BigInt& n);

// Full factorization via trial division + Brent's cycle-finding rho.
// Deterministic: same input always yields the same (sorted) output.
std::vector<PrimePower> factorize(const BigInt& n);

// Distinct primes of n, ascending.
std::vector<BigInt> prime_divisors(const BigInt& n);

BigInt pow_big(const BigInt& base, unsigned long exponent);

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m);  // gcd(a,m) = 1

// Multiplicative order of a modulo m (gcd(a,m) = 1, m >= 2).
std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t m);

std::uint64_t euler_phi_u64(std::uint64_t n);
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);  // ascending

// Legendre symbol (a|p) for odd prime p: -1, 0 or +1.
int legendre_symbol(const BigInt& a, const BigInt& p);

// Value of the n-th cyclotomic polynomial at an integer argument,
// computed by exact division of x^n - 1 values (no polynomial arithmetic).
BigInt cyclotomic_value(unsigned n, const BigInt& x);

}  // namespace twozero
