// Exact arithmetic in rings of cyclotomic integers Z[zeta_m], power-basis
// representation of length phi(m), always reduced modulo the m-th cyclotomic
// polynomial so equality is coefficient-wise.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "twozero/numtheory.hpp"

namespace twozero {

// Integer coefficients of Phi_m, little-endian, length phi(m)+1 (monic).
// Cached and thread-safe.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned m);

class CyclotomicInt {
   public:
    explicit CyclotomicInt(unsigned m);  // zero of conductor m
    static CyclotomicInt integer(unsigned m, const BigInt& value);
    static CyclotomicInt root_power(unsigned m, std::uint64_t k);  // zeta_m^k
    // Value sum_i counts[i] * zeta_m^i given in the redundant basis
    // zeta^0..zeta^(m-1); reduced once (the cheap path for brute-force sums).
    static CyclotomicInt from_root_counts(unsigned m, const std::vector<BigInt>& counts);
    static CyclotomicInt from_root_counts(unsigned m, const std::vector<long long>& counts);

    unsigned conductor() const { return m_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const BigInt& scalar) const;
    bool operator==(const CyclotomicInt& o) const = default;

    bool is_zero() const;
    // Galois action zeta_m -> zeta_m^t, gcd(t, m) = 1.
    CyclotomicInt galois(std::uint64_t t) const;
    CyclotomicInt conj() const;  // complex conjugation, t = m-1

    bool is_rational() const;
    BigInt rational_value() const;  // throws unless is_rational()

    // Same value in a larger ring; M must be a multiple of m.
    CyclotomicInt to_conductor(unsigned M) const;

    std::complex<double> embed() const;  // principal root exp(2*pi*i/m)

   private:
    unsigned m_;
    std::vector<BigInt> c_;  // length phi(m)
};

}  // namespace twozero
