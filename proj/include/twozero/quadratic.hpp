// Exact arithmetic in the ring of integers Z[(1+sqrt(-p1))/2] of the
// imaginary quadratic field Q(sqrt(-p1)), p1 prime, p1 = 3 (mod 4).
// Values are stored as (a + b*sqrt(-p1))/2 with a = b (mod 2).
#pragma once

#include <complex>
#include <cstdint>

#include "twozero/cyclotomic.hpp"
#include "twozero/numtheory.hpp"

namespace twozero {

class QuadInt {
   public:
    QuadInt(std::uint64_t p1, BigInt a, BigInt b);

    std::uint64_t p1() const { return p1_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    QuadInt operator*(const QuadInt& o) const;
    QuadInt operator+(const QuadInt& o) const;
    QuadInt pow(std::uint64_t s) const;  // s >= 0, pow(x, 0) = 1
    bool operator==(const QuadInt& o) const = default;

    BigInt norm() const;  // (a^2 + p1 b^2)/4, always a nonnegative integer
    QuadInt conj() const { return QuadInt(p1_, a_, -b_); }
    QuadInt flip_b() const { return conj(); }

    std::complex<double> embed() const;  // sqrt(-p1) on the upper half-plane

    // Exact image in Z[zeta_M] for p1 | M, via sqrt(-p1) = 1 + 2*sum_{j in QR} zeta_{p1}^j.
    CyclotomicInt to_cyclotomic(unsigned M) const;

   private:
    std::uint64_t p1_;
    BigInt a_, b_;
};

}  // namespace twozero
