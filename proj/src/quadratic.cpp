#include "twozero/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace twozero {

QuadInt::QuadInt(std::uint64_t p1, BigInt a, BigInt b)
    : p1_(p1), a_(std::move(a)), b_(std::move(b)) {
    if (p1 % 4 != 3 || !is_prime_u64(p1))
        throw std::invalid_argument("QuadInt: p1 must be a prime = 3 (mod 4)");
    if (mpz_odd_p(BigInt(a_ - b_).get_mpz_t()))
        throw std::invalid_argument("QuadInt: parity a = b (mod 2) violated");
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    if (p1_ != o.p1_) throw std::invalid_argument("QuadInt: p1 mismatch");
    BigInt na = a_ * o.a_ - BigInt(static_cast<unsigned long>(p1_)) * b_ * o.b_;
    BigInt nb = a_ * o.b_ + o.a_ * b_;
    if (mpz_odd_p(na.get_mpz_t()) || mpz_odd_p(nb.get_mpz_t()))
        throw std::logic_error("QuadInt: product numerators not even");
    return QuadInt(p1_, na / 2, nb / 2);
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
    if (p1_ != o.p1_) throw std::invalid_argument("QuadInt: p1 mismatch");
    return QuadInt(p1_, a_ + o.a_, b_ + o.b_);
}

QuadInt QuadInt::pow(std::uint64_t s) const {
    QuadInt result(p1_, 2, 0);  // 1
    QuadInt base = *this;
    while (s) {
        if (s & 1) result = result * base;
        s >>= 1;
        if (s) base = base * base;
    }
    return result;
}

BigInt QuadInt::norm() const {
    BigInt n = a_ * a_ + BigInt(static_cast<unsigned long>(p1_)) * b_ * b_;
    if (n % 4 != 0) throw std::logic_error("QuadInt: norm not divisible by 4");
    return n / 4;
}

std::complex<double> QuadInt::embed() const {
    double sq = std::sqrt(static_cast<double>(p1_));
    return {a_.get_d() / 2.0, b_.get_d() * sq / 2.0};
}

CyclotomicInt QuadInt::to_cyclotomic(unsigned M) const {
    unsigned p1 = static_cast<unsigned>(p1_);
    if (M % p1 != 0) throw std::invalid_argument("QuadInt::to_cyclotomic: p1 must divide M");
    // (a + b*sqrt(-p1))/2 = (a+b)/2 + b * sum_{j nonzero square mod p1} zeta_{p1}^j
    BigInt half = a_ + b_;
    if (mpz_odd_p(half.get_mpz_t())) throw std::logic_error("QuadInt: parity breach");
    half /= 2;
    std::vector<BigInt> counts(p1, 0);
    counts[0] = half;
    for (std::uint64_t t = 1; t <= (p1_ - 1) / 2; ++t) counts[(t * t) % p1_] += b_;
    return CyclotomicInt::from_root_counts(p1, counts).to_conductor(M);
}

}  // namespace twozero
