#include "twozero/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace twozero {

namespace {

// Composite conductors carry an O((m - phi) * phi) reduction, so they are
// capped; prime conductors reduce in one O(m) step and may be much larger.
constexpr unsigned kMaxPhiComposite = 4096;
constexpr unsigned kMaxPrimeConductor = 1 << 17;

// Exact division of integer polynomials, divisor monic.
std::vector<BigInt> poly_divexact(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    if (den.empty() || den.back() != 1) throw std::logic_error("poly_divexact: divisor not monic");
    const std::size_t dn = den.size() - 1;
    if (rem.size() < den.size()) throw std::logic_error("poly_divexact: degree underflow");
    std::vector<BigInt> quot(rem.size() - dn, 0);
    for (std::size_t i = rem.size(); i-- > dn;) {
        BigInt c = rem[i];
        if (c == 0) continue;
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw std::logic_error("poly_divexact: non-zero remainder");
    return quot;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned m) {
    static std::map<unsigned, std::vector<BigInt>> cache;
    static std::mutex mtx;
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up.
    for (std::uint64_t d : divisors_u64(m)) {
        unsigned du = static_cast<unsigned>(d);
        if (cache.count(du)) continue;
        std::vector<BigInt> f(du + 1, 0);
        f[0] = -1;
        f[du] = 1;
        for (std::uint64_t e : divisors_u64(du))
            if (e < du) f = poly_divexact(f, cache.at(static_cast<unsigned>(e)));
        cache.emplace(du, std::move(f));
    }
    return cache.at(m);
}

CyclotomicInt::CyclotomicInt(unsigned m) : m_(m) {
    if (m == 0) throw std::invalid_argument("CyclotomicInt: conductor must be positive");
    unsigned phi = static_cast<unsigned>(euler_phi_u64(m));
    if (phi > kMaxPhiComposite && !(is_prime_u64(m) && m <= kMaxPrimeConductor))
        throw std::invalid_argument("CyclotomicInt: conductor degree too large");
    c_.assign(phi, 0);
}

CyclotomicInt CyclotomicInt::integer(unsigned m, const BigInt& value) {
    CyclotomicInt x(m);
    x.c_[0] = value;
    return x;
}

CyclotomicInt CyclotomicInt::root_power(unsigned m, std::uint64_t k) {
    std::vector<BigInt> counts(m, 0);
    counts[k % m] = 1;
    return from_root_counts(m, counts);
}

CyclotomicInt CyclotomicInt::from_root_counts(unsigned m, const std::vector<BigInt>& counts) {
    if (counts.size() != m) throw std::invalid_argument("from_root_counts: need exactly m entries");
    CyclotomicInt x(m);
    const unsigned phi = static_cast<unsigned>(x.c_.size());
    if (phi + 1 == m && m > 2) {
        // prime conductor: Phi_m = 1 + x + ... + x^(m-1), one subtraction
        for (unsigned i = 0; i < phi; ++i) x.c_[i] = counts[i] - counts[m - 1];
        return x;
    }
    const auto& f = cyclotomic_polynomial(m);
    std::vector<BigInt> acc = counts;
    for (std::size_t i = acc.size(); i-- > phi;) {
        BigInt c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (unsigned j = 0; j < phi; ++j) acc[i - phi + j] -= c * f[j];
    }
    for (unsigned i = 0; i < phi; ++i) x.c_[i] = acc[i];
    return x;
}

CyclotomicInt CyclotomicInt::from_root_counts(unsigned m, const std::vector<long long>& counts) {
    std::vector<BigInt> big(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) big[i] = BigInt(static_cast<long>(counts[i]));
    return from_root_counts(m, big);
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CyclotomicInt: conductor mismatch");
    CyclotomicInt r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CyclotomicInt: conductor mismatch");
    CyclotomicInt r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CyclotomicInt: conductor mismatch");
    const unsigned phi = static_cast<unsigned>(c_.size());
    std::vector<BigInt> acc(2 * phi - 1, 0);
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j)
            if (o.c_[j] != 0) acc[i + j] += c_[i] * o.c_[j];
    }
    const auto& f = cyclotomic_polynomial(m_);
    for (std::size_t i = acc.size(); i-- > phi;) {
        BigInt c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (unsigned j = 0; j < phi; ++j) acc[i - phi + j] -= c * f[j];
    }
    CyclotomicInt r(m_);
    for (unsigned i = 0; i < phi; ++i) r.c_[i] = acc[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const BigInt& scalar) const {
    CyclotomicInt r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * scalar;
    return r;
}

bool CyclotomicInt::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

CyclotomicInt CyclotomicInt::galois(std::uint64_t t) const {
    if (std::gcd(static_cast<std::uint64_t>(m_), t) != 1)
        throw std::invalid_argument("CyclotomicInt::galois: t not coprime to conductor");
    std::vector<BigInt> counts(m_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) counts[(i * (t % m_)) % m_] += c_[i];
    return from_root_counts(m_, counts);
}

CyclotomicInt CyclotomicInt::conj() const { return m_ == 1 ? *this : galois(m_ - 1); }

bool CyclotomicInt::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

BigInt CyclotomicInt::rational_value() const {
    if (!is_rational()) throw std::logic_error("CyclotomicInt: value is not rational");
    return c_[0];
}

CyclotomicInt CyclotomicInt::to_conductor(unsigned M) const {
    if (M % m_ != 0) throw std::invalid_argument("CyclotomicInt::to_conductor: not a multiple");
    if (M == m_) return *this;
    const unsigned ratio = M / m_;
    std::vector<BigInt> counts(M, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) counts[i * ratio] += c_[i];
    return from_root_counts(M, counts);
}

std::complex<double> CyclotomicInt::embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double theta = 2.0 * M_PI / static_cast<double>(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double v = c_[i].get_d();
        acc += v * std::complex<double>(std::cos(theta * static_cast<double>(i)),
                                        std::sin(theta * static_cast<double>(i)));
    }
    return acc;
}

}  // namespace twozero
