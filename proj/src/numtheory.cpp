#include "twozero/numtheory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twozero {

bool is_prime_u64(std::uint64_t n) {
    return is_prime(BigInt(static_cast<unsigned long>(n)));
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    // 40 Miller-Rabin rounds; mpz also runs a BPSW-style base-2 test.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's variant of Pollard rho.  Returns a nontrivial factor of n
// (n composite, odd, not a perfect power of a found factor yet).
BigInt pollard_brent(const BigInt& n, unsigned long seed) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    while (true) {
        BigInt y = rng.get_z_range(n - 3) + 1;
        BigInt c = rng.get_z_range(n - 1) + 1;
        BigInt g = 1, r = 1, q = 1, x, ys;
        const unsigned long step = 128;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = r - k;
                if (lim > step) lim = step;
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += step;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                BigInt d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        // Rare: retry with a fresh parameter choice.
    }
}

void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& out, unsigned long seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    BigInt d = pollard_brent(n, seed);
    factor_rec(d, out, seed + 1);
    factor_rec(n / d, out, seed + 1);
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& n_in) {
    if (n_in < 1) throw std::invalid_argument("factorize: argument must be positive");
    BigInt n = n_in;
    std::map<BigInt, unsigned> acc;
    // Trial division by small primes first.
    for (std::uint64_t p = 2; p < 100000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            acc[BigInt(static_cast<unsigned long>(p))]++;
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, acc, 0x5eed);
    std::vector<PrimePower> out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

BigInt pow_big(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod_u64(r, base, m);
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t qt = r / nr;
        std::swap(t -= qt * nt, nt);
        std::swap(r -= qt * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod_u64: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("mult_order_u64: modulus must be >= 2");
    std::uint64_t phi = euler_phi_u64(m);
    std::uint64_t order = phi;
    for (const auto& pp : factorize(BigInt(static_cast<unsigned long>(phi)))) {
        std::uint64_t p = pp.prime.get_ui();
        while (order % p == 0 && pow_mod_u64(a, order / p, m) == 1) order /= p;
    }
    if (pow_mod_u64(a, order, m) != 1)
        throw std::invalid_argument("mult_order_u64: argument not coprime to modulus");
    return order;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
    std::uint64_t result = n;
    for (const auto& pp : factorize(BigInt(static_cast<unsigned long>(n)))) {
        std::uint64_t p = pp.prime.get_ui();
        result -= result / p;
    }
    return result;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& pp : factorize(BigInt(static_cast<unsigned long>(n)))) {
        std::uint64_t p = pp.prime.get_ui();
        std::size_t sz = divs.size();
        std::uint64_t pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

BigInt cyclotomic_value(unsigned n, const BigInt& x) {
    if (n == 0) throw std::invalid_argument("cyclotomic_value: n must be positive");
    // Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x), all divisions exact.
    std::vector<std::uint64_t> divs = divisors_u64(n);
    std::map<std::uint64_t, BigInt> values;
    for (std::uint64_t d : divs) {
        BigInt v = pow_big(x, static_cast<unsigned long>(d)) - 1;
        for (std::uint64_t e : divs) {
            if (e < d && d % e == 0) {
                BigInt q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), values.at(e).get_mpz_t());
                if (r != 0) throw std::logic_error("cyclotomic_value: non-exact division");
                v = q;
            }
        }
        values[d] = v;
    }
    return values.at(n);
}

}  // namespace twozero
