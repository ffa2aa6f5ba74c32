#include "twozero/gauss_index2.hpp"

#include <numeric>
#include <stdexcept>

#include "twozero/characters.hpp"

namespace twozero {

namespace {

void check_p1(std::uint64_t p1) {
    if (p1 <= 3 || p1 % 4 != 3 || !is_prime_u64(p1))
        throw std::invalid_argument("index2: p1 must be a prime = 3 (mod 4), p1 > 3");
}

}  // namespace

std::uint64_t class_number(std::uint64_t p1) {
    check_p1(p1);
    // Reduced primitive forms (A, B, C) of discriminant B^2 - 4AC = -p1 with
    // |B| <= A <= C and B > 0 when |B| = A or A = C; B odd.
    std::uint64_t count = 0;
    for (std::uint64_t A = 1; 4 * A * A <= p1 + A * A; ++A) {  // A <= sqrt(p1/3)
        if (3 * A * A > p1) break;
        for (std::int64_t B = -static_cast<std::int64_t>(A); B <= static_cast<std::int64_t>(A); ++B) {
            if (((B % 2) + 2) % 2 != 1) continue;  // B odd
            std::uint64_t B2 = static_cast<std::uint64_t>(B * B);
            if ((B2 + p1) % (4 * A) != 0) continue;
            std::uint64_t C = (B2 + p1) / (4 * A);
            if (C < A) continue;
            std::uint64_t absB = static_cast<std::uint64_t>(B < 0 ? -B : B);
            if ((absB == A || A == C) && B <= 0) continue;
            std::uint64_t g = std::gcd(std::gcd(A, absB), C);
            if (g != 1) continue;
            ++count;
        }
    }
    return count;
}

std::uint64_t class_number_legendre(std::uint64_t p1) {
    check_p1(p1);
    BigInt bp1(static_cast<unsigned long>(p1));
    long sum = 0;
    for (std::uint64_t n = 1; 2 * n < p1; ++n) sum += legendre_symbol(BigInt(static_cast<unsigned long>(n)), bp1);
    long denom = 2 - legendre_symbol(BigInt(2), bp1);
    if (denom <= 0 || sum <= 0 || sum % denom != 0)
        throw std::logic_error("class_number_legendre: non-integral result");
    return static_cast<std::uint64_t>(sum / denom);
}

bool is_index2_pair(std::uint64_t p, std::uint64_t p1) {
    if (!is_prime_u64(p)) return false;
    if (p1 <= 3 || p1 % 4 != 3 || !is_prime_u64(p1)) return false;
    if (p % p1 == 0) return false;
    // <p> of index 2 forces <p> = squares; -1 is a nonsquare for p1 = 3 (mod 4).
    return mult_order_u64(p % p1, p1) == (p1 - 1) / 2;
}

Diophantine solve_diophantine(std::uint64_t p, std::uint64_t p1, unsigned c, unsigned f) {
    check_p1(p1);
    if (!is_index2_pair(p, p1))
        throw std::invalid_argument("solve_diophantine: (p, p1) is not an index-2 pair");
    if ((f + c) % 2 != 0) throw std::invalid_argument("solve_diophantine: f + c must be even");

    BigInt target = 4 * pow_big(BigInt(static_cast<unsigned long>(p)), c);
    std::uint64_t rhs_mod =
        (p1 - 2 * pow_mod_u64(p % p1, (f + c) / 2, p1) % p1) % p1;  // -2 p^{(f+c)/2} mod p1

    std::vector<Diophantine> hits;
    for (BigInt b = 1; BigInt(static_cast<unsigned long>(p1)) * b * b <= target; ++b) {
        BigInt rest = target - BigInt(static_cast<unsigned long>(p1)) * b * b;
        if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) continue;
        BigInt a0;
        mpz_sqrt(a0.get_mpz_t(), rest.get_mpz_t());
        if (a0 == 0 || a0 % p == 0 || b % p == 0) continue;
        for (int sg : {+1, -1}) {
            BigInt a = sg * a0;
            BigInt residue = a % BigInt(static_cast<unsigned long>(p1));
            if (residue < 0) residue += static_cast<unsigned long>(p1);
            if (residue == BigInt(static_cast<unsigned long>(rhs_mod))) hits.push_back({a, b});
        }
    }
    if (hits.size() != 1)
        throw std::logic_error("solve_diophantine: expected exactly one normalized solution, found " +
                               std::to_string(hits.size()));
    return hits.front();
}

Diophantine solve_diophantine(std::uint64_t p, std::uint64_t p1, unsigned c) {
    return solve_diophantine(p, p1, c, static_cast<unsigned>((p1 - 1) / 2));
}

Index2Gauss index2_gauss(std::uint64_t p, std::uint64_t p1, unsigned ell, unsigned s_idx) {
    check_p1(p1);
    if (ell == 0 || s_idx >= ell) throw std::invalid_argument("index2_gauss: need 1 <= s_idx+1 <= ell");
    std::uint64_t N = 1;
    for (unsigned i = 0; i < ell; ++i) N *= p1;
    std::uint64_t phiN = N - N / p1;
    if (!is_prime_u64(p) || p % p1 == 0 || mult_order_u64(p % N, N) != phiN / 2)
        throw std::invalid_argument("index2_gauss: <p> does not have index 2 mod p1^ell");
    unsigned f = static_cast<unsigned>(phiN / 2);
    std::uint64_t c = class_number(p1);
    Diophantine d = solve_diophantine(p, p1, static_cast<unsigned>(c), f);

    std::uint64_t pe = 1;
    for (unsigned i = 0; i < s_idx; ++i) pe *= p1;
    if (f < c * pe || (f - c * pe) % 2 != 0)
        throw std::logic_error("index2_gauss: prefactor exponent not a nonnegative integer");
    Index2Gauss out{p, p1, ell, s_idx, (f - c * pe) / 2, QuadInt(p1, d.a, d.b).pow(pe)};
    return out;
}

LiftedGauss lifted_index2(std::uint64_t p, std::uint64_t p1, unsigned s, int b_sign) {
    if (s == 0) throw std::invalid_argument("lifted_index2: s must be positive");
    std::uint64_t c = class_number(p1);
    Diophantine d = solve_diophantine(p, p1, static_cast<unsigned>(c));
    if (p1 - 1 < 2 * c || (static_cast<std::uint64_t>(s) * (p1 - 1 - 2 * c)) % 4 != 0)
        throw std::logic_error("lifted_index2: prefactor exponent not a nonnegative integer");
    QuadInt seed(p1, d.a, b_sign >= 0 ? d.b : -d.b);
    LiftedGauss out{p, p1, s, static_cast<std::uint64_t>(s) * (p1 - 1 - 2 * c) / 4,
                    (s % 2 == 1) ? +1 : -1, seed.pow(s)};
    // |G|^2 bookkeeping: a_s^2 + p1 b_s^2 = 4 p^{cs}.
    BigInt want = pow_big(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(c) * s);
    if (out.reduced.norm() != want) throw std::logic_error("lifted_index2: norm identity violated");
    return out;
}

CyclotomicInt dh_lift(const CyclotomicInt& g, unsigned s) {
    if (s == 0) throw std::invalid_argument("dh_lift: s must be positive");
    CyclotomicInt acc = g;
    for (unsigned i = 1; i < s; ++i) acc = acc * g;
    if (s % 2 == 0) acc = -acc;
    return acc;
}

CyclotomicInt to_cyclotomic(const Index2Gauss& g, unsigned conductor) {
    BigInt pref = pow_big(BigInt(static_cast<unsigned long>(g.p)), g.prefactor_exp);
    return g.reduced.to_cyclotomic(conductor) * pref;
}

CyclotomicInt to_cyclotomic(const LiftedGauss& g, unsigned conductor) {
    BigInt pref = pow_big(BigInt(static_cast<unsigned long>(g.p)), g.prefactor_exp);
    if (g.sign < 0) pref = -pref;
    return g.reduced.to_cyclotomic(conductor) * pref;
}

int calibrate_b_sign(const TowerCtx& tower, std::uint64_t p1, std::uint64_t enum_bound) {
    check_p1(p1);
    const FieldCtx& small = tower.subfield();
    const std::uint64_t p = small.characteristic();
    if (small.degree() != (p1 - 1) / 2)
        throw std::invalid_argument("calibrate_b_sign: subfield degree must be (p1-1)/2");
    if (small.order() > BigInt(static_cast<unsigned long>(enum_bound)))
        throw std::runtime_error("calibrate_b_sign: subfield too large to brute-force");

    // The canonical big-field character of order p1 is the norm-lift of
    // chi_small^u where u = w^{-1} mod p1 and w is the subfield coset index
    // of Norm(alpha_big).
    FieldElem norm_gen = tower.norm(tower.big().generator());
    std::uint64_t w = CosetIndexer(small, p1).index(norm_gen);
    std::uint64_t u = inv_mod_u64(w % p1, p1);
    CyclotomicInt brute = gauss_brute(small, p1, u, enum_bound);

    std::uint64_t c = class_number(p1);
    Diophantine d = solve_diophantine(p, p1, static_cast<unsigned>(c));
    unsigned conductor = static_cast<unsigned>(p * p1);
    std::uint64_t f1 = (p1 - 1) / 2;
    BigInt pref = pow_big(BigInt(static_cast<unsigned long>(p)), (f1 - c) / 2);
    for (int eps : {+1, -1}) {
        CyclotomicInt closed = QuadInt(p1, d.a, eps * d.b).to_cyclotomic(conductor) * pref;
        if (closed == brute) return eps;
    }
    throw std::logic_error("calibrate_b_sign: brute-force value matches neither sign");
}

}  // namespace twozero
