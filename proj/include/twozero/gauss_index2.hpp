// Closed-form index-2 Gauss sums for character order N = p1^ell, p1 prime,
// p1 = 3 (mod 4), p1 > 3, where <p> has index 2 in (Z/N)^* and -1 is not in
// <p>.  Includes the class-number machinery, the Diophantine normalization
// 4p^c = a^2 + p1 b^2, Davenport-Hasse lifting, and the sign calibration that
// pins the b-ambiguity for the canonical generator of a concrete field.
#pragma once

#include <cstdint>

#include "twozero/cyclotomic.hpp"
#include "twozero/finite_field.hpp"
#include "twozero/quadratic.hpp"

namespace twozero {

// Class number of Q(sqrt(-p1)) by counting reduced primitive forms of
// discriminant -p1.  Requires p1 prime, p1 = 3 (mod 4), p1 > 3.
std::uint64_t class_number(std::uint64_t p1);
// Independent oracle: c = (1/(2 - (2|p1))) * sum_{0 < n < p1/2} (n|p1).
std::uint64_t class_number_legendre(std::uint64_t p1);

// ord_{p1}(p) = (p1-1)/2 with -1 not in <p>; p, p1 distinct primes,
// p1 = 3 (mod 4), p1 > 3.
bool is_index2_pair(std::uint64_t p, std::uint64_t p1);

struct Diophantine {
    BigInt a;  // a = -2 p^{(f+c)/2} (mod p1), a, b != 0 (mod p)
    BigInt b;  // canonical b >= 0
};

// Unique solution of 4p^c = a^2 + p1 b^2 under the constraints above;
// f is the exponent in the sign congruence (phi(N)/2 for order N = p1^ell).
Diophantine solve_diophantine(std::uint64_t p, std::uint64_t p1, unsigned c, unsigned f);
Diophantine solve_diophantine(std::uint64_t p, std::uint64_t p1, unsigned c);  // f = (p1-1)/2

// G_q(chi^{p1^s_idx}) = p^{(f - c p1^s_idx)/2} * ((a + b sqrt(-p1))/2)^{p1^s_idx}
// over q = p^f, f = phi(p1^ell)/2, for a character chi of order p1^ell.
struct Index2Gauss {
    std::uint64_t p = 0, p1 = 0;
    unsigned ell = 1, s_idx = 0;
    std::uint64_t prefactor_exp = 0;
    QuadInt reduced;
};
Index2Gauss index2_gauss(std::uint64_t p, std::uint64_t p1, unsigned ell, unsigned s_idx);

// G_{q^s} for the lifted character: sign (-1)^{s-1}, prefactor
// p^{s(p1-1-2c)/4}, reduced part (a_s + b_s sqrt(-p1))/2 = seed^s.
struct LiftedGauss {
    std::uint64_t p = 0, p1 = 0;
    unsigned s = 1;
    std::uint64_t prefactor_exp = 0;
    int sign = 1;
    QuadInt reduced;
};
// b_sign = -1 powers the conjugate seed (a, -b); downstream weight
// distributions are invariant under this flip.
LiftedGauss lifted_index2(std::uint64_t p, std::uint64_t p1, unsigned s, int b_sign = +1);

// Davenport-Hasse: value of the norm-lifted character's Gauss sum,
// (-1)^{s-1} g^s, in the same cyclotomic ring.
CyclotomicInt dh_lift(const CyclotomicInt& g, unsigned s);

CyclotomicInt to_cyclotomic(const Index2Gauss& g, unsigned conductor);
CyclotomicInt to_cyclotomic(const LiftedGauss& g, unsigned conductor);

// Resolves the +-b ambiguity for the canonical generator of tower.big():
// returns eps with G(chi) = p^{(f-c)/2} (a + eps b sqrt(-p1))/2 where chi is
// the canonical order-p1 character of the subfield F_{p^{(p1-1)/2}} whose
// norm-lift is the canonical order-p1 character of the big field.  The
// subfield must be small enough to brute-force.
int calibrate_b_sign(const TowerCtx& tower, std::uint64_t p1,
                     std::uint64_t enum_bound = 10000000ULL);

}  // namespace twozero
