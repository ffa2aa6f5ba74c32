// Characters of finite fields and brute-force Gauss sums in exact cyclotomic
// arithmetic.  Conventions, fixed once for the whole library:
//   psi(x)           = zeta_p^Tr(x)          (canonical additive character)
//   chi_{N,j}(alpha^t) = zeta_N^{j t mod N}  (relative to the canonical generator)
// Gauss sums G(chi_{N,j}) = sum_{x != 0} chi(x) psi(x) live in Z[zeta_{pN}].
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "twozero/cyclotomic.hpp"
#include "twozero/finite_field.hpp"

namespace twozero {

struct GaussTable {
    std::uint64_t N = 0;
    unsigned conductor = 1;  // p * N
    std::vector<CyclotomicInt> value;  // index j in [0, N)
};

// One pass over F_q^*, exact accumulation; q <= enum_bound required.
GaussTable gauss_brute_all(const FieldCtx& F, std::uint64_t N,
                           std::uint64_t enum_bound = 10000000ULL);
CyclotomicInt gauss_brute(const FieldCtx& F, std::uint64_t N, std::uint64_t j,
                          std::uint64_t enum_bound = 10000000ULL);
// Complex-double fast path for sweeps; the exact path is the ground truth.
std::complex<double> gauss_brute_complex(const FieldCtx& F, std::uint64_t N, std::uint64_t j,
                                         std::uint64_t enum_bound = 10000000ULL);

struct SuiteReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Exact verification of the standard Gauss-sum identities over F_q for the
// full order-N character family: |G|^2 = q off the principal character,
// G(chi^p) = G(chi), G(chi^-1) = chi(-1) * conj(G(chi)), principal -> -1.
SuiteReport gauss_property_suite(const FieldCtx& F, std::uint64_t N,
                                 std::uint64_t enum_bound = 10000000ULL);

// sqrt(p*) = sum_t zeta_p^{t^2} with p* = (-1)^((p-1)/2) p, conductor p.
CyclotomicInt quadratic_gauss_sum(std::uint64_t p);
// Quadratic-character Gauss sum over F_{p^f}: (-1)^(f-1) (sqrt p*)^f.
CyclotomicInt quadratic_gauss_closed(std::uint64_t p, unsigned f);

// Exact check of sum_{x in F_q} psi(a x^d + b) = psi(b) sum_{i=1}^{d-1}
// chi^{-i}(a) G(chi^i) for one triple (a, b, d); a != 0, d | q-1.
SuiteReport weil_sum_check(const FieldCtx& F, const FieldElem& a, const FieldElem& b,
                           std::uint64_t d, std::uint64_t enum_bound = 10000000ULL);

}  // namespace twozero
