// The cyclic code C_(q,k,h,e) in trace form: validated parameters, codewords,
// brute-force weight distributions, and the character-sum counts Z and Y.
//
// Conventions.  alpha is the canonical generator of F_{q^k}; g = alpha^((q-1)/h)
// has order n = h(q^k-1)/(q-1); beta = alpha^((q^k-1)/e) has order e.  The
// codeword attached to (a, b) is
//     c(a, b)_i = Tr_{q^k/q}((a + beta^i b) g^i),   i = 0..n-1,
// so its weight is n - Z(a, b) with Z counting the zero coordinates.  Since
// beta^i depends only on i mod e, Z splits over the e cosets g^j <g^e>.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twozero/cyclotomic.hpp"
#include "twozero/finite_field.hpp"
#include "twozero/gauss_index2.hpp"
#include "twozero/weight_distribution.hpp"

namespace twozero {

struct CodeParams {
    std::uint64_t p = 0;
    unsigned f = 0, k = 0;
    std::uint64_t h = 0, e = 0;
    BigInt q, qk, n, m;
    bool index2_valid = false;
    // Set when index2_valid:
    std::uint64_t p1 = 0;
    unsigned s = 0;
    std::uint64_t class_no = 0;
};

// Checks e | h and h | q-1 (throws otherwise), derives q, n, m exactly and
// decides the index-2 flags.
CodeParams validate(std::uint64_t p, unsigned f, unsigned k, std::uint64_t h, std::uint64_t e);

// All index-2-valid parameter tuples (p, f, k, h, e=2) within the bounds;
// with include_invalid also the base-valid tuples that fail the index-2
// conditions (useful for brute-force sweeps).
std::vector<CodeParams> search_params(std::uint64_t max_p, unsigned max_fk, std::uint64_t max_p1,
                                      bool include_invalid = false);

// Classification of a pair (a, b) by the vanishing and quadratic-residue
// pattern of the coset indices of a+b and a-b mod p1.
struct TupleClass {
    unsigned e0 = 0, n0 = 0, n1 = 0, n2 = 0;
    bool operator==(const TupleClass&) const = default;
    std::string label() const;
};

// The ten feasible classes when e = 2, in the fixed row order of the
// closed-form table.
const std::vector<TupleClass>& all_tuple_classes();

// Codeword-level operations; feasible only while n and q^k stay at desk scale.
class CodeContext {
   public:
    explicit CodeContext(const CodeParams& params, unsigned generator_rank = 0);

    const CodeParams& params() const { return prm_; }
    const TowerCtx& tower() const { return tower_; }
    const FieldCtx& big() const { return tower_.big(); }
    const FieldElem& g() const { return g_; }
    const FieldElem& beta() const { return beta_; }

    // Coordinates in F_q (subfield coordinates), length n.
    std::vector<FieldElem> codeword(const FieldElem& a, const FieldElem& b,
                                    std::uint64_t max_n = 1000000ULL) const;
    std::uint64_t codeword_weight(const FieldElem& a, const FieldElem& b,
                                  std::uint64_t max_n = 1000000ULL) const;

    // Z(q^k, a, b) by direct enumeration of the coset <g>.
    BigInt z_direct(const FieldElem& a, const FieldElem& b, std::uint64_t max_n = 1000000ULL) const;

    // Z(q^k, a, b) by the character-sum formula with brute-force inner sums
    //   Z = h(q^k-1)/(q(q-1)) + (h/(eq)) m sum_i sum_{x in C_{(q-1)i/h}^{(m)}} psi((a+beta^i b) x),
    // asserted to be a nonnegative integer.
    BigInt z_charsum_brute(const FieldElem& a, const FieldElem& b,
                           std::uint64_t max_enum = 20000000ULL) const;

    // Exact histogram over all q^{2k} pairs (a, b).
    WeightDistribution brute_weight_distribution(std::uint64_t max_pairs = 100000000ULL) const;

    FieldElem random_element(gmp_randclass& rng) const;

   private:
    CodeParams prm_;
    TowerCtx tower_;
    FieldElem g_, beta_;
};

// Y(q^k, a, b) from Z, and back: Y = (eq/h)(Z - h(q^k-1)/(q(q-1))) + 2.
BigInt y_from_z(const CodeParams& params, const BigInt& z);
BigInt z_from_y(const CodeParams& params, const BigInt& y);
BigInt weight_from_y(const CodeParams& params, const BigInt& y);  // n - z_from_y

// Closed-form machinery on the big field for index-2-valid parameters; no
// codeword enumeration anywhere, so this works at F_{3^55} scale.
class ClosedContext {
   public:
    explicit ClosedContext(const CodeParams& params, unsigned generator_rank = 0,
                           std::uint64_t calib_bound = 10000000ULL);
    // coset_ keeps a reference into tower_
    ClosedContext(const ClosedContext&) = delete;
    ClosedContext& operator=(const ClosedContext&) = delete;

    const CodeParams& params() const { return prm_; }
    const FieldCtx& big() const { return tower_.big(); }
    int b_sign() const { return b_sign_; }
    const LiftedGauss& lifted() const { return lifted_; }

    TupleClass classify(const FieldElem& a, const FieldElem& b) const;
    std::pair<FieldElem, FieldElem> construct_representative(const TupleClass& target) const;

    // Y(q^k, a, b) evaluated through the exact cyclotomic expression
    //   Y = q^k |E0| + sum_{i not in E0} sum_{j=1}^{p1-1} chi^{-j}(a+(-1)^i b) G(chi^j)
    // in Z[zeta_p1]; the reduced value must be a rational integer.
    BigInt y_value_closed(const FieldElem& a, const FieldElem& b) const;
    BigInt z_closed(const FieldElem& a, const FieldElem& b) const;

    FieldElem random_element(gmp_randclass& rng) const;

   private:
    CodeParams prm_;
    TowerCtx tower_;  // F_{p^{(p1-1)/2}} inside F_{p^{fk}}, for calibration
    CosetIndexer coset_;
    int b_sign_;
    LiftedGauss lifted_;
    CyclotomicInt g_plus_, g_minus_;       // G(chi), conj, conductor p1
    std::vector<std::uint32_t> subgroup_;  // <p> mod p1 (the nonzero squares)
};

}  // namespace twozero
