// Deterministic construction of prime-power fields F_{p^d} and field towers,
// with absolute traces, relative traces/norms, discrete logarithms for small
// fields and N-th power coset indices for large ones.
//
// Determinism contract: build_field(p, d) always selects the lexicographically
// smallest monic irreducible modulus (coefficient tuples compared constant
// term first) and the lexicographically smallest primitive element under the
// same ordering, so two runs produce bit-identical contexts.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twozero/numtheory.hpp"

namespace twozero {

// Power-basis coordinates over F_p, always length d with entries in [0, p).
using FieldElem = std::vector<std::uint32_t>;

class FieldCtx {
   public:
    // generator_rank = 0 picks the lex-smallest primitive element, 1 the next
    // one, and so on.  Ranks > 0 exist only for change-of-generator checks.
    FieldCtx(std::uint64_t p, unsigned d, unsigned generator_rank = 0);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return d_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const FieldElem& generator() const { return generator_; }
    const BigInt& order() const { return order_; }
    const BigInt& group_order() const { return group_order_; }
    const std::vector<PrimePower>& group_factors() const { return group_factors_; }

    FieldElem zero() const { return FieldElem(d_, 0); }
    FieldElem one() const;
    FieldElem from_int(std::uint64_t value) const;  // value mod p, as a constant
    bool is_zero(const FieldElem& x) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem scalar_mul(std::uint32_t c, const FieldElem& a) const;
    // Allocation-free multiply for hot loops; out may not alias a or b.
    void mul_to(const FieldElem& a, const FieldElem& b, FieldElem& out,
                std::vector<std::uint64_t>& scratch) const;
    FieldElem pow(const FieldElem& a, const BigInt& e) const;
    FieldElem pow_u64(const FieldElem& a, std::uint64_t e) const;
    FieldElem inv(const FieldElem& a) const;

    // Absolute trace Tr_{p^d/p}(x) as an integer in [0, p).
    std::uint32_t abs_trace(const FieldElem& x) const;
    // x -> x^p (linear over F_p; applied via the precomputed matrix).
    FieldElem frobenius(const FieldElem& x) const;

    bool is_primitive(const FieldElem& x) const;

    // Dense packing sum c_i p^i; requires p^d < 2^63.
    bool packable() const { return packable_; }
    std::uint64_t pack(const FieldElem& x) const;
    FieldElem unpack(std::uint64_t v) const;

    // Lexicographic element enumeration (constant term most significant).
    // Returns false when wrapping past the last element.
    bool next_element(FieldElem& x) const;

    // Columns of the p-power Frobenius matrix, exposed for tower building.
    const std::vector<FieldElem>& frobenius_matrix() const { return frob_cols_; }

   private:
    std::uint64_t p_;
    unsigned d_;
    std::vector<std::uint32_t> modulus_;  // length d+1, monic
    std::vector<unsigned> modulus_support_;  // indices < d with nonzero coefficient
    FieldElem generator_;
    BigInt order_, group_order_;
    std::vector<PrimePower> group_factors_;
    std::vector<std::uint32_t> trace_vec_;  // Tr(t^i), i < d
    std::vector<FieldElem> frob_cols_;      // column j = (t^j)^p
    bool packable_;
    std::uint64_t packed_order_;  // p^d when packable
};

// Free-function constructor spelling used across the tooling.
FieldCtx build_field(std::uint64_t p, unsigned d);

// Discrete log base the canonical generator; x != 0, field order below the
// feasibility bound (full table for small orders, BSGS otherwise).
std::uint64_t discrete_log(const FieldCtx& F, const FieldElem& x,
                           std::uint64_t feasibility_bound = 100000000ULL);

// Index of x in the coset decomposition F^* = union_j alpha^j <alpha^N>.
// Needs only one exponentiation per query, so it works in fields far too
// large for discrete logs.  N | p^d - 1 and N <= 10^4.
class CosetIndexer {
   public:
    CosetIndexer(const FieldCtx& F, std::uint64_t N);
    std::uint64_t modulus_N() const { return N_; }
    std::uint64_t index(const FieldElem& x) const;  // x != 0

   private:
    const FieldCtx& F_;
    std::uint64_t N_;
    BigInt cofactor_;  // (p^d - 1) / N
    std::vector<std::pair<FieldElem, std::uint64_t>> table_;  // sorted by element
};

std::uint64_t coset_index(const FieldCtx& F, const FieldElem& x, std::uint64_t N);

// The tower F_{p^ds} inside F_{p^{ds*k}} with a bidirectional coordinate
// isomorphism onto a standalone FieldCtx for the subfield.  The embedding
// maps the subfield's root class to the lexicographically smallest root of
// the subfield modulus inside the big field.
class TowerCtx {
   public:
    TowerCtx(std::uint64_t p, unsigned sub_degree, unsigned rel_degree,
             unsigned generator_rank = 0);

    const FieldCtx& big() const { return big_; }
    const FieldCtx& subfield() const { return sub_; }
    unsigned rel_degree() const { return k_; }

    FieldElem embed(const FieldElem& sub_x) const;
    bool in_subfield(const FieldElem& big_x) const;
    FieldElem project(const FieldElem& big_x) const;  // throws unless in subfield

    // Relative trace / norm down to the subfield, in subfield coordinates.
    FieldElem trace(const FieldElem& big_x) const;
    FieldElem norm(const FieldElem& big_x) const;

    // Relative trace left in big-field coordinates (one matrix-vector product).
    FieldElem trace_in_big(const FieldElem& big_x) const;
    bool trace_is_zero(const FieldElem& big_x) const;

   private:
    FieldElem apply_matrix(const std::vector<FieldElem>& cols, const FieldElem& x) const;

    FieldCtx big_;
    FieldCtx sub_;
    unsigned k_;
    FieldElem root_;                      // image of the subfield root class
    std::vector<FieldElem> root_pows_;    // root^0 .. root^(sub_degree-1)
    std::vector<FieldElem> frobq_cols_;   // q-power Frobenius matrix (q = p^ds)
    std::vector<FieldElem> trace_cols_;   // sum of q-power Frobenius powers
    // Row-reduced solver for big coords -> subfield coords.
    std::vector<std::vector<std::uint32_t>> solve_transform_;  // D x D
    std::vector<int> pivot_col_of_row_;
};

}  // namespace twozero
