// Verification suites shared by the acceptance runner and the CLI: each
// check returns a pass/fail result with a human-readable detail line and its
// wall-clock time.  Sampled checks are deterministic given the seed.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twozero/code_model.hpp"
#include "twozero/predictor.hpp"

namespace twozero {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Full pipeline at (p,f,k,h,e) = (3,5,11,2,2) against the known values:
// a_11 = 67, |b_11| = 253, dimension 22, the nine (weight, count) pairs and
// the minimum distance, all by exact integer comparison.
CheckResult check_reference_example();

// Closed-form index-2 Gauss sum vs the brute-force cyclotomic sum over
// F_{p^{(p1-1)/2}}, exact for the whole character orbit, plus the
// complex-double cross-check at tolerance 1e-6 * sqrt(q).
CheckResult check_index2_closed_vs_brute(std::uint64_t p, std::uint64_t p1,
                                         std::uint64_t enum_bound = 10000000ULL);

// G_{q^2}(chi o Norm) = -(G_q(chi))^2 for all prime powers q <= max_q and all
// character orders N | q-1, exact.
CheckResult check_davenport_hasse(std::uint64_t max_q);

// z_charsum(brute) = z_direct for fixed pairs plus `samples` seeded random
// pairs at one parameter set.
CheckResult check_eq2_consistency(const CodeParams& params, unsigned samples,
                                  unsigned long seed);

// Brute-force weight distributions for every e=2 parameter set in the search
// window with q^{2k} <= max_pairs: counts sum to q^{2k}, zero weight has
// count 1, first-moment identity holds.
CheckResult check_brute_distributions(std::uint64_t max_p, unsigned max_fk,
                                      std::uint64_t max_pairs);

// Stratified closed-form verification: constructed representatives of all
// ten tuple classes plus seeded random pairs; y_value(closed) must land on
// the table row selected by classify.
CheckResult check_table1_stratified(const CodeParams& params, unsigned samples,
                                    unsigned long seed);

// Frequency sum, the proof-side frequency re-derivation, b-sign invariance.
CheckResult check_frequency_algebra(const CodeParams& params);

// |(H+u) cap H| = (p1-3)/4 for H the nonzero squares mod p1 and every u != 0,
// for all primes p1 = 3 (mod 4), 3 < p1 < max_p1.
CheckResult check_cyclotomic_fact(std::uint64_t max_p1);

// Reduced-form count vs the Legendre-sum class number formula.
CheckResult check_class_number_oracles(std::uint64_t max_p1);

// Weil sum identity over every field with q <= max_q, covering all (a, b, d)
// classes exactly, plus literal spot checks per (q, d).
CheckResult check_weil_sums(std::uint64_t max_q);

// Bundled runs used by the CLI.
std::vector<CheckResult> verify_quick(unsigned long seed);
std::vector<CheckResult> verify_full(unsigned long seed);

}  // namespace twozero
