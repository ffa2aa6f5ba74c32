#include "twozero/predictor.hpp"

#include <map>
#include <stdexcept>

namespace twozero {

namespace {

BigInt half_exact(const BigInt& v, const char* what) {
    if (mpz_odd_p(v.get_mpz_t())) throw std::logic_error(std::string("table1: odd numerator in ") + what);
    return v / 2;
}

}  // namespace

std::vector<Table1Row> table1(const CodeParams& params, int b_sign) {
    if (!params.index2_valid) throw std::invalid_argument("table1: parameters not index-2-valid");
    const BigInt p1(static_cast<unsigned long>(params.p1));
    const BigInt qk = params.qk;
    LiftedGauss lift = lifted_index2(params.p, params.p1, params.s, b_sign);
    const BigInt P = pow_big(BigInt(static_cast<unsigned long>(params.p)), lift.prefactor_exp);
    const BigInt t = (params.s % 2 == 1) ? BigInt(-1) : BigInt(1);  // (-1)^s
    const BigInt& as = lift.reduced.a();
    const BigInt& bs = lift.reduced.b();

    if ((qk - 1) % p1 != 0) throw std::logic_error("table1: p1 does not divide q^k - 1");
    const BigInt ell = (qk - 1) / p1;
    const BigInt half_p1 = (p1 - 1) / 2;

    std::vector<Table1Row> rows;
    rows.reserve(10);
    rows.push_back({{2, 0, 0, 0}, 2 * qk, 1});
    rows.push_back({{0, 2, 0, 0}, t * P * (as - bs * p1), half_p1 * half_p1 * ell * ell});
    rows.push_back({{0, 0, 2, 0}, t * P * (as + bs * p1), half_p1 * half_p1 * ell * ell});
    rows.push_back({{0, 0, 0, 2}, t * P * (1 - p1) * as, ell * ell});
    rows.push_back({{1, 1, 0, 0}, half_exact(t * P * (as - bs * p1), "row 5") + qk, (p1 - 1) * ell});
    rows.push_back({{1, 0, 1, 0}, half_exact(t * P * (as + bs * p1), "row 6") + qk, (p1 - 1) * ell});
    rows.push_back({{1, 0, 0, 1}, t * P * ((1 - p1) / 2) * as + qk, 2 * ell});
    rows.push_back({{0, 1, 1, 0}, t * P * as, (p1 - 1) * (p1 - 1) / 2 * ell * ell});
    rows.push_back({{0, 1, 0, 1}, half_exact(t * P * (-as * (p1 - 2) - bs * p1), "row 9"), (p1 - 1) * ell * ell});
    rows.push_back({{0, 0, 1, 1}, half_exact(t * P * (-as * (p1 - 2) + bs * p1), "row 10"), (p1 - 1) * ell * ell});

    BigInt total = 0;
    for (const auto& row : rows) total += row.freq;
    if (total != qk * qk) throw std::logic_error("table1: frequencies do not sum to q^{2k}");
    return rows;
}

WeightDistribution predict_distribution(const CodeParams& params, int b_sign) {
    std::vector<Table1Row> rows = table1(params, b_sign);
    std::map<BigInt, BigInt> merged;
    for (const auto& row : rows) merged[weight_from_y(params, row.y)] += row.freq;

    WeightDistribution dist;
    dist.n = params.n;
    dist.dimension = 2 * params.k;
    for (const auto& [w, c] : merged)
        if (c != 0) dist.entries.emplace_back(w, c);

    if (dist.total_count() != params.qk * params.qk)
        throw std::logic_error("predict_distribution: counts do not sum to q^{2k}");
    if (dist.entries.empty() || dist.entries.front().first != 0 || dist.entries.front().second != 1)
        throw std::logic_error("predict_distribution: weight 0 does not have count exactly 1");
    // First moment: every coordinate functional is a nonzero linear form.
    BigInt expect = dist.n * (params.q - 1) * params.qk * params.qk / params.q;
    if (dist.first_moment() != expect)
        throw std::logic_error("predict_distribution: first-moment identity failed");
    return dist;
}

CheckReport sign_invariance_check(const CodeParams& params) {
    CheckReport report;
    WeightDistribution plus = predict_distribution(params, +1);
    WeightDistribution minus = predict_distribution(params, -1);
    if (plus.entries != minus.entries)
        report.failures.push_back("merged distribution changed under b_s -> -b_s");
    std::vector<Table1Row> rp = table1(params, +1), rm = table1(params, -1);
    // Rows 2/3, 5/6 and 9/10 swap under the flip; the rest are fixed.
    const std::vector<std::pair<unsigned, unsigned>> swaps = {{1, 2}, {4, 5}, {8, 9}};
    std::vector<unsigned> partner(10);
    for (unsigned i = 0; i < 10; ++i) partner[i] = i;
    for (auto [i, j] : swaps) {
        partner[i] = j;
        partner[j] = i;
    }
    for (unsigned i = 0; i < 10; ++i) {
        if (rm[i].y != rp[partner[i]].y || rm[i].freq != rp[partner[i]].freq)
            report.failures.push_back("row " + std::to_string(i + 1) + " did not map to its partner");
    }
    return report;
}

CheckReport frequency_derivation_check(const CodeParams& params) {
    CheckReport report;
    if (!params.index2_valid) throw std::invalid_argument("frequency_derivation_check: invalid params");
    const BigInt p1(static_cast<unsigned long>(params.p1));
    const BigInt qk = params.qk;
    const BigInt ell = (qk - 1) / p1;
    const BigInt half = (p1 - 1) / 2;

    // Base counts from direct pair counting.
    std::map<std::string, BigInt> N;
    N["(2,0,0,0)"] = 1;
    N["(1,1,0,0)"] = (p1 - 1) * ell;
    N["(1,0,1,0)"] = (p1 - 1) * ell;
    N["(1,0,0,1)"] = 2 * ell;
    N["(0,0,0,2)"] = ell * ell;
    N["(0,2,0,0)"] = half * half * ell * ell;
    N["(0,0,2,0)"] = half * half * ell * ell;

    // Linear identities tying the remaining three to the base counts:
    //   N1100 + 2 N0200 + N0110 + N0101 = q^k (q^k-1)(p1-1)/p1   =: R1
    //   N1010 + N0110 + 2 N0020 + N0011 = R1
    //   N1001 + N0101 + N0011 + 2 N0002 = 2 q^k (q^k-1)/p1       =: R3
    const BigInt R1 = qk * (qk - 1) * (p1 - 1) / p1;
    const BigInt R3 = 2 * qk * (qk - 1) / p1;
    const BigInt A = R1 - N["(1,1,0,0)"] - 2 * N["(0,2,0,0)"];  // N0110 + N0101
    const BigInt B = R1 - N["(1,0,1,0)"] - 2 * N["(0,0,2,0)"];  // N0110 + N0011
    const BigInt C = R3 - N["(1,0,0,1)"] - 2 * N["(0,0,0,2)"];  // N0101 + N0011
    BigInt two_n0110 = A + B - C;
    if (mpz_odd_p(two_n0110.get_mpz_t())) {
        report.failures.push_back("linear system produced a non-integral N(0,1,1,0)");
        return report;
    }
    N["(0,1,1,0)"] = two_n0110 / 2;
    N["(0,1,0,1)"] = A - N["(0,1,1,0)"];
    N["(0,0,1,1)"] = B - N["(0,1,1,0)"];

    BigInt total = 0;
    for (const auto& [k, v] : N) total += v;
    if (total != qk * qk) report.failures.push_back("derived frequencies do not sum to q^{2k}");

    for (const Table1Row& row : table1(params)) {
        auto it = N.find(row.cls.label());
        if (it == N.end()) {
            report.failures.push_back("no derived frequency for class " + row.cls.label());
        } else if (it->second != row.freq) {
            report.failures.push_back("frequency mismatch for class " + row.cls.label());
        }
    }
    return report;
}

}  // namespace twozero
