// Acceptance suite: runs every verification criterion at full scale and
// prints one PASS/FAIL line per criterion.  Exit code 0 iff everything
// passed, including the per-criterion wall-clock budgets.
//
//   1. reference example (3,5,11,2,2), exact integers, < 5 s
//   2. closed-form index-2 Gauss sums vs brute force for
//      (p,p1) in {(3,11), (11,7), (23,7), (5,19)}, exact + float cross-check;
//      (5,19) < 2 min, the others < 5 s each
//   3. Davenport-Hasse for all q <= 121 and all N | q-1, exact, < 1 min
//   4. Z-formula oracle equivalence, >= 20 random pairs at three parameter
//      sets including m = 2 and m > 2 cases, < 2 min
//   5. brute-force weight distributions over the search window q^{2k} <= 1e7
//   6. stratified table verification at (3,5,11,2,2) and (11,3,7,2,2),
//      all ten classes + 1000 seeded pairs each, < 5 min
//   7. frequency algebra (sum, re-derivation, sign flip) at five valid sets
//   8. supporting lemmas: coset-intersection count for p1 < 200, class-number
//      oracle agreement for p1 < 500, Weil sums exact for q <= 81

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "twozero/verify.hpp"

using namespace twozero;

namespace {

struct Criterion {
    std::string title;
    double budget_seconds;  // 0 = no budget
    std::function<std::vector<CheckResult>()> run;
};

bool run_and_report(const Criterion& c, int index) {
    std::vector<CheckResult> parts = c.run();
    bool ok = true;
    double total = 0;
    std::string why;
    for (const CheckResult& part : parts) {
        total += part.seconds;
        if (!part.pass && ok) {
            ok = false;
            why = part.name + ": " + part.detail;
        }
    }
    if (ok && c.budget_seconds > 0 && total > c.budget_seconds) {
        ok = false;
        why = "runtime " + std::to_string(total) + "s exceeded budget " +
              std::to_string(c.budget_seconds) + "s";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", index, c.title.c_str(),
                total);
    if (!ok) std::printf("       %s\n", why.c_str());
    for (const CheckResult& part : parts)
        std::printf("       - [%s] %s: %s (%.2fs)\n", part.pass ? "ok" : "FAIL",
                    part.name.c_str(), part.detail.c_str(), part.seconds);
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main() {
    const unsigned long seed = 20260808ul;
    std::vector<Criterion> criteria;
    criteria.push_back({"reference-example reproduction, exact", 5.0,
                        [] { return std::vector<CheckResult>{check_reference_example()}; }});
    criteria.push_back({"index-2 closed form vs brute force", 135.0, [] {
                            return std::vector<CheckResult>{
                                check_index2_closed_vs_brute(3, 11),
                                check_index2_closed_vs_brute(11, 7),
                                check_index2_closed_vs_brute(23, 7),
                                check_index2_closed_vs_brute(5, 19)};
                        }});
    criteria.push_back({"Davenport-Hasse lifting", 60.0, [] {
                            return std::vector<CheckResult>{check_davenport_hasse(121)};
                        }});
    criteria.push_back({"Z-formula oracle equivalence", 120.0, [seed] {
                            return std::vector<CheckResult>{
                                check_eq2_consistency(validate(5, 1, 2, 4, 2), 20, seed),
                                check_eq2_consistency(validate(11, 1, 5, 2, 2), 20, seed + 1),
                                check_eq2_consistency(validate(7, 1, 3, 2, 2), 20, seed + 2)};
                        }});
    criteria.push_back({"brute-force weight distributions", 0, [] {
                            return std::vector<CheckResult>{
                                check_brute_distributions(13, 8, 10000000)};
                        }});
    criteria.push_back({"stratified table verification", 300.0, [seed] {
                            return std::vector<CheckResult>{
                                check_table1_stratified(validate(3, 5, 11, 2, 2), 1000, seed + 3),
                                check_table1_stratified(validate(11, 3, 7, 2, 2), 1000, seed + 4)};
                        }});
    criteria.push_back({"frequency algebra", 0, [] {
                            return std::vector<CheckResult>{
                                check_frequency_algebra(validate(3, 5, 11, 2, 2)),
                                check_frequency_algebra(validate(11, 3, 7, 2, 2)),
                                check_frequency_algebra(validate(11, 3, 7, 10, 2)),
                                check_frequency_algebra(validate(23, 3, 7, 2, 2)),
                                check_frequency_algebra(validate(5, 9, 19, 2, 2))};
                        }});
    criteria.push_back({"supporting lemmas", 0, [] {
                            return std::vector<CheckResult>{check_cyclotomic_fact(200),
                                                            check_class_number_oracles(500),
                                                            check_weil_sums(81)};
                        }});

    unsigned failures = 0;
    int index = 1;
    for (const Criterion& c : criteria)
        if (!run_and_report(c, index++)) ++failures;

    std::printf("RESULT: %zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
