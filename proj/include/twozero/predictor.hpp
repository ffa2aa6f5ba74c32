// Closed-form weight distribution for index-2-valid parameters: the ten
// Y-values with multiplicities, conversion to an exact weight enumerator,
// and the structural self-checks (frequency algebra, b-sign invariance).
#pragma once

#include <string>
#include <vector>

#include "twozero/code_model.hpp"
#include "twozero/weight_distribution.hpp"

namespace twozero {

struct Table1Row {
    TupleClass cls;  // row label: the tuple class the row belongs to
    BigInt y;
    BigInt freq;
};

// The ten rows, in fixed order matching all_tuple_classes(); b_sign = -1
// evaluates with the seed (a, -b).  Frequencies always sum to q^{2k}.
std::vector<Table1Row> table1(const CodeParams& params, int b_sign = +1);

// Row Y-values mapped to weights, merged and sorted; includes weight 0.
WeightDistribution predict_distribution(const CodeParams& params, int b_sign = +1);

struct CheckReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// The merged distribution must be invariant under b_s -> -b_s (rows pair up).
CheckReport sign_invariance_check(const CodeParams& params);

// Re-derives all ten pair frequencies from the base counts plus the three
// linear identities and compares them against the printed frequency column.
CheckReport frequency_derivation_check(const CodeParams& params);

}  // namespace twozero
