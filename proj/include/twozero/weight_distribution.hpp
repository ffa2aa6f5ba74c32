// Exact weight distribution of a linear code: sorted (weight, count) pairs
// with arbitrary-precision entries.
#pragma once

#include <utility>
#include <vector>

#include "twozero/numtheory.hpp"

namespace twozero {

struct WeightDistribution {
    BigInt n = 0;            // code length
    unsigned dimension = 0;  // F_q-dimension
    std::vector<std::pair<BigInt, BigInt>> entries;  // ascending weight, count > 0

    BigInt total_count() const {
        BigInt t = 0;
        for (const auto& [w, c] : entries) t += c;
        return t;
    }
    BigInt first_moment() const {
        BigInt t = 0;
        for (const auto& [w, c] : entries) t += w * c;
        return t;
    }
    // Smallest positive weight; 0 if none.
    BigInt min_distance() const {
        for (const auto& [w, c] : entries)
            if (w > 0) return w;
        return 0;
    }
};

}  // namespace twozero
