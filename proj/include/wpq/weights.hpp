#pragma once

#include "wpq/int.hpp"

namespace wpq {

// Weight tuple q = (q_0,...,q_n) with the derived invariants used everywhere:
// q = lcm, Q = sum, d = gcd, exponents n_i = q/q_i. Non-well-formed systems
// (some n-subset with gcd > 1) are accepted and only flagged; d > 1 feeds the
// Veronese degree formula.
struct WeightSystem {
    std::vector<unsigned long> weights;
    unsigned long q = 1;   // lcm of the weights
    unsigned long Q = 0;   // sum of the weights
    unsigned long d = 1;   // gcd of the weights
    std::vector<unsigned long> exponents;  // n_i = q / q_i
    bool well_formed = false;

    std::size_t arity() const { return weights.size(); }
    unsigned long min_weight() const;
    unsigned long max_weight() const;
    Int weight_product() const;

    bool operator==(const WeightSystem& o) const { return weights == o.weights; }
};

// Builds a WeightSystem, computing all derived invariants. Rejects empty or
// singleton tuples and zero weights; rejects lcm overflow past 10^9.
WeightSystem validate(const std::vector<unsigned long>& weights);

}  // namespace wpq
