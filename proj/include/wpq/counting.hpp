#pragma once

#include "wpq/bounded_real.hpp"
#include "wpq/lift.hpp"

#include <optional>

namespace wpq {

// M(t): nonzero integer tuples with |x_i| <= t^{q_i}, exactly
// prod(2*floor(t^{q_i}) + 1) - 1.
Int count_box(const WeightSystem& ws, const Rat& t);

// M*(X, 1): tuples in the box with wgcd 1, via Moebius inversion
// sum_{1<=d<=X} mu(d) M(X/d).
Int count_primitive_fast(const WeightSystem& ws, const Rat& X);

// wgcd-1 box tuples fixed by the lambda = -1 scaling, i.e. zero at every
// odd-weight index: the primitive count of the even-weight sub-system.
Int fixed_tuple_count(const WeightSystem& ws, const Rat& X);

enum class CountMethod { Direct, Fast };

// Number of points of WP^n_q(Q) whose canonical wgcd-1 representative has
// Archimedean height <= X. Fast: exact Burnside quotient
// (M* + fixed)/2. Direct: independent box enumeration.
Int count_points_size(const WeightSystem& ws, const Rat& X, CountMethod method,
                      unsigned long long budget = 100000000, unsigned workers = 1);

// Number of weighted rational points with true weighted height h <= X:
// enumerate canonical projective y with H(y) <= X^q and sum the rational
// fiber sizes (h^q = H o veronese makes this exhaustive per fiber
// parameterization).
Int count_points_height(const WeightSystem& ws, const Rat& X,
                        unsigned long long budget = 100000000, unsigned workers = 1);

// Same fiber sum restricted to target points with all coordinates nonzero
// (the stratum where the fiber parameterization is provably complete).
Int count_points_height_full_support(const WeightSystem& ws, const Rat& X,
                                     unsigned long long budget = 100000000,
                                     unsigned workers = 1);

// Heuristic cross-check: enumerate wgcd-1 tuples with |x_i| <= (slack*X)^{q_i},
// filter exact h <= X, dedup canonically. Documented as heuristic with
// respect to completeness; the full-support column is what the fiber sum is
// compared against.
struct HeightBoxCheck {
    Int total;
    Int full_support;
};
HeightBoxCheck count_points_height_box(const WeightSystem& ws, const Rat& X,
                                       unsigned slack = 4,
                                       unsigned long long budget = 100000000);

// One verification row: exact counts against the predicted leading term.
struct CountRecord {
    Rat X;
    std::optional<Int> direct_size;
    Int fast_size;
    std::optional<Int> height_count;
    BoundedReal predicted;  // (2^n / zeta(Q)) * X^Q
    BoundedReal ratio;      // fast_size / predicted
};

struct ReportMethods {
    bool direct = false;
    bool fast = true;
    bool height = false;
};

std::vector<CountRecord> asymptotic_report(const WeightSystem& ws, const std::vector<Rat>& Xs,
                                           ReportMethods methods, const Rat& tol,
                                           unsigned long long budget = 100000000,
                                           unsigned workers = 1);

}  // namespace wpq
