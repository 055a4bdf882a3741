#pragma once

#include "wpq/height.hpp"
#include "wpq/point.hpp"

#include <optional>
#include <variant>

namespace wpq {

// Certificate that the per-prime congruence system t = -v_p(y_i) (mod n_i)
// has no solution: some pair of residues disagrees modulo the gcd of their
// moduli. Verifiable without rerunning the solver.
struct CongruenceObstruction {
    Int prime;
    struct Entry {
        std::size_t index;
        long residue;
        unsigned long modulus;
    };
    std::vector<Entry> residues;
    std::size_t bad_i = 0, bad_j = 0;  // indices into `residues`
};

// Coordinates with even exponent n_i demand a common sign for lambda, and
// two of them disagree.
struct SignObstruction {
    std::size_t index_pos;  // coordinate forcing lambda > 0
    std::size_t index_neg;  // coordinate forcing lambda < 0
};

// Brute-force search ran out of exponent budget without finding a lift;
// only lift_bruteforce_oracle produces this.
struct SearchExhausted {
    unsigned exponent_bound;
};

using Obstruction = std::variant<std::monostate, CongruenceObstruction, SignObstruction, SearchExhausted>;

struct LiftResult {
    bool liftable = false;
    std::optional<Rat> lambda;             // present iff liftable
    std::optional<WeightedPoint> witness;  // present iff liftable
    Obstruction obstruction;               // present iff not liftable
};

// Degree of the Veronese morphism, q^n * d / prod(q_i). Throws if the
// formula fails to be integral (impossible for a valid WeightSystem).
Int veronese_degree(const WeightSystem& ws);

// Counts orbits of prod_i Z/n_i under the translation action
// a_i -> (a_i + t) mod n_i, t in Z/q, by brute force. Matches
// veronese_degree on every system; exists as its independent check.
unsigned long long orbit_count_oracle(const WeightSystem& ws,
                                      unsigned long long budget = 1000000);

// Exact decision: does y admit a rational preimage under the Veronese map?
// Existence of lambda with lambda * y_i an n_i-th power for every nonzero
// coordinate, decided per prime by chained CRT plus a sign check. Returns a
// witness (lambda, preimage) or a verifiable obstruction certificate.
LiftResult lift_check(const ProjectivePoint& y, const WeightSystem& ws);

// Exhaustive search over lambda = +-prod p^{t_p}, p ranging over the primes
// of y, |t_p| <= exponent_bound. Sound for "liftable"; complete only
// relative to the bound.
LiftResult lift_bruteforce_oracle(const ProjectivePoint& y, const WeightSystem& ws,
                                  unsigned exponent_bound);

// All canonical weighted points mapping to y, from the finite lambda
// parameterization: the congruence solution class modulo lcm(n_i over the
// support)-th powers, both signs where admissible, and every root sign
// choice; deduplicated via canonicalize. Complete for points with full
// support when gcd of the weights is 1.
std::vector<WeightedPoint> fiber_rational_points(const ProjectivePoint& y,
                                                 const WeightSystem& ws);

struct SparsityRecord {
    unsigned long bound = 0;
    unsigned long long total = 0;
    unsigned long long liftable = 0;
    Rat density;  // liftable / total

    SparsityRecord operator+(const SparsityRecord& o) const {
        SparsityRecord r;
        r.bound = bound > o.bound ? bound : o.bound;
        r.total = total + o.total;
        r.liftable = liftable + o.liftable;
        return r;
    }
};

// Runs lift_check on every canonical projective point of Weil height <= B.
SparsityRecord sparsity_scan(const WeightSystem& ws, unsigned long B,
                             unsigned long long budget = 100000000, unsigned workers = 1);

}  // namespace wpq
