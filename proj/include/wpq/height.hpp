#pragma once

#include "wpq/bounded_real.hpp"
#include "wpq/point.hpp"

namespace wpq {

// An exact real of the form r^(1/s), r a positive rational, s >= 1. The
// canonical form has s minimal (r is not a perfect k-th power for any
// k | s, k > 1), so equality is syntactic; comparison cross-powers to the
// common lcm exponent and never consults floating point.
struct ExactHeight {
    Rat radicand;
    unsigned long root = 1;

    ExactHeight() : radicand(1), root(1) {}
    ExactHeight(Rat r, unsigned long s);  // reduces to canonical form

    bool operator==(const ExactHeight& o) const = default;
    bool operator<(const ExactHeight& o) const;
    bool operator<=(const ExactHeight& o) const { return *this < o || *this == o; }

    Rat pow(unsigned long e) const;  // exact value of (r^(1/s))^e; requires s | e

    BoundedReal enclosure(unsigned digits = 12) const;
    std::string to_string() const;  // "r^(1/s)" (or just "r" when s = 1)
};

// Weighted height over Q, via the Weil height of the Veronese image:
// h(p) = H(veronese(p))^(1/q).
ExactHeight weighted_height(const WeightedPoint& p);

// h(p)^q computed from the local data instead: the finite-place product
// prod_p p^(-min_i n_i v_p(x_i)) times max_i |x_i|^{n_i}. Independent route
// for the h^q = H(veronese) identity.
Rat weighted_height_pow_q_local(const WeightedPoint& p);

// max_i |x_i|^(1/q_i) at the single Archimedean place of Q.
ExactHeight archimedean_height(const WeightedPoint& p);

// Archimedean height of the wgcd-normalized representative.
ExactHeight size_height(const WeightedPoint& p);

// Classical Weil height of a canonical integer representative: max_i |z_i|.
ExactHeight weil_height(const ProjectivePoint& p);

}  // namespace wpq
