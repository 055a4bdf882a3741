#pragma once

#include "wpq/factor.hpp"
#include "wpq/weights.hpp"

namespace wpq {

// A nonzero rational coordinate tuple bound to a weight system. Two tuples
// represent the same point when one is the lambda-scaling of the other,
// coordinate i multiplied by lambda^{q_i}.
struct WeightedPoint {
    std::vector<Rat> coords;
    WeightSystem system;
    bool normalized = false;  // wgcd 1 and sign-canonical

    WeightedPoint(std::vector<Rat> c, WeightSystem ws);

    bool operator==(const WeightedPoint& o) const {
        return coords == o.coords && system == o.system;
    }
};

// Canonical representative of a classical projective point: integer
// coordinates, gcd 1, first nonzero coordinate positive. The constructor
// canonicalizes whatever integer tuple it is given.
struct ProjectivePoint {
    std::vector<Int> coords;

    explicit ProjectivePoint(std::vector<Int> c);

    bool operator==(const ProjectivePoint& o) const = default;
};

// The weighted scaling p -> [lambda^{q_0} x_0 : ... : lambda^{q_n} x_n].
WeightedPoint scale(const WeightedPoint& p, const Rat& lambda);

// Weighted gcd: prod_p p^{e_p} with e_p = min_i floor(v_p(x_i)/q_i), the
// minimum over nonzero coordinates. For all-integer tuples this is the
// largest positive integer d with d^{q_i} | x_i for every i; rational or
// negatively-valued coordinates yield negative exponents.
FactoredRational wgcd(const WeightedPoint& p);

// Scales by 1/wgcd; the result has integer coordinates and wgcd 1.
WeightedPoint normalize(const WeightedPoint& p);

// normalize + sign rule: if the smallest odd-weight index with a nonzero
// coordinate holds a negative value, apply the lambda = -1 scaling. The
// result is the unique orbit representative over Q.
WeightedPoint canonicalize(const WeightedPoint& p);

// Same point in the same weight system?
bool equivalent(const WeightedPoint& a, const WeightedPoint& b);

// The Veronese image [x_0^{n_0} : ... : x_n^{n_n}], cleared to the canonical
// integer projective representative.
ProjectivePoint veronese(const WeightedPoint& p);

}  // namespace wpq
