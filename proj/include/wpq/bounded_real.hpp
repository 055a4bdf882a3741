#pragma once

#include "wpq/int.hpp"

namespace wpq {

// A rigorous enclosure [lower, upper] of a real number, all bookkeeping in
// exact rationals. Every operation returns an interval guaranteed to contain
// the true result; no floating point is consulted anywhere.
struct BoundedReal {
    Rat lower;
    Rat upper;

    BoundedReal() : lower(0), upper(0) {}
    BoundedReal(Rat lo, Rat hi);
    static BoundedReal exact(const Rat& v) { return BoundedReal(v, v); }

    Rat width() const { return upper - lower; }
    Rat mid() const { return (lower + upper) / 2; }
    bool contains(const Rat& v) const { return lower <= v && v <= upper; }
    bool contains(const BoundedReal& o) const { return lower <= o.lower && o.upper <= upper; }
    bool overlaps(const BoundedReal& o) const { return lower <= o.upper && o.lower <= upper; }

    BoundedReal operator+(const BoundedReal& o) const;
    BoundedReal operator-(const BoundedReal& o) const;
    BoundedReal operator*(const BoundedReal& o) const;
    BoundedReal operator/(const BoundedReal& o) const;  // 0 must not lie in o
    BoundedReal pow(unsigned long e) const;
    BoundedReal scale(const Rat& c) const;
};

// Enclosure of zeta(s) of width <= tol, s >= 2: partial sum plus the
// integral tail bound (N+1)^(1-s)/(s-1) <= tail <= N^(1-s)/(s-1).
BoundedReal zeta(unsigned long s, const Rat& tol);

// Fixed high-precision enclosure of pi (width 1e-40).
BoundedReal pi_enclosure();

// Enclosure of sqrt(n), n >= 0 integer, width <= 1/2^precision_bits.
BoundedReal sqrt_enclosure(const Int& n, unsigned precision_bits = 128);

// Enclosure of r^(1/s) for rational r > 0, width <= 10^-digits.
BoundedReal root_enclosure(const Rat& r, unsigned long s, unsigned digits = 12);

}  // namespace wpq
