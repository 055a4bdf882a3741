#pragma once

#include "wpq/int.hpp"

#include <map>

namespace wpq {

// A nonzero rational in fully factored form: sign * prod p^e with e != 0.
// The exponent map is the canonical home of the p-adic valuations used by
// the weighted gcd and the lifting congruences.
struct FactoredRational {
    int sign = 1;  // +1 or -1
    std::map<Int, long> exponents;

    Rat value() const;
    bool is_one() const { return sign == 1 && exponents.empty(); }

    // Exponent of p (0 if absent).
    long exponent_of(const Int& p) const {
        auto it = exponents.find(p);
        return it == exponents.end() ? 0 : it->second;
    }

    void mul_prime_power(const Int& p, long e);
    FactoredRational& operator*=(const FactoredRational& o);

    bool operator==(const FactoredRational& o) const = default;
};

bool is_prime(const Int& n);

// Exact factorization of a nonzero integer. Trial division with a small
// prime table, Pollard rho on the remaining cofactor; the result is
// certified by re-multiplication before returning.
FactoredRational factorize(const Int& n);

// Factorization of a nonzero rational (denominator primes get negative
// exponents).
FactoredRational factorize_rat(const Rat& x);

// v_p(x) for nonzero rational x and prime p. Rejects composite p.
long valuation(const Rat& x, const Int& p);

// Primes dividing numerator or denominator of x (x may be zero: empty).
std::vector<Int> prime_support(const Rat& x);

}  // namespace wpq
