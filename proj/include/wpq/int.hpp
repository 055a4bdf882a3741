#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpq {

using Int = mpz_class;
using Rat = mpq_class;

// Enumeration would exceed the configured budget; callers map this to the
// dedicated exit code.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A --check oracle disagreed with the primary computation.
struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer power with nonnegative exponent.
inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Rational power; negative exponents invert (base must be nonzero then).
inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rat: 0 to negative power");
    Rat r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), a);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), a);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

// floor(t^e) for rational t >= 0.
inline Int floor_pow(const Rat& t, unsigned long e) {
    if (t < 0) throw std::domain_error("floor_pow: negative base");
    Int num = pow_int(Int(t.get_num()), e);
    Int den = pow_int(Int(t.get_den()), e);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Floor division for (possibly negative) valuations.
inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long long to_ll(const Int& a, const char* what = "value") {
    if (!a.fits_slong_p())
        throw std::overflow_error(std::string(what) + " does not fit in a machine word");
    return a.get_si();
}

// gmpxx has no long long constructors; these go through long (LP64).
static_assert(sizeof(long) == 8, "64-bit long assumed");
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Int make_int_u(unsigned long long v) { return Int(static_cast<unsigned long>(v)); }

// Parse "num" or "num/den" into an exact rational. Throws on malformed input.
Rat parse_rat(const std::string& s);

// Parse a comma-separated list of rationals ("9,81,729/1,59049").
std::vector<Rat> parse_rat_list(const std::string& s);

// Parse a comma-separated list of positive integers.
std::vector<unsigned long> parse_uint_list(const std::string& s);

}  // namespace wpq
