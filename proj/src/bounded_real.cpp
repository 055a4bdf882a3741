#include "wpq/bounded_real.hpp"

#include <algorithm>

namespace wpq {

BoundedReal::BoundedReal(Rat lo, Rat hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower > upper) throw std::invalid_argument("BoundedReal: lower > upper");
}

BoundedReal BoundedReal::operator+(const BoundedReal& o) const {
    return BoundedReal(lower + o.lower, upper + o.upper);
}

BoundedReal BoundedReal::operator-(const BoundedReal& o) const {
    return BoundedReal(lower - o.upper, upper - o.lower);
}

BoundedReal BoundedReal::operator*(const BoundedReal& o) const {
    Rat a = lower * o.lower, b = lower * o.upper, c = upper * o.lower, d = upper * o.upper;
    return BoundedReal(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

BoundedReal BoundedReal::operator/(const BoundedReal& o) const {
    if (o.lower <= 0 && o.upper >= 0) throw std::domain_error("BoundedReal: division by interval containing 0");
    BoundedReal inv(1 / o.upper, 1 / o.lower);
    return *this * inv;
}

BoundedReal BoundedReal::pow(unsigned long e) const {
    BoundedReal r = BoundedReal::exact(1);
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
}

BoundedReal BoundedReal::scale(const Rat& c) const {
    if (c >= 0) return BoundedReal(lower * c, upper * c);
    return BoundedReal(upper * c, lower * c);
}

// ---------------------------------------------------------------------------
// zeta
// ---------------------------------------------------------------------------

BoundedReal zeta(unsigned long s, const Rat& tol) {
    if (s < 2) throw std::invalid_argument("zeta: s must be >= 2 (series diverges)");
    if (tol <= 0) throw std::invalid_argument("zeta: tol must be positive");

    // Pick N so the gap between the two tail bounds is <= tol/2:
    //   gap = [N^(1-s) - (N+1)^(1-s)] / (s-1)  <=  s * N^(-s)  (mean value bound)
    unsigned long N = 2;
    auto tail_gap_ok = [&](unsigned long n) {
        Rat gap = (pow_rat(Rat(1, n), static_cast<long>(s - 1)) -
                   pow_rat(Rat(1, n + 1), static_cast<long>(s - 1))) /
                  Rat(s - 1);
        return gap <= tol / 2;
    };
    while (!tail_gap_ok(N)) N *= 2;

    // Partial sum in scaled-integer (dyadic) arithmetic: summing exact mpq
    // terms 1/k^s would blow the common denominator up to lcm(1..N)^s.
    // floor(2^B / k^s) underestimates each term by < 1 ulp, so the true
    // partial sum lies in [S, S + N/2^B].
    unsigned bits = 1;
    {
        Rat need = Rat(2 * N) / tol;  // want N/2^B <= tol/2
        Int ceilneed(need.get_num() / need.get_den() + 1);
        bits = static_cast<unsigned>(mpz_sizeinbase(ceilneed.get_mpz_t(), 2)) + 1;
    }
    Int scale = pow_int(2, bits);
    Int sum_lo = 0;
    for (unsigned long k = 1; k <= N; ++k) {
        Int den = pow_int(Int(k), s);
        sum_lo += scale / den;  // floor
    }
    Rat partial_lo(sum_lo, scale);
    partial_lo.canonicalize();
    Rat partial_hi = partial_lo + Rat(N, 1) / Rat(scale);

    Rat tail_lo = pow_rat(Rat(1, N + 1), static_cast<long>(s - 1)) / Rat(s - 1);
    Rat tail_hi = pow_rat(Rat(1, N), static_cast<long>(s - 1)) / Rat(s - 1);

    BoundedReal out(partial_lo + tail_lo, partial_hi + tail_hi);
    if (out.width() > tol) throw std::logic_error("zeta: enclosure wider than tolerance");
    return out;
}

BoundedReal pi_enclosure() {
    // pi truncated at 40 decimals, so pi lies in [lo, lo + 1e-40].
    Rat lo("31415926535897932384626433832795028841971/10000000000000000000000000000000000000000");
    lo.canonicalize();
    Rat ulp("1/10000000000000000000000000000000000000000");
    ulp.canonicalize();
    return BoundedReal(lo, lo + ulp);
}

BoundedReal sqrt_enclosure(const Int& n, unsigned precision_bits) {
    if (n < 0) throw std::domain_error("sqrt_enclosure: negative input");
    Int scaled = n * pow_int(2, 2 * precision_bits);
    Int r;
    mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
    Int denom = pow_int(2, precision_bits);
    Rat lo(r, denom), hi(r + 1, denom);
    lo.canonicalize();
    hi.canonicalize();
    return BoundedReal(lo, hi);
}

BoundedReal root_enclosure(const Rat& r, unsigned long s, unsigned digits) {
    if (r <= 0) throw std::domain_error("root_enclosure: base must be positive");
    if (s == 0) throw std::invalid_argument("root_enclosure: zero root");
    Int M = pow_int(10, digits);
    // t = floor((num * M^s / den)^(1/s))  =>  t/M <= r^(1/s) < (t+1)/M
    Int scaled = Int(r.get_num()) * pow_int(M, s) / Int(r.get_den());
    Int t;
    mpz_root(t.get_mpz_t(), scaled.get_mpz_t(), s);
    Rat lo(t, M), hi(t + 1, M);
    lo.canonicalize();
    hi.canonicalize();
    return BoundedReal(lo, hi);
}

}  // namespace wpq
