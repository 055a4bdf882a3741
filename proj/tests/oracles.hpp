// Test-only independent oracles. These deliberately avoid the library's
// counting and canonical-form code paths so that agreement means something.
#pragma once

#include "wpq/counting.hpp"

#include <numeric>
#include <set>

namespace oracle {

using wpq::Int;
using wpq::Rat;

// Primes dividing |n|, by trial division only.
inline std::vector<long long> trial_primes(long long n) {
    std::vector<long long> ps;
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline long long vp(long long x, long long p) {
    long long v = 0;
    if (x < 0) x = -x;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Largest positive integer d with d^{q_i} | x_i for all i (integer tuple,
// not all zero).
inline long long wgcd_int(const std::vector<long long>& xs,
                          const std::vector<unsigned long>& q) {
    std::set<long long> primes;
    for (long long x : xs)
        if (x != 0)
            for (long long p : trial_primes(x)) primes.insert(p);
    long long w = 1;
    for (long long p : primes) {
        long long e = -1;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] == 0) continue;
            long long f = vp(xs[i], p) / static_cast<long long>(q[i]);
            if (e < 0 || f < e) e = f;
        }
        for (long long k = 0; k < e; ++k) w *= p;
    }
    return w;
}

inline std::vector<long long> canonical_tuple(std::vector<long long> xs,
                                              const std::vector<unsigned long>& q) {
    long long w = wgcd_int(xs, q);
    if (w > 1)
        for (std::size_t i = 0; i < xs.size(); ++i) {
            long long d = 1;
            for (unsigned long k = 0; k < q[i]; ++k) d *= w;
            xs[i] /= d;
        }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (q[i] % 2 == 1 && xs[i] != 0) {
            if (xs[i] < 0)
                for (std::size_t j = 0; j < xs.size(); ++j)
                    if (q[j] % 2 == 1) xs[j] = -xs[j];
            break;
        }
    }
    return xs;
}

// Per-tuple enumeration of equivalence classes in the Archimedean box:
// canonicalize everything, dedup in a set. Small boxes only.
inline long long naive_size_count(const std::vector<unsigned long>& q, long long X) {
    std::vector<long long> bounds;
    for (unsigned long w : q) {
        long long b = 1;
        for (unsigned long k = 0; k < w; ++k) b *= X;
        bounds.push_back(b);
    }
    std::set<std::vector<long long>> classes;
    std::vector<long long> xs(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) xs[i] = -bounds[i];
    while (true) {
        bool nonzero = false;
        for (long long v : xs)
            if (v != 0) nonzero = true;
        if (nonzero) classes.insert(canonical_tuple(xs, q));
        std::size_t pos = q.size();
        while (pos > 0 && ++xs[pos - 1] > bounds[pos - 1]) {
            xs[pos - 1] = -bounds[pos - 1];
            --pos;
        }
        if (pos == 0) break;
    }
    return static_cast<long long>(classes.size());
}

// wgcd-1 tuples in the box, counted one by one.
inline long long naive_primitive_count(const std::vector<unsigned long>& q, long long X) {
    std::vector<long long> bounds;
    for (unsigned long w : q) {
        long long b = 1;
        for (unsigned long k = 0; k < w; ++k) b *= X;
        bounds.push_back(b);
    }
    long long count = 0;
    std::vector<long long> xs(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) xs[i] = -bounds[i];
    while (true) {
        bool nonzero = false;
        for (long long v : xs)
            if (v != 0) nonzero = true;
        if (nonzero && wgcd_int(xs, q) == 1) ++count;
        std::size_t pos = q.size();
        while (pos > 0 && ++xs[pos - 1] > bounds[pos - 1]) {
            xs[pos - 1] = -bounds[pos - 1];
            --pos;
        }
        if (pos == 0) break;
    }
    return count;
}

// Classical projective count: canonical integer tuples with gcd 1, first
// nonzero coordinate positive, sup-norm <= X. No weighted machinery at all.
inline long long classical_projective_count(std::size_t arity, long long X) {
    long long count = 0;
    std::vector<long long> xs(arity, -X);
    while (true) {
        long long g = 0;
        int lead = 0;
        for (long long v : xs) {
            if (v != 0 && lead == 0) lead = v > 0 ? 1 : -1;
            g = std::gcd(g, v < 0 ? -v : v);
        }
        if (g == 1 && lead == 1) ++count;
        std::size_t pos = arity;
        while (pos > 0 && ++xs[pos - 1] > X) {
            xs[pos - 1] = -X;
            --pos;
        }
        if (pos == 0) break;
    }
    return count;
}

// Weighted-equivalence by brute-force search over lambda = +-prod p^{t_p},
// p running over the primes of both tuples, |t_p| <= bound.
inline bool lambda_search_equivalent(const wpq::WeightedPoint& a, const wpq::WeightedPoint& b,
                                     long bound) {
    std::set<Int> primes;
    for (const Rat& x : a.coords)
        for (const Int& p : wpq::prime_support(x)) primes.insert(p);
    for (const Rat& x : b.coords)
        for (const Int& p : wpq::prime_support(x)) primes.insert(p);
    std::vector<Int> ps(primes.begin(), primes.end());
    std::vector<long> t(ps.size(), -bound);
    while (true) {
        Rat mag(1);
        for (std::size_t i = 0; i < ps.size(); ++i) mag *= wpq::pow_rat(Rat(ps[i]), t[i]);
        for (int sgn : {1, -1}) {
            Rat lambda = Rat(sgn) * mag;
            if (wpq::scale(a, lambda).coords == b.coords) return true;
        }
        std::size_t pos = ps.size();
        while (pos > 0 && ++t[pos - 1] > bound) {
            t[pos - 1] = -bound;
            --pos;
        }
        if (pos == 0) break;
    }
    return false;
}

// mu(n) by trial-division squarefree factorization.
inline int mu_direct(long long n) {
    int m = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace oracle
