#include "wpq/lift.hpp"

#include "wpq/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wpq {

// ---------------------------------------------------------------------------
// degree formula and its orbit-counting check
// ---------------------------------------------------------------------------

Int veronese_degree(const WeightSystem& ws) {
    Int num = pow_int(Int(ws.q), static_cast<unsigned long>(ws.arity() - 1)) * Int(ws.d);
    Int den = ws.weight_product();
    if (num % den != 0)
        throw std::logic_error("veronese_degree: q^n*d not divisible by the weight product");
    return num / den;
}

unsigned long long orbit_count_oracle(const WeightSystem& ws, unsigned long long budget) {
    unsigned long long space = 1;
    for (unsigned long ni : ws.exponents) {
        if (space > budget / ni) throw BudgetExceeded("orbit oracle too large");
        space *= ni;
    }
    if (space > budget) throw BudgetExceeded("orbit oracle too large");

    const auto& n = ws.exponents;
    const std::size_t k = n.size();
    std::vector<unsigned long> a(k, 0);
    unsigned long long orbits = 0;
    while (true) {
        // a is counted iff it is the lexicographic minimum of its orbit
        // under a_i -> (a_i + t) mod n_i.
        bool minimal = true;
        for (unsigned long t = 1; t < ws.q && minimal; ++t) {
            for (std::size_t i = 0; i < k; ++i) {
                unsigned long c = (a[i] + t) % n[i];
                if (c < a[i]) {
                    minimal = false;
                    break;
                }
                if (c > a[i]) break;
            }
        }
        if (minimal) ++orbits;

        std::size_t pos = k;
        while (pos > 0 && ++a[pos - 1] == n[pos - 1]) {
            a[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return orbits;
}

// ---------------------------------------------------------------------------
// the lifting decision
// ---------------------------------------------------------------------------

namespace {

long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// t == r1 (mod m1), t == r2 (mod m2); returns {t, lcm} or nothing.
std::optional<std::pair<long long, long long>> crt_combine(long long r1, long long m1,
                                                           long long r2, long long m2) {
    long long p, q;
    long long g = egcd(m1, m2, p, q);
    if ((r2 - r1) % g != 0) return std::nullopt;
    long long l = m1 / g * m2;
    long long step = (r2 - r1) / g % (m2 / g);
    long long t = (r1 + (__int128)m1 * step % l) % l;
    if (t < 0) t += l;
    return std::make_pair(t, l);
}

struct LiftSetup {
    std::vector<std::size_t> support;
    std::vector<Int> primes;
    // valuations[pi][si]: v_{primes[pi]}(y_{support[si]})
    std::vector<std::vector<long>> valuations;
};

LiftSetup analyze(const ProjectivePoint& y, const WeightSystem& ws) {
    if (y.coords.size() != ws.arity())
        throw std::invalid_argument("lift: arity of point and weight system differ");
    LiftSetup s;
    std::set<Int> primes;
    for (std::size_t i = 0; i < y.coords.size(); ++i) {
        if (y.coords[i] == 0) continue;
        s.support.push_back(i);
        for (const Int& p : prime_support(Rat(y.coords[i]))) primes.insert(p);
    }
    s.primes.assign(primes.begin(), primes.end());
    s.valuations.resize(s.primes.size());
    for (std::size_t pi = 0; pi < s.primes.size(); ++pi) {
        s.valuations[pi].reserve(s.support.size());
        for (std::size_t idx : s.support)
            s.valuations[pi].push_back(valuation(Rat(y.coords[idx]), s.primes[pi]));
    }
    return s;
}

CongruenceObstruction congruence_certificate(const LiftSetup& s, const WeightSystem& ws,
                                             std::size_t prime_index) {
    CongruenceObstruction ob;
    ob.prime = s.primes[prime_index];
    for (std::size_t si = 0; si < s.support.size(); ++si) {
        std::size_t idx = s.support[si];
        long ni = static_cast<long>(ws.exponents[idx]);
        long r = ((-s.valuations[prime_index][si]) % ni + ni) % ni;
        ob.residues.push_back({idx, r, ws.exponents[idx]});
    }
    // solvability over Z is exactly pairwise compatibility, so an offending
    // pair must exist
    for (std::size_t i = 0; i < ob.residues.size(); ++i) {
        for (std::size_t j = i + 1; j < ob.residues.size(); ++j) {
            long g = static_cast<long>(
                std::gcd(ob.residues[i].modulus, ob.residues[j].modulus));
            if ((ob.residues[i].residue - ob.residues[j].residue) % g != 0) {
                ob.bad_i = i;
                ob.bad_j = j;
                return ob;
            }
        }
    }
    throw std::logic_error("congruence certificate: no offending pair found");
}

int sign_of(const Int& v) { return v < 0 ? -1 : 1; }

// Solves the per-prime congruences; returns exponents t_p >= 0 (mod the lcm
// of the support moduli) or the index of a failing prime.
std::variant<std::vector<long long>, std::size_t> solve_congruences(const LiftSetup& s,
                                                                    const WeightSystem& ws) {
    std::vector<long long> t(s.primes.size(), 0);
    for (std::size_t pi = 0; pi < s.primes.size(); ++pi) {
        long long cur = 0, mod = 1;
        for (std::size_t si = 0; si < s.support.size(); ++si) {
            long long ni = static_cast<long long>(ws.exponents[s.support[si]]);
            long long r = ((-s.valuations[pi][si]) % ni + ni) % ni;
            auto comb = crt_combine(cur, mod, r, ni);
            if (!comb) return pi;
            cur = comb->first;
            mod = comb->second;
        }
        t[pi] = cur;
    }
    return t;
}

// Sign constraint from the even-exponent coordinates: returns +1/-1, or the
// offending pair when the constraint is contradictory.
std::variant<int, SignObstruction> solve_sign(const LiftSetup& s, const ProjectivePoint& y,
                                              const WeightSystem& ws) {
    std::optional<std::size_t> pos, neg;
    for (std::size_t idx : s.support) {
        if (ws.exponents[idx] % 2 != 0) continue;
        if (y.coords[idx] > 0 && !pos) pos = idx;
        if (y.coords[idx] < 0 && !neg) neg = idx;
    }
    if (pos && neg) return SignObstruction{*pos, *neg};
    if (neg) return -1;
    return 1;
}

WeightedPoint build_witness(const LiftSetup& s, const ProjectivePoint& y, const WeightSystem& ws,
                            const std::vector<long long>& t, int eps, const Rat& lambda) {
    std::vector<Rat> x(ws.arity(), Rat(0));
    for (std::size_t si = 0; si < s.support.size(); ++si) {
        std::size_t idx = s.support[si];
        long ni = static_cast<long>(ws.exponents[idx]);
        Rat mag(1);
        for (std::size_t pi = 0; pi < s.primes.size(); ++pi) {
            long long v = t[pi] + s.valuations[pi][si];
            if (v % ni != 0) throw std::logic_error("lift witness: exponent not divisible");
            mag *= pow_rat(Rat(s.primes[pi]), v / ni);
        }
        int sgn = 1;
        if (ni % 2 == 1) sgn = eps * sign_of(y.coords[idx]);
        x[idx] = Rat(sgn) * mag;
        if (pow_rat(x[idx], ni) != lambda * Rat(y.coords[idx]))
            throw std::logic_error("lift witness: x_i^{n_i} != lambda*y_i");
    }
    return WeightedPoint(std::move(x), ws);
}

}  // namespace

LiftResult lift_check(const ProjectivePoint& y, const WeightSystem& ws) {
    LiftSetup s = analyze(y, ws);
    auto solved = solve_congruences(s, ws);
    if (std::holds_alternative<std::size_t>(solved)) {
        LiftResult r;
        r.liftable = false;
        r.obstruction = congruence_certificate(s, ws, std::get<std::size_t>(solved));
        return r;
    }
    const auto& t = std::get<std::vector<long long>>(solved);
    auto sgn = solve_sign(s, y, ws);
    if (std::holds_alternative<SignObstruction>(sgn)) {
        LiftResult r;
        r.liftable = false;
        r.obstruction = std::get<SignObstruction>(sgn);
        return r;
    }
    int eps = std::get<int>(sgn);

    Rat lambda(eps);
    for (std::size_t pi = 0; pi < s.primes.size(); ++pi) {
        if (t[pi] > 100000) throw std::overflow_error("lift: lambda exponent too large");
        lambda *= pow_rat(Rat(s.primes[pi]), t[pi]);
    }
    LiftResult r;
    r.liftable = true;
    r.lambda = lambda;
    r.witness = build_witness(s, y, ws, t, eps, lambda);
    return r;
}

LiftResult lift_bruteforce_oracle(const ProjectivePoint& y, const WeightSystem& ws,
                                  unsigned exponent_bound) {
    LiftSetup s = analyze(y, ws);
    const long long b = exponent_bound;
    const std::size_t np = s.primes.size();

    std::vector<long long> t(np, -b);
    if (np == 0) t.clear();
    while (true) {
        for (int eps : {1, -1}) {
            bool ok = true;
            for (std::size_t si = 0; si < s.support.size() && ok; ++si) {
                std::size_t idx = s.support[si];
                long long ni = static_cast<long long>(ws.exponents[idx]);
                for (std::size_t pi = 0; pi < np; ++pi) {
                    long long v = t[pi] + s.valuations[pi][si];
                    if (v % ni != 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok && ni % 2 == 0 && eps * sign_of(y.coords[idx]) < 0) ok = false;
            }
            if (ok) {
                Rat lambda(eps);
                for (std::size_t pi = 0; pi < np; ++pi)
                    lambda *= pow_rat(Rat(s.primes[pi]), t[pi]);
                std::vector<Rat> x(ws.arity(), Rat(0));
                for (std::size_t si = 0; si < s.support.size(); ++si) {
                    std::size_t idx = s.support[si];
                    long ni = static_cast<long>(ws.exponents[idx]);
                    Rat mag(1);
                    for (std::size_t pi = 0; pi < np; ++pi)
                        mag *= pow_rat(Rat(s.primes[pi]), (t[pi] + s.valuations[pi][si]) / ni);
                    int sgn = ni % 2 == 1 ? eps * sign_of(y.coords[idx]) : 1;
                    x[idx] = Rat(sgn) * mag;
                }
                LiftResult r;
                r.liftable = true;
                r.lambda = lambda;
                r.witness = WeightedPoint(std::move(x), ws);
                return r;
            }
        }
        std::size_t pos = np;
        while (pos > 0 && ++t[pos - 1] > b) {
            t[pos - 1] = -b;
            --pos;
        }
        if (pos == 0) break;
    }
    LiftResult r;
    r.liftable = false;
    r.obstruction = SearchExhausted{exponent_bound};
    return r;
}

std::vector<WeightedPoint> fiber_rational_points(const ProjectivePoint& y,
                                                 const WeightSystem& ws) {
    LiftSetup s = analyze(y, ws);
    auto solved = solve_congruences(s, ws);
    if (std::holds_alternative<std::size_t>(solved)) return {};
    const auto& t = std::get<std::vector<long long>>(solved);

    std::vector<std::size_t> even_support;
    for (std::size_t idx : s.support)
        if (ws.exponents[idx] % 2 == 0) even_support.push_back(idx);

    std::set<std::vector<Rat>> canon;
    for (int eps : {1, -1}) {
        bool feasible = true;
        for (std::size_t idx : even_support)
            if (eps * sign_of(y.coords[idx]) < 0) feasible = false;
        if (!feasible) continue;

        // magnitudes of the n_i-th roots of |lambda*y_i|
        std::vector<Rat> mag(ws.arity(), Rat(0));
        for (std::size_t si = 0; si < s.support.size(); ++si) {
            std::size_t idx = s.support[si];
            long ni = static_cast<long>(ws.exponents[idx]);
            Rat m(1);
            for (std::size_t pi = 0; pi < s.primes.size(); ++pi) {
                long long v = t[pi] + s.valuations[pi][si];
                if (v % ni != 0) throw std::logic_error("fiber: exponent not divisible");
                m *= pow_rat(Rat(s.primes[pi]), v / ni);
            }
            mag[idx] = m;
        }

        const std::size_t nsigns = even_support.size();
        for (unsigned long mask = 0; mask < (1UL << nsigns); ++mask) {
            std::vector<Rat> x(ws.arity(), Rat(0));
            for (std::size_t si = 0; si < s.support.size(); ++si) {
                std::size_t idx = s.support[si];
                if (ws.exponents[idx] % 2 == 1) {
                    int sgn = eps * sign_of(y.coords[idx]);
                    x[idx] = Rat(sgn) * mag[idx];
                }
            }
            for (std::size_t b = 0; b < nsigns; ++b) {
                int sgn = (mask >> b) & 1 ? -1 : 1;
                x[even_support[b]] = Rat(sgn) * mag[even_support[b]];
            }
            WeightedPoint cand = canonicalize(WeightedPoint(std::move(x), ws));
            canon.insert(cand.coords);
        }
    }

    std::vector<WeightedPoint> out;
    out.reserve(canon.size());
    for (const auto& coords : canon) {
        WeightedPoint p(coords, ws);
        p.normalized = true;
        out.push_back(std::move(p));
    }
    return out;
}

SparsityRecord sparsity_scan(const WeightSystem& ws, unsigned long B,
                             unsigned long long budget, unsigned workers) {
    if (B == 0) throw std::invalid_argument("sparsity_scan: bound must be positive");
    Int box = pow_int(Int(2 * B + 1), static_cast<unsigned long>(ws.arity()));
    if (box > make_int_u(budget)) throw BudgetExceeded("sparsity scan box exceeds budget");

    const long long bb = static_cast<long long>(B);
    const std::size_t k = ws.arity();
    std::function<SparsityRecord(long long, long long)> block = [&](long long lo, long long hi) {
        SparsityRecord rec;
        std::vector<long long> yv(k, 0);
        for (long long y0 = lo; y0 < hi; ++y0) {
            yv[0] = y0;
            // odometer over the remaining coordinates
            std::fill(yv.begin() + 1, yv.end(), -bb);
            while (true) {
                // canonical representative: first nonzero positive, gcd 1
                long long g = 0;
                int lead = 0;
                for (long long v : yv) {
                    if (v != 0 && lead == 0) lead = v > 0 ? 1 : -1;
                    g = std::gcd(g, v < 0 ? -v : v);
                }
                if (g == 1 && lead == 1) {
                    std::vector<Int> coords;
                    coords.reserve(k);
                    for (long long v : yv) coords.push_back(make_int(v));
                    ProjectivePoint y(std::move(coords));
                    rec.total += 1;
                    if (lift_check(y, ws).liftable) rec.liftable += 1;
                }
                std::size_t pos = k;
                while (pos > 1 && ++yv[pos - 1] > bb) {
                    yv[pos - 1] = -bb;
                    --pos;
                }
                if (pos == 1) break;
            }
        }
        return rec;
    };
    // first coordinate of a canonical representative is never negative
    SparsityRecord rec = parallel_block_sum<SparsityRecord>(0, bb + 1, workers, block);
    rec.bound = B;
    if (rec.total > 0) {
        rec.density = Rat(static_cast<unsigned long>(rec.liftable),
                          static_cast<unsigned long>(rec.total));
        rec.density.canonicalize();
    }
    return rec;
}

}  // namespace wpq
