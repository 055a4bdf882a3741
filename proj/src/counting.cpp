#include "wpq/counting.hpp"

#include "wpq/constants.hpp"
#include "wpq/parallel.hpp"
#include "wpq/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wpq {

// ---------------------------------------------------------------------------
// box and Moebius counts (weight lists may be empty: the fixed-tuple count
// of an all-odd system reduces to an empty product)
// ---------------------------------------------------------------------------

namespace {

Int box_count_weights(const std::vector<unsigned long>& weights, const Rat& t) {
    if (t <= 0) return 0;
    Int prod = 1;
    for (unsigned long w : weights) prod *= 2 * floor_pow(t, w) + 1;
    return prod - 1;
}

Int primitive_count_weights(const std::vector<unsigned long>& weights, const Rat& X) {
    if (X < 1) return 0;
    Int Dmax(X.get_num() / X.get_den());
    unsigned long D = Dmax.get_ui();
    std::vector<std::int8_t> mu = mobius_sieve(D);
    Int total = 0;
    for (unsigned long d = 1; d <= D; ++d) {
        if (mu[d] == 0) continue;
        Rat Xd = X / Rat(d);
        total += Int(static_cast<long>(mu[d])) * box_count_weights(weights, Xd);
    }
    return total;
}

}  // namespace

Int count_box(const WeightSystem& ws, const Rat& t) {
    if (t <= 0) throw std::invalid_argument("count_box: bound must be positive");
    return box_count_weights(ws.weights, t);
}

Int count_primitive_fast(const WeightSystem& ws, const Rat& X) {
    return primitive_count_weights(ws.weights, X);
}

Int fixed_tuple_count(const WeightSystem& ws, const Rat& X) {
    std::vector<unsigned long> even;
    for (unsigned long w : ws.weights)
        if (w % 2 == 0) even.push_back(w);
    return primitive_count_weights(even, X);
}

// ---------------------------------------------------------------------------
// direct enumeration
//
// The pivot coordinate (the one with the largest bound) is never looped
// over: for each assignment of the remaining coordinates, the number of
// admissible pivot values follows from a small inclusion-exclusion over the
// primes that could still divide the weighted gcd, plus the sign rule.
// ---------------------------------------------------------------------------

namespace {

constexpr long long kSpfCap = 1 << 20;

std::vector<int> build_spf(long long limit) {
    std::vector<int> spf(limit + 1, 0);
    for (long long i = 2; i <= limit; ++i) {
        if (spf[i] == 0)
            for (long long j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = static_cast<int>(i);
    }
    return spf;
}

bool divides_pow(long long x, long long p, unsigned long e) {
    // p^e | x?
    for (unsigned long i = 0; i < e; ++i) {
        if (x % p != 0) return false;
        x /= p;
    }
    return true;
}

// #{x in [1, B] : no prime p has p^e | x}
long long powerfree_count(long long B, unsigned long e) {
    if (B < 1) return 0;
    if (e == 1) return 1;  // only x = 1 lacks every prime divisor
    std::vector<long long> primes;
    for (long long p = 2;; ++p) {
        long long pe = 1;
        bool fits = true;
        for (unsigned long i = 0; i < e; ++i) {
            if (pe > B / p) {
                fits = false;
                break;
            }
            pe *= p;
        }
        if (!fits) break;
        bool prime = true;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(p);
    }
    long long count = 0;
    for (long long x = 1; x <= B; ++x) {
        bool free = true;
        for (long long p : primes)
            if (divides_pow(x, p, e)) {
                free = false;
                break;
            }
        if (free) ++count;
    }
    return count;
}

struct DirectContext {
    const WeightSystem& ws;
    std::size_t pivot;
    std::vector<std::size_t> loop_idx;  // non-pivot indices in original order
    std::vector<long long> bounds;      // per original index
    std::vector<int> spf;
    long long pivot_powerfree;  // cached all-zero-prefix contribution
};

// Candidate primes that divide the weighted gcd as far as the non-pivot
// coordinates are concerned: p with p^{q_i} | x_i for every non-pivot i.
void collect_candidates(const DirectContext& ctx, const std::vector<long long>& x,
                        std::vector<long long>& out) {
    out.clear();
    std::size_t first_nz = ctx.ws.arity();
    for (std::size_t i : ctx.loop_idx)
        if (x[i] != 0) {
            first_nz = i;
            break;
        }
    if (first_nz == ctx.ws.arity()) return;  // all zero
    long long v = x[first_nz] < 0 ? -x[first_nz] : x[first_nz];
    unsigned long need = ctx.ws.weights[first_nz];
    while (v > 1) {
        long long p = ctx.spf[v];
        unsigned long e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e < need) continue;
        bool all = true;
        for (std::size_t i : ctx.loop_idx) {
            if (i == first_nz || x[i] == 0) continue;
            if (!divides_pow(x[i] < 0 ? -x[i] : x[i], p, ctx.ws.weights[i])) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(p);
    }
}

// sum over subsets T of candidates of (-1)^|T| floor(B / (prod T)^{e}):
// pivot values in [1, B] whose weighted gcd contribution stays trivial.
long long mobius_pivot_count(const std::vector<long long>& cands, long long B, unsigned long e) {
    long long total = 0;
    const std::size_t k = cands.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        long long m = 1;
        bool overflow = false;
        for (std::size_t b = 0; b < k; ++b) {
            if (!((mask >> b) & 1)) continue;
            for (unsigned long i = 0; i < e; ++i) {
                if (m > B / cands[b]) {
                    overflow = true;
                    break;
                }
                m *= cands[b];
            }
            if (overflow) break;
        }
        long long term = overflow ? 0 : B / m;
        total += __builtin_popcountl(mask) % 2 == 0 ? term : -term;
    }
    return total;
}

long long direct_count_for_assignment(const DirectContext& ctx, const std::vector<long long>& x,
                                      std::vector<long long>& cand_scratch) {
    const WeightSystem& ws = ctx.ws;
    const long long B = ctx.bounds[ctx.pivot];
    const unsigned long qp = ws.weights[ctx.pivot];

    bool all_zero = true;
    for (std::size_t i : ctx.loop_idx)
        if (x[i] != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) return ctx.pivot_powerfree * (qp % 2 == 1 ? 1 : 2);

    // first odd-weight nonzero coordinate before/after the pivot
    std::optional<std::size_t> pre_odd, post_odd;
    for (std::size_t i = 0; i < ws.arity(); ++i) {
        if (i == ctx.pivot || ws.weights[i] % 2 == 0 || x[i] == 0) continue;
        if (i < ctx.pivot && !pre_odd) pre_odd = i;
        if (i > ctx.pivot && !post_odd) {
            post_odd = i;
            break;
        }
    }

    collect_candidates(ctx, x, cand_scratch);
    long long S = mobius_pivot_count(cand_scratch, B, qp);
    std::optional<std::size_t> eff = pre_odd ? pre_odd : post_odd;
    long long zero_ok = (cand_scratch.empty() && (!eff || x[*eff] > 0)) ? 1 : 0;

    if (pre_odd) return x[*pre_odd] < 0 ? 0 : 2 * S + zero_ok;
    if (qp % 2 == 1) return S + zero_ok;
    if (post_odd && x[*post_odd] < 0) return 0;
    return 2 * S + zero_ok;
}

Int count_points_size_direct(const WeightSystem& ws, const Rat& X, unsigned long long budget,
                             unsigned workers) {
    const std::size_t arity = ws.arity();
    DirectContext ctx{ws, 0, {}, {}, {}, 0};

    ctx.bounds.resize(arity);
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < arity; ++i) {
        Int b = floor_pow(X, ws.weights[i]);
        ctx.bounds[i] = to_ll(b, "direct enumeration bound");
        if (ws.weights[i] > ws.weights[pivot]) pivot = i;
    }
    ctx.pivot = pivot;
    for (std::size_t i = 0; i < arity; ++i)
        if (i != pivot) ctx.loop_idx.push_back(i);

    Int prefix_box = 1;
    long long max_loop_bound = 1;
    for (std::size_t i : ctx.loop_idx) {
        prefix_box *= 2 * make_int(ctx.bounds[i]) + 1;
        max_loop_bound = std::max(max_loop_bound, ctx.bounds[i]);
    }
    if (prefix_box > make_int_u(budget)) throw BudgetExceeded("direct enumeration exceeds budget");
    if (max_loop_bound > kSpfCap)
        throw BudgetExceeded("direct enumeration coordinate bound too large");
    // worst-case total must stay inside unsigned long long
    if (prefix_box * (2 * make_int(ctx.bounds[pivot]) + 1) > Int("18000000000000000000"))
        throw BudgetExceeded("direct enumeration count would overflow");

    ctx.spf = build_spf(max_loop_bound);
    ctx.pivot_powerfree = powerfree_count(ctx.bounds[pivot], ws.weights[pivot]);

    const std::size_t first = ctx.loop_idx.front();
    const long long B0 = ctx.bounds[first];
    std::function<unsigned long long(long long, long long)> block = [&](long long lo,
                                                                        long long hi) {
        unsigned long long sum = 0;
        std::vector<long long> x(arity, 0);
        std::vector<long long> cand;
        for (long long v0 = lo; v0 < hi; ++v0) {
            x[first] = v0 - B0;
            for (std::size_t j = 1; j < ctx.loop_idx.size(); ++j)
                x[ctx.loop_idx[j]] = -ctx.bounds[ctx.loop_idx[j]];
            while (true) {
                sum += static_cast<unsigned long long>(direct_count_for_assignment(ctx, x, cand));
                std::size_t pos = ctx.loop_idx.size();
                while (pos > 1) {
                    std::size_t i = ctx.loop_idx[pos - 1];
                    if (++x[i] <= ctx.bounds[i]) break;
                    x[i] = -ctx.bounds[i];
                    --pos;
                }
                if (pos == 1) break;
            }
        }
        return sum;
    };
    unsigned long long total =
        parallel_block_sum<unsigned long long>(0, 2 * B0 + 1, workers, block);
    return make_int_u(total);
}

}  // namespace

Int count_points_size(const WeightSystem& ws, const Rat& X, CountMethod method,
                      unsigned long long budget, unsigned workers) {
    if (X < 1) throw std::invalid_argument("count_points_size: X must be >= 1");
    if (method == CountMethod::Fast) {
        Int primitive = count_primitive_fast(ws, X);
        Int fixed = fixed_tuple_count(ws, X);
        Int twice = primitive + fixed;
        if (twice % 2 != 0) throw std::logic_error("Burnside parity violated");
        return twice / 2;
    }
    return count_points_size_direct(ws, X, budget, workers);
}

// ---------------------------------------------------------------------------
// height-based counting: fiber sums over the Veronese image
// ---------------------------------------------------------------------------

namespace {

Int height_fiber_sum(const WeightSystem& ws, const Rat& X, unsigned long long budget,
                     unsigned workers, bool full_support_only) {
    if (X < 1) throw std::invalid_argument("height count: X must be >= 1");
    long long T = to_ll(floor_pow(X, ws.q), "height enumeration bound");
    const std::size_t k = ws.arity();
    Int box = pow_int(2 * make_int(T) + 1, static_cast<unsigned long>(k));
    if (box > make_int_u(budget)) throw BudgetExceeded("height enumeration exceeds budget");

    std::function<unsigned long long(long long, long long)> block = [&](long long lo,
                                                                        long long hi) {
        unsigned long long sum = 0;
        std::vector<long long> yv(k, 0);
        for (long long y0 = lo; y0 < hi; ++y0) {
            yv[0] = y0;
            std::fill(yv.begin() + 1, yv.end(), -T);
            while (true) {
                long long g = 0;
                int lead = 0;
                bool full = true;
                for (long long v : yv) {
                    if (v == 0) full = false;
                    if (v != 0 && lead == 0) lead = v > 0 ? 1 : -1;
                    g = std::gcd(g, v < 0 ? -v : v);
                }
                if (g == 1 && lead == 1 && (full || !full_support_only)) {
                    std::vector<Int> coords;
                    coords.reserve(k);
                    for (long long v : yv) coords.push_back(make_int(v));
                    ProjectivePoint y(std::move(coords));
                    sum += fiber_rational_points(y, ws).size();
                }
                std::size_t pos = k;
                while (pos > 1 && ++yv[pos - 1] > T) {
                    yv[pos - 1] = -T;
                    --pos;
                }
                if (pos == 1) break;
            }
        }
        return sum;
    };
    unsigned long long total = parallel_block_sum<unsigned long long>(0, T + 1, workers, block);
    return make_int_u(total);
}

}  // namespace

Int count_points_height(const WeightSystem& ws, const Rat& X, unsigned long long budget,
                        unsigned workers) {
    return height_fiber_sum(ws, X, budget, workers, false);
}

Int count_points_height_full_support(const WeightSystem& ws, const Rat& X,
                                     unsigned long long budget, unsigned workers) {
    return height_fiber_sum(ws, X, budget, workers, true);
}

HeightBoxCheck count_points_height_box(const WeightSystem& ws, const Rat& X, unsigned slack,
                                       unsigned long long budget) {
    if (X < 1) throw std::invalid_argument("height box check: X must be >= 1");
    const std::size_t k = ws.arity();
    std::vector<long long> bounds(k);
    Int box = 1;
    for (std::size_t i = 0; i < k; ++i) {
        bounds[i] = to_ll(floor_pow(Rat(slack) * X, ws.weights[i]), "height box bound");
        box *= 2 * make_int(bounds[i]) + 1;
    }
    if (box > make_int_u(budget)) throw BudgetExceeded("height box check exceeds budget");

    Int Xq_num = pow_int(Int(X.get_num()), ws.q);
    Int Xq_den = pow_int(Int(X.get_den()), ws.q);

    std::set<std::vector<long long>> reps, reps_full;
    std::vector<long long> xv(k, -bounds[0]);
    for (std::size_t i = 1; i < k; ++i) xv[i] = -bounds[i];
    while (true) {
        bool nonzero = false;
        for (long long v : xv)
            if (v != 0) nonzero = true;
        if (nonzero) {
            std::vector<Rat> coords;
            coords.reserve(k);
            for (long long v : xv) coords.emplace_back(Rat(static_cast<long>(v)));
            WeightedPoint p(coords, ws);
            if (wgcd(p).is_one()) {
                // h <= X  iff  H(veronese(p)) * den^q <= num^q
                ExactHeight H = weil_height(veronese(p));
                if (Int(H.radicand.get_num()) * Xq_den <= Xq_num) {
                    WeightedPoint c = canonicalize(p);
                    std::vector<long long> key;
                    key.reserve(k);
                    bool full = true;
                    for (const Rat& r : c.coords) {
                        key.push_back(to_ll(Int(r.get_num()), "canonical coord"));
                        if (r == 0) full = false;
                    }
                    reps.insert(key);
                    if (full) reps_full.insert(key);
                }
            }
        }
        std::size_t pos = k;
        while (pos > 0 && ++xv[pos - 1] > bounds[pos - 1]) {
            xv[pos - 1] = -bounds[pos - 1];
            --pos;
        }
        if (pos == 0) break;
    }
    return HeightBoxCheck{Int(static_cast<unsigned long>(reps.size())),
                          Int(static_cast<unsigned long>(reps_full.size()))};
}

// ---------------------------------------------------------------------------
// report rows
// ---------------------------------------------------------------------------

std::vector<CountRecord> asymptotic_report(const WeightSystem& ws, const std::vector<Rat>& Xs,
                                           ReportMethods methods, const Rat& tol,
                                           unsigned long long budget, unsigned workers) {
    if (Xs.empty()) throw std::invalid_argument("asymptotic_report: no X values");
    for (std::size_t i = 1; i < Xs.size(); ++i)
        if (!(Xs[i - 1] < Xs[i]))
            throw std::invalid_argument("asymptotic_report: X values must be ascending");

    BoundedReal c = rational_leading_constant(ws, tol);
    std::vector<CountRecord> out;
    out.reserve(Xs.size());
    for (const Rat& X : Xs) {
        CountRecord rec;
        rec.X = X;
        rec.fast_size = count_points_size(ws, X, CountMethod::Fast, budget, workers);
        if (methods.direct)
            rec.direct_size = count_points_size(ws, X, CountMethod::Direct, budget, workers);
        if (methods.height) rec.height_count = count_points_height(ws, X, budget, workers);
        rec.predicted = c.scale(pow_rat(X, static_cast<long>(ws.Q)));
        rec.ratio = BoundedReal::exact(Rat(rec.fast_size)) / rec.predicted;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace wpq
