#include "wpq/point.hpp"

#include <algorithm>
#include <set>

namespace wpq {

WeightedPoint::WeightedPoint(std::vector<Rat> c, WeightSystem ws)
    : coords(std::move(c)), system(std::move(ws)) {
    if (coords.size() != system.arity())
        throw std::invalid_argument("point arity does not match weight system");
    if (std::all_of(coords.begin(), coords.end(), [](const Rat& x) { return x == 0; }))
        throw std::invalid_argument("the zero tuple is not a point");
}

ProjectivePoint::ProjectivePoint(std::vector<Int> c) : coords(std::move(c)) {
    if (coords.empty()) throw std::invalid_argument("empty projective tuple");
    Int g = 0;
    for (const Int& z : coords) g = gcd_int(g, z);
    if (g == 0) throw std::invalid_argument("the zero tuple is not a projective point");
    for (Int& z : coords) z /= g;
    for (const Int& z : coords) {
        if (z != 0) {
            if (z < 0)
                for (Int& w : coords) w = -w;
            break;
        }
    }
}

WeightedPoint scale(const WeightedPoint& p, const Rat& lambda) {
    if (lambda == 0) throw std::invalid_argument("scale: lambda must be nonzero");
    std::vector<Rat> out;
    out.reserve(p.coords.size());
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        out.push_back(pow_rat(lambda, static_cast<long>(p.system.weights[i])) * p.coords[i]);
    return WeightedPoint(std::move(out), p.system);
}

FactoredRational wgcd(const WeightedPoint& p) {
    std::set<Int> primes;
    for (const Rat& x : p.coords)
        for (const Int& q : prime_support(x)) primes.insert(q);
    FactoredRational w;
    for (const Int& q : primes) {
        long e = 0;
        bool first = true;
        for (std::size_t i = 0; i < p.coords.size(); ++i) {
            if (p.coords[i] == 0) continue;  // v_p(0) = +inf, never the min
            long v = floor_div(valuation(p.coords[i], q),
                               static_cast<long>(p.system.weights[i]));
            if (first || v < e) e = v;
            first = false;
        }
        w.mul_prime_power(q, e);
    }
    return w;
}

WeightedPoint normalize(const WeightedPoint& p) {
    FactoredRational w = wgcd(p);
    WeightedPoint out = w.is_one() ? p : scale(p, 1 / w.value());
    out.normalized = false;
    for (const Rat& x : out.coords)
        if (x.get_den() != 1) throw std::logic_error("normalize: non-integral output");
    return out;
}

WeightedPoint canonicalize(const WeightedPoint& p) {
    WeightedPoint out = normalize(p);
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        if (out.system.weights[i] % 2 == 1 && out.coords[i] != 0) {
            if (out.coords[i] < 0) out = scale(out, Rat(-1));
            break;
        }
    }
    out.normalized = true;
    return out;
}

bool equivalent(const WeightedPoint& a, const WeightedPoint& b) {
    if (!(a.system == b.system))
        throw std::invalid_argument("equivalent: mismatched weight systems");
    return canonicalize(a).coords == canonicalize(b).coords;
}

ProjectivePoint veronese(const WeightedPoint& p) {
    std::vector<Rat> image;
    image.reserve(p.coords.size());
    Int den_lcm = 1;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        Rat z = pow_rat(p.coords[i], static_cast<long>(p.system.exponents[i]));
        den_lcm = lcm_int(den_lcm, Int(z.get_den()));
        image.push_back(std::move(z));
    }
    std::vector<Int> cleared;
    cleared.reserve(image.size());
    for (const Rat& z : image) {
        Rat v = z * Rat(den_lcm);
        v.canonicalize();
        cleared.emplace_back(v.get_num());
    }
    return ProjectivePoint(std::move(cleared));
}

}  // namespace wpq
