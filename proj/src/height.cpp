#include "wpq/height.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wpq {

ExactHeight::ExactHeight(Rat r, unsigned long s) : radicand(std::move(r)), root(s) {
    if (radicand <= 0) throw std::domain_error("ExactHeight: radicand must be positive");
    if (root == 0) throw std::invalid_argument("ExactHeight: zero root");
    if (radicand == 1) {
        root = 1;
        return;
    }
    if (root == 1) return;
    // extract perfect-power content: k = gcd(root, gcd of all prime exponents)
    FactoredRational f = factorize_rat(radicand);
    unsigned long g = 0;
    for (const auto& [p, e] : f.exponents) {
        (void)p;
        g = std::gcd(g, static_cast<unsigned long>(e < 0 ? -e : e));
    }
    unsigned long k = std::gcd(g, root);
    if (k <= 1) return;
    Rat reduced(1);
    for (const auto& [p, e] : f.exponents)
        reduced *= pow_rat(Rat(p), e / static_cast<long>(k));
    radicand = reduced;
    root /= k;
}

bool ExactHeight::operator<(const ExactHeight& o) const {
    unsigned long l = std::lcm(root, o.root);
    return pow_rat(radicand, static_cast<long>(l / root)) <
           pow_rat(o.radicand, static_cast<long>(l / o.root));
}

Rat ExactHeight::pow(unsigned long e) const {
    if (e % root != 0) throw std::invalid_argument("ExactHeight::pow: root does not divide exponent");
    return pow_rat(radicand, static_cast<long>(e / root));
}

BoundedReal ExactHeight::enclosure(unsigned digits) const {
    if (root == 1) return BoundedReal::exact(radicand);
    return root_enclosure(radicand, root, digits);
}

std::string ExactHeight::to_string() const {
    std::string base = radicand.get_str();
    if (root == 1) return base;
    return base + "^(1/" + std::to_string(root) + ")";
}

ExactHeight weighted_height(const WeightedPoint& p) {
    ExactHeight H = weil_height(veronese(p));
    return ExactHeight(H.radicand, p.system.q);
}

Rat weighted_height_pow_q_local(const WeightedPoint& p) {
    const auto& n = p.system.exponents;
    // finite part: prod_p p^(-min_i n_i v_p(x_i))
    std::set<Int> primes;
    for (const Rat& x : p.coords)
        for (const Int& q : prime_support(x)) primes.insert(q);
    Rat fin(1);
    for (const Int& q : primes) {
        long m = 0;
        bool first = true;
        for (std::size_t i = 0; i < p.coords.size(); ++i) {
            if (p.coords[i] == 0) continue;
            long v = static_cast<long>(n[i]) * valuation(p.coords[i], q);
            if (first || v < m) m = v;
            first = false;
        }
        fin *= pow_rat(Rat(q), -m);
    }
    // Archimedean part: max_i |x_i|^{n_i}
    Rat arch(0);
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        Rat a = abs(p.coords[i]);
        Rat powed = pow_rat(a, static_cast<long>(n[i]));
        if (powed > arch) arch = powed;
    }
    return fin * arch;
}

ExactHeight archimedean_height(const WeightedPoint& p) {
    // max of |x_i|^(1/q_i) by cross-powering with exponent q
    std::size_t best = p.coords.size();
    Rat best_powq;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (p.coords[i] == 0) continue;
        Rat powq = pow_rat(abs(p.coords[i]), static_cast<long>(p.system.exponents[i]));
        if (best == p.coords.size() || powq > best_powq) {
            best = i;
            best_powq = powq;
        }
    }
    return ExactHeight(abs(p.coords[best]), p.system.weights[best]);
}

ExactHeight size_height(const WeightedPoint& p) {
    return archimedean_height(normalize(p));
}

ExactHeight weil_height(const ProjectivePoint& p) {
    Int m = 0;
    for (const Int& z : p.coords) {
        Int a = abs(z);
        if (a > m) m = a;
    }
    return ExactHeight(Rat(m), 1);
}

}  // namespace wpq
