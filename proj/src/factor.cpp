#include "wpq/factor.hpp"

#include <algorithm>
#include <sstream>

namespace wpq {

// ---------------------------------------------------------------------------
// small parsing helpers (declared in int.hpp)
// ---------------------------------------------------------------------------

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (Int(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<unsigned long> parse_uint_list(const std::string& s) {
    std::vector<unsigned long> out;
    for (const Rat& r : parse_rat_list(s)) {
        if (r.get_den() != 1 || r <= 0) throw std::invalid_argument("expected positive integer: " + s);
        out.push_back(Int(r.get_num()).get_ui());
    }
    return out;
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 10000;
        std::vector<bool> comp(limit + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!comp[i]) {
                ps.push_back(i);
                for (unsigned long j = i * i; j <= limit; j += i) comp[j] = true;
            }
        }
        return ps;
    }();
    return primes;
}

Int pollard_rho(const Int& n) {
    // Brent variant; n must be odd composite, not a prime power of a small prime.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9e3779b97f4a7c15UL);
    while (true) {
        Int c = rng.get_z_range(n - 3) + 1;
        Int x = rng.get_z_range(n - 2) + 1;
        Int y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, long>& out) {
    for (unsigned long p : small_primes()) {
        if (n == 1) return;
        if (Int(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
            out[Int(p)] += static_cast<long>(e);
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Rat FactoredRational::value() const {
    Rat v(sign);
    for (const auto& [p, e] : exponents) {
        Rat pw = pow_rat(Rat(p), e);
        v *= pw;
    }
    return v;
}

void FactoredRational::mul_prime_power(const Int& p, long e) {
    if (e == 0) return;
    long& slot = exponents[p];
    slot += e;
    if (slot == 0) exponents.erase(p);
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    sign *= o.sign;
    for (const auto& [p, e] : o.exponents) mul_prime_power(p, e);
    return *this;
}

FactoredRational factorize(const Int& n) {
    if (n == 0) throw std::domain_error("zero has no factorization");
    FactoredRational f;
    f.sign = n < 0 ? -1 : 1;
    Int m = n < 0 ? Int(-n) : n;
    factor_into(m, f.exponents);
    // certify: the expansion must reproduce the input exactly
    Int check = f.sign;
    for (const auto& [p, e] : f.exponents) check *= pow_int(p, static_cast<unsigned long>(e));
    if (check != n) throw std::logic_error("factorize: certification failed");
    return f;
}

FactoredRational factorize_rat(const Rat& x) {
    if (x == 0) throw std::domain_error("zero has no factorization");
    FactoredRational f = factorize(Int(x.get_num()));
    FactoredRational d = factorize(Int(x.get_den()));
    for (const auto& [p, e] : d.exponents) f.mul_prime_power(p, -e);
    return f;
}

long valuation(const Rat& x, const Int& p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    if (!is_prime(p)) throw std::invalid_argument("valuation: p is not prime");
    Int num(x.get_num()), den(x.get_den()), tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

std::vector<Int> prime_support(const Rat& x) {
    std::vector<Int> ps;
    if (x == 0) return ps;
    FactoredRational f = factorize_rat(x);
    for (const auto& [p, e] : f.exponents) {
        (void)e;
        ps.push_back(p);
    }
    return ps;
}

}  // namespace wpq
