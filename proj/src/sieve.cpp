#include "wpq/sieve.hpp"

#include "wpq/factor.hpp"

namespace wpq {

std::vector<std::int8_t> mobius_sieve(unsigned long N) {
    if (N == 0) throw std::invalid_argument("mobius_sieve: N must be >= 1");
    std::vector<std::int8_t> mu(N + 1, 1);
    std::vector<unsigned long> primes;
    std::vector<bool> composite(N + 1, false);
    mu[0] = 0;
    for (unsigned long i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (unsigned long p : primes) {
            if (i * p > N) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

int mobius_single(const Int& n) {
    if (n <= 0) throw std::invalid_argument("mobius_single: n must be >= 1");
    if (n == 1) return 1;
    FactoredRational f = factorize(n);
    int m = 1;
    for (const auto& [p, e] : f.exponents) {
        (void)p;
        if (e >= 2) return 0;
        m = -m;
    }
    return m;
}

Int euler_totient(const Int& n) {
    if (n <= 0) throw std::invalid_argument("euler_totient: n must be >= 1");
    if (n == 1) return 1;
    FactoredRational f = factorize(n);
    Int phi = n;
    for (const auto& [p, e] : f.exponents) {
        (void)e;
        phi = phi / p * (p - 1);
    }
    return phi;
}

}  // namespace wpq
