#pragma once

#include "wpq/int.hpp"

#include <cstdint>
#include <vector>

namespace wpq {

// mu(1..N), 1-indexed; entry 0 is unused.
std::vector<std::int8_t> mobius_sieve(unsigned long N);

// mu(n) from the factorization of a single n (used as a cross-check).
int mobius_single(const Int& n);

Int euler_totient(const Int& n);

}  // namespace wpq
