#pragma once

#include <cstdint>

#include "qcol/laurent.hpp"

namespace qcol {

// Least non-negative residue of a mod n.
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t n);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);
// Inverse of a mod n; throws PreconditionError when gcd(a, n) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

struct PrimalityResult {
  bool prime = false;
  // False when the Miller-Rabin witness set is proven for this size; true for
  // values beyond 3.3e24, where 64 random rounds are used instead.
  bool probabilistic = false;
};

// Miller-Rabin. The first 13 prime bases are a deterministic witness set for
// n < 3317044064679887385961981.
PrimalityResult test_primality(const BigInt& n);
inline bool is_prime(const BigInt& n) { return test_primality(n).prime; }

// Smallest odd prime factor found by trial division up to `limit`; 0 if none.
BigInt smallest_odd_prime_factor(const BigInt& n, unsigned long limit = 1000000);

}  // namespace qcol
