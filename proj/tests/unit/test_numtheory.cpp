#include <doctest.h>

#include <random>

#include "qcol/numtheory.hpp"

using qcol::BigInt;

namespace {

bool trial_division_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("Miller-Rabin agrees with trial division below 200000") {
  for (unsigned long n = 0; n < 200000; ++n) {
    REQUIRE(qcol::is_prime(BigInt(n)) == trial_division_prime(n));
  }
}

TEST_CASE("strong pseudoprimes to small bases are rejected") {
  // 3215031751 fools bases 2, 3, 5, 7; 3825123056546413051 fools 2..23.
  CHECK_FALSE(qcol::is_prime(BigInt("3215031751")));
  CHECK_FALSE(qcol::is_prime(BigInt("3825123056546413051")));
  CHECK_FALSE(qcol::is_prime(BigInt("318665857834031151167461")));
  CHECK(qcol::is_prime(BigInt("18446744073709551557")));  // largest prime below 2^64
}

TEST_CASE("large values are flagged probabilistic") {
  auto small = qcol::test_primality(BigInt("1000000007"));
  CHECK(small.prime);
  CHECK_FALSE(small.probabilistic);
  auto big = qcol::test_primality(BigInt("170141183460469231731687303715884105727"));  // 2^127 - 1
  CHECK(big.prime);
  CHECK(big.probabilistic);
  CHECK_FALSE(qcol::is_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST_CASE("modular helpers") {
  CHECK(qcol::mod_reduce(-1, 7) == 6);
  CHECK(qcol::mod_reduce(-14, 7) == 0);
  CHECK(qcol::inverse_mod(2, 5) == 3);
  CHECK_THROWS_AS(qcol::inverse_mod(3, 9), qcol::PreconditionError);
  CHECK(qcol::pow_mod(3, 200, 1000000007) == 1 * qcol::pow_mod(9, 100, 1000000007));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t n = (rng() >> 2) | 3, a = rng() % n, b = rng() % n;
    unsigned __int128 ref = static_cast<unsigned __int128>(a) * b % n;
    CHECK(qcol::mul_mod(a, b, n) == static_cast<std::uint64_t>(ref));
  }
  CHECK(qcol::smallest_odd_prime_factor(BigInt(39)) == 3);
  CHECK(qcol::smallest_odd_prime_factor(BigInt(3133)) == 13);
  CHECK(qcol::smallest_odd_prime_factor(BigInt(64)) == 0);
}
