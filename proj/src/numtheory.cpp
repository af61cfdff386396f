#include "qcol/numtheory.hpp"

#include <array>
#include <random>

namespace qcol {

std::uint64_t mod_reduce(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw PreconditionError("mod_reduce: zero modulus");
  if (a >= 0) return static_cast<std::uint64_t>(a) % n;
  // -(a + 1) avoids overflow at INT64_MIN.
  std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) % n + 1) % n;
  return neg == 0 ? 0 : n - neg;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = n, r1 = a % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw PreconditionError("inverse_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(n));
  }
  if (s0 < 0) s0 += n;
  return static_cast<std::uint64_t>(s0);
}

namespace {

// One Miller-Rabin round: n odd > 2, n - 1 = d * 2^s.
bool mr_round(const BigInt& n, const BigInt& d, unsigned long s, const BigInt& base) {
  BigInt a = base % n;
  if (a == 0) return true;
  BigInt x;
  BigInt n1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

}  // namespace

PrimalityResult test_primality(const BigInt& n) {
  static constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  static const BigInt kDeterministicLimit("3317044064679887385961981");
  if (n < 2) return {false, false};
  for (unsigned b : kBases) {
    if (n == b) return {true, false};
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return {false, false};
  }
  BigInt d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned b : kBases) {
    if (!mr_round(n, d, s, BigInt(b))) return {false, false};
  }
  if (n < kDeterministicLimit) return {true, false};

  // Fixed seed keeps results reproducible run to run.
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x9e3779b97f4a7c15UL);
  BigInt span = n - 3;
  for (int round = 0; round < 64; ++round) {
    BigInt base = rng.get_z_range(span) + 2;
    if (!mr_round(n, d, s, base)) return {false, false};
  }
  return {true, true};
}

BigInt smallest_odd_prime_factor(const BigInt& n, unsigned long limit) {
  BigInt m = abs(n);
  while (m != 0 && mpz_even_p(m.get_mpz_t())) m /= 2;
  if (m <= 1) return 0;
  for (unsigned long f = 3; f <= limit; f += 2) {
    if (BigInt(f) * f > m) return m;
    if (mpz_divisible_ui_p(m.get_mpz_t(), f)) return f;
  }
  return is_prime(m) ? m : BigInt(0);
}

}  // namespace qcol
