#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcol/error.hpp"

namespace qcol {

using BigInt = mpz_class;

/// Laurent polynomial in one variable t with arbitrary-precision integer
/// coefficients. Stored as a dense coefficient list starting at t^min_exp.
///
/// Canonical form: the first and last stored coefficients are non-zero; the
/// zero polynomial has no coefficients (and min_exp 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit constant promotion is intended
  LaurentPoly(BigInt c);  // NOLINT
  LaurentPoly(std::vector<BigInt> coeffs, int min_exp = 0);

  static LaurentPoly monomial(const BigInt& c, int exp);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly from_ints(std::initializer_list<long> coeffs, int min_exp = 0);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  // Exponent of the highest non-zero term; min_exp() for zero.
  int max_exp() const;
  // max_exp - min_exp; the degree of a polynomial normalized to min_exp 0.
  int span() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int exp) const;
  const BigInt& lowest_coeff() const;
  const BigInt& highest_coeff() const;

  // Multiplication by t^n.
  LaurentPoly shifted(int n) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Renders as "2 - 3t + 3t^2"; negative exponents as "t^-1".
  std::string to_string() const;
  // Accepts the output of to_string() plus an optional '*' between a
  // coefficient and t ("3*t^2"). Whitespace is ignored.
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();

  std::vector<BigInt> coeffs_;
  int min_exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Division that must leave no remainder in Z[t, 1/t].
class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& what, LaurentPoly remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// Exact value at an integer point. Requires min_exp() >= 0.
BigInt evaluate(const LaurentPoly& p, const BigInt& x);

// Value at x modulo n (n >= 2); negative exponents use the inverse of x mod n,
// which must exist.
std::uint64_t evaluate_mod(const LaurentPoly& p, std::int64_t x, std::uint64_t n);

// Equal up to multiplication by a unit +-t^k.
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qcol
