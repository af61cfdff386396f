#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcol/coloring.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

// Digits d_0..d_r of p in base m (least significant first), d_r >= 1.
std::vector<BigInt> base_m_digits(const BigInt& p, const BigInt& m);

// floor(log_base(value)) by exact repeated multiplication; value >= 1, base >= 2.
int floor_log(const BigInt& value, const BigInt& base);

// 2 + floor(log_M p) with M = max(|m|, |m - 1|). Requires p an odd prime and M >= 2.
int kl_lower_bound(const BigInt& p, long m);

enum class Applicability {
  Strict,  // m > max|c_i| + 1
  Weaker,  // m > max|c_i| and the coefficient signs avoid the exceptional tail
  None,
};
std::string to_string(Applicability a);

enum class BoundCase {
  LeadingOneNegativePenultimate,  // c_k = 1 and penultimate non-zero c_j < 0: k + 1
  Other,                          // c_k > 1 or penultimate non-zero c_j > 0: k + 2
};
std::string to_string(BoundCase c);

struct UpperBound {
  std::size_t value = 0;
  std::string source;  // e.g. "crossing number", "explicit coloring"
  std::optional<Diagram> diagram;
  std::optional<Coloring> coloring;
};

struct BoundReport {
  std::string knot_name;
  LaurentPoly poly;
  long m = 0;
  BigInt value;          // poly(m)
  BigInt p;              // prime used for the bounds
  bool p_probabilistic = false;
  Applicability applicability = Applicability::None;
  std::optional<BoundCase> bound_case;
  int degree = 0;        // k
  BigInt leading;        // c_k
  std::optional<BigInt> penultimate;  // last non-zero coefficient below c_k
  int kl = 0;
  std::optional<int> improved;
  std::optional<UpperBound> upper;
  std::vector<std::string> notes;
};

// Maximum |c_i| over all coefficients.
BigInt max_abs_coeff(const LaurentPoly& poly);

// True when the negative run (zeros allowed inside) ending right below c_k
// starts at some j < k - 1: the one sign pattern where the weaker hypothesis
// m > max|c_i| is not enough.
bool needs_strict_hypothesis(const LaurentPoly& poly);

// Knot bound. poly must be a normalized knot polynomial and p = poly(m) an
// odd prime; the improved bound is withheld when neither hypothesis holds.
BoundReport improved_lower_bound(const LaurentPoly& poly, long m, std::string knot_name = {});

// Link bound: 2 + floor(log_M p) for a prime factor p of poly(m).
BoundReport link_lower_bound(const LaurentPoly& poly, long m, const BigInt& p, std::string name = {});

// Every non-zero coefficient is +-1 and consecutive non-zero coefficients
// alternate in sign.
bool lspace_pattern_check(const LaurentPoly& poly);

struct ExpansionValue {
  BigInt p;
  int floor_log = 0;
  int predicted = 0;    // k - 1 or k
  BoundCase bound_case = BoundCase::Other;
  Applicability hypothesis = Applicability::None;
};

// floor(log_m poly(m)) together with the value the base-m expansion predicts:
// k - 1 when c_k = 1 and the penultimate non-zero coefficient is negative,
// otherwise k. Throws PreconditionError when the hypothesis on m fails and
// InvariantError when the prediction is wrong.
ExpansionValue expansion_value(const LaurentPoly& poly, long m);

struct ScanEntry {
  long m = 0;
  BigInt value;
  bool probabilistic = false;
};

// Every m in [m_from, m_to] where poly(m) is an odd prime, ordered by m.
std::vector<ScanEntry> prime_scan(const LaurentPoly& poly, long m_from, long m_to);

}  // namespace qcol
