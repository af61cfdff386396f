#include "qcol/bounds.hpp"

#include "qcol/alexander.hpp"
#include "qcol/numtheory.hpp"

namespace qcol {

std::vector<BigInt> base_m_digits(const BigInt& p, const BigInt& m) {
  if (p < 1) throw PreconditionError("base_m_digits: p must be >= 1");
  if (m < 2) throw PreconditionError("base_m_digits: base must be >= 2");
  std::vector<BigInt> digits;
  BigInt rest = p;
  while (rest > 0) {
    digits.push_back(rest % m);
    rest /= m;
  }
  return digits;
}

int floor_log(const BigInt& value, const BigInt& base) {
  if (value < 1) throw PreconditionError("floor_log: value must be >= 1");
  if (base < 2) throw PreconditionError("floor_log: base must be >= 2");
  int r = 0;
  BigInt power = base;
  while (power <= value) {
    ++r;
    power *= base;
  }
  return r;
}

namespace {

BigInt log_base_for(long m) {
  BigInt a = abs(BigInt(m)), b = abs(BigInt(m) - 1);
  return a > b ? a : b;
}

void require_odd_prime(const BigInt& p, const char* what) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw PreconditionError(std::string(what) + ": " + p.get_str() + " is not an odd prime");
  }
}

std::optional<BigInt> penultimate_nonzero(const LaurentPoly& poly) {
  const auto& c = poly.coeffs();
  for (std::size_t i = c.size() - 1; i-- > 0;)
    if (c[i] != 0) return c[i];
  return std::nullopt;
}

BoundCase classify(const LaurentPoly& poly) {
  auto pen = penultimate_nonzero(poly);
  if (poly.highest_coeff() == 1 && pen && *pen < 0) return BoundCase::LeadingOneNegativePenultimate;
  return BoundCase::Other;
}

Applicability hypothesis_for(const LaurentPoly& poly, long m) {
  BigInt bound = max_abs_coeff(poly);
  BigInt mm(m);
  if (mm > bound + 1) return Applicability::Strict;
  if (mm > bound && !needs_strict_hypothesis(poly)) return Applicability::Weaker;
  return Applicability::None;
}

void require_normalized_knot_poly(const LaurentPoly& poly) {
  if (poly.is_zero()) throw PreconditionError("zero polynomial");
  LaurentPoly normalized;
  try {
    normalized = reduce_normalize(poly, 1);
  } catch (const NormalizationError& e) {
    throw PreconditionError(std::string("not a knot polynomial: ") + e.what());
  }
  if (!(normalized == poly)) throw PreconditionError("polynomial is not normalized: " + poly.to_string());
}

}  // namespace

int kl_lower_bound(const BigInt& p, long m) {
  require_odd_prime(p, "kl_lower_bound");
  BigInt big_m = log_base_for(m);
  if (big_m < 2) throw PreconditionError("kl_lower_bound: max(|m|, |m-1|) must be >= 2");
  return 2 + floor_log(p, big_m);
}

std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::Strict: return "strict";
    case Applicability::Weaker: return "weaker";
    case Applicability::None: return "none";
  }
  return "none";
}

std::string to_string(BoundCase c) {
  return c == BoundCase::LeadingOneNegativePenultimate ? "leading-one-negative-penultimate" : "other";
}

BigInt max_abs_coeff(const LaurentPoly& poly) {
  BigInt best = 0;
  for (const auto& c : poly.coeffs())
    if (abs(c) > best) best = abs(c);
  return best;
}

bool needs_strict_hypothesis(const LaurentPoly& poly) {
  const auto& c = poly.coeffs();
  if (c.size() < 3) return false;
  const std::size_t k = c.size() - 1;
  // Lowest index j of the negative run (zeros allowed inside) that ends
  // right below c_k; none when the last non-zero below c_k is positive.
  std::optional<std::size_t> j;
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] > 0) break;
    if (c[i] < 0) j = i;
  }
  return j && *j + 1 < k;
}

BoundReport improved_lower_bound(const LaurentPoly& poly, long m, std::string knot_name) {
  require_normalized_knot_poly(poly);
  BoundReport r;
  r.knot_name = std::move(knot_name);
  r.poly = poly;
  r.m = m;
  r.value = evaluate(poly, BigInt(m));
  require_odd_prime(r.value, "improved_lower_bound: p = poly(m)");
  r.p = r.value;
  r.p_probabilistic = test_primality(r.p).probabilistic;
  r.degree = poly.span();
  r.leading = poly.highest_coeff();
  r.penultimate = penultimate_nonzero(poly);
  r.bound_case = classify(poly);
  r.applicability = hypothesis_for(poly, m);
  r.kl = kl_lower_bound(r.p, m);
  if (r.applicability != Applicability::None) {
    r.improved = r.degree + (*r.bound_case == BoundCase::LeadingOneNegativePenultimate ? 1 : 2);
  } else {
    r.notes.push_back("m does not exceed max|c_i| (+1 for this sign pattern); improved bound withheld");
  }
  if (evaluate(poly, BigInt(1)) == -1) {
    r.notes.push_back("polynomial takes the value -1 at t=1 under the c_0 > 0 normalization");
  }
  return r;
}

BoundReport link_lower_bound(const LaurentPoly& poly, long m, const BigInt& p, std::string name) {
  if (poly.is_zero()) throw PreconditionError("link_lower_bound: zero polynomial");
  BoundReport r;
  r.knot_name = std::move(name);
  r.poly = poly;
  r.m = m;
  r.value = evaluate(poly, BigInt(m));
  if (r.value == 0) throw PreconditionError("link_lower_bound: polynomial vanishes at m");
  require_odd_prime(p, "link_lower_bound");
  if (r.value % p != 0) throw PreconditionError("link_lower_bound: p does not divide poly(m)");
  r.p = p;
  r.p_probabilistic = test_primality(p).probabilistic;
  r.degree = poly.span();
  r.leading = poly.highest_coeff();
  r.penultimate = penultimate_nonzero(poly);
  r.kl = kl_lower_bound(p, m);
  r.notes.push_back("link: only the 2 + floor(log_M p) bound applies");
  return r;
}

bool lspace_pattern_check(const LaurentPoly& poly) {
  int last_sign = 0;
  for (const auto& c : poly.coeffs()) {
    if (c == 0) continue;
    if (abs(c) != 1) return false;
    int s = c > 0 ? 1 : -1;
    if (s == last_sign) return false;
    last_sign = s;
  }
  return last_sign != 0;
}

ExpansionValue expansion_value(const LaurentPoly& poly, long m) {
  require_normalized_knot_poly(poly);
  if (m <= 1) throw PreconditionError("expansion_value: m must be > 1");
  ExpansionValue v;
  v.hypothesis = hypothesis_for(poly, m);
  if (v.hypothesis == Applicability::None) {
    throw PreconditionError("expansion_value: m=" + std::to_string(m) + " does not satisfy the hypothesis for " +
                            poly.to_string());
  }
  v.p = evaluate(poly, BigInt(m));
  if (v.p < 1) throw InvariantError("expansion_value: poly(m) = " + v.p.get_str() + " is not positive");
  v.floor_log = floor_log(v.p, BigInt(m));
  v.bound_case = classify(poly);
  const int k = poly.span();
  v.predicted = v.bound_case == BoundCase::LeadingOneNegativePenultimate ? k - 1 : k;
  if (v.floor_log != v.predicted) {
    throw InvariantError("expansion_value: floor(log_" + std::to_string(m) + " " + v.p.get_str() + ") = " +
                         std::to_string(v.floor_log) + " but the base-m expansion predicts " +
                         std::to_string(v.predicted));
  }
  return v;
}

std::vector<ScanEntry> prime_scan(const LaurentPoly& poly, long m_from, long m_to) {
  if (m_from > m_to) throw PreconditionError("prime_scan: empty range");
  std::vector<ScanEntry> out;
  for (long m = m_from; m <= m_to; ++m) {
    BigInt v = evaluate(poly, BigInt(m));
    if (v < 3 || mpz_even_p(v.get_mpz_t())) continue;
    PrimalityResult pr = test_primality(v);
    if (pr.prime) out.push_back({m, v, pr.probabilistic});
  }
  return out;
}

}  // namespace qcol
