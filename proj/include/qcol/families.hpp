#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcol/bounds.hpp"
#include "qcol/coloring.hpp"
#include "qcol/diagram.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

// Closure of a braid word on `strands` strands. Letter +i is sigma_i and -i
// its inverse (1 <= i < strands); sigma_i crosses the strand at position i
// over the one at i + 1 as both move up.
PdCode braid_closure_pd(int strands, const std::vector<int>& word);

// ---------------------------------------------------------------------------
// Torus knots
// ---------------------------------------------------------------------------

// T(a, b) with gcd(a, b) = 1, canonicalized to 2 <= a < b (signs dropped:
// they do not change the reduced polynomial).
struct TorusParams {
  int a = 2;
  int b = 3;
  static TorusParams make(int a, int b);
  // min(a(b-1), b(a-1)) = b(a-1).
  int crossing_number() const { return b * (a - 1); }
};

// Closure of (sigma_1 ... sigma_{a-1})^b: b(a-1) positive crossings.
PdCode torus_pd(const TorusParams& tp);
Diagram torus_diagram(const TorusParams& tp);
// f(t^b) / f(t) with f(t) = 1 + t + ... + t^(a-1), normalized.
LaurentPoly torus_alexander(const TorusParams& tp);

struct TorusInterval {
  BigInt value;  // reduced polynomial at m
  std::optional<BigInt> p;
  std::optional<int> lower, upper;  // c - (a - 2) and c
  // Kauffman-Lopes bound, for p (or, when the interval is withheld, for the
  // smallest odd prime factor of value when one is found).
  std::optional<int> kl;
  std::optional<BigInt> kl_prime;
};

// (c - (a - 2), c): the interval's endpoints, independent of m.
std::pair<int, int> torus_interval_bounds(const TorusParams& tp);

// Withheld (no p, lower, upper) unless the value at m is an odd prime.
TorusInterval torus_mincol_interval(const TorusParams& tp, long m);

// ---------------------------------------------------------------------------
// Pretzel knots P(-2, 3, a)
// ---------------------------------------------------------------------------

struct PretzelParams {
  int a = 3;  // odd, >= 3
  static PretzelParams from_a(int a);
  static PretzelParams from_l(int l) { return from_a(2 * l + 1); }
  int l() const { return (a - 1) / 2; }
};

// 1 - t + sum_{i=3}^{a} (-1)^(i+1) t^i - t^(a+2) + t^(a+3), cross-checked
// against pretzel_alexander_rational(3, a).
LaurentPoly pretzel_alexander(const PretzelParams& pp);

// Rational formula for P(p, q, -2), p and q odd, divided exactly by (1+t)^3.
LaurentPoly pretzel_alexander_rational(int p, int q);

// Three vertical twist columns with -2, 3 and a half-twists.
PdCode pretzel_pd(const PretzelParams& pp);

// The left-column arcs come first: x, y, z, w are arcs 1..4 with
// z = x * y and y = w * z at the two left crossings.
Diagram pretzel_diagram(const PretzelParams& pp);

// The coloring with x = 1, y = 0 for m = 2 and p = poly(2), which must be an
// odd prime. It uses exactly a + 4 colors (z = 2 and w = 1 = x).
Coloring pretzel_m2_coloring(const PretzelParams& pp);

// Lower bound a + 4 (= k + 1); for m = 2 also the matching explicit coloring.
BoundReport pretzel_mincol_report(const PretzelParams& pp, long m);

}  // namespace qcol
