#include "qcol/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <tuple>

#include "qcol/alexander.hpp"
#include "qcol/numtheory.hpp"

namespace qcol {

using Slot = PlanarBuilder::Slot;

PdCode braid_closure_pd(int strands, const std::vector<int>& word) {
  if (strands < 1) throw PreconditionError("braid_closure_pd: need at least one strand");
  PlanarBuilder b;
  std::vector<std::optional<Slot>> top(strands), bottom(strands);
  for (int letter : word) {
    int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= strands) throw PreconditionError("braid_closure_pd: bad generator");
    std::size_t c = b.add_crossing(letter > 0);
    Slot sw{c, PlanarBuilder::SW}, se{c, PlanarBuilder::SE};
    if (top[i]) b.join(*top[i], sw); else bottom[i] = sw;
    if (top[i + 1]) b.join(*top[i + 1], se); else bottom[i + 1] = se;
    top[i] = Slot{c, PlanarBuilder::NW};
    top[i + 1] = Slot{c, PlanarBuilder::NE};
  }
  std::vector<Slot> starts;
  for (int pos = 0; pos < strands; ++pos) {
    if (!top[pos]) {
      throw DiagramError(DiagramError::Kind::FreeLoop,
                         "braid strand " + std::to_string(pos + 1) + " meets no crossing");
    }
    b.join(*top[pos], *bottom[pos]);
    starts.push_back(*bottom[pos]);
  }
  return b.trace(starts);
}

// ---------------------------------------------------------------------------
// Torus knots
// ---------------------------------------------------------------------------

TorusParams TorusParams::make(int a, int b) {
  a = std::abs(a);
  b = std::abs(b);
  if (a > b) std::swap(a, b);
  if (a < 2) throw PreconditionError("torus knot needs |a|, |b| >= 2");
  if (std::gcd(a, b) != 1) throw PreconditionError("torus knot needs gcd(a, b) = 1");
  return TorusParams{a, b};
}

PdCode torus_pd(const TorusParams& tp) {
  std::vector<int> word;
  for (int rep = 0; rep < tp.b; ++rep)
    for (int i = 1; i < tp.a; ++i) word.push_back(i);
  return braid_closure_pd(tp.a, word);
}

Diagram torus_diagram(const TorusParams& tp) {
  return build_diagram(torus_pd(tp), "T(" + std::to_string(tp.a) + "," + std::to_string(tp.b) + ")");
}

LaurentPoly torus_alexander(const TorusParams& tp) {
  std::vector<BigInt> f(tp.a, 1), f_tb(static_cast<std::size_t>((tp.a - 1) * tp.b + 1), 0);
  for (int i = 0; i < tp.a; ++i) f_tb[static_cast<std::size_t>(i * tp.b)] = 1;
  LaurentPoly q;
  try {
    q = exact_div(LaurentPoly(f_tb), LaurentPoly(f));
  } catch (const InexactDivision& e) {
    throw InvariantError(std::string("torus_alexander: ") + e.what());
  }
  return reduce_normalize(q, 1);
}

std::pair<int, int> torus_interval_bounds(const TorusParams& tp) {
  const int c = tp.crossing_number();
  return {c - (tp.a - 2), c};
}

TorusInterval torus_mincol_interval(const TorusParams& tp, long m) {
  if (m <= 1) throw PreconditionError("torus_mincol_interval: m must be > 1");
  TorusInterval r;
  LaurentPoly poly = torus_alexander(tp);
  r.value = evaluate(poly, BigInt(m));
  if (r.value >= 3 && mpz_odd_p(r.value.get_mpz_t()) && is_prime(r.value)) {
    r.p = r.value;
    std::tie(r.lower, r.upper) = torus_interval_bounds(tp);
    r.kl = kl_lower_bound(r.value, m);
    r.kl_prime = r.value;
    // The interval's lower end is the improved bound k + 1.
    BoundReport br = improved_lower_bound(poly, m);
    if (!br.improved || *br.improved != *r.lower) {
      throw InvariantError("torus_mincol_interval: lower end disagrees with the improved bound");
    }
    return r;
  }
  BigInt f = smallest_odd_prime_factor(r.value);
  if (f >= 3) {
    r.kl = kl_lower_bound(f, m);
    r.kl_prime = f;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Pretzel knots
// ---------------------------------------------------------------------------

PretzelParams PretzelParams::from_a(int a) {
  if (a < 3 || a % 2 == 0) throw PreconditionError("pretzel P(-2,3,a) needs odd a >= 3");
  return PretzelParams{a};
}

LaurentPoly pretzel_alexander_rational(int p, int q) {
  LaurentPoly num;
  auto add = [&](long c, int e) { num += LaurentPoly::monomial(c, e); };
  add(1, 0);
  add(2, 1);
  add(1, 1 + p);
  add(1, 1 + q);
  add(-1, 3);
  add(-1, p + q);
  add(1, p + 2);
  add(1, q + 2);
  add(2, p + q + 2);
  add(1, 3 + p + q);
  LaurentPoly one_plus_t = LaurentPoly::from_ints({1, 1});
  return exact_div(num, one_plus_t * one_plus_t * one_plus_t);
}

LaurentPoly pretzel_alexander(const PretzelParams& pp) {
  const int a = pp.a;
  std::vector<BigInt> c(static_cast<std::size_t>(a + 4), 0);
  c[0] = 1;
  c[1] = -1;
  for (int i = 3; i <= a; ++i) c[i] = (i % 2 == 1) ? 1 : -1;  // (-1)^(i+1)
  c[a + 2] = -1;
  c[a + 3] = 1;
  LaurentPoly closed = reduce_normalize(LaurentPoly(c), 1);
  LaurentPoly rational = reduce_normalize(pretzel_alexander_rational(3, a), 1);
  if (!(closed == rational)) {
    throw InvariantError("pretzel_alexander: closed form " + closed.to_string() + " disagrees with " +
                         rational.to_string());
  }
  return closed;
}

PdCode pretzel_pd(const PretzelParams& pp) {
  const std::vector<int> twists{-2, 3, pp.a};
  PlanarBuilder b;
  std::vector<std::vector<std::size_t>> col;
  for (int q : twists) {
    std::vector<std::size_t> ids;
    // Positive columns put the NW<->SE strand on top.
    for (int k = 0; k < std::abs(q); ++k) ids.push_back(b.add_crossing(q < 0));
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      b.join({ids[k], PlanarBuilder::SW}, {ids[k + 1], PlanarBuilder::NW});
      b.join({ids[k], PlanarBuilder::SE}, {ids[k + 1], PlanarBuilder::NE});
    }
    col.push_back(std::move(ids));
  }
  for (std::size_t j = 0; j + 1 < col.size(); ++j) {
    b.join({col[j].front(), PlanarBuilder::NE}, {col[j + 1].front(), PlanarBuilder::NW});
    b.join({col[j].back(), PlanarBuilder::SE}, {col[j + 1].back(), PlanarBuilder::SW});
  }
  b.join({col.front().front(), PlanarBuilder::NW}, {col.back().front(), PlanarBuilder::NE});
  b.join({col.front().back(), PlanarBuilder::SW}, {col.back().back(), PlanarBuilder::SE});
  // Oriented so the left column reads z = x * y and y = w * z.
  return b.trace({Slot{col.back().front(), PlanarBuilder::NE}});
}

namespace {

// Crossing relation written as result = source * over.
struct Relation {
  ArcIndex source, over, result;
};

Relation relation_of(const Crossing& x) {
  return x.sign > 0 ? Relation{x.under_in, x.over, x.under_out} : Relation{x.under_out, x.over, x.under_in};
}

}  // namespace

Diagram pretzel_diagram(const PretzelParams& pp) {
  Diagram d = build_diagram(pretzel_pd(pp), "P(-2,3," + std::to_string(pp.a) + ")");
  // The first two crossings form the left column.
  const Relation r0 = relation_of(d.crossings()[0]);
  const Relation r1 = relation_of(d.crossings()[1]);
  std::optional<std::array<ArcIndex, 4>> xyzw;
  for (auto [first, second] : {std::pair{r0, r1}, std::pair{r1, r0}}) {
    // first: z = x * y; second: y = w * z.
    if (second.result == first.over && second.over == first.result) {
      xyzw = std::array<ArcIndex, 4>{first.source, first.over, first.result, second.source};
      break;
    }
  }
  if (!xyzw) throw InvariantError("pretzel_diagram: left column does not have the expected relations");
  const auto& v = *xyzw;
  if (std::set<ArcIndex>(v.begin(), v.end()).size() != 4) {
    throw InvariantError("pretzel_diagram: left column arcs are not distinct");
  }
  std::vector<ArcIndex> perm(d.arc_count(), d.arc_count());
  for (std::size_t k = 0; k < 4; ++k) perm[v[k]] = k;
  ArcIndex next = 4;
  for (ArcIndex a = 0; a < d.arc_count(); ++a)
    if (perm[a] == d.arc_count()) perm[a] = next++;
  return d.relabel_arcs(perm);
}

Coloring pretzel_m2_coloring(const PretzelParams& pp) {
  constexpr long m = 2;
  const BigInt value = evaluate(pretzel_alexander(pp), BigInt(m));
  if (value < 3 || !mpz_odd_p(value.get_mpz_t()) || !is_prime(value)) {
    BigInt f = smallest_odd_prime_factor(value);
    std::string detail = f >= 3 && f != value ? " (divisible by " + f.get_str() + ")" : "";
    throw PreconditionError("pretzel_m2_coloring: reduced polynomial at 2 is " + value.get_str() +
                            ", not an odd prime" + detail);
  }
  if (!value.fits_ulong_p()) throw PreconditionError("pretzel_m2_coloring: p too large");
  const std::uint64_t p = value.get_ui();
  const QuandleParams q = QuandleParams::make(p, m);
  const Diagram d = pretzel_diagram(pp);

  // Kernel vectors with x = 1, y = 0: alpha * (1, ..., 1) + beta * u with
  // beta = 1 / (u_x - u_y) and alpha = -beta * u_y.
  auto kernel = kernel_basis(coloring_matrix(d, q));
  const ModVector* u = nullptr;
  for (const auto& v : kernel)
    if (v[0] != v[1]) u = &v;
  if (!u) throw InvariantError("pretzel_m2_coloring: no coloring separates x and y");
  std::uint64_t beta = inverse_mod(((*u)[0] + p - (*u)[1]) % p, p);
  std::uint64_t alpha = (p - mul_mod(beta, (*u)[1], p)) % p;
  Coloring c{q, ModVector(d.arc_count())};
  for (ArcIndex a = 0; a < d.arc_count(); ++a) c.colors[a] = (alpha + mul_mod(beta, (*u)[a], p)) % p;

  if (!verify_coloring(d, c)) throw InvariantError("pretzel_m2_coloring: coloring fails a crossing relation");
  if (c.colors[0] != 1 || c.colors[1] != 0 || c.colors[2] != m % p || c.colors[3] != (m - 1) % p) {
    throw InvariantError("pretzel_m2_coloring: left column colors are not (1, 0, m, m - 1)");
  }
  if (c.distinct_count() != static_cast<std::size_t>(pp.a + 4)) {
    throw InvariantError("pretzel_m2_coloring: expected " + std::to_string(pp.a + 4) + " colors, found " +
                         std::to_string(c.distinct_count()));
  }
  return c;
}

BoundReport pretzel_mincol_report(const PretzelParams& pp, long m) {
  if (m <= 1) throw PreconditionError("pretzel_mincol_report: m must be > 1");
  LaurentPoly poly = pretzel_alexander(pp);
  BoundReport r = improved_lower_bound(poly, m, "P(-2,3," + std::to_string(pp.a) + ")");
  if (!r.improved || *r.improved != pp.a + 4) {
    throw InvariantError("pretzel_mincol_report: improved bound is not a + 4");
  }
  if (m == 2) {
    Coloring c = pretzel_m2_coloring(pp);
    r.upper = UpperBound{c.distinct_count(), "explicit coloring", pretzel_diagram(pp), c};
  }
  return r;
}

}  // namespace qcol
