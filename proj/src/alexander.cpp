#include "qcol/alexander.hpp"

#include <algorithm>
#include <climits>

namespace qcol {

AlexMatrix alexander_matrix(const Diagram& d) {
  if (d.crossings().empty()) throw PreconditionError("alexander_matrix: diagram has no crossings");
  if (auto v = validate(d); !v.empty()) throw PreconditionError("alexander_matrix: invalid diagram: " + v.front());
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly one_minus_t = LaurentPoly(1) - t;
  const LaurentPoly minus_one(-1);

  AlexMatrix m;
  m.entries.assign(d.crossings().size(), std::vector<LaurentPoly>(d.arc_count()));
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const Crossing& x = d.crossings()[i];
    auto& row = m.entries[i];
    ArcIndex source = x.sign > 0 ? x.under_in : x.under_out;
    ArcIndex target = x.sign > 0 ? x.under_out : x.under_in;
    row[source] += t;
    row[x.over] += one_minus_t;
    row[target] += minus_one;
    m.row_labels.push_back(i);
  }
  for (ArcIndex a = 0; a < d.arc_count(); ++a) m.col_labels.push_back(a);
  return m;
}

LaurentPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant: matrix is not square");
  if (n == 0) return LaurentPoly(1);

  // Shift everything into Z[t]; multiplying a row by t^s scales the
  // determinant by a unit, which is undone at the end.
  int shift = 0;
  for (auto& row : m) {
    int lo = INT_MAX;
    for (const auto& e : row)
      if (!e.is_zero()) lo = std::min(lo, e.min_exp());
    if (lo == INT_MAX) return {};
    for (auto& e : row) e = e.shifted(-lo);
    shift += lo;
  }

  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1].shifted(shift);
  return sign > 0 ? det : -det;
}

LaurentPoly determinant_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    LaurentPoly term = m[0][j] * determinant_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

LaurentPoly first_minor(const AlexMatrix& m, std::size_t drop_row, std::size_t drop_col) {
  if (m.rows() != m.cols()) throw PreconditionError("first_minor: matrix is not square");
  if (drop_row >= m.rows() || drop_col >= m.cols()) throw PreconditionError("first_minor: index out of range");
  PolyMatrix sub;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == drop_row) continue;
    std::vector<LaurentPoly> row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != drop_col) row.push_back(m.entries[i][j]);
    sub.push_back(std::move(row));
  }
  return determinant(std::move(sub));
}

LaurentPoly reduce_normalize(const LaurentPoly& p, int components) {
  if (p.is_zero()) throw NormalizationError("reduce_normalize: zero polynomial");
  if (components < 1) throw PreconditionError("reduce_normalize: components must be >= 1");
  LaurentPoly q = p;
  if (components >= 2) {
    try {
      q = exact_div(q, LaurentPoly::from_ints({1, -1}));
    } catch (const InexactDivision&) {
      throw NormalizationError("reduce_normalize: 1 - t does not divide " + q.to_string());
    }
  }
  q = q.shifted(-q.min_exp());
  if (q.lowest_coeff() < 0) q = -q;
  if (components >= 2) return q;

  const auto& c = q.coeffs();
  const std::size_t deg = c.size() - 1;
  for (std::size_t r = 0; r <= deg; ++r) {
    if (c[r] != c[deg - r]) {
      throw NormalizationError("reduce_normalize: " + q.to_string() + " is not palindromic");
    }
  }
  if (deg % 2 != 0) throw NormalizationError("reduce_normalize: " + q.to_string() + " has odd degree");
  if (mpz_even_p(c[deg / 2].get_mpz_t())) {
    throw NormalizationError("reduce_normalize: " + q.to_string() + " has even middle coefficient");
  }
  return q;
}

AlexanderResult reduced_alexander(const Diagram& d) {
  AlexMatrix m = alexander_matrix(d);
  AlexanderResult r;
  r.minor = first_minor(m, 0, 0);
  r.reduced = reduce_normalize(r.minor, d.components());
  return r;
}

}  // namespace qcol
