#include "qcol/coloring.hpp"

#include <algorithm>
#include <set>

#include "qcol/alexander.hpp"
#include "qcol/numtheory.hpp"

namespace qcol {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) { return (a + b) % n; }
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) { return (a + n - b) % n; }

void require_prime(std::uint64_t n, const char* what) {
  if (!is_prime(BigInt(std::to_string(n)))) {
    throw PreconditionError(std::string(what) + ": modulus " + std::to_string(n) + " is not prime");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Quandle
// ---------------------------------------------------------------------------

QuandleParams QuandleParams::make(std::uint64_t n, std::int64_t m) {
  if (n < 3) throw PreconditionError("quandle modulus must be >= 3");
  if (n >= kMaxModulus) throw PreconditionError("quandle modulus too large");
  if (gcd_u64(mod_reduce(m, n), n) != 1) {
    throw PreconditionError("gcd(m, n) must be 1 (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  return QuandleParams{n, m};
}

std::uint64_t QuandleParams::m_residue() const { return mod_reduce(m, n); }
std::uint64_t QuandleParams::m_inverse() const { return inverse_mod(m_residue(), n); }

BigInt QuandleParams::log_base() const {
  BigInt a = abs(BigInt(static_cast<long>(m)));
  BigInt b = abs(BigInt(static_cast<long>(m)) - 1);
  return a > b ? a : b;
}

std::uint64_t quandle_op(const QuandleParams& q, std::uint64_t x, std::uint64_t y) {
  std::uint64_t m = q.m_residue();
  return add_mod(mul_mod(m, x % q.n, q.n), mul_mod(sub_mod(1, m, q.n), y % q.n, q.n), q.n);
}

std::uint64_t quandle_op_inv(const QuandleParams& q, std::uint64_t x, std::uint64_t y) {
  std::uint64_t mi = q.m_inverse();
  return add_mod(mul_mod(mi, x % q.n, q.n), mul_mod(sub_mod(1, mi, q.n), y % q.n, q.n), q.n);
}

std::size_t Coloring::distinct_count() const { return std::set<std::uint64_t>(colors.begin(), colors.end()).size(); }

bool Coloring::is_trivial() const { return distinct_count() <= 1; }

// ---------------------------------------------------------------------------
// ModMatrix
// ---------------------------------------------------------------------------

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus < 2 || modulus >= kMaxModulus) throw PreconditionError("ModMatrix: bad modulus");
}

ModVector ModMatrix::multiply(const ModVector& x) const {
  if (x.size() != cols_) throw PreconditionError("ModMatrix::multiply: size mismatch");
  ModVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] = add_mod(out[i], mul_mod(at(i, j), x[j] % modulus_, modulus_), modulus_);
  return out;
}

namespace {

// In-place reduced row echelon form over Z_p; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    std::uint64_t inv = inverse_mod(a[r * cols + c], p);
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = mul_mod(a[r * cols + j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c] == 0) continue;
      std::uint64_t f = a[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j) {
        a[i * cols + j] = sub_mod(a[i * cols + j], mul_mod(f, a[r * cols + j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_of(const std::vector<ModVector>& vectors, std::uint64_t p) {
  if (vectors.empty()) return 0;
  std::size_t cols = vectors.front().size();
  std::vector<std::uint64_t> a;
  for (const auto& v : vectors) a.insert(a.end(), v.begin(), v.end());
  return rref(a, vectors.size(), cols, p).size();
}

}  // namespace

std::size_t ModMatrix::rank() const {
  require_prime(modulus_, "rank");
  std::vector<std::uint64_t> a = data_;
  return rref(a, rows_, cols_, modulus_).size();
}

std::vector<ModVector> kernel_basis(const ModMatrix& m) {
  require_prime(m.modulus_, "kernel_basis");
  const std::uint64_t p = m.modulus_;
  std::vector<std::uint64_t> a = m.data_;
  std::vector<std::size_t> pivots = rref(a, m.rows_, m.cols_, p);
  std::vector<bool> is_pivot(m.cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < m.cols_; ++free) {
    if (is_pivot[free]) continue;
    ModVector v(m.cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub_mod(0, a[r * m.cols_ + free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Colorings
// ---------------------------------------------------------------------------

ModMatrix coloring_matrix(const Diagram& d, const QuandleParams& q) {
  AlexMatrix a = alexander_matrix(d);
  ModMatrix out(a.rows(), a.cols(), q.n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, evaluate_mod(a.entries[i][j], q.m, q.n));
  return out;
}

bool verify_coloring(const Diagram& d, const Coloring& c) {
  if (c.colors.size() != d.arc_count()) return false;
  const auto& q = c.params;
  for (const Crossing& x : d.crossings()) {
    std::uint64_t in = c.colors[x.under_in] % q.n;
    std::uint64_t over = c.colors[x.over] % q.n;
    std::uint64_t out = c.colors[x.under_out] % q.n;
    std::uint64_t expected = x.sign > 0 ? quandle_op(q, in, over) : quandle_op_inv(q, in, over);
    if (expected != out) return false;
  }
  return true;
}

bool is_nontrivially_colorable(const Diagram& d, const QuandleParams& q) {
  require_prime(q.n, "is_nontrivially_colorable");
  std::size_t dim = kernel_basis(coloring_matrix(d, q)).size();
  bool colorable = dim >= 2;

  bool divisible;
  LaurentPoly minor = first_minor(alexander_matrix(d), 0, 0);
  if (minor.is_zero()) {
    divisible = true;
  } else {
    LaurentPoly reduced = reduce_normalize(minor, d.components());
    std::uint64_t v = evaluate_mod(reduced, q.m, q.n);
    if (d.components() >= 2) v = mul_mod(v, mod_reduce(1 - q.m, q.n), q.n);
    divisible = v == 0;
  }
  if (divisible != colorable) {
    throw InvariantError("kernel dimension " + std::to_string(dim) + " disagrees with Alexander divisibility mod " +
                         std::to_string(q.n));
  }
  return colorable;
}

namespace {

// Basis v_1..v_r completing (1, ..., 1) to a basis of the kernel.
std::vector<ModVector> quotient_basis(const std::vector<ModVector>& kernel, std::size_t q, std::uint64_t p) {
  std::vector<ModVector> chosen{ModVector(q, 1)};
  for (const auto& v : kernel) {
    chosen.push_back(v);
    if (rank_of(chosen, p) < chosen.size()) chosen.pop_back();
  }
  if (chosen.size() != kernel.size()) throw InvariantError("all-ones vector is not in the coloring kernel");
  chosen.erase(chosen.begin());
  return chosen;
}

// Calls visit(vector) for one representative of every projective class of
// span(basis); stops early when visit returns true.
template <typename Visit>
std::uint64_t for_each_class(const std::vector<ModVector>& basis, std::uint64_t p, std::uint64_t max_classes,
                             Visit visit) {
  const std::size_t r = basis.size();
  const std::size_t q = basis.front().size();
  // (p^r - 1) / (p - 1), saturating.
  unsigned __int128 total = 0, power = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total += power;
    power *= p;
    if (total > max_classes) throw PreconditionError("coloring search space exceeds " + std::to_string(max_classes) +
                                                     " affine classes");
  }
  std::uint64_t examined = 0;
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::vector<std::uint64_t> coef(r, 0);
    coef[lead] = 1;
    while (true) {
      ModVector v(q, 0);
      for (std::size_t k = lead; k < r; ++k) {
        if (coef[k] == 0) continue;
        for (std::size_t j = 0; j < q; ++j) v[j] = add_mod(v[j], mul_mod(coef[k], basis[k][j], p), p);
      }
      ++examined;
      if (visit(v)) return examined;
      std::size_t k = lead + 1;
      while (k < r && ++coef[k] == p) coef[k++] = 0;
      if (k >= r) break;
    }
  }
  return examined;
}

}  // namespace

MinColorsResult min_colors_on_diagram(const Diagram& d, const QuandleParams& q, std::uint64_t max_classes) {
  require_prime(q.n, "min_colors_on_diagram");
  auto kernel = kernel_basis(coloring_matrix(d, q));
  if (kernel.size() < 2) {
    throw NotColorable("diagram has no non-trivial (" + std::to_string(q.n) + "," + std::to_string(q.m) +
                       ")-coloring");
  }
  auto basis = quotient_basis(kernel, d.arc_count(), q.n);
  MinColorsResult best;
  best.kernel_dim = kernel.size();
  best.count = d.arc_count() + 1;
  best.classes = for_each_class(basis, q.n, max_classes, [&](const ModVector& v) {
    Coloring c{q, v};
    std::size_t k = c.distinct_count();
    if (k < best.count) {
      best.count = k;
      best.witness = std::move(c);
    }
    return best.count == 2;  // nothing non-trivial can use fewer
  });
  if (!verify_coloring(d, best.witness)) throw InvariantError("minimum-color witness fails the crossing relations");
  return best;
}

KhResult kh_check(const Diagram& d, const QuandleParams& q, bool reduced_alternating) {
  if (!reduced_alternating) throw PreconditionError("kh_check: diagram is not asserted reduced alternating");
  if (q.m <= 1 || static_cast<std::uint64_t>(q.m) >= q.n) {
    throw PreconditionError("kh_check: requires 1 < m < p");
  }
  LaurentPoly reduced = reduced_alexander(d).reduced;
  BigInt value = evaluate(reduced, BigInt(static_cast<long>(q.m)));
  if (value != BigInt(std::to_string(q.n))) {
    throw PreconditionError("kh_check: p=" + std::to_string(q.n) + " differs from the reduced Alexander value " +
                            value.get_str() + " at m=" + std::to_string(q.m));
  }
  require_prime(q.n, "kh_check");
  auto kernel = kernel_basis(coloring_matrix(d, q));
  if (kernel.size() < 2) throw InvariantError("kh_check: prime determinant but no non-trivial coloring");
  auto basis = quotient_basis(kernel, d.arc_count(), q.n);
  KhResult r;
  r.classes = for_each_class(basis, q.n, std::uint64_t{1} << 24, [&](const ModVector& v) {
    Coloring c{q, v};
    if (c.distinct_count() != d.arc_count()) return false;
    r.kh = true;
    r.witness = std::move(c);
    return true;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Column collapse
// ---------------------------------------------------------------------------

namespace {

// Incremental row-echelon basis over Q with integer rows.
class RationalRowBasis {
 public:
  bool try_add(std::vector<BigInt> row) {
    for (const auto& [pivot, b] : rows_) {
      if (row[pivot] == 0) continue;
      BigInt f = row[pivot], g = b[pivot];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] * g - b[j] * f;
      BigInt content = 0;
      for (const auto& x : row) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      if (content > 1)
        for (auto& x : row) x /= content;
    }
    auto it = std::find_if(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
    if (it == row.end()) return false;
    rows_.emplace_back(static_cast<std::size_t>(it - row.begin()), std::move(row));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<BigInt>>> rows_;
};

}  // namespace

CollapseReport collapse_and_check(const Diagram& d, const Coloring& c) {
  const QuandleParams& q = c.params;
  if (q.n % 2 == 0) throw PreconditionError("collapse_and_check: p must be an odd prime");
  require_prime(q.n, "collapse_and_check");
  if (c.colors.size() != d.arc_count()) throw PreconditionError("collapse_and_check: coloring size mismatch");
  if (c.is_trivial()) throw PreconditionError("non-trivial coloring required");
  if (!verify_coloring(d, c)) throw PreconditionError("collapse_and_check: coloring violates a crossing relation");

  CollapseReport r;
  r.p = q.n;
  r.m = q.m;

  // Columns of A1 in order of first appearance along the arcs.
  std::vector<std::size_t> column_of(d.arc_count());
  for (ArcIndex a = 0; a < d.arc_count(); ++a) {
    std::uint64_t color = c.colors[a] % q.n;
    auto it = std::find(r.column_colors.begin(), r.column_colors.end(), color);
    column_of[a] = static_cast<std::size_t>(it - r.column_colors.begin());
    if (it == r.column_colors.end()) r.column_colors.push_back(color);
  }
  const std::size_t dd = r.column_colors.size();
  r.distinct = dd;

  AlexMatrix alex = alexander_matrix(d);
  const BigInt m_big(static_cast<long>(q.m));
  r.a1.assign(alex.rows(), std::vector<BigInt>(dd, 0));
  for (std::size_t i = 0; i < alex.rows(); ++i)
    for (ArcIndex a = 0; a < alex.cols(); ++a) r.a1[i][column_of[a]] += evaluate(alex.entries[i][a], m_big);

  RationalRowBasis basis;
  for (std::size_t i = 0; i < r.a1.size(); ++i)
    if (basis.try_add(r.a1[i])) r.selected_rows.push_back(i);
  r.rank_a1 = basis.rank();
  if (r.rank_a1 != dd - 1) {
    throw InvariantError("rank A1 = " + std::to_string(r.rank_a1) + ", expected d - 1 = " + std::to_string(dd - 1) +
                         " (invalid coloring or vanishing Alexander value)");
  }

  // A3's last column is the row sum, which is zero, so B is A2 minus its last
  // column.
  PolyMatrix bpoly;
  for (std::size_t i : r.selected_rows) {
    BigInt row_sum = 0;
    for (const auto& x : r.a1[i]) row_sum += x;
    if (row_sum != 0) throw InvariantError("A1 row does not sum to zero");
    std::vector<BigInt> row(r.a1[i].begin(), r.a1[i].end() - 1);
    std::vector<LaurentPoly> prow;
    for (const auto& x : row) prow.emplace_back(x);
    r.b.push_back(std::move(row));
    bpoly.push_back(std::move(prow));
  }
  LaurentPoly det = determinant(std::move(bpoly));
  r.det_b = det.is_zero() ? BigInt(0) : det.coeff(0);

  // V0 = (y_i - y_d) must solve B V = 0 mod p non-trivially.
  const BigInt p_big(std::to_string(q.n));
  for (const auto& row : r.b) {
    BigInt acc = 0;
    for (std::size_t j = 0; j + 1 < dd; ++j) {
      acc += row[j] * (BigInt(std::to_string(r.column_colors[j])) - BigInt(std::to_string(r.column_colors[dd - 1])));
    }
    if (acc % p_big != 0) throw InvariantError("collapsed color vector does not solve B V = 0 mod p");
  }

  mpz_pow_ui(r.bound.get_mpz_t(), q.log_base().get_mpz_t(), dd - 1);
  r.divisible = r.det_b != 0 && r.det_b % p_big == 0;
  r.within_bound = abs(r.det_b) <= r.bound;
  r.bounds_ok = r.divisible && r.within_bound;
  return r;
}

}  // namespace qcol
