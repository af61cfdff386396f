#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcol/diagram.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

/// The linear Alexander quandle on Z_n with x * y = m x + (1 - m) y.
/// Requires n >= 3 and gcd(m, n) = 1; m may be negative (m = -1 is the
/// dihedral quandle).
struct QuandleParams {
  std::uint64_t n = 3;
  std::int64_t m = 2;

  static QuandleParams make(std::uint64_t n, std::int64_t m);

  std::uint64_t m_residue() const;
  std::uint64_t m_inverse() const;
  // max(|m|, |m - 1|), the base of the Kauffman-Lopes logarithm.
  BigInt log_base() const;

  friend bool operator==(const QuandleParams&, const QuandleParams&) = default;
};

std::uint64_t quandle_op(const QuandleParams& q, std::uint64_t x, std::uint64_t y);
std::uint64_t quandle_op_inv(const QuandleParams& q, std::uint64_t x, std::uint64_t y);

using ModVector = std::vector<std::uint64_t>;

/// Assignment of residues mod n to the arcs of a diagram, indexed by arc.
struct Coloring {
  QuandleParams params;
  ModVector colors;

  std::size_t distinct_count() const;
  bool is_trivial() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Dense matrix over Z_n. Rank and kernel need n prime.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * cols_ + j] = v % modulus_; }

  ModVector multiply(const ModVector& x) const;
  std::size_t rank() const;

 private:
  friend std::vector<ModVector> kernel_basis(const ModMatrix& m);

  std::size_t rows_, cols_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> data_;
};

// The Alexander matrix with t = m, reduced mod n. Works for composite n.
ModMatrix coloring_matrix(const Diagram& d, const QuandleParams& q);

// Basis of the null space over Z_p (p prime), from the reduced row echelon
// form: one vector per free column.
std::vector<ModVector> kernel_basis(const ModMatrix& m);

// Every crossing relation holds mod n: positive crossings need
// out = in * over, negative ones out = in *^-1 over.
bool verify_coloring(const Diagram& d, const Coloring& c);

// Kernel dimension >= 2, cross-checked against divisibility of the reduced
// Alexander polynomial at m (for links, of (1 - m) times it).
bool is_nontrivially_colorable(const Diagram& d, const QuandleParams& q);

class NotColorable : public Error {
 public:
  using Error::Error;
};

struct MinColorsResult {
  std::size_t count = 0;
  Coloring witness;
  std::size_t kernel_dim = 0;
  std::uint64_t classes = 0;  // affine classes examined
};

// Minimum number of distinct colors over non-trivial colorings of this
// diagram. Colorings are enumerated up to x -> a x + b, which maps colorings
// to colorings and preserves the color count, so only projective classes of
// kernel / span(1, ..., 1) are visited.
MinColorsResult min_colors_on_diagram(const Diagram& d, const QuandleParams& q,
                                      std::uint64_t max_classes = std::uint64_t{1} << 24);

struct KhResult {
  bool kh = false;
  std::optional<Coloring> witness;  // arc-injective coloring, when kh
  std::uint64_t classes = 0;
};

// Does some non-trivial coloring of this diagram give every arc a different
// color? Only the given diagram is searched. Preconditions: the caller
// asserts the diagram is reduced alternating, 1 < m < p, and p equals the
// reduced Alexander polynomial at m and is prime.
KhResult kh_check(const Diagram& d, const QuandleParams& q, bool reduced_alternating);

// Column-collapse check for a non-trivial coloring: merge equal-colored arc
// columns (A1), keep rank(A1) = d - 1 independent rows (A2), add all columns
// into the last (A3) and drop it (B). Then p | det B and |det B| <= M^(d-1).
struct CollapseReport {
  std::uint64_t p = 0;
  std::int64_t m = 0;
  std::size_t distinct = 0;           // d
  ModVector column_colors;            // color of each A1 column
  std::vector<std::vector<BigInt>> a1;
  std::size_t rank_a1 = 0;
  std::vector<std::size_t> selected_rows;  // rows of A1 forming A2
  std::vector<std::vector<BigInt>> b;
  BigInt det_b;
  BigInt bound;  // M^(d-1)
  bool divisible = false;
  bool within_bound = false;
  bool bounds_ok = false;
};

CollapseReport collapse_and_check(const Diagram& d, const Coloring& c);

}  // namespace qcol
