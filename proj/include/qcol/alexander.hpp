#pragma once

#include <vector>

#include "qcol/diagram.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Crossings x arcs matrix of the coloring relations over Z[t, 1/t].
struct AlexMatrix {
  PolyMatrix entries;
  std::vector<std::size_t> row_labels;  // crossing indices
  std::vector<ArcIndex> col_labels;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
};

// Row of a positive crossing: t*x_in + (1-t)*x_over - x_out.
// Row of a negative crossing is the inverse relation multiplied through by t:
// t*x_out + (1-t)*x_over - x_in.
AlexMatrix alexander_matrix(const Diagram& d);

// Fraction-free (Bareiss) determinant; entries may carry negative exponents.
LaurentPoly determinant(PolyMatrix m);

// Cofactor expansion along the first row. Exponential; test oracle only.
LaurentPoly determinant_cofactor(const PolyMatrix& m);

// Determinant with one row and one column removed. The 0x0 minor is 1.
LaurentPoly first_minor(const AlexMatrix& m, std::size_t drop_row, std::size_t drop_col);

class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Knots: unit-normalize to min_exp 0 with positive constant term, then check
// palindromy, even degree and odd middle coefficient.
// Links: divide by (1 - t) first, then shift and fix the sign.
LaurentPoly reduce_normalize(const LaurentPoly& p, int components);

struct AlexanderResult {
  LaurentPoly minor;    // first minor dropping row 0 / column 0
  LaurentPoly reduced;  // reduce_normalize(minor)
};

AlexanderResult reduced_alexander(const Diagram& d);

}  // namespace qcol
