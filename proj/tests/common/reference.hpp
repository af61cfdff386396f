#pragma once

#include "qcol/alexander.hpp"

namespace qtest {

// Coloring matrix of the seven-crossing diagram with arcs a1..a7 as columns,
// entries from {t, 1-t, -1}.
inline qcol::PolyMatrix seven_three_reference() {
  using qcol::LaurentPoly;
  const LaurentPoly t = LaurentPoly::t(), u = LaurentPoly::from_ints({1, -1}), n(-1), z;
  return {
      {u, n, z, z, z, z, t},
      {n, u, t, z, z, z, z},
      {z, t, u, n, z, z, z},
      {t, z, z, u, n, z, z},
      {z, z, z, t, u, n, z},
      {z, z, z, z, t, u, n},
      {z, z, n, z, z, t, u},
  };
}

}  // namespace qtest
