#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qcol/coloring.hpp"
#include "qcol/diagram.hpp"
#include "qcol/registry.hpp"

namespace qtest {

inline const qcol::Registry& registry() {
  static const qcol::Registry r = qcol::Registry::load(QCOL_TEST_REGISTRY);
  return r;
}

inline qcol::Diagram named(const std::string& name) {
  auto pd = registry().find(name);
  if (!pd) throw qcol::PreconditionError("no registry entry " + name);
  return qcol::build_diagram(*pd, name);
}

inline std::vector<std::string> registry_knots() { return {"3_1", "4_1", "5_1", "7_3", "10_145"}; }

// Checks every crossing relation directly from the quandle operation; an
// oracle independent of the matrix route.
inline bool relations_hold(const qcol::Diagram& d, const qcol::QuandleParams& q, const qcol::ModVector& x) {
  for (const auto& c : d.crossings()) {
    const std::uint64_t out = c.sign > 0 ? qcol::quandle_op(q, x[c.under_in], x[c.over])
                                         : qcol::quandle_op_inv(q, x[c.under_in], x[c.over]);
    if (out != x[c.under_out]) return false;
  }
  return true;
}

// Every assignment in Z_n^arcs, filtered by relations_hold.
inline std::vector<qcol::ModVector> brute_force_colorings(const qcol::Diagram& d, const qcol::QuandleParams& q) {
  std::vector<qcol::ModVector> out;
  qcol::ModVector x(d.arc_count(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == x.size()) {
      if (relations_hold(d, q, x)) out.push_back(x);
      return;
    }
    for (std::uint64_t v = 0; v < q.n; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// All vectors of the span of `basis` over Z_p.
inline std::set<qcol::ModVector> span_of(const std::vector<qcol::ModVector>& basis, std::size_t len, std::uint64_t p) {
  std::set<qcol::ModVector> out;
  std::vector<std::uint64_t> coef(basis.size(), 0);
  while (true) {
    qcol::ModVector v(len, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t i = 0; i < len; ++i) v[i] = (v[i] + coef[b] * basis[b][i]) % p;
    out.insert(v);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  return out;
}

inline std::size_t brute_force_min_colors(const qcol::Diagram& d, const qcol::QuandleParams& q) {
  std::size_t best = SIZE_MAX;
  for (const auto& x : brute_force_colorings(d, q)) {
    std::size_t k = std::set<std::uint64_t>(x.begin(), x.end()).size();
    if (k > 1) best = std::min(best, k);
  }
  return best;
}

}  // namespace qtest
