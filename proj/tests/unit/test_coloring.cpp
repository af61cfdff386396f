#include <doctest.h>

#include <random>
#include <set>

#include "qcol/alexander.hpp"
#include "qcol/bounds.hpp"
#include "qcol/coloring.hpp"
#include "qcol/families.hpp"
#include "qcol/numtheory.hpp"
#include "support.hpp"

using namespace qcol;

TEST_CASE("quandle parameters") {
  CHECK_THROWS_AS(QuandleParams::make(2, 1), PreconditionError);
  CHECK_THROWS_AS(QuandleParams::make(9, 3), PreconditionError);
  CHECK_THROWS_AS(QuandleParams::make(10, -4), PreconditionError);
  QuandleParams q = QuandleParams::make(7, -3);
  CHECK(q.m_residue() == 4);
  CHECK(mul_mod(q.m_residue(), q.m_inverse(), 7) == 1);
  CHECK(QuandleParams::make(5, -1).log_base() == 2);
  CHECK(QuandleParams::make(43, 7).log_base() == 7);
}

TEST_CASE("quandle operation examples") {
  CHECK(quandle_op(QuandleParams::make(5, 2), 1, 0) == 2);
  for (std::uint64_t n : {3u, 5u, 9u, 12u}) {
    QuandleParams d = QuandleParams::make(n, -1);
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = 0; y < n; ++y) CHECK(quandle_op(d, x, y) == (2 * y + n - x) % n);
  }
}

TEST_CASE("quandle axioms for random parameters, all x, y, z") {
  std::mt19937 rng(77);
  int checked = 0;
  while (checked < 40) {
    std::uint64_t n = 3 + rng() % 28;
    std::int64_t m = static_cast<std::int64_t>(rng() % 61) - 30;
    if (gcd_u64(mod_reduce(m, n), n) != 1) continue;
    ++checked;
    QuandleParams q = QuandleParams::make(n, m);
    for (std::uint64_t x = 0; x < n; ++x) {
      CHECK(quandle_op(q, x, x) == x);
      for (std::uint64_t y = 0; y < n; ++y) {
        CHECK(quandle_op_inv(q, quandle_op(q, x, y), y) == x);
        CHECK(quandle_op(q, quandle_op_inv(q, x, y), y) == x);
        for (std::uint64_t z = 0; z < n; ++z) {
          CHECK(quandle_op(q, quandle_op(q, x, y), z) == quandle_op(q, quandle_op(q, x, z), quandle_op(q, y, z)));
        }
      }
    }
  }
}

TEST_CASE("coloring matrix rank and kernel") {
  Diagram t = qtest::named("3_1");
  ModMatrix a = coloring_matrix(t, QuandleParams::make(3, 2));
  CHECK(a.rank() == 1);
  CHECK(kernel_basis(a).size() == 2);
  CHECK(kernel_basis(coloring_matrix(t, QuandleParams::make(5, 2))).size() == 1);
  // All-ones vector is always a solution, for composite moduli too.
  for (std::uint64_t n : {3u, 5u, 7u, 9u, 15u}) {
    ModMatrix m = coloring_matrix(qtest::named("7_3"), QuandleParams::make(n, 2));
    ModVector ones(7, 1);
    for (auto v : m.multiply(ones)) CHECK(v == 0);
  }
  CHECK_THROWS_AS(kernel_basis(coloring_matrix(t, QuandleParams::make(9, 2))), PreconditionError);
}

TEST_CASE("rank is q - 1 exactly when p does not divide the reduced value") {
  Diagram s = qtest::named("7_3");
  const BigInt value = evaluate(reduced_alexander(s).reduced, 2);
  CHECK(value == 16);  // even: no odd prime p works at m = 2
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    std::size_t rank = coloring_matrix(s, QuandleParams::make(p, 2)).rank();
    CHECK((rank == 6) == (value % BigInt(p) != 0));
  }
  // m = 3: value 101.
  CHECK(coloring_matrix(s, QuandleParams::make(101, 3)).rank() == 5);
  CHECK(coloring_matrix(s, QuandleParams::make(103, 3)).rank() == 6);
}

TEST_CASE("kernel vectors and brute force agree on small diagrams") {
  for (const char* name : {"3_1", "4_1", "5_1", "L4a1_1"}) {
    Diagram d = qtest::named(name);
    for (std::uint64_t p : {3u, 5u}) {
      for (std::int64_t m = -3; m <= 4; ++m) {
        if (gcd_u64(mod_reduce(m, p), p) != 1) continue;
        QuandleParams q = QuandleParams::make(p, m);
        auto brute = qtest::brute_force_colorings(d, q);
        auto kernel = kernel_basis(coloring_matrix(d, q));
        for (const auto& v : kernel) CHECK(verify_coloring(d, Coloring{q, v}));
        auto span = qtest::span_of(kernel, d.arc_count(), p);
        INFO(name << " p=" << p << " m=" << m);
        CHECK(std::set<ModVector>(brute.begin(), brute.end()) == span);
        CHECK(is_nontrivially_colorable(d, q) == (brute.size() > p));
        if (brute.size() > p) CHECK(min_colors_on_diagram(d, q).count == qtest::brute_force_min_colors(d, q));
      }
    }
  }
}

TEST_CASE("brute force count for the trefoil") {
  CHECK(qtest::brute_force_colorings(qtest::named("3_1"), QuandleParams::make(3, 2)).size() == 9);
  CHECK(qtest::brute_force_colorings(qtest::named("3_1"), QuandleParams::make(5, 2)).size() == 5);
}

TEST_CASE("non-trivial colorability") {
  CHECK(is_nontrivially_colorable(qtest::named("3_1"), QuandleParams::make(3, 2)));
  CHECK_FALSE(is_nontrivially_colorable(qtest::named("3_1"), QuandleParams::make(5, 2)));
  CHECK(is_nontrivially_colorable(qtest::named("L4a1_1"), QuandleParams::make(5, 2)));
  CHECK_THROWS_AS(is_nontrivially_colorable(qtest::named("3_1"), QuandleParams::make(9, 2)), PreconditionError);
}

TEST_CASE("verify_coloring") {
  Diagram t = qtest::named("3_1");
  QuandleParams q = QuandleParams::make(3, 2);
  CHECK(verify_coloring(t, Coloring{q, {1, 0, 2}}));
  CHECK_FALSE(verify_coloring(t, Coloring{q, {1, 1, 2}}));
  CHECK(verify_coloring(t, Coloring{q, {2, 2, 2}}));
  // Composite moduli are checkable.
  QuandleParams q9 = QuandleParams::make(9, -1);
  CHECK(verify_coloring(t, Coloring{q9, {0, 3, 6}}));
  CHECK(qtest::relations_hold(t, q9, {0, 3, 6}));
}

TEST_CASE("minimum colors") {
  auto r = min_colors_on_diagram(qtest::named("3_1"), QuandleParams::make(3, 2));
  CHECK(r.count == 3);
  CHECK(verify_coloring(qtest::named("3_1"), r.witness));
  CHECK(min_colors_on_diagram(qtest::named("L4a1_1"), QuandleParams::make(5, 2)).count == 4);
  Diagram t25 = torus_diagram(TorusParams::make(2, 5));
  auto r25 = min_colors_on_diagram(t25, QuandleParams::make(11, 2));
  CHECK(r25.count == 5);
  CHECK(r25.kernel_dim == 2);
  CHECK(r25.classes == 1);
  CHECK_THROWS_AS(min_colors_on_diagram(qtest::named("3_1"), QuandleParams::make(5, 2)), NotColorable);
}

TEST_CASE("affine images of colorings are colorings with the same count") {
  std::mt19937 rng(11);
  for (const char* name : {"3_1", "5_1", "7_3", "L4a1_1"}) {
    Diagram d = qtest::named(name);
    for (std::int64_t m = 2; m <= 6; ++m) {
      BigInt v = evaluate(reduced_alexander(d).reduced, m);
      if (d.components() > 1) v *= (1 - m);
      BigInt f = smallest_odd_prime_factor(abs(v));
      if (f < 3 || BigInt(m) % f == 0) continue;
      QuandleParams q = QuandleParams::make(f.get_ui(), m);
      auto r = min_colors_on_diagram(d, q);
      for (int i = 0; i < 10; ++i) {
        std::uint64_t a = 1 + rng() % (q.n - 1), b = rng() % q.n;
        Coloring c = r.witness;
        for (auto& x : c.colors) x = (mul_mod(a, x, q.n) + b) % q.n;
        CHECK(verify_coloring(d, c));
        CHECK(c.distinct_count() == r.count);
      }
      // Kauffman-Lopes inequality on every coloring found.
      CHECK(r.count >= static_cast<std::size_t>(kl_lower_bound(f, m)));
    }
  }
}

TEST_CASE("arc-injective colorings") {
  Diagram t23 = torus_diagram(TorusParams::make(2, 3));
  auto r = kh_check(t23, QuandleParams::make(7, 3), true);
  CHECK(r.kh);
  REQUIRE(r.witness);
  CHECK(r.witness->distinct_count() == t23.arc_count());
  CHECK(verify_coloring(t23, *r.witness));
  Diagram t25 = torus_diagram(TorusParams::make(2, 5));
  CHECK(kh_check(t25, QuandleParams::make(11, 2), true).kh);
  CHECK_THROWS_AS(kh_check(t25, QuandleParams::make(11, 2), false), PreconditionError);
  CHECK_THROWS_AS(kh_check(t25, QuandleParams::make(11, -1), true), PreconditionError);
  CHECK_THROWS_AS(kh_check(t25, QuandleParams::make(13, 2), true), PreconditionError);
  // With a one-dimensional quotient, the answer is whether the minimum uses every arc.
  Diagram s = qtest::named("7_3");
  QuandleParams q = QuandleParams::make(101, 3);
  CHECK(kh_check(s, q, true).kh == (min_colors_on_diagram(s, q).count == s.arc_count()));
}

TEST_CASE("column collapse") {
  SUBCASE("trefoil") {
    Diagram t = qtest::named("3_1");
    QuandleParams q = QuandleParams::make(3, 2);
    CollapseReport r = collapse_and_check(t, min_colors_on_diagram(t, q).witness);
    CHECK(r.distinct == 3);
    CHECK(r.b.size() == 2);
    CHECK(r.bound == 4);
    CHECK(r.det_b % 3 == 0);
    CHECK(abs(r.det_b) <= 4);
    CHECK(r.bounds_ok);
    // Independent 2x2 determinant of B.
    CHECK(r.det_b == r.b[0][0] * r.b[1][1] - r.b[0][1] * r.b[1][0]);
  }
  SUBCASE("two-component link") {
    Diagram l = qtest::named("L4a1_1");
    CollapseReport r = collapse_and_check(l, min_colors_on_diagram(l, QuandleParams::make(5, 2)).witness);
    CHECK(r.distinct == 4);
    CHECK(r.rank_a1 == 3);
    CHECK(r.bound == 8);
    CHECK(abs(r.det_b) == 5);
    CHECK(r.bounds_ok);
  }
  SUBCASE("all arcs distinct leaves the matrix unmerged") {
    Diagram t = torus_diagram(TorusParams::make(2, 5));
    QuandleParams q = QuandleParams::make(11, 2);
    Coloring c = *kh_check(t, q, true).witness;
    CollapseReport r = collapse_and_check(t, c);
    CHECK(r.distinct == t.arc_count());
    ModMatrix a = coloring_matrix(t, q);
    REQUIRE(r.a1.size() == a.rows());
    // Columns of A1 are the arcs in order of first appearance; compare as
    // column multisets mod p.
    std::multiset<std::vector<std::uint64_t>> cols_a, cols_a1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::vector<std::uint64_t> col;
      for (std::size_t i = 0; i < a.rows(); ++i) col.push_back(a.at(i, j));
      cols_a.insert(col);
      std::vector<std::uint64_t> col1;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt v = r.a1[i][j] % BigInt(11);
        if (v < 0) v += 11;
        col1.push_back(v.get_ui());
      }
      cols_a1.insert(col1);
    }
    CHECK(cols_a == cols_a1);
    CHECK(r.bounds_ok);
  }
  SUBCASE("trivial coloring is rejected") {
    Diagram t = qtest::named("3_1");
    try {
      collapse_and_check(t, Coloring{QuandleParams::make(3, 2), {1, 1, 1}});
      FAIL("expected an error");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("non-trivial coloring required") != std::string::npos);
    }
  }
}
