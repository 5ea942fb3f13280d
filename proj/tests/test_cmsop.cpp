#include "doctest.h"

#include "superjack/cmsop.hpp"
#include "superjack/errors.hpp"
#include "superjack/oracles.hpp"
#include "superjack/superjack.hpp"
#include "test_support.hpp"

using namespace superjack;
using superjack::testing::k;
using superjack::testing::q;

TEST_CASE("root system sizes") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto r = root_system(n, m);
      CHECK(r.even_x.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(r.even_y.size() == static_cast<std::size_t>(m * (m - 1) / 2));
      CHECK(r.odd.size() == static_cast<std::size_t>(n * m));
    }
}

TEST_CASE("deformed bilinear form") {
  CHECK(bilinear_k(Weight::eps(1, 1, 0), Weight::eps(1, 1, 0)) == RatK(1));
  CHECK(bilinear_k(Weight::eps_bar(1, 1, 0), Weight::eps_bar(1, 1, 0)) == -k());
  CHECK(bilinear_k(Weight::eps(1, 1, 0), Weight::eps_bar(1, 1, 0)) == RatK());
  CHECK_THROWS_AS(bilinear_k(Weight::eps(1, 1, 0), Weight::eps(2, 0, 0)), InvalidArgument);
  // root norms used by the potential
  auto r = root_system(2, 2);
  CHECK(bilinear_k(Weight::root(2, 2, r.even_x[0]), Weight::root(2, 2, r.even_x[0])) == RatK(2));
  CHECK(bilinear_k(Weight::root(2, 2, r.even_y[0]), Weight::root(2, 2, r.even_y[0])) == RatK(-2) * k());
  CHECK(bilinear_k(Weight::root(2, 2, r.odd[0]), Weight::root(2, 2, r.odd[0])) == RatK(1) - k());
}

TEST_CASE("rho") {
  CHECK(rho_k(1, 1) == q(-1, 2) * Weight::eps(1, 1, 0) + q(1, 2) * Weight::eps_bar(1, 1, 0));
  CHECK(rho_norm(1, 1) == (RatK(1) - k()) / RatK(4));
  CHECK(rho_k(2, 0) == (k() / RatK(2)) * (Weight::eps(2, 0, 0) + RatK(-1) * Weight::eps(2, 0, 1)));
  CHECK(rho_norm(2, 0) == k() * k() / RatK(2));
  CHECK(rho_k(0, 0).coords.empty());
  CHECK(rho_norm(0, 0) == RatK());
}

TEST_CASE("operator M on small inputs") {
  auto s1 = super_power_sum(1, 1, 1), s2 = super_power_sum(2, 1, 1);
  CHECK(apply_M(s1).is_zero());
  CHECK(apply_M(s2) == s1 * s1 * (RatK(2) * k()) + s2 * (RatK(2) - RatK(2) * k()));
  auto x = SparsePoly::variable(1, 0, 0);
  CHECK(apply_M(x) == x);
}

TEST_CASE("the literal mixed term leaves a remainder") {
  auto s2 = super_power_sum(2, 1, 1);
  CHECK_THROWS_AS(apply_M(s2, k(), MixedTerm::literal), NotInAlgebra);
  try {
    apply_M(super_power_sum(1, 1, 1), k(), MixedTerm::literal);
    FAIL("expected NotInAlgebra");
  } catch (const NotInAlgebra& e) {
    CHECK_FALSE(e.remainder().is_zero());
  }
}

TEST_CASE("inputs outside the algebra are rejected") {
  auto x = SparsePoly::variable(1, 1, 0);
  CHECK_THROWS_AS(apply_M(x), NotInAlgebra);
  auto x1 = SparsePoly::variable(2, 0, 0);
  CHECK_THROWS_AS(apply_M(x1), NotInAlgebra);
}

TEST_CASE("eigenvalue extraction") {
  CHECK(extract_eigenvalue({1}, 1, 1) == RatK());
  CHECK(extract_eigenvalue({2}, 1, 1) == RatK(2));
  CHECK(extract_eigenvalue({1, 1}, 1, 1) == RatK(-2) * k());
  auto s1 = super_power_sum(1, 1, 1);
  CHECK_THROWS_AS(extract_eigenvalue(s1 * s1), TheoremViolation);
  CHECK_THROWS_AS(extract_eigenvalue({2, 2}, 1, 1), InvalidArgument);
}

TEST_CASE("linearity, degree and invariants on random algebra elements") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 12; ++trial) {
    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
      auto f = superjack::testing::random_algebra_element(rng, n, m);
      auto g = superjack::testing::random_algebra_element(rng, n, m);
      RatK a = superjack::testing::random_ratk(rng, 1), b = superjack::testing::random_ratk(rng, 1);
      auto mf = apply_M(f), mg = apply_M(g);
      CHECK(apply_M(f * a + g * b) == mf * a + mg * b);
      if (!mf.is_zero()) CHECK(mf.total_degree() <= f.total_degree());
      // M commutes with the grading: each homogeneous piece maps to its own degree
      for (const auto& [e, c] : mf.terms()) {
        int d = 0;
        for (int x : e) d += x;
        bool found = false;
        for (const auto& [e2, c2] : f.terms()) {
          int d2 = 0;
          for (int x : e2) d2 += x;
          found = found || d2 == d;
        }
        CHECK(found);
      }
      CHECK(is_doubly_symmetric(mf));
      CHECK(is_quasi_invariant(mf));
    }
  }
}

TEST_CASE("constants are annihilated") {
  for (auto [n, m] : {std::pair{0, 0}, {1, 1}, {3, 2}}) CHECK(apply_M(SparsePoly::constant(n, m, RatK(7) / k())).is_zero());
}

TEST_CASE("specialized k agrees with generic k") {
  auto p = super_jack({2, 1}, 2, 1).poly;
  Rational k0(3, 2);
  CHECK(apply_M(p.specialize(k0), RatK(k0)) == apply_M(p).specialize(k0));
}

TEST_CASE("m = 0 reproduces the classical spectrum") {
  for (int n = 1; n <= 3; ++n)
    for (int w = 0; w <= 6; ++w)
      for (const auto& l : partitions_of(w)) {
        if (l.length() > n) continue;
        RatK expected;
        for (int i = 0; i < l.length(); ++i)
          expected += RatK(l[i]) * (RatK(l[i]) + k() * RatK(n + 1 - 2 * (i + 1)));
        RatK e = extract_eigenvalue(l, n, 0);
        CHECK(e == expected);
        CHECK(e == oracles::classical_eigenvalue(l, n));
      }
}
