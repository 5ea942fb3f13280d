#include "doctest.h"

#include "superjack/cmsop.hpp"
#include "superjack/errors.hpp"
#include "superjack/jack.hpp"
#include "superjack/oracles.hpp"
#include "superjack/superjack.hpp"
#include "superjack/symfunc.hpp"
#include "test_support.hpp"

using namespace superjack;
using superjack::testing::k;

namespace {
SparsePoly var(int n, int m, int v) { return SparsePoly::variable(n, m, v); }
}  // namespace

TEST_CASE("deformed power sums") {
  CHECK(super_power_sum(1, 1, 1) == var(1, 1, 0) - var(1, 1, 1) * (RatK(1) / k()));
  CHECK(super_power_sum(2, 0, 1) == var(0, 1, 0) * var(0, 1, 0) * (RatK(-1) / k()));
  CHECK(super_power_sum(3, 2, 0) == var(2, 0, 0) * var(2, 0, 0) * var(2, 0, 0) + var(2, 0, 1) * var(2, 0, 1) * var(2, 0, 1));
  CHECK_THROWS_AS(super_power_sum(0, 1, 1), InvalidArgument);
}

TEST_CASE("super-Jack examples") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {0, 2}, {3, 0}})
    CHECK(super_jack({1}, n, m).poly == super_power_sum(1, n, m));
  SparsePoly x = var(1, 1, 0), y = var(1, 1, 1);
  CHECK(super_jack({2}, 1, 1).poly == x * x - x * y * (RatK(2) / (k() + RatK(1))));
  CHECK(super_jack({2, 2}, 1, 1).poly.is_zero());
  CHECK(super_jack(Partition{}, 2, 2).poly == SparsePoly::constant(2, 2, 1));
}

TEST_CASE("closed-form eigenvalue") {
  CHECK(eigenvalue({1}, 1, 1) == RatK());
  CHECK(eigenvalue({2}, 1, 1) == RatK(2));
  CHECK(eigenvalue({1, 1}, 1, 1) == RatK(-2) * k());
  CHECK(eigenvalue({}, 3, 2) == RatK());
}

TEST_CASE("classical reduction") {
  for (int n : {2, 3})
    for (int w = 0; w <= 6; ++w)
      for (const auto& l : partitions_of(w)) CHECK(super_jack(l, n, 0).poly == realize(jack_in_monomial(l), n));
}

TEST_CASE("hook vanishing, symmetry and quasi-invariance") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    for (int w = 0; w <= 6; ++w) {
      for (const auto& l : partitions_of(w)) {
        auto p = super_jack(l, n, m).poly;
        CHECK_MESSAGE(p.is_zero() == !in_hook(l, n, m), l.to_string() << " n=" << n << " m=" << m);
        CHECK(is_doubly_symmetric(p));
        CHECK(is_quasi_invariant(p));
      }
    }
  }
}

TEST_CASE("quasi-invariance detects a broken polynomial") {
  SparsePoly x = var(1, 1, 0), y = var(1, 1, 1);
  CHECK(is_quasi_invariant(x - y * (RatK(1) / k())));
  CHECK_FALSE(is_quasi_invariant(x - y));
  CHECK(is_doubly_symmetric(var(2, 0, 0) + var(2, 0, 1)));
  CHECK_FALSE(is_doubly_symmetric(var(2, 0, 0)));
}

TEST_CASE("k=1 specialization matches the twisted hook Schur polynomial") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& l : partitions_of(w))
      if (in_hook(l, 2, 2)) CHECK(super_jack(l, 2, 2).poly.specialize(1) == oracles::hook_schur_twisted(l, 2, 2));
}

TEST_CASE("spectrum consistency for n, m <= 2") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int w = 0; w <= 6; ++w)
        for (const auto& l : partitions_of(w))
          if (in_hook(l, n, m)) CHECK(extract_eigenvalue(l, n, m) == eigenvalue(l, n, m));
}

TEST_CASE("k = 0 is rejected") {
  CHECK_THROWS_AS(require_nonzero_k(0), ZeroKError);
  CHECK_NOTHROW(require_nonzero_k(Rational(1, 2)));
}
