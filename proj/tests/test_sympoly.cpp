#include "doctest.h"

#include <vector>

#include "superjack/errors.hpp"
#include "superjack/symfunc.hpp"
#include "test_support.hpp"

using namespace superjack;
using superjack::testing::k;
using superjack::testing::q;

namespace {

SparsePoly var(int n, int m, int v) { return SparsePoly::variable(n, m, v); }
SparsePoly cst(int n, int m, const RatK& c) { return SparsePoly::constant(n, m, c); }

SymFuncVec basis(Basis b, const Partition& l) { return SymFuncVec(b, l); }

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace

TEST_CASE("monomial symmetric polynomials") {
  CHECK(expand_monomial_sym({1, 1}, 2) == var(2, 0, 0) * var(2, 0, 1));
  CHECK(expand_monomial_sym({2}, 2) == var(2, 0, 0) * var(2, 0, 0) + var(2, 0, 1) * var(2, 0, 1));
  CHECK(expand_monomial_sym({1, 1, 1}, 2).is_zero());
  CHECK(expand_monomial_sym({}, 3) == cst(3, 0, 1));
}

TEST_CASE("power sums to monomials") {
  auto a = powersum_to_monomial({2});
  CHECK(a.coeffs().size() == 1);
  CHECK(a.coeff({2}) == RatK(1));
  auto b = powersum_to_monomial({1, 1});
  CHECK(b.coeff({2}) == RatK(1));
  CHECK(b.coeff({1, 1}) == RatK(2));
  auto c = powersum_to_monomial({2, 1});
  CHECK(c.coeff({3}) == RatK(1));
  CHECK(c.coeff({2, 1}) == RatK(1));
  CHECK(c.coeffs().size() == 2);
}

TEST_CASE("monomials to power sums") {
  auto a = monomial_to_powersum({2});
  CHECK(a.coeffs().size() == 1);
  CHECK(a.coeff({2}) == RatK(1));
  auto b = monomial_to_powersum({1, 1});
  CHECK(b.coeff({1, 1}) == q(1, 2));
  CHECK(b.coeff({2}) == q(-1, 2));
  CHECK(monomial_to_powersum({}).coeff({}) == RatK(1));
}

TEST_CASE("transitions compose to the identity") {
  for (int w = 0; w <= 8; ++w) {
    for (const auto& l : partitions_of(w)) {
      CHECK(to_basis(monomial_to_powersum(l), Basis::monomial) == basis(Basis::monomial, l));
      CHECK(to_basis(powersum_to_monomial(l), Basis::powersum) == basis(Basis::powersum, l));
    }
  }
}

TEST_CASE("deformed Hall pairing") {
  auto p = [](const Partition& l) { return basis(Basis::powersum, l); };
  CHECK(hall_inner_product(p({1}), p({1})) == RatK(1) / k());
  CHECK(hall_inner_product(p({2}), p({1, 1})) == RatK());
  CHECK(hall_inner_product(p({1, 1}), p({1, 1})) == RatK(2) / (k() * k()));
  CHECK_THROWS_AS(hall_inner_product(p({2}), p({1})), InvalidArgument);
}

TEST_CASE("realization in n variables") {
  CHECK(realize(basis(Basis::powersum, {2}), 2) == expand_monomial_sym({2}, 2));
  CHECK(realize(basis(Basis::monomial, {1, 1}), 3) ==
        var(3, 0, 0) * var(3, 0, 1) + var(3, 0, 0) * var(3, 0, 2) + var(3, 0, 1) * var(3, 0, 2));
  CHECK(realize(basis(Basis::powersum, {1, 1}), 1) == var(1, 0, 0) * var(1, 0, 0));
}

TEST_CASE("realize is a ring homomorphism in the stable range") {
  std::mt19937 rng(11);
  for (int wa = 1; wa <= 3; ++wa) {
    for (int wb = 1; wb <= 3; ++wb) {
      SymFuncVec u(Basis::monomial), v(Basis::monomial);
      for (const auto& l : partitions_of(wa)) u.add(l, superjack::testing::random_ratk(rng, 1));
      for (const auto& l : partitions_of(wb)) v.add(l, superjack::testing::random_ratk(rng, 1));
      // product through the power-sum basis, where it is concatenation of partitions
      SymFuncVec up = to_basis(u, Basis::powersum), vp = to_basis(v, Basis::powersum), prod(Basis::powersum);
      for (const auto& [a, ca] : up.coeffs())
        for (const auto& [b, cb] : vp.coeffs()) prod.add(join(a, b), ca * cb);
      const int n = wa + wb;
      CHECK(realize(to_basis(prod, Basis::monomial), n) == realize(u, n) * realize(v, n));
      CHECK(realize(prod, n) == realize(u, n) * realize(v, n));
    }
  }
}

TEST_CASE("exact evaluation") {
  SparsePoly f = var(1, 1, 0) - var(1, 1, 1) * (RatK(1) / k());
  std::vector<Rational> pt{2, 1};
  CHECK(f.evaluate(pt, 1) == 1);
  CHECK(SparsePoly(1, 1).evaluate(pt, 5) == 0);
  SparsePoly g = var(1, 1, 0) * var(1, 1, 0) - var(1, 1, 0) * var(1, 1, 1) * (RatK(2) / (k() + RatK(1)));
  std::vector<Rational> ones{1, 1};
  CHECK(g.evaluate(ones, 1) == 0);
  CHECK_THROWS_AS(g.evaluate(ones, -1), PoleError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = superjack::testing::random_poly(rng, 2, 1), b = superjack::testing::random_poly(rng, 2, 1),
         c = superjack::testing::random_poly(rng, 2, 1);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    SparsePoly zero = a;
    zero -= a;
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
  }
}

TEST_CASE("exact division by a variable difference") {
  const int n = 2, m = 1;
  SparsePoly x1 = var(n, m, 0), x2 = var(n, m, 1), y = var(n, m, 2);
  auto [q1, r1] = (x1 * x1 - x2 * x2).divide_by_difference(0, 1);
  CHECK(r1.is_zero());
  CHECK(q1 == x1 + x2);
  auto [q2, r2] = x1.divide_by_difference(0, 1);
  CHECK_FALSE(r2.is_zero());
  // remainder is the numerator with x1 := x2, and f = q (x1-x2) + r
  CHECK(r2 == x2);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = superjack::testing::random_poly(rng, n, m, 5, 3);
    auto [qq, rr] = f.divide_by_difference(0, 2);
    CHECK(qq * (x1 - y) + rr == f);
    CHECK(rr == f.identify(0, 2));
  }
}

TEST_CASE("canonical term order is graded lex") {
  SparsePoly p = var(2, 0, 1) + var(2, 0, 0) * var(2, 0, 0) + cst(2, 0, 1) + var(2, 0, 0);
  std::vector<Exponent> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponent>{{2, 0}, {1, 0}, {0, 1}, {0, 0}});
}
