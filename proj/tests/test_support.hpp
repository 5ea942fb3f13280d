#pragma once

#include <random>

#include "superjack/ratk.hpp"
#include "superjack/sparse_poly.hpp"
#include "superjack/superjack.hpp"

namespace superjack::testing {

inline RatK k() { return RatK::k(); }
inline RatK q(long num, long den = 1) { return RatK(Rational(num, den)); }

/// Random element of Q(k) with small degrees and coefficients.
inline RatK random_ratk(std::mt19937& rng, int max_degree = 2) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, max_degree);
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
      for (auto& x : c) x = coeff(rng);
      IntPoly p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RatK(poly(false), poly(true));
}

inline SparsePoly random_poly(std::mt19937& rng, int n, int m, int terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> ex(0, max_exp);
  SparsePoly p(n, m);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(n + m));
    for (auto& x : e) x = ex(rng);
    p.add_term(e, random_ratk(rng, 1));
  }
  return p;
}

/// Random element of the algebra generated by deformed power sums, total degree <= 3.
inline SparsePoly random_algebra_element(std::mt19937& rng, int n, int m) {
  std::uniform_int_distribution<int> part(1, 2), count(0, 2);
  SparsePoly out(n, m);
  for (int t = 0; t < 3; ++t) {
    SparsePoly term = SparsePoly::constant(n, m, random_ratk(rng, 1));
    int factors = count(rng);
    for (int f = 0; f < factors; ++f) term = term * super_power_sum(part(rng), n, m);
    out += term;
  }
  return out;
}

}  // namespace superjack::testing
