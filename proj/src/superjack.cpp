#include "superjack/superjack.hpp"

#include <map>

#include "superjack/errors.hpp"

namespace superjack {

SparsePoly super_power_sum(int p, int n, int m) {
  if (p < 1) throw InvalidArgument("deformed power sums start at degree 1");
  SparsePoly out(n, m);
  const RatK minus_inv_k = RatK(-1) / RatK::k();
  for (int v = 0; v < n + m; ++v) {
    Exponent e(static_cast<std::size_t>(n + m), 0);
    e[static_cast<std::size_t>(v)] = p;
    out.add_term(e, v < n ? RatK(1) : minus_inv_k);
  }
  return out;
}

SuperJack super_jack(const ChiTable& table, int n, int m) {
  SuperJack result{table.lambda, n, m, SparsePoly(n, m)};
  std::map<int, SparsePoly> sums;
  auto sum_of = [&](int p) -> const SparsePoly& {
    auto it = sums.find(p);
    if (it == sums.end()) it = sums.emplace(p, super_power_sum(p, n, m)).first;
    return it->second;
  };
  for (const auto& [mu, c] : table.chi) {
    SparsePoly term = SparsePoly::constant(n, m, c);
    for (int part : mu) term = term * sum_of(part);
    result.poly += term;
  }
  return result;
}

SuperJack super_jack(const Partition& lambda, int n, int m) { return super_jack(chi_table(lambda), n, m); }

RatK eigenvalue(const Partition& lambda, int n, int m) {
  const RatK k = RatK::k();
  RatK total;
  for (int i = 0; i < lambda.length(); ++i) {
    RatK part(lambda[static_cast<std::size_t>(i)]);
    total += part * (part - RatK(1) - RatK(2 * i) * k);
  }
  total += RatK(lambda.weight()) * (RatK(1) + k * RatK(n - 1) - RatK(m));
  return total;
}

bool is_doubly_symmetric(const SparsePoly& f) {
  for (int i = 0; i + 1 < f.n(); ++i)
    if (!(f.swap_vars(i, i + 1) == f)) return false;
  for (int j = 0; j + 1 < f.m(); ++j)
    if (!(f.swap_vars(f.n() + j, f.n() + j + 1) == f)) return false;
  return true;
}

bool is_quasi_invariant(const SparsePoly& f, const RatK& k) {
  for (int i = 0; i < f.n(); ++i) {
    SparsePoly dx = f.derivative(i);
    for (int j = 0; j < f.m(); ++j) {
      int y = f.n() + j;
      SparsePoly combo = dx + f.derivative(y) * k;
      if (!combo.identify(i, y).is_zero()) return false;
    }
  }
  return true;
}

void require_nonzero_k(const Rational& k0) {
  if (k0 == 0) throw ZeroKError();
}

}  // namespace superjack
