#include "superjack/cmsop.hpp"

#include "superjack/superjack.hpp"

namespace superjack {

RootSystemData root_system(int n, int m) {
  if (n < 0 || m < 0) throw InvalidArgument("negative block size");
  RootSystemData r{n, m, {}, {}, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.even_x.emplace_back(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) r.even_y.emplace_back(n + i, n + j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r.odd.emplace_back(i, n + j);
  return r;
}

Weight Weight::zero(int n, int m) { return Weight{n, m, std::vector<RatK>(static_cast<std::size_t>(n + m))}; }

Weight Weight::eps(int n, int m, int i) {
  Weight w = zero(n, m);
  w.coords.at(static_cast<std::size_t>(i)) = RatK(1);
  return w;
}

Weight Weight::eps_bar(int n, int m, int j) {
  Weight w = zero(n, m);
  w.coords.at(static_cast<std::size_t>(n + j)) = RatK(1);
  return w;
}

Weight Weight::root(int n, int m, std::pair<int, int> r) {
  Weight w = zero(n, m);
  w.coords.at(static_cast<std::size_t>(r.first)) = RatK(1);
  w.coords.at(static_cast<std::size_t>(r.second)) = RatK(-1);
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  if (n != o.n || m != o.m) throw InvalidArgument("weight dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

RatK bilinear_k(const Weight& v, const Weight& w) {
  if (v.n != w.n || v.m != w.m || v.coords.size() != w.coords.size())
    throw InvalidArgument("weight dimension mismatch");
  RatK even, odd;
  for (int i = 0; i < v.n; ++i) even += v.coords[static_cast<std::size_t>(i)] * w.coords[static_cast<std::size_t>(i)];
  for (int j = v.n; j < v.n + v.m; ++j)
    odd += v.coords[static_cast<std::size_t>(j)] * w.coords[static_cast<std::size_t>(j)];
  return even - RatK::k() * odd;
}

Weight rho_k(int n, int m) {
  auto roots = root_system(n, m);
  const RatK half = RatK(Rational(1, 2));
  Weight rho1 = Weight::zero(n, m), rho2 = Weight::zero(n, m), rho12 = Weight::zero(n, m);
  for (auto r : roots.even_x) rho1 += Weight::root(n, m, r);
  for (auto r : roots.even_y) rho2 += Weight::root(n, m, r);
  for (auto r : roots.odd) rho12 += Weight::root(n, m, r);
  const RatK k = RatK::k();
  return (half * k) * rho1 + (half / k) * rho2 + (-half) * rho12;
}

RatK rho_norm(int n, int m) {
  Weight rho = rho_k(n, m);
  return bilinear_k(rho, rho);
}

namespace {

// (v_a + v_b) * g / (v_a - v_b), exact.
SparsePoly divided_pair(const SparsePoly& g, int a, int b, const char* label) {
  if (g.is_zero()) return g;
  SparsePoly sum = SparsePoly::variable(g.n(), g.m(), a) + SparsePoly::variable(g.n(), g.m(), b);
  auto [q, r] = (sum * g).divide_by_difference(a, b);
  if (!r.is_zero()) {
    throw NotInAlgebra(std::string(label) + " pair (" + g.variable_name(a) + ", " + g.variable_name(b) + ")",
                       std::move(r));
  }
  return q;
}

}  // namespace

SparsePoly apply_M(const SparsePoly& f, const RatK& k, MixedTerm mixed) {
  const int n = f.n(), m = f.m();
  SparsePoly out(n, m);
  if (f.is_zero()) return out;

  std::vector<SparsePoly> euler;
  euler.reserve(static_cast<std::size_t>(n + m));
  for (int v = 0; v < n + m; ++v) euler.push_back(f.euler(v));

  for (int i = 0; i < n; ++i) out += euler[static_cast<std::size_t>(i)].euler(i);
  for (int j = n; j < n + m; ++j) out -= euler[static_cast<std::size_t>(j)].euler(j) * k;

  const auto roots = root_system(n, m);
  for (auto [a, b] : roots.even_x) {
    auto diff = euler[static_cast<std::size_t>(a)] - euler[static_cast<std::size_t>(b)];
    out += divided_pair(diff, a, b, "even x") * k;
  }
  for (auto [a, b] : roots.even_y) {
    auto diff = euler[static_cast<std::size_t>(a)] - euler[static_cast<std::size_t>(b)];
    out -= divided_pair(diff, a, b, "even y");
  }
  for (auto [a, b] : roots.odd) {
    SparsePoly combo = mixed == MixedTerm::quasi_invariant
                           ? euler[static_cast<std::size_t>(a)] + euler[static_cast<std::size_t>(b)] * k
                           : euler[static_cast<std::size_t>(a)] - euler[static_cast<std::size_t>(b)];
    out -= divided_pair(combo, a, b, "odd");
  }
  return out;
}

RatK proportionality_constant(const SparsePoly& f, const SparsePoly& image) {
  if (f.is_zero()) throw InvalidArgument("eigenvalue of the zero polynomial");
  const auto& [lead_exp, lead_coeff] = *f.terms().begin();
  RatK c = image.coeff(lead_exp) / lead_coeff;
  SparsePoly residual = image - f * c;
  if (!residual.is_zero()) throw TheoremViolation(std::move(residual));
  return c;
}

RatK extract_eigenvalue(const SparsePoly& poly, const RatK& k, MixedTerm mixed) {
  return proportionality_constant(poly, apply_M(poly, k, mixed));
}

RatK extract_eigenvalue(const Partition& lambda, int n, int m, MixedTerm mixed) {
  return extract_eigenvalue(super_jack(lambda, n, m).poly, RatK::k(), mixed);
}

}  // namespace superjack
