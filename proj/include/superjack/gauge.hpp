#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <type_traits>
#include <string>
#include <vector>

#include "superjack/cmsop.hpp"
#include "superjack/errors.hpp"
#include "superjack/jet.hpp"
#include "superjack/partition.hpp"
#include "superjack/ratk.hpp"
#include "superjack/sparse_poly.hpp"
#include "superjack/superjack.hpp"

namespace superjack {

class SingularConfiguration : public Error {
 public:
  SingularConfiguration() : Error("singular configuration") {}
};

/// Coefficient on the R22 potential sum of the Schroedinger-form operator.
enum class PotentialConvention {
  /// -(1/k)(1/k-1): the coefficient produced by conjugating with delta^(k).
  gauge_consistent,
  /// +(1/k)(1/k-1) taken literally; breaks the ground-state identity once m >= 2.
  literal,
};

template <class Scalar>
Scalar to_scalar(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return q.get_d();
  } else {
    return static_cast<Scalar>(std::strtold(q.get_num().get_str().c_str(), nullptr)) /
           static_cast<Scalar>(std::strtold(q.get_den().get_str().c_str(), nullptr));
  }
}

namespace detail {

// e^{a/2} - e^{-a/2} for the root a = t_first - t_second, checked against walls and the chamber.
template <class Scalar, class Vector>
Scalar wall_factor(const Vector& t, std::pair<int, int> root) {
  Scalar a = t(root.first) - t(root.second);
  if (std::abs(std::expm1(a)) < Scalar(1e-9)) throw SingularConfiguration();
  if (a <= 0) throw InvalidArgument("point outside the ordered chamber t_1 > ... > t_n > tbar_1 > ... > tbar_m");
  return Scalar(2) * std::sinh(a / Scalar(2));
}

template <class Scalar>
Jet2<Scalar> wall_jet(const typename Jet2<Scalar>::Vector& t, std::pair<int, int> root) {
  detail::wall_factor<Scalar>(t, root);
  auto a = Jet2<Scalar>::coordinate(t, root.first) - Jet2<Scalar>::coordinate(t, root.second);
  return Scalar(2) * sinh(a * Scalar(0.5));
}

}  // namespace detail

/// Ground-state factor delta^(k) at the point t (x-block log coordinates followed by y-block).
template <class Scalar>
Scalar delta_k(const typename Jet2<Scalar>::Vector& t, int n, int m, Scalar k0) {
  if (t.size() != n + m) throw InvalidArgument("point has wrong dimension");
  const auto roots = root_system(n, m);
  Scalar v(1);
  for (auto r : roots.even_x) v *= std::pow(detail::wall_factor<Scalar>(t, r), k0);
  for (auto r : roots.even_y) v *= std::pow(detail::wall_factor<Scalar>(t, r), Scalar(1) / k0);
  for (auto r : roots.odd) v /= detail::wall_factor<Scalar>(t, r);
  return v;
}

template <class Scalar>
Jet2<Scalar> delta_jet(const typename Jet2<Scalar>::Vector& t, int n, int m, Scalar k0) {
  if (t.size() != n + m) throw InvalidArgument("point has wrong dimension");
  const auto roots = root_system(n, m);
  auto v = Jet2<Scalar>::constant(Scalar(1), t.size());
  for (auto r : roots.even_x) v = v * pow(detail::wall_jet<Scalar>(t, r), k0);
  for (auto r : roots.even_y) v = v * pow(detail::wall_jet<Scalar>(t, r), Scalar(1) / k0);
  for (auto r : roots.odd) v = v * reciprocal(detail::wall_jet<Scalar>(t, r));
  return v;
}

/// Jet of a k-free polynomial (already specialized) at x = e^t, y = e^tbar.
template <class Scalar>
Jet2<Scalar> polynomial_jet(const SparsePoly& specialized, const typename Jet2<Scalar>::Vector& t) {
  using Vector = typename Jet2<Scalar>::Vector;
  auto out = Jet2<Scalar>::constant(Scalar(0), t.size());
  Vector w(t.size());
  for (const auto& [e, c] : specialized.terms()) {
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = Scalar(e[static_cast<std::size_t>(i)]);
    out += Jet2<Scalar>::exp_linear(w, t) * to_scalar<Scalar>(c.constant_value());
  }
  return out;
}

/// Multiplicative potential U of the Schroedinger-form operator, SL = Delta_k + U.
template <class Scalar>
Scalar potential(const typename Jet2<Scalar>::Vector& t, int n, int m, const Rational& k0,
                 PotentialConvention convention = PotentialConvention::gauge_consistent) {
  require_nonzero_k(k0);
  const auto roots = root_system(n, m);
  const Scalar k = to_scalar<Scalar>(k0);
  auto norm_at = [&](std::pair<int, int> r) { return to_scalar<Scalar>(bilinear_k(Weight::root(n, m, r), Weight::root(n, m, r)).specialize(k0)); };
  Scalar u(0);
  for (auto r : roots.even_x) {
    Scalar w = detail::wall_factor<Scalar>(t, r);
    u -= k * (k - Scalar(1)) * norm_at(r) / (w * w);
  }
  const Scalar sign = convention == PotentialConvention::literal ? Scalar(1) : Scalar(-1);
  for (auto r : roots.even_y) {
    Scalar w = detail::wall_factor<Scalar>(t, r);
    u += sign * (Scalar(1) / k) * (Scalar(1) / k - Scalar(1)) * norm_at(r) / (w * w);
  }
  for (auto r : roots.odd) {
    Scalar w = detail::wall_factor<Scalar>(t, r);
    u -= Scalar(2) * norm_at(r) / (w * w);
  }
  return u;
}

/// Delta_k f = sum_i d^2 f/dt_i^2 - k sum_j d^2 f/dtbar_j^2 from the jet's Hessian.
template <class Scalar>
Scalar deformed_laplacian(const Jet2<Scalar>& f, int n, int m, Scalar k) {
  Scalar s(0);
  for (int i = 0; i < n; ++i) s += f.hessian(i, i);
  for (int j = n; j < n + m; ++j) s -= k * f.hessian(j, j);
  return s;
}

/// (SL f)(t) for the Schroedinger-form operator.
template <class Scalar>
Scalar apply_SL(const Jet2<Scalar>& f, const typename Jet2<Scalar>::Vector& t, int n, int m, const Rational& k0,
                PotentialConvention convention = PotentialConvention::gauge_consistent) {
  return deformed_laplacian(f, n, m, to_scalar<Scalar>(k0)) + potential<Scalar>(t, n, m, k0, convention) * f.value;
}

/// The multiplicative-coordinate operator M written in t coordinates, applied to a jet:
/// Delta_k g + k sum coth(alpha/2) d_alpha g - sum coth(beta/2) d_beta g - sum coth(gamma/2)(d_i + k d_jbar) g.
template <class Scalar>
Scalar apply_M_numeric(const Jet2<Scalar>& g, const typename Jet2<Scalar>::Vector& t, int n, int m, Scalar k) {
  const auto roots = root_system(n, m);
  auto coth_half = [&](std::pair<int, int> r) {
    detail::wall_factor<Scalar>(t, r);
    return Scalar(1) / std::tanh((t(r.first) - t(r.second)) / Scalar(2));
  };
  Scalar s = deformed_laplacian(g, n, m, k);
  for (auto r : roots.even_x) s += k * coth_half(r) * (g.gradient(r.first) - g.gradient(r.second));
  for (auto r : roots.even_y) s -= coth_half(r) * (g.gradient(r.first) - g.gradient(r.second));
  for (auto r : roots.odd) s -= coth_half(r) * (g.gradient(r.first) + k * g.gradient(r.second));
  return s;
}

/// One sampled configuration of the gauge check.
struct GaugePoint {
  std::vector<double> t;
  double residual = 0;
  double literal_residual = 0;
};

struct GaugeReport {
  Partition lambda;
  int n = 0;
  int m = 0;
  Rational k0;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  RatK eigenvalue;  // generic in k, from the exact operator
  std::vector<GaugePoint> points;
  double max_residual = 0;
  double literal_max_residual = 0;  // same points, literal R22 coefficient
  int resampled = 0;
  PotentialConvention convention = PotentialConvention::gauge_consistent;
  bool pass = false;
};

struct GaugeOptions {
  int num_points = 10;
  std::uint64_t seed = 20240611;
  double tolerance = 1e-8;
  PotentialConvention convention = PotentialConvention::gauge_consistent;
};

/// Admissible points in the ordered chamber: coordinates uniform in [0.3, 2.5], pairwise
/// separation >= 0.15, sorted descending (x-block above y-block). Deterministic in `seed`.
std::vector<std::vector<double>> sample_points(int dim, int count, std::uint64_t seed);

/// Max relative residual |SL(delta P) - (e + (rho,rho)_k) delta P| / |delta P| over sampled points.
GaugeReport conjugation_check(const SuperJack& pj, const Rational& k0, const GaugeOptions& options = {});
GaugeReport conjugation_check(const Partition& lambda, int n, int m, const Rational& k0,
                              const GaugeOptions& options = {});

/// Residual at one point in the requested precision.
template <class Scalar>
Scalar conjugation_residual(const SparsePoly& specialized_poly, const RatK& eigen, const std::vector<double>& point,
                            int n, int m, const Rational& k0, PotentialConvention convention) {
  using Vector = typename Jet2<Scalar>::Vector;
  Vector t(static_cast<Eigen::Index>(point.size()));
  for (std::size_t i = 0; i < point.size(); ++i) t(static_cast<Eigen::Index>(i)) = static_cast<Scalar>(point[i]);
  const Scalar k = to_scalar<Scalar>(k0);
  auto f = delta_jet<Scalar>(t, n, m, k) * polynomial_jet<Scalar>(specialized_poly, t);
  Scalar lhs = apply_SL<Scalar>(f, t, n, m, k0, convention);
  Scalar shift = to_scalar<Scalar>((eigen + rho_norm(n, m)).specialize(k0));
  return std::abs(lhs - shift * f.value) / (std::abs(f.value) + Scalar(1e-300));
}

/// Conjugating M back with delta^(k) must leave no first-order part: for test functions f,
/// q_f = [delta M(delta^{-1} f) + (rho,rho)_k f - Delta_k f] / f is the same multiplication potential.
struct FirstOrderReport {
  std::vector<double> t;
  std::vector<double> quotients;  // one per test function
  double potential = 0;           // U(t) of the Schroedinger form
  double spread = 0;              // max |q_f - q_0| / max(1, max |q_f|)
};

FirstOrderReport first_order_freeness(const std::vector<double>& point, int n, int m, const Rational& k0);

}  // namespace superjack
