#include "doctest.h"

#include <cmath>

#include "superjack/errors.hpp"
#include "superjack/gauge.hpp"
#include "superjack/superjack.hpp"

using namespace superjack;
using Vec = Jet2<double>::Vector;

namespace {

Vec vec(std::initializer_list<double> v) {
  Vec t(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) t(i++) = x;
  return t;
}

}  // namespace

TEST_CASE("delta_k values") {
  CHECK(delta_k<double>(vec({0.7}), 1, 0, 2.0) == doctest::Approx(1.0));
  CHECK(delta_k<double>(vec({1.0, 0.0}), 1, 1, 2.0) == doctest::Approx(0.959519).epsilon(1e-6));
  CHECK(delta_k<double>(vec({1.0, 0.0}), 2, 0, 1.0) == doctest::Approx(1.042190).epsilon(1e-6));
  CHECK(delta_jet<double>(vec({1.0, 0.0}), 1, 1, 2.0).value == doctest::Approx(1.0 / (2 * std::sinh(0.5))));
}

TEST_CASE("walls and chamber") {
  CHECK_THROWS_AS(delta_k<double>(vec({1.0, 1.0}), 2, 0, 1.0), SingularConfiguration);
  CHECK_THROWS_AS(delta_k<double>(vec({1.0, 1.0 + 1e-12}), 1, 1, 1.0), SingularConfiguration);
  CHECK_THROWS_AS(delta_k<double>(vec({0.5, 1.0}), 2, 0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(delta_k<double>(vec({1.0}), 1, 1, 1.0), InvalidArgument);
}

TEST_CASE("jets agree with finite differences") {
  Vec t = vec({1.3, 0.6, 0.2});
  auto f = [&](const Vec& s) {
    auto a = Jet2<double>::coordinate(s, 0), b = Jet2<double>::coordinate(s, 1), c = Jet2<double>::coordinate(s, 2);
    return pow(sinh((a - b) * 0.5), 1.7) * exp(c * b) / (a + c * c) + log(a + b);
  };
  auto j = f(t);
  const double h = 1e-4;
  for (Eigen::Index i = 0; i < 3; ++i) {
    Vec ei = Vec::Zero(3);
    ei(i) = h;
    CHECK(j.gradient(i) == doctest::Approx((f(t + ei).value - f(t - ei).value) / (2 * h)).epsilon(1e-6));
    for (Eigen::Index l = 0; l < 3; ++l) {
      Vec el = Vec::Zero(3);
      el(l) = h;
      double fd = (f(t + ei + el).value - f(t + ei - el).value - f(t - ei + el).value + f(t - ei - el).value) / (4 * h * h);
      CHECK(j.hessian(i, l) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
  CHECK((j.hessian - j.hessian.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("Schroedinger operator examples") {
  Vec t1 = vec({0.9});
  CHECK(apply_SL<double>(Jet2<double>::constant(1.0, 1), t1, 1, 0, 1) == 0.0);

  auto pts = sample_points(4, 5, 99);
  for (auto [n, m] : {std::pair{2, 0}, {1, 1}, {2, 1}, {2, 2}, {1, 3}}) {
    for (Rational k0 : {Rational(1, 2), Rational(3, 2), Rational(7, 3)}) {
      for (const auto& p : sample_points(n + m, 3, 7)) {
        Vec t(n + m);
        for (int i = 0; i < n + m; ++i) t(i) = p[static_cast<std::size_t>(i)];
        double k = k0.get_d();
        auto d = delta_jet<double>(t, n, m, k);
        double expected = rho_norm(n, m).specialize(k0).get_d() * d.value;
        CHECK(apply_SL<double>(d, t, n, m, k0) == doctest::Approx(expected).epsilon(1e-8).scale(0));
      }
    }
  }

  // n=m=1, f = delta * (x - y/k), k0 = 3/2
  Rational k0(3, 2);
  for (const auto& p : sample_points(2, 5, 3)) {
    Vec t = vec({p[0], p[1]});
    auto f = delta_jet<double>(t, 1, 1, 1.5) * (exp(Jet2<double>::coordinate(t, 0)) - exp(Jet2<double>::coordinate(t, 1)) * (1 / 1.5));
    double expected = (1 - 1.5) / 4 * f.value;
    CHECK(std::abs(apply_SL<double>(f, t, 1, 1, k0) - expected) <= 1e-8 * std::abs(f.value));
  }
}

TEST_CASE("sample points") {
  auto a = sample_points(4, 10, 42), b = sample_points(4, 10, 42);
  CHECK(a == b);
  CHECK(a.size() == 10);
  for (const auto& p : a) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i] >= 0.3);
      CHECK(p[i] <= 2.5);
      if (i > 0) CHECK(p[i - 1] - p[i] >= 0.15);
    }
  }
  CHECK(sample_points(4, 10, 43) != a);
}

TEST_CASE("conjugation check examples") {
  for (auto [n, m] : {std::pair{1, 0}, {1, 1}, {2, 2}}) {
    auto r = conjugation_check(Partition{}, n, m, Rational(7, 3));
    CHECK(r.pass);
    CHECK(r.max_residual <= 1e-8);
  }
  auto r1 = conjugation_check(Partition{1}, 1, 1, Rational(3, 2));
  CHECK(r1.pass);
  CHECK(r1.points.size() == 10);
  auto r2 = conjugation_check(Partition{2}, 2, 0, Rational(1));
  CHECK(r2.pass);
  CHECK(r2.eigenvalue == eigenvalue({2}, 2, 0));
}

TEST_CASE("verdict follows the tolerance") {
  GaugeOptions tight;
  tight.tolerance = 0;
  auto r = conjugation_check(Partition{2, 1}, 2, 1, Rational(3, 2), tight);
  CHECK(r.pass == (r.max_residual <= 0));
  GaugeOptions loose;
  loose.tolerance = 1e-8;
  CHECK(conjugation_check(Partition{2, 1}, 2, 1, Rational(3, 2), loose).pass);
}

TEST_CASE("literal potential sign breaks the identity once m >= 2") {
  auto small = conjugation_check(Partition{1}, 1, 1, Rational(3, 2));
  CHECK(small.literal_max_residual <= 1e-8);
  auto r = conjugation_check(Partition{1}, 2, 2, Rational(3, 2));
  CHECK(r.pass);
  CHECK(r.literal_max_residual > 1e-3);
  GaugeOptions literal;
  literal.convention = PotentialConvention::literal;
  CHECK_FALSE(conjugation_check(Partition{1}, 2, 2, Rational(3, 2), literal).pass);
  // k = 1 makes the R22 coefficient vanish under either sign
  CHECK(conjugation_check(Partition{1}, 2, 2, Rational(1), literal).pass);
}

TEST_CASE("conjugated operator is first-order free") {
  for (auto [n, m] : {std::pair{2, 0}, {1, 1}, {2, 2}})
    for (Rational k0 : {Rational(1, 2), Rational(7, 3)})
      for (const auto& p : sample_points(n + m, 5, 11)) {
        auto r = first_order_freeness(p, n, m, k0);
        CHECK(r.quotients.size() == 3);
        CHECK(r.spread <= 1e-7);
      }
}

TEST_CASE("extended precision does not increase residuals") {
  auto pj = super_jack({2, 1}, 2, 1);
  Rational k0(7, 3);
  auto poly = pj.poly.specialize(k0);
  RatK e = eigenvalue({2, 1}, 2, 1);
  double worst_d = 0, worst_ld = 0;
  for (const auto& p : sample_points(3, 10, 5)) {
    worst_d = std::max(worst_d, conjugation_residual<double>(poly, e, p, 2, 1, k0, PotentialConvention::gauge_consistent));
    worst_ld = std::max<double>(worst_ld, static_cast<double>(conjugation_residual<long double>(
                                              poly, e, p, 2, 1, k0, PotentialConvention::gauge_consistent)));
  }
  CHECK(worst_d <= 1e-8);
  CHECK(worst_ld <= worst_d + 1e-15);
}
