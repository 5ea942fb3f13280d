#include "superjack/gauge.hpp"

#include <algorithm>
#include <random>

namespace superjack {

namespace {

class PointSampler {
 public:
  PointSampler(int dim, std::uint64_t seed) : dim_(dim), rng_(seed) {}

  std::vector<double> next() {
    std::uniform_real_distribution<double> coord(0.3, 2.5);
    for (int attempt = 0; attempt < 100000; ++attempt) {
      std::vector<double> t(static_cast<std::size_t>(dim_));
      for (auto& x : t) x = coord(rng_);
      std::sort(t.begin(), t.end(), std::greater<>());
      bool separated = true;
      for (std::size_t i = 0; i + 1 < t.size(); ++i) separated = separated && t[i] - t[i + 1] >= 0.15;
      if (separated) return t;
    }
    throw SingularConfiguration();
  }

 private:
  int dim_;
  std::mt19937_64 rng_;
};

// True when |P(t)| is tiny compared with the size of its terms, so relative residuals are meaningless.
bool near_nodal(const SparsePoly& specialized, const std::vector<double>& t) {
  double value = 0, scale = 0;
  for (const auto& [e, c] : specialized.terms()) {
    double w = 0;
    for (std::size_t i = 0; i < t.size(); ++i) w += e[i] * t[i];
    double term = c.constant_value().get_d() * std::exp(w);
    value += term;
    scale += std::abs(term);
  }
  return std::abs(value) < 1e-6 * scale;
}

}  // namespace

std::vector<std::vector<double>> sample_points(int dim, int count, std::uint64_t seed) {
  PointSampler sampler(dim, seed);
  std::vector<std::vector<double>> out;
  for (int i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

GaugeReport conjugation_check(const SuperJack& pj, const Rational& k0, const GaugeOptions& options) {
  require_nonzero_k(k0);
  if (pj.poly.is_zero())
    throw InvalidArgument("P_" + pj.lambda.to_string() + " vanishes for (n,m) = (" + std::to_string(pj.n) + "," +
                          std::to_string(pj.m) + ")");
  GaugeReport report;
  report.lambda = pj.lambda;
  report.n = pj.n;
  report.m = pj.m;
  report.k0 = k0;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  report.convention = options.convention;
  report.eigenvalue = extract_eigenvalue(pj.poly);
  const SparsePoly specialized = pj.poly.specialize(k0);
  // The literal form differs only in the R22 sign, so it is the alternative whenever the applied one is not.
  const auto alternative = options.convention == PotentialConvention::literal ? PotentialConvention::gauge_consistent
                                                                              : PotentialConvention::literal;

  PointSampler sampler(pj.n + pj.m, options.seed);
  const int max_resamples = 100 * std::max(options.num_points, 1);
  while (static_cast<int>(report.points.size()) < options.num_points) {
    auto t = sampler.next();
    if (near_nodal(specialized, t)) {
      if (++report.resampled > max_resamples) throw SingularConfiguration();
      continue;
    }
    GaugePoint p;
    p.t = t;
    p.residual = conjugation_residual<double>(specialized, report.eigenvalue, t, pj.n, pj.m, k0, options.convention);
    double other = conjugation_residual<double>(specialized, report.eigenvalue, t, pj.n, pj.m, k0, alternative);
    p.literal_residual = options.convention == PotentialConvention::literal ? p.residual : other;
    report.max_residual = std::max(report.max_residual, p.residual);
    report.literal_max_residual = std::max(report.literal_max_residual, p.literal_residual);
    report.points.push_back(std::move(p));
  }
  report.pass = report.max_residual <= options.tolerance;
  return report;
}

GaugeReport conjugation_check(const Partition& lambda, int n, int m, const Rational& k0, const GaugeOptions& options) {
  require_nonzero_k(k0);
  return conjugation_check(super_jack(lambda, n, m), k0, options);
}

FirstOrderReport first_order_freeness(const std::vector<double>& point, int n, int m, const Rational& k0) {
  require_nonzero_k(k0);
  using Vector = Jet2<double>::Vector;
  const auto dim = static_cast<Eigen::Index>(point.size());
  if (dim != n + m) throw InvalidArgument("point has wrong dimension");
  Vector t = Eigen::Map<const Vector>(point.data(), dim);
  const double k = k0.get_d();
  const double rho = rho_norm(n, m).specialize(k0).get_d();

  FirstOrderReport report;
  report.t = point;
  report.potential = potential<double>(t, n, m, k0);
  const auto delta = delta_jet<double>(t, n, m, k);
  const auto inv_delta = reciprocal(delta);

  std::vector<Vector> exponents(3, Vector::Zero(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    exponents[1](i) = 0.5 * static_cast<double>(i + 1);
    exponents[2](i) = (i % 2 == 0 ? 0.3 : -0.7) * static_cast<double>(i + 1);
  }
  double scale = 1;
  for (const auto& w : exponents) {
    auto f = Jet2<double>::exp_linear(w, t);
    double conjugated = delta.value * apply_M_numeric<double>(inv_delta * f, t, n, m, k);
    double q = (conjugated + rho * f.value - deformed_laplacian(f, n, m, k)) / f.value;
    report.quotients.push_back(q);
    scale = std::max(scale, std::abs(q));
  }
  for (double q : report.quotients) report.spread = std::max(report.spread, std::abs(q - report.quotients[0]) / scale);
  return report;
}

}  // namespace superjack
