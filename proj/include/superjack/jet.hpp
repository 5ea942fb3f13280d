#pragma once

#include <cmath>

#include <Eigen/Dense>

namespace superjack {

/// Value, gradient and Hessian of a scalar function of `dim` variables, propagated in forward mode.
template <class Scalar>
struct Jet2 {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Scalar value{0};
  Vector gradient;
  Matrix hessian;

  static Jet2 constant(Scalar c, Eigen::Index dim) {
    return Jet2{c, Vector::Zero(dim), Matrix::Zero(dim, dim)};
  }

  /// The coordinate function t -> t_i at the point t.
  static Jet2 coordinate(const Vector& t, Eigen::Index i) {
    Jet2 j = constant(t(i), t.size());
    j.gradient(i) = Scalar(1);
    return j;
  }

  /// exp(w . t): value v, gradient v w, Hessian v w w^T.
  static Jet2 exp_linear(const Vector& w, const Vector& t) {
    Scalar v = std::exp(w.dot(t));
    return Jet2{v, v * w, v * w * w.transpose()};
  }

  Eigen::Index dim() const { return gradient.size(); }

  Jet2& operator+=(const Jet2& o) {
    value += o.value;
    gradient += o.gradient;
    hessian += o.hessian;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    value -= o.value;
    gradient -= o.gradient;
    hessian -= o.hessian;
    return *this;
  }
  Jet2& operator*=(Scalar c) {
    value *= c;
    gradient *= c;
    hessian *= c;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, Scalar c) { return a *= c; }
  friend Jet2 operator*(Scalar c, Jet2 a) { return a *= c; }
  friend Jet2 operator-(Jet2 a) { return a *= Scalar(-1); }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Matrix outer = a.gradient * b.gradient.transpose();
    return Jet2{a.value * b.value, a.value * b.gradient + b.value * a.gradient,
                a.value * b.hessian + b.value * a.hessian + outer + outer.transpose()};
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

  /// g(u) with g(u), g'(u), g''(u) supplied by the caller.
  static Jet2 chain(const Jet2& u, Scalar g0, Scalar g1, Scalar g2) {
    return Jet2{g0, g1 * u.gradient, g1 * u.hessian + g2 * u.gradient * u.gradient.transpose()};
  }

  friend Jet2 reciprocal(const Jet2& u) {
    Scalar inv = Scalar(1) / u.value;
    return chain(u, inv, -inv * inv, Scalar(2) * inv * inv * inv);
  }
  friend Jet2 exp(const Jet2& u) {
    Scalar e = std::exp(u.value);
    return chain(u, e, e, e);
  }
  friend Jet2 log(const Jet2& u) { return chain(u, std::log(u.value), Scalar(1) / u.value, Scalar(-1) / (u.value * u.value)); }
  friend Jet2 sinh(const Jet2& u) {
    Scalar s = std::sinh(u.value);
    return chain(u, s, std::cosh(u.value), s);
  }
  /// u^p on u > 0.
  friend Jet2 pow(const Jet2& u, Scalar p) {
    Scalar v = std::pow(u.value, p);
    return chain(u, v, p * v / u.value, p * (p - Scalar(1)) * v / (u.value * u.value));
  }
};

}  // namespace superjack
