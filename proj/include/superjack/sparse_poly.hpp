#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superjack/ratk.hpp"

namespace superjack {

/// Exponent vector over x_1..x_n followed by y_1..y_m.
using Exponent = std::vector<int>;

/// Graded lexicographic, descending: higher total degree first, then lexicographically larger first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in x_1..x_n, y_1..y_m with coefficients in Q(k). No zero coefficients are stored.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, RatK, GradedLexGreater>;

  SparsePoly() = default;
  SparsePoly(int n, int m);

  static SparsePoly constant(int n, int m, const RatK& c);
  /// The variable with flat index `var` (x-block first).
  static SparsePoly variable(int n, int m, int var);

  int n() const { return n_; }
  int m() const { return m_; }
  int num_vars() const { return n_ + m_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const RatK& c);
  RatK coeff(const Exponent& e) const;
  int total_degree() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const RatK& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const RatK& c) { return a *= c; }
  friend SparsePoly operator*(const RatK& c, SparsePoly a) { return a *= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  /// Replaces k by k0 in every coefficient; throws PoleError on a pole.
  SparsePoly specialize(const Rational& k0) const;
  /// Exact value at the point (x_1..x_n, y_1..y_m) with k = k0.
  Rational evaluate(std::span<const Rational> point, const Rational& k0) const;

  /// v * d/dv for the variable v of index var.
  SparsePoly euler(int var) const;
  SparsePoly derivative(int var) const;
  /// Substitutes variable `from` := variable `to`.
  SparsePoly identify(int from, int to) const;
  SparsePoly swap_vars(int a, int b) const;

  /// Division by (v_a - v_b) as a polynomial in v_a: returns {quotient, remainder}, remainder free of v_a.
  std::pair<SparsePoly, SparsePoly> divide_by_difference(int a, int b) const;

  std::string variable_name(int var) const;
  std::string to_string() const;

 private:
  void check_compatible(const SparsePoly& o) const;

  int n_ = 0;
  int m_ = 0;
  TermMap terms_;
};

}  // namespace superjack
