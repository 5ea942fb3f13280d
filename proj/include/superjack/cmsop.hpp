#pragma once

#include <utility>
#include <vector>

#include "superjack/errors.hpp"
#include "superjack/partition.hpp"
#include "superjack/ratk.hpp"
#include "superjack/sparse_poly.hpp"

namespace superjack {

/// Positive roots of gl(n|m). Each root is a pair of flat coordinate indices (a, b) standing for
/// e_a - e_b, with x-block coordinates 0..n-1 followed by y-block coordinates n..n+m-1.
struct RootSystemData {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> even_x;  // eps_i - eps_i', i < i'
  std::vector<std::pair<int, int>> even_y;  // epsbar_j - epsbar_j', j < j'
  std::vector<std::pair<int, int>> odd;     // eps_i - epsbar_j
};

RootSystemData root_system(int n, int m);

/// Vector over eps_1..eps_n, epsbar_1..epsbar_m with exact coordinates.
struct Weight {
  int n = 0;
  int m = 0;
  std::vector<RatK> coords;

  static Weight zero(int n, int m);
  static Weight eps(int n, int m, int i);      // 0-based
  static Weight eps_bar(int n, int m, int j);  // 0-based
  /// e_a - e_b for a root stored as index pair.
  static Weight root(int n, int m, std::pair<int, int> r);

  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator*(const RatK& c, Weight w) {
    for (auto& x : w.coords) x *= c;
    return w;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// (v,w)_k = sum_i v_i w_i - k sum_j vbar_j wbar_j.
RatK bilinear_k(const Weight& v, const Weight& w);

/// rho_(k) = k rho_1 + (1/k) rho_2 - rho_12.
Weight rho_k(int n, int m);
RatK rho_norm(int n, int m);

/// Realization of the mixed x/y first-order term.
enum class MixedTerm {
  /// (x_i + y_j)/(x_i - y_j) (x_i d_x_i + k y_j d_y_j): exact on the deformed symmetric algebra.
  quasi_invariant,
  /// The literal (x_i d_x_i - y_j d_y_j); generally leaves a nonzero remainder.
  literal,
};

/// Raised when a divided-difference step leaves a nonzero remainder.
class NotInAlgebra : public Error {
 public:
  NotInAlgebra(std::string what, SparsePoly remainder)
      : Error("input not in the deformed symmetric algebra (" + std::move(what) + ")"),
        remainder_(std::move(remainder)) {}
  const SparsePoly& remainder() const { return remainder_; }

 private:
  SparsePoly remainder_;
};

/// Raised when M(P) is not proportional to P.
class TheoremViolation : public Error {
 public:
  explicit TheoremViolation(SparsePoly residual)
      : Error("Theorem 1 violation: M(P) is not proportional to P"), residual_(std::move(residual)) {}
  const SparsePoly& residual() const { return residual_; }

 private:
  SparsePoly residual_;
};

/// Exact application of the deformed CMS operator in multiplicative coordinates:
///   sum_i (x_i d_i)^2 - k sum_j (y_j d_j)^2
///   + k sum_{i<i'} (x_i+x_i')/(x_i-x_i') (x_i d_i - x_i' d_i')
///   -   sum_{j<j'} (y_j+y_j')/(y_j-y_j') (y_j d_j - y_j' d_j')
///   -   sum_{i,j}  (x_i+y_j)/(x_i-y_j) (mixed first-order term)
/// Every quotient is an exact polynomial division; a nonzero remainder throws NotInAlgebra.
/// Pair terms are accumulated in the fixed order (i<i'), (j<j'), (i,j) lexicographic.
/// `k` may be the generic indeterminate or a constant (specialized computation).
SparsePoly apply_M(const SparsePoly& f, const RatK& k = RatK::k(), MixedTerm mixed = MixedTerm::quasi_invariant);

/// c with M(f) = c f; throws TheoremViolation carrying M(f) - c f otherwise. f must be nonzero.
RatK proportionality_constant(const SparsePoly& f, const SparsePoly& image);

/// Applies M to P_lambda(x,y;k) and returns its eigenvalue.
RatK extract_eigenvalue(const Partition& lambda, int n, int m, MixedTerm mixed = MixedTerm::quasi_invariant);
RatK extract_eigenvalue(const SparsePoly& poly, const RatK& k = RatK::k(),
                        MixedTerm mixed = MixedTerm::quasi_invariant);

}  // namespace superjack
