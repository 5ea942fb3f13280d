#pragma once

#include <map>
#include <vector>

#include "superjack/partition.hpp"
#include "superjack/ratk.hpp"
#include "superjack/sparse_poly.hpp"

namespace superjack {

enum class Basis { monomial, powersum };

/// Homogeneous symmetric function as a partition-indexed coefficient map in one basis.
class SymFuncVec {
 public:
  using CoeffMap = std::map<Partition, RatK>;

  explicit SymFuncVec(Basis basis) : basis_(basis) {}
  /// The basis element indexed by lambda.
  SymFuncVec(Basis basis, const Partition& lambda);

  Basis basis() const { return basis_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Weight of the homogeneous component, -1 for the zero vector.
  int weight() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first.weight(); }

  /// Throws InvalidArgument when lambda has a different weight from stored entries.
  void add(const Partition& lambda, const RatK& c);
  RatK coeff(const Partition& lambda) const;

  SymFuncVec& operator+=(const SymFuncVec& o);
  SymFuncVec& operator-=(const SymFuncVec& o);
  SymFuncVec& operator*=(const RatK& c);
  friend SymFuncVec operator+(SymFuncVec a, const SymFuncVec& b) { return a += b; }
  friend SymFuncVec operator-(SymFuncVec a, const SymFuncVec& b) { return a -= b; }
  friend SymFuncVec operator*(SymFuncVec a, const RatK& c) { return a *= c; }
  friend SymFuncVec operator*(const RatK& c, SymFuncVec a) { return a *= c; }
  friend bool operator==(const SymFuncVec& a, const SymFuncVec& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Basis basis_;
  CoeffMap coeffs_;
};

/// Exact change-of-basis data for one weight class.
struct TransitionData {
  int weight = 0;
  std::vector<Partition> partitions;  // reverse-lex order; row/column index
  /// p_mu = sum_lambda p_to_m[mu][lambda] m_lambda
  std::vector<std::vector<Rational>> p_to_m;
  /// m_lambda = sum_mu m_to_p[lambda][mu] p_mu
  std::vector<std::vector<Rational>> m_to_p;

  std::size_t index_of(const Partition& lambda) const;
};

/// Per-weight transition matrices, computed once and shared between threads.
const TransitionData& transition(int weight);

/// m_lambda in n variables (zero when length(lambda) > n).
SparsePoly expand_monomial_sym(const Partition& lambda, int n);

/// p_mu in the monomial basis (stable range).
SymFuncVec powersum_to_monomial(const Partition& mu);
/// m_lambda in the power-sum basis.
SymFuncVec monomial_to_powersum(const Partition& lambda);
/// Converts a whole vector to the other basis (identity when already there).
SymFuncVec to_basis(const SymFuncVec& v, Basis target);

/// <p_lambda, p_mu> = delta z_lambda k^{-l(lambda)}, extended bilinearly. Inputs in either basis.
RatK hall_inner_product(const SymFuncVec& f, const SymFuncVec& g);

/// Concrete polynomial in x_1..x_n (empty y-block).
SparsePoly realize(const SymFuncVec& v, int n);

/// p_r = x_1^r + ... + x_n^r (r >= 1).
SparsePoly power_sum(int r, int n);

}  // namespace superjack
