#pragma once

#include "superjack/jack.hpp"
#include "superjack/partition.hpp"
#include "superjack/ratk.hpp"
#include "superjack/sparse_poly.hpp"

namespace superjack {

/// Deformed power sum S^{p,k} = sum_i x_i^p - (1/k) sum_j y_j^p, p >= 1.
SparsePoly super_power_sum(int p, int n, int m);

struct SuperJack {
  Partition lambda;
  int n = 0;
  int m = 0;
  SparsePoly poly;
};

/// P_lambda(x,y;k) = sum_mu chi_mu^lambda(k) S^{mu,k}. Partitions outside the (n,m)-hook are accepted.
SuperJack super_jack(const Partition& lambda, int n, int m);
/// Same, from a precomputed (for example cached) chi table.
SuperJack super_jack(const ChiTable& table, int n, int m);

/// Closed-form spectrum of the deformed operator on P_lambda:
///   sum_i lambda_i (lambda_i - 1 - 2k(i-1)) + |lambda| (1 + k(n-1) - m).
/// Cross-checked against cmsop::extract_eigenvalue by the verification suites.
RatK eigenvalue(const Partition& lambda, int n, int m);

/// Symmetric under permutations of the x-block and, separately, of the y-block.
bool is_doubly_symmetric(const SparsePoly& f);

/// (d/dx_i + k d/dy_j) f vanishes on x_i = y_j for every pair (i, j).
bool is_quasi_invariant(const SparsePoly& f, const RatK& k = RatK::k());

/// Rejects k0 = 0, where S^{p,k} is undefined.
void require_nonzero_k(const Rational& k0);

}  // namespace superjack
