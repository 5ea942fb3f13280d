#pragma once

#include "superjack/partition.hpp"
#include "superjack/ratk.hpp"
#include "superjack/sparse_poly.hpp"
#include "superjack/symfunc.hpp"

// Independent constructions used to cross-check the main pipeline. Nothing here goes through the
// power-sum/monomial transition code; only the SparsePoly container and the operator are shared.
namespace superjack::oracles {

/// Hook Schur polynomial with y -> -y: sum over supertableaux of shape lambda on 1<..<n<1'<..<m'
/// of (-1)^{#primed} x^{unprimed content} y^{primed content}.
SparsePoly hook_schur_twisted(const Partition& lambda, int n, int m);

/// Number of valid supertableaux of shape lambda.
long count_supertableaux(const Partition& lambda, int n, int m);

/// Jack polynomial as the unique eigenvector, with unit m_lambda coefficient, of the classical
/// operator in |lambda| variables restricted to the span of m_mu, mu <= lambda in dominance.
SymFuncVec jack_eigenvector_oracle(const Partition& lambda);

/// sum_i lambda_i (lambda_i + k (n + 1 - 2i)).
RatK classical_eigenvalue(const Partition& lambda, int n);

}  // namespace superjack::oracles
