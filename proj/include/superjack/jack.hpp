#pragma once

#include <map>

#include "superjack/partition.hpp"
#include "superjack/ratk.hpp"
#include "superjack/symfunc.hpp"

namespace superjack {

/// Power-sum coefficients of the Jack polynomial P_lambda(x;k): P_lambda = sum_mu chi[mu] p_mu.
struct ChiTable {
  Partition lambda;
  std::map<Partition, RatK> chi;

  friend bool operator==(const ChiTable&, const ChiTable&) = default;
};

/// Monic Jack polynomial in the monomial basis, k = 1/alpha. Built by Gram-Schmidt of the
/// monomial basis in increasing lexicographic order against the deformed Hall pairing.
/// Results are memoized per weight class.
SymFuncVec jack_in_monomial(const Partition& lambda);

ChiTable chi_table(const Partition& lambda);

/// The table as a power-sum vector.
SymFuncVec to_symfunc(const ChiTable& table);

/// sum_mu chi[mu] p_mu is unitriangular in the monomial basis with respect to dominance.
bool is_unitriangular(const ChiTable& table);

/// Full characterization without Gram-Schmidt: unitriangular, and orthogonal under the Hall
/// pairing to every m_mu with mu lexicographically below lambda. Exactly one vector per lambda
/// satisfies this, so a table passing it reconstructs the Jack polynomial.
bool satisfies_jack_characterization(const ChiTable& table);

}  // namespace superjack
