#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "superjack/cmsop.hpp"
#include "superjack/gauge.hpp"
#include "superjack/jack.hpp"
#include "superjack/partition.hpp"

namespace superjack::suites {

using ChiProvider = std::function<ChiTable(const Partition&)>;

/// Chi tables straight from the in-memory Gram-Schmidt.
ChiProvider direct_chi();

struct Options {
  /// Suite-specific default when unset.
  std::optional<int> max_weight;
  std::optional<int> n;
  std::optional<int> m;
  /// Unset means generic k.
  std::optional<Rational> k;
  std::optional<Partition> lambda;
  std::uint64_t seed = 20240611;
  double tol = 1e-8;
  int points = 10;
  int jobs = 1;
  MixedTerm mixed = MixedTerm::quasi_invariant;
  PotentialConvention convention = PotentialConvention::gauge_consistent;
  ChiProvider chi = direct_chi();
};

struct Result {
  nlohmann::json report;
  bool pass = false;
};

/// M(P_lambda) = e P_lambda exactly, and e equals the closed form.
Result theorem1(const Options& options);
/// P_lambda at k=1 equals the twisted hook Schur polynomial.
Result schur(const Options& options);
/// Numeric gauge relation plus first-order-freeness.
Result gauge(const Options& options);
/// m = 0 reduction, classical spectrum, eigenvector oracle, k=1 character integrality.
Result classical(const Options& options);
/// P_lambda vanishes exactly outside the hook; quasi-invariance and double symmetry otherwise.
Result hooks(const Options& options);

/// Dispatch by name: theorem1 | schur | gauge | classical | hooks. Throws InvalidArgument otherwise.
Result run(const std::string& suite, const Options& options);

/// Runs fn(0..count-1) on up to `jobs` threads; results are returned in index order.
std::vector<nlohmann::json> parallel_map(std::size_t count, int jobs, const std::function<nlohmann::json(std::size_t)>& fn);

}  // namespace superjack::suites
