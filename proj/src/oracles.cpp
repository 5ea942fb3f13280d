#include "superjack/oracles.hpp"

#include <algorithm>
#include <functional>

#include "superjack/cmsop.hpp"
#include "superjack/errors.hpp"

namespace superjack::oracles {

namespace {

struct Filling {
  const Partition& shape;
  int n;
  int m;
  std::vector<std::vector<int>> cells;  // symbol per cell, -1 while empty
};

bool fits(const Filling& f, int row, int col, int symbol) {
  auto primed = [&](int s) { return s >= f.n; };
  if (col > 0) {
    int left = f.cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)];
    if (left > symbol || (left == symbol && primed(symbol))) return false;
  }
  if (row > 0) {
    int up = f.cells[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)];
    if (up > symbol || (up == symbol && !primed(symbol))) return false;
  }
  return true;
}

void fill(Filling& f, int row, int col, const std::function<void(const Filling&)>& visit) {
  if (row == f.shape.length()) {
    visit(f);
    return;
  }
  int next_row = row, next_col = col + 1;
  if (next_col == f.shape[static_cast<std::size_t>(row)]) {
    ++next_row;
    next_col = 0;
  }
  for (int s = 0; s < f.n + f.m; ++s) {
    if (!fits(f, row, col, s)) continue;
    f.cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = s;
    fill(f, next_row, next_col, visit);
  }
  f.cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = -1;
}

void for_each_tableau(const Partition& lambda, int n, int m, const std::function<void(const Filling&)>& visit) {
  Filling f{lambda, n, m, {}};
  for (int r : lambda) f.cells.emplace_back(static_cast<std::size_t>(r), -1);
  if (lambda.empty()) {
    visit(f);
    return;
  }
  if (n + m == 0) return;
  fill(f, 0, 0, visit);
}

// All distinct permutations of the padded exponent vector of lambda.
SparsePoly monomial_symmetric(const Partition& lambda, int n) {
  SparsePoly out(n, 0);
  if (lambda.length() > n) return out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::copy(lambda.begin(), lambda.end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, RatK(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

// Reduced row echelon form over Q(k); returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<RatK>>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    RatK inv = RatK(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      RatK f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

SparsePoly hook_schur_twisted(const Partition& lambda, int n, int m) {
  SparsePoly out(n, m);
  for_each_tableau(lambda, n, m, [&](const Filling& f) {
    Exponent e(static_cast<std::size_t>(n + m), 0);
    int primed = 0;
    for (const auto& row : f.cells)
      for (int s : row) {
        ++e[static_cast<std::size_t>(s)];
        if (s >= n) ++primed;
      }
    out.add_term(e, RatK(primed % 2 == 0 ? 1 : -1));
  });
  return out;
}

long count_supertableaux(const Partition& lambda, int n, int m) {
  long count = 0;
  for_each_tableau(lambda, n, m, [&](const Filling&) { ++count; });
  return count;
}

RatK classical_eigenvalue(const Partition& lambda, int n) {
  RatK total;
  for (int i = 1; i <= lambda.length(); ++i) {
    RatK part(lambda[static_cast<std::size_t>(i - 1)]);
    total += part * (part + RatK::k() * RatK(n + 1 - 2 * i));
  }
  return total;
}

SymFuncVec jack_eigenvector_oracle(const Partition& lambda) {
  const int d = lambda.weight();
  const int n = d;
  // The classical spectrum is degenerate on a full weight class (e.g. (4,1,1) and (3,3) share
  // 18+24k), so work on the operator-invariant span of m_mu with mu <= lambda in dominance.
  std::vector<Partition> parts;
  for (const auto& mu : partitions_of(d))
    if (dominance_leq(mu, lambda)) parts.push_back(mu);
  const std::size_t size = parts.size();

  // column mu holds the monomial coordinates of M(m_mu)
  std::vector<std::vector<RatK>> a(size, std::vector<RatK>(size));
  for (std::size_t col = 0; col < size; ++col) {
    SparsePoly image = apply_M(monomial_symmetric(parts[col], n));
    for (std::size_t row = 0; row < size; ++row) {
      Exponent e(static_cast<std::size_t>(n), 0);
      std::copy(parts[row].begin(), parts[row].end(), e.begin());
      a[row][col] = image.coeff(e);
    }
  }
  const RatK e = classical_eigenvalue(lambda, n);
  for (std::size_t i = 0; i < size; ++i) a[i][i] -= e;

  auto pivots = row_reduce(a);
  if (pivots.size() + 1 != size) throw InternalError("eigenspace of " + lambda.to_string() + " is not one-dimensional");
  std::size_t free_col = 0;
  for (std::size_t c = 0, p = 0; c < size; ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
      continue;
    }
    free_col = c;
  }
  // v[free] = 1, v[pivot_r] = -a[r][free]
  std::vector<RatK> v(size);
  v[free_col] = RatK(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];

  auto lambda_it = std::find(parts.begin(), parts.end(), lambda);
  RatK lead = v[static_cast<std::size_t>(lambda_it - parts.begin())];
  if (lead.is_zero()) throw InternalError("oracle eigenvector has no m_lambda component");
  SymFuncVec out(Basis::monomial);
  for (std::size_t i = 0; i < size; ++i) out.add(parts[i], v[i] / lead);
  return out;
}

}  // namespace superjack::oracles
