#include "superjack/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "superjack/errors.hpp"

namespace superjack {

SymFuncVec::SymFuncVec(Basis basis, const Partition& lambda) : basis_(basis) { coeffs_.emplace(lambda, RatK(1)); }

void SymFuncVec::add(const Partition& lambda, const RatK& c) {
  if (!coeffs_.empty() && coeffs_.begin()->first.weight() != lambda.weight())
    throw InvalidArgument("symmetric function vectors are homogeneous");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

RatK SymFuncVec::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatK() : it->second;
}

SymFuncVec& SymFuncVec::operator+=(const SymFuncVec& o) {
  if (o.basis_ != basis_) throw InvalidArgument("basis mismatch");
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

SymFuncVec& SymFuncVec::operator-=(const SymFuncVec& o) {
  if (o.basis_ != basis_) throw InvalidArgument("basis mismatch");
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

SymFuncVec& SymFuncVec::operator*=(const RatK& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

std::size_t TransitionData::index_of(const Partition& lambda) const {
  // partitions are reverse-lex sorted
  auto it = std::lower_bound(partitions.begin(), partitions.end(), lambda, std::greater<Partition>());
  if (it == partitions.end() || *it != lambda) throw InvalidArgument("partition not in weight class");
  return static_cast<std::size_t>(it - partitions.begin());
}

namespace {

// Number of maps f from the parts of mu to the rows of lambda with row sums equal to lambda.
long count_distributions(const std::vector<int>& mu, std::size_t next, std::vector<int>& room) {
  if (next == mu.size()) {
    return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r >= mu[next]) {
      r -= mu[next];
      total += count_distributions(mu, next + 1, room);
      r += mu[next];
    }
  }
  return total;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalError("singular power-sum/monomial transition");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::unique_ptr<TransitionData> build_transition(int weight) {
  auto data = std::make_unique<TransitionData>();
  data->weight = weight;
  data->partitions = partitions_of(weight);
  const std::size_t n = data->partitions.size();
  data->p_to_m.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> room = data->partitions[j].parts();
      data->p_to_m[i][j] = count_distributions(data->partitions[i].parts(), 0, room);
    }
  }
  data->m_to_p = invert(data->p_to_m);
  return data;
}

std::mutex transition_mutex;
std::map<int, std::unique_ptr<TransitionData>> transition_cache;

}  // namespace

const TransitionData& transition(int weight) {
  if (weight < 0) throw InvalidArgument("negative weight");
  std::lock_guard lock(transition_mutex);
  auto& slot = transition_cache[weight];
  if (!slot) slot = build_transition(weight);
  return *slot;
}

SparsePoly expand_monomial_sym(const Partition& lambda, int n) {
  SparsePoly r(n, 0);
  if (lambda.length() > n) return r;
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
  std::sort(e.begin(), e.end());
  do {
    r.add_term(e, RatK(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return r;
}

SymFuncVec powersum_to_monomial(const Partition& mu) {
  const auto& t = transition(mu.weight());
  std::size_t row = t.index_of(mu);
  SymFuncVec out(Basis::monomial);
  for (std::size_t j = 0; j < t.partitions.size(); ++j) out.add(t.partitions[j], RatK(t.p_to_m[row][j]));
  return out;
}

SymFuncVec monomial_to_powersum(const Partition& lambda) {
  const auto& t = transition(lambda.weight());
  // p = P m  =>  m = P^{-1} p, so m_lambda = sum_mu (P^{-1})[lambda][mu] p_mu.
  std::size_t row = t.index_of(lambda);
  SymFuncVec out(Basis::powersum);
  for (std::size_t j = 0; j < t.partitions.size(); ++j) out.add(t.partitions[j], RatK(t.m_to_p[row][j]));
  return out;
}

SymFuncVec to_basis(const SymFuncVec& v, Basis target) {
  if (v.basis() == target) return v;
  SymFuncVec out(target);
  if (v.is_zero()) return out;
  const auto& t = transition(v.weight());
  const auto& matrix = target == Basis::monomial ? t.p_to_m : t.m_to_p;
  std::vector<RatK> acc(t.partitions.size());
  for (const auto& [p, c] : v.coeffs()) {
    std::size_t row = t.index_of(p);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      if (matrix[row][j] != 0) acc[j] += c * RatK(matrix[row][j]);
    }
  }
  for (std::size_t j = 0; j < acc.size(); ++j) out.add(t.partitions[j], acc[j]);
  return out;
}

RatK hall_inner_product(const SymFuncVec& f, const SymFuncVec& g) {
  if (f.is_zero() || g.is_zero()) return RatK();
  if (f.weight() != g.weight()) throw InvalidArgument("inner product of different weights");
  SymFuncVec fp = to_basis(f, Basis::powersum);
  SymFuncVec gp = to_basis(g, Basis::powersum);
  RatK total;
  for (const auto& [p, c] : fp.coeffs()) {
    RatK other = gp.coeff(p);
    if (other.is_zero()) continue;
    std::vector<Integer> kpow(static_cast<std::size_t>(p.length()) + 1);
    kpow.back() = 1;
    total += c * other * RatK(IntPoly(z_factor(p)), IntPoly(std::move(kpow)));
  }
  return total;
}

SparsePoly power_sum(int r, int n) {
  if (r < 1) throw InvalidArgument("power sums start at degree 1");
  SparsePoly out(n, 0);
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = r;
    out.add_term(e, RatK(1));
  }
  return out;
}

SparsePoly realize(const SymFuncVec& v, int n) {
  SparsePoly out(n, 0);
  for (const auto& [p, c] : v.coeffs()) {
    SparsePoly term = SparsePoly::constant(n, 0, c);
    if (v.basis() == Basis::monomial) {
      term = term * expand_monomial_sym(p, n);
    } else {
      for (int part : p) term = term * power_sum(part, n);
    }
    out += term;
  }
  return out;
}

}  // namespace superjack
