#include "superjack/jack.hpp"

#include <memory>
#include <mutex>

#include "superjack/errors.hpp"

namespace superjack {

namespace {

struct JackClass {
  std::map<Partition, SymFuncVec> monomial;
};

std::unique_ptr<JackClass> build_class(int weight) {
  auto cls = std::make_unique<JackClass>();
  auto parts = partitions_of(weight);
  // partitions_of is reverse-lex; walk it backwards to go from (1^d) up to (d).
  std::vector<SymFuncVec> basis_p;  // power-sum images of accepted P_mu
  std::vector<RatK> norms;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const Partition& lambda = *it;
    SymFuncVec m_p = monomial_to_powersum(lambda);
    SymFuncVec accum_p = m_p;
    for (std::size_t j = 0; j < basis_p.size(); ++j) {
      RatK proj = hall_inner_product(m_p, basis_p[j]) / norms[j];
      if (proj.is_zero()) continue;
      accum_p -= basis_p[j] * proj;
    }
    RatK norm = hall_inner_product(accum_p, accum_p);
    if (norm.is_zero()) throw InternalError("degenerate Gram-Schmidt step at " + lambda.to_string());
    cls->monomial.emplace(lambda, to_basis(accum_p, Basis::monomial));
    basis_p.push_back(std::move(accum_p));
    norms.push_back(std::move(norm));
  }
  return cls;
}

std::mutex jack_mutex;
std::map<int, std::shared_ptr<const JackClass>> jack_cache;

std::shared_ptr<const JackClass> jack_class(int weight) {
  {
    std::lock_guard lock(jack_mutex);
    auto it = jack_cache.find(weight);
    if (it != jack_cache.end()) return it->second;
  }
  std::shared_ptr<const JackClass> built = build_class(weight);
  std::lock_guard lock(jack_mutex);
  auto [it, inserted] = jack_cache.emplace(weight, std::move(built));
  return it->second;
}

}  // namespace

SymFuncVec jack_in_monomial(const Partition& lambda) {
  auto cls = jack_class(lambda.weight());
  return cls->monomial.at(lambda);
}

ChiTable chi_table(const Partition& lambda) {
  SymFuncVec p = to_basis(jack_in_monomial(lambda), Basis::powersum);
  ChiTable table{lambda, {}};
  for (const auto& [mu, c] : p.coeffs()) table.chi.emplace(mu, c);
  return table;
}

SymFuncVec to_symfunc(const ChiTable& table) {
  SymFuncVec v(Basis::powersum);
  for (const auto& [mu, c] : table.chi) {
    if (mu.weight() != table.lambda.weight()) throw InvalidArgument("chi table entry of wrong weight");
    v.add(mu, c);
  }
  return v;
}

bool is_unitriangular(const ChiTable& table) {
  SymFuncVec m = to_basis(to_symfunc(table), Basis::monomial);
  if (m.coeff(table.lambda) != RatK(1)) return false;
  for (const auto& [mu, c] : m.coeffs()) {
    if (!dominance_leq(mu, table.lambda)) return false;
  }
  return true;
}

bool satisfies_jack_characterization(const ChiTable& table) {
  for (const auto& [mu, c] : table.chi)
    if (mu.weight() != table.lambda.weight()) return false;
  if (!is_unitriangular(table)) return false;
  SymFuncVec p = to_symfunc(table);
  for (const auto& mu : partitions_of(table.lambda.weight())) {
    if (!(mu < table.lambda)) continue;
    if (!hall_inner_product(p, monomial_to_powersum(mu)).is_zero()) return false;
  }
  return true;
}

}  // namespace superjack
