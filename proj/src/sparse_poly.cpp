#include "superjack/sparse_poly.hpp"

#include <numeric>

#include "superjack/errors.hpp"

namespace superjack {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

SparsePoly::SparsePoly(int n, int m) : n_(n), m_(m) {
  if (n < 0 || m < 0) throw InvalidArgument("negative block size");
}

SparsePoly SparsePoly::constant(int n, int m, const RatK& c) {
  SparsePoly p(n, m);
  p.add_term(Exponent(static_cast<std::size_t>(n + m), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int n, int m, int var) {
  SparsePoly p(n, m);
  if (var < 0 || var >= n + m) throw InvalidArgument("variable index out of range");
  Exponent e(static_cast<std::size_t>(n + m), 0);
  e[static_cast<std::size_t>(var)] = 1;
  p.add_term(e, RatK(1));
  return p;
}

void SparsePoly::add_term(const Exponent& e, const RatK& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatK SparsePoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatK() : it->second;
}

int SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw InvalidArgument("polynomials over different variable blocks");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const RatK& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly r(a.n_, a.m_);
  Exponent e(static_cast<std::size_t>(a.num_vars()));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::specialize(const Rational& k0) const {
  SparsePoly r(n_, m_);
  for (const auto& [e, c] : terms_) r.add_term(e, RatK(c.specialize(k0)));
  return r;
}

Rational SparsePoly::evaluate(std::span<const Rational> point, const Rational& k0) const {
  if (point.size() != static_cast<std::size_t>(num_vars())) throw InvalidArgument("point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c.specialize(k0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int p = 0; p < e[i]; ++p) term *= point[i];
    }
    total += term;
  }
  return total;
}

SparsePoly SparsePoly::euler(int var) const {
  SparsePoly r(n_, m_);
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] != 0) r.terms_.emplace(e, c * RatK(e[v]));
  }
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r(n_, m_);
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    --d[v];
    r.add_term(d, c * RatK(e[v]));
  }
  return r;
}

SparsePoly SparsePoly::identify(int from, int to) const {
  SparsePoly r(n_, m_);
  auto f = static_cast<std::size_t>(from), t = static_cast<std::size_t>(to);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d[t] += d[f];
    d[f] = 0;
    r.add_term(d, c);
  }
  return r;
}

SparsePoly SparsePoly::swap_vars(int a, int b) const {
  SparsePoly r(n_, m_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    std::swap(d[static_cast<std::size_t>(a)], d[static_cast<std::size_t>(b)]);
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

std::pair<SparsePoly, SparsePoly> SparsePoly::divide_by_difference(int a, int b) const {
  // Bucket terms by the exponent of v_a, then eliminate top buckets using v_a = (v_a - v_b) + v_b.
  const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
  std::map<int, std::map<Exponent, RatK>, std::greater<int>> buckets;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[ia] = 0;
    buckets[e[ia]].emplace(std::move(rest), c);
  }
  SparsePoly quotient(n_, m_);
  while (!buckets.empty() && buckets.begin()->first > 0) {
    auto node = buckets.extract(buckets.begin());
    int deg = node.key();
    auto& lower = buckets[deg - 1];
    for (auto& [rest, c] : node.mapped()) {
      if (c.is_zero()) continue;
      Exponent qe = rest;
      qe[ia] = deg - 1;
      quotient.add_term(qe, c);
      Exponent shifted = rest;
      ++shifted[ib];
      auto [it, inserted] = lower.try_emplace(std::move(shifted), c);
      if (!inserted) it->second += c;
    }
  }
  SparsePoly remainder(n_, m_);
  if (!buckets.empty()) {
    for (auto& [rest, c] : buckets.begin()->second) remainder.add_term(rest, c);
  }
  return {std::move(quotient), std::move(remainder)};
}

std::string SparsePoly::variable_name(int var) const {
  return var < n_ ? "x" + std::to_string(var + 1) : "y" + std::to_string(var - n_ + 1);
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(static_cast<int>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.to_string();
    bool compound = !c.den().is_one() || c.num().coeffs().size() > 1;
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += compound ? "(" + coeff + ")" : coeff;
    else if (c == RatK(1))
      out += mono;
    else
      out += (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
  }
  return out;
}

}  // namespace superjack
