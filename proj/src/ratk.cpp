#include "superjack/ratk.hpp"

#include <algorithm>
#include <utility>

#include "superjack/errors.hpp"

namespace superjack {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::k() { return IntPoly(std::vector<Integer>{0, 1}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly& IntPoly::divexact(const Integer& c) {
  for (auto& x : coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (d == 0 || mag != 1) {
      out += mag.get_str();
      if (d > 0) out += "*";
    }
    if (d >= 1) out += var;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

namespace {

IntPoly primitive_part(IntPoly p) {
  if (p.is_zero()) return p;
  Integer c = p.content();
  if (p.lead() < 0) c = -c;
  if (c != 1) p.divexact(c);
  return p;
}

IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
  const int db = b.degree();
  const Integer& lb = b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    Integer c = r.lead();
    int shift = r.degree() - db;
    std::vector<Integer> sub(static_cast<std::size_t>(r.degree() + 1));
    for (int i = 0; i <= db; ++i) sub[static_cast<std::size_t>(i + shift)] = c * b.coeffs()[static_cast<std::size_t>(i)];
    r *= lb;
    r -= IntPoly(std::move(sub));
  }
  return r;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() == 0 || b.degree() == 0) return IntPoly(1);
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    if (!r.is_zero() && r.degree() == 0) return IntPoly(1);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return a;
  if (b.degree() == 0) {
    IntPoly q = a;
    if (!b.is_one()) {
      for (const auto& c : q.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), b.lead().get_mpz_t())) throw InternalError("inexact polynomial division");
      q.divexact(b.lead());
    }
    return q;
  }
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree() - db; i >= 0; --i) {
    Integer& top = r[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) throw InternalError("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), c.get_mpz_t(), bc[static_cast<std::size_t>(j)].get_mpz_t());
    q[static_cast<std::size_t>(i)] = std::move(c);
  }
  for (const auto& c : r)
    if (c != 0) throw InternalError("inexact polynomial division");
  return IntPoly(std::move(q));
}

// ---------------------------------------------------------------------------
// RatK

RatK::RatK(const Rational& c) {
  if (c.get_den() == 0) throw DivisionByZero();
  Rational r(c);
  r.canonicalize();
  num_ = IntPoly(r.get_num());
  den_ = IntPoly(r.get_den());
}

RatK::RatK(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  normalize_content_and_sign();
}

RatK RatK::k() { return RatK(IntPoly::k(), IntPoly(1), Canonical{}); }

void RatK::normalize_content_and_sign() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  Integer c;
  Integer cn = num_.content(), cd = den_.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_.divexact(c);
    den_.divexact(c);
  }
}

Rational RatK::constant_value() const {
  if (!is_constant()) throw InvalidArgument("coefficient depends on k");
  Rational q(num_.is_zero() ? Integer(0) : num_.coeffs()[0], den_.coeffs()[0]);
  q.canonicalize();
  return q;
}

Rational RatK::specialize(const Rational& k0) const {
  Rational d = den_.eval(k0);
  if (d == 0) throw PoleError();
  return num_.eval(k0) / d;
}

RatK RatK::operator-() const { return RatK(-num_, den_, Canonical{}); }

RatK& RatK::operator+=(const RatK& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatK(num_ + o.num_, den_);
    return *this;
  }
  IntPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    *this = RatK(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  } else {
    IntPoly b1 = divexact(den_, g), d1 = divexact(o.den_, g);
    *this = RatK(num_ * d1 + o.num_ * b1, den_ * d1);
  }
  return *this;
}

RatK& RatK::operator-=(const RatK& o) { return *this += -o; }

RatK& RatK::operator*=(const RatK& o) {
  if (is_zero() || o.is_zero()) return *this = RatK();
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  IntPoly a = g1.is_one() ? num_ : divexact(num_, g1);
  IntPoly d = g1.is_one() ? o.den_ : divexact(o.den_, g1);
  IntPoly c = g2.is_one() ? o.num_ : divexact(o.num_, g2);
  IntPoly b = g2.is_one() ? den_ : divexact(den_, g2);
  num_ = a * c;
  den_ = b * d;
  normalize_content_and_sign();
  return *this;
}

RatK& RatK::operator/=(const RatK& o) {
  if (o.is_zero()) throw DivisionByZero();
  RatK inv(o.den_, o.num_, Canonical{});
  inv.normalize_content_and_sign();
  return *this *= inv;
}

std::string RatK::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const IntPoly& p) {
    std::string s = p.to_string();
    auto nonzero = std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; });
    return nonzero > 1 || p.lead() < 0 || (p.degree() > 0 && p.lead() != 1) ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InvalidArgument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw InvalidArgument("malformed rational '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace superjack
