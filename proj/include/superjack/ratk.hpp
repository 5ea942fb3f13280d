#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace superjack {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial in k with arbitrary-precision integer coefficients, ascending degree.
/// The zero polynomial has no stored coefficients; the leading coefficient is never zero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);  // NOLINT: implicit constant
  IntPoly(const Integer& c);  // NOLINT
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly k();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const Integer& lead() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  Rational eval(const Rational& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  /// Exact division of every coefficient by c.
  IntPoly& divexact(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const char* var = "k") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Primitive gcd with positive leading coefficient (1 if either argument is a nonzero constant).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// a / b where b divides a in Z[k]; throws InternalError otherwise.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

/// Element of Q(k) held as num/den in canonical form: coprime, joint integer content 1,
/// positive leading coefficient of den. Equality is representation equality.
class RatK {
 public:
  RatK() : den_(1) {}
  RatK(long c) : num_(c), den_(1) {}  // NOLINT
  RatK(const Integer& c) : num_(c), den_(1) {}  // NOLINT
  RatK(const Rational& c);  // NOLINT
  /// Canonicalizes; throws DivisionByZero for a zero denominator.
  RatK(IntPoly num, IntPoly den);

  /// The indeterminate k.
  static RatK k();

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant element; throws InvalidArgument if k appears.
  Rational constant_value() const;

  /// Exact value at k = k0; throws PoleError if den(k0) = 0.
  Rational specialize(const Rational& k0) const;

  RatK operator-() const;
  RatK& operator+=(const RatK& o);
  RatK& operator-=(const RatK& o);
  RatK& operator*=(const RatK& o);
  RatK& operator/=(const RatK& o);

  friend RatK operator+(RatK a, const RatK& b) { return a += b; }
  friend RatK operator-(RatK a, const RatK& b) { return a -= b; }
  friend RatK operator*(RatK a, const RatK& b) { return a *= b; }
  friend RatK operator/(RatK a, const RatK& b) { return a /= b; }
  friend bool operator==(const RatK& a, const RatK& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Human-readable form, e.g. "(2*k)/(k+1)".
  std::string to_string() const;

 private:
  struct Canonical {};
  RatK(IntPoly num, IntPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_content_and_sign();

  IntPoly num_;
  IntPoly den_;
};

/// Parses "1", "-3", "7/3" into a rational.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

}  // namespace superjack
