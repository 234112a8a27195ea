#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bihom/error.hpp"

namespace bihom {

/// Exact rational number; GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// A product of parameter powers. Variables are kept sorted by name and
/// exponents are strictly positive, so equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const std::string& name, unsigned exponent = 1);

  const std::vector<std::pair<std::string, unsigned>>& powers() const { return powers_; }
  unsigned degree() const;
  unsigned degree_in(const std::string& name) const;
  bool is_one() const { return powers_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; callers check divides() first.
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial without(const std::string& name) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

  std::string str() const;

 private:
  std::vector<std::pair<std::string, unsigned>> powers_;
};

/// Graded lexicographic order: total degree first, then the exponent of
/// the alphabetically first variable where they differ.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// descending graded-lex order with no zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& c);
  static Polynomial variable(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  unsigned total_degree() const;
  std::set<std::string> variables() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Exact division; returns false (leaving q untouched) when b does not
  /// divide *this.
  bool divide_exact(const Polynomial& b, Polynomial& q) const;

  /// Coefficients with respect to one variable: power -> coefficient.
  std::map<unsigned, Polynomial> coefficients_in(const std::string& name) const;
  unsigned degree_in(const std::string& name) const;

  /// Rational content (gcd of numerators / lcm of denominators), positive.
  Rational content() const;

  Polynomial substitute(const std::map<std::string, Rational>& bindings, bool partial) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Greatest common divisor over Q, normalized to leading coefficient 1.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

using Bindings = std::map<std::string, Rational>;

/// Element of the fraction field Q(parameters).
///
/// Canonical form: numerator and denominator are coprime integer
/// polynomials whose coefficients share no common integer factor, and the
/// denominator's leading graded-lex coefficient is positive. Two Scalars
/// are equal iff their canonical forms are identical.
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& p);  // NOLINT(google-explicit-constructor)
  static Scalar fraction(const Polynomial& num, const Polynomial& den);
  static Scalar parameter(const std::string& name);
  static Scalar parse(std::string_view text);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// The sole identity test: true iff the reduced numerator has no terms.
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational to_rational() const;
  std::set<std::string> parameters() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Every parameter occurring must be bound; the result is rational.
  Scalar substitute(const Bindings& bindings) const;
  /// Binds only the parameters present in bindings.
  Scalar substitute_partial(const Bindings& bindings) const;

  std::string str() const;

 private:
  Scalar(Polynomial num, Polynomial den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize(bool need_gcd);

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bihom
