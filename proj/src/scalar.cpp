#include "bihom/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace bihom {

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw ScalarSyntaxError("malformed rational '" + std::string(text) + "'", 0);
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(const std::string& name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.powers_.emplace_back(name, exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [_, e] : powers_) d += e;
  return d;
}

unsigned Monomial::degree_in(const std::string& name) const {
  for (const auto& [v, e] : powers_)
    if (v == name) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = powers_.begin(), b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : powers_)
    if (other.degree_in(v) < e) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (const auto& [v, e] : powers_) {
    unsigned d = e - other.degree_in(v);
    if (d > 0) out.powers_.emplace_back(v, d);
  }
  return out;
}

Monomial Monomial::without(const std::string& name) const {
  Monomial out;
  for (const auto& p : powers_)
    if (p.first != name) out.powers_.push_back(p);
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (const auto& [v, e] : a.powers_) {
    unsigned d = std::min(e, b.degree_in(v));
    if (d > 0) out.powers_.emplace_back(v, d);
  }
  return out;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [v, e] : powers_) {
    if (!s.empty()) s += '*';
    s += v;
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  auto i = pa.begin(), j = pb.begin();
  while (i != pa.end() && j != pb.end()) {
    if (i->first < j->first) return true;
    if (j->first < i->first) return false;
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  return i != pa.end() && j == pb.end();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

Polynomial::Polynomial(const Rational& c) {
  Rational q = c;
  q.canonicalize();
  if (q != 0) terms_.emplace(Monomial{}, q);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  Rational q = c;
  q.canonicalize();
  if (q != 0) terms_.emplace(m, q);
}

Polynomial Polynomial::variable(const std::string& name) { return Polynomial(Monomial::variable(name), Rational(1)); }

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Polynomial::constant_value() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, _] : terms_)
    for (const auto& [v, e] : m.powers()) vars.insert(v);
  return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [_, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& [_, v] : r.terms_) v *= c;
  return r;
}

bool Polynomial::divide_exact(const Polynomial& b, Polynomial& q) const {
  if (b.is_zero()) throw DivisionByZero();
  Polynomial rem = *this;
  Polynomial quot;
  const Monomial& lm = b.leading_monomial();
  const Rational& lc = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& m = rem.leading_monomial();
    if (!lm.divides(m)) return false;
    Polynomial t(m / lm, rem.leading_coefficient() / lc);
    quot += t;
    rem = rem - t * b;
  }
  q = std::move(quot);
  return true;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(const std::string& name) const {
  std::map<unsigned, Polynomial> out;
  for (const auto& [m, c] : terms_) out[m.degree_in(name)].add_term(m.without(name), c);
  return out;
}

unsigned Polynomial::degree_in(const std::string& name) const {
  unsigned d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.degree_in(name));
  return d;
}

Rational Polynomial::content() const {
  mpz_class num = 0, den = 1;
  for (const auto& [_, c] : terms_) {
    num = gcd(num, mpz_class(c.get_num()));
    den = lcm(den, mpz_class(c.get_den()));
  }
  if (num == 0) return 0;
  Rational r(num, den);
  r.canonicalize();
  return abs(r);
}

Polynomial Polynomial::substitute(const Bindings& bindings, bool partial) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m.powers()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        if (!partial) throw UnboundParameter(v);
        rest = rest * Monomial::variable(v, e);
        continue;
      }
      Rational p = 1;
      for (unsigned k = 0; k < e; ++k) p *= it->second;
      coeff *= p;
    }
    r.add_term(rest, coeff);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += m.str();
    } else {
      s += mag.get_str() + "*" + m.str();
    }
  }
  return s;
}

// --------------------------------------------------------------------- gcd

namespace {

Polynomial content_in(const Polynomial& p, const std::string& var) {
  Polynomial g;
  for (const auto& [_, c] : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  if (!a.divide_exact(b, q)) throw Error("internal: inexact polynomial division");
  return q;
}

Polynomial primitive_in(const Polynomial& p, const std::string& var) {
  return exact_quotient(p, content_in(p, var));
}

// Pseudo-remainder of a by b with respect to var (up to a factor that is a
// power of b's leading coefficient in var).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, const std::string& var) {
  const unsigned n = b.degree_in(var);
  const Polynomial lcb = b.coefficients_in(var).rbegin()->second;
  while (!a.is_zero() && a.degree_in(var) >= n) {
    const unsigned d = a.degree_in(var);
    const Polynomial lca = a.coefficients_in(var).rbegin()->second;
    a = lcb * a - lca * Polynomial(Monomial::variable(var, d - n), Rational(1)) * b;
  }
  return a;
}

Polynomial monic(const Polynomial& p) { return p.is_zero() ? p : p.scaled(1 / Rational(p.leading_coefficient())); }

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.is_monomial() || b.is_monomial()) {
    const Polynomial& mono = a.is_monomial() ? a : b;
    const Polynomial& other = a.is_monomial() ? b : a;
    Monomial g = mono.leading_monomial();
    for (const auto& [m, _] : other.terms()) g = Monomial::gcd(g, m);
    return Polynomial(g, Rational(1));
  }
  std::set<std::string> vars = a.variables();
  for (const auto& v : b.variables()) vars.insert(v);
  const std::string var = *vars.begin();
  const bool a_has = a.degree_in(var) > 0;
  const bool b_has = b.degree_in(var) > 0;
  if (!a_has) return gcd(a, content_in(b, var));
  if (!b_has) return gcd(content_in(a, var), b);

  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial c = gcd(ca, cb);
  Polynomial p = exact_quotient(a, ca), q = exact_quotient(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      q = Polynomial(1);
      break;
    }
    p = std::move(q);
    q = primitive_in(r, var);
  }
  return monic(c * primitive_in(q, var));
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(const Rational& q) : num_(q), den_(1) { normalize(false); }

Scalar::Scalar(const Polynomial& p) : num_(p), den_(1) { normalize(false); }

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) {
  Scalar s(num, den, false);
  s.normalize(true);
  return s;
}

Scalar Scalar::parameter(const std::string& name) { return Scalar(Polynomial::variable(name)); }

void Scalar::normalize(bool need_gcd) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.constant_value());
    den_ = Polynomial(1);
  } else if (need_gcd) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  // Clear denominators, then remove the common integer content.
  mpz_class l = 1, g = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& [_, c] : p->terms()) l = lcm(l, mpz_class(c.get_den()));
  for (const auto* p : {&num_, &den_})
    for (const auto& [_, c] : p->terms()) g = gcd(g, mpz_class(c.get_num() * (l / c.get_den())));
  Rational factor(l, g);
  factor.canonicalize();
  if (den_.leading_coefficient() < 0) factor = -factor;
  if (factor != 1) {
    num_ = num_.scaled(factor);
    den_ = den_.scaled(factor);
  }
}

bool Scalar::is_one() const { return num_.is_constant() && den_.is_constant() && num_.constant_value() == den_.constant_value(); }

Rational Scalar::to_rational() const {
  if (!is_rational()) throw Error("scalar '" + str() + "' still contains parameters");
  return num_.constant_value() / den_.constant_value();
}

std::set<std::string> Scalar::parameters() const {
  auto vars = num_.variables();
  for (const auto& v : den_.variables()) vars.insert(v);
  return vars;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return fraction(num_ + o.num_, den_);
  return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (den_.is_constant() && o.den_.is_constant()) {
    Scalar s(num_ * o.num_, den_ * o.den_, false);
    s.normalize(false);
    return s;
  }
  return fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s(den_, num_, false);
  s.normalize(false);  // already coprime
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::substitute(const Bindings& bindings) const {
  Polynomial n = num_.substitute(bindings, false);
  Polynomial d = den_.substitute(bindings, false);
  if (d.is_zero()) throw DenominatorVanishes(str());
  return fraction(n, d);
}

Scalar Scalar::substitute_partial(const Bindings& bindings) const {
  Polynomial n = num_.substitute(bindings, true);
  Polynomial d = den_.substitute(bindings, true);
  if (d.is_zero()) throw DenominatorVanishes(str());
  return fraction(n, d);
}

std::string Scalar::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
  bool bare_den = den_.is_constant() ||
                  (den_.is_monomial() && den_.leading_coefficient() == 1 && den_.leading_monomial().powers().size() == 1);
  return n + "/" + (bare_den ? den_.str() : "(" + den_.str() + ")");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ------------------------------------------------------------------ parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar s = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ScalarSyntaxError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar s = term();
    while (true) {
      if (accept('+')) {
        s += term();
      } else if (accept('-')) {
        s -= term();
      } else {
        return s;
      }
    }
  }

  Scalar term() {
    Scalar s = unary();
    while (true) {
      if (accept('*')) {
        s *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) throw ScalarSyntaxError("division by zero", at);
        s /= d;
      } else {
        return s;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    Scalar result(1);
    Scalar sq = base;
    for (; e > 0; e >>= 1) {
      if (e & 1) result *= sq;
      if (e > 1) sq *= sq;
    }
    if (negative) {
      if (result.is_zero()) fail("zero raised to a negative power");
      result = result.inverse();
    }
    return result;
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar s = expr();
      if (!accept(')')) fail("expected ')'");
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return Scalar::parameter(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace bihom
