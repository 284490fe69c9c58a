#pragma once

// Exact scalars: the rationals Q and the rational-function field Q(l) in one
// indeterminate, plus the coefficient-expression grammar used by algebra files.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hly/error.hpp"

namespace hly {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
    value_ = denominator < 0 ? boost::multiprecision::cpp_rational(-numerator, -denominator)
                             : boost::multiprecision::cpp_rational(numerator, denominator);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  int sign() const { return value_.sign(); }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
    return from(1 / value_);
  }

  Rational operator-() const { return from(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  std::string str() const {
    auto d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

 private:
  static Rational from(boost::multiprecision::cpp_rational v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  boost::multiprecision::cpp_rational value_;
};

/// Dense univariate polynomial over Q, coefficients indexed by degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const Rational& c, std::size_t degree) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial indeterminate() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : Rational();
  }

  /// Degree of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return i;
    return 0;
  }
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
  }
  bool is_monomial() const { return !is_zero() && low_degree() == coeffs_.size() - 1; }

  Polynomial monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return scaled(leading().inverse());
  }
  Polynomial scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  Rational eval(const Rational& point) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
  }

  Polynomial operator-() const { return scaled(Rational(-1)); }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    const Rational inv = b.leading().inverse();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = rem.size(); k-- > db;) {
      if (rem[k].is_zero()) continue;
      Rational q = rem[k] * inv;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
      quot[k - db] = std::move(q);
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Polynomial(Rational(1));
    if (a.is_monomial()) return monomial(Rational(1), std::min<std::size_t>(a.degree(), b.low_degree()));
    if (b.is_monomial()) return monomial(Rational(1), std::min<std::size_t>(b.degree(), a.low_degree()));
    Polynomial x = a.monic();
    Polynomial y = b.monic();
    while (!y.is_zero()) {
      Polynomial r = divmod(x, y).second.monic();
      x = std::move(y);
      y = std::move(r);
    }
    return x;
  }

  /// Ascending-degree rendering in the coefficient grammar, e.g. "2-2*l^4".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string term;
      if (k == 0) {
        term = c.str();
      } else {
        std::string var = k == 1 ? "l" : "l^" + std::to_string(k);
        if (c.is_one()) term = var;
        else if (c == Rational(-1)) term = "-" + var;
        else term = c.str() + "*" + var;
      }
      if (!out.empty() && term.front() != '-') out += '+';
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Element of Q(l) in lowest terms with a monic denominator; zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const { return num_.coefficient(0); }

  RationalFunction operator-() const { return unchecked(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_);
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    // gcd(n + p*d, d) = gcd(n, d) = 1 when one side is a polynomial.
    if (b.den_.is_one()) return unchecked(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_one()) return unchecked(b.num_ + a.num_ * b.den_, b.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    return unchecked(num_.scaled(c), den_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational eval(const Rational& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw Error(ErrorCode::pole, "denominator " + den_.str() + " vanishes at l = " + point.str());
    return num_.eval(point) / d;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  static RationalFunction unchecked(Polynomial num, Polynomial den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) r.den_ = Polynomial(Rational(1));
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw Error(ErrorCode::division_by_zero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(Rational(1));
      return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    if (!den_.leading().is_one()) {
      Rational inv = den_.leading().inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

enum class ScalarDomain { rational, rational_function };

constexpr std::string_view to_string(ScalarDomain d) {
  return d == ScalarDomain::rational ? "rational" : "rational_function";
}

inline std::optional<ScalarDomain> parse_domain(std::string_view s) {
  if (s == "rational") return ScalarDomain::rational;
  if (s == "rational_function") return ScalarDomain::rational_function;
  return std::nullopt;
}

constexpr ScalarDomain join(ScalarDomain a, ScalarDomain b) {
  return (a == ScalarDomain::rational_function || b == ScalarDomain::rational_function)
             ? ScalarDomain::rational_function
             : ScalarDomain::rational;
}

/// A canonical exact scalar. Constants of Q(l) are always stored as Rational,
/// so structural equality is mathematical equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction f) {                  // NOLINT(google-explicit-constructor)
    if (f.is_constant()) value_ = f.constant_value();
    else value_ = std::move(f);
  }
  explicit Scalar(Polynomial p) : Scalar(RationalFunction(std::move(p))) {}

  static Scalar indeterminate() { return Scalar(Polynomial::indeterminate()); }

  bool is_zero() const {
    const auto* r = std::get_if<Rational>(&value_);
    return r && r->is_zero();
  }
  bool is_one() const {
    const auto* r = std::get_if<Rational>(&value_);
    return r && r->is_one();
  }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
  RationalFunction to_rational_function() const {
    if (const auto* r = as_rational()) return RationalFunction(Polynomial(*r));
    return std::get<RationalFunction>(value_);
  }
  /// Smallest domain containing this value.
  ScalarDomain domain() const { return is_rational() ? ScalarDomain::rational : ScalarDomain::rational_function; }

  Scalar operator-() const {
    if (const auto* r = as_rational()) return Scalar(-*r);
    return Scalar(-std::get<RationalFunction>(value_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    const auto* ra = a.as_rational();
    const auto* rb = b.as_rational();
    if (ra && rb) return Scalar(*ra + *rb);
    if (ra && ra->is_zero()) return b;
    if (rb && rb->is_zero()) return a;
    return Scalar(a.to_rational_function() + b.to_rational_function());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    const auto* ra = a.as_rational();
    const auto* rb = b.as_rational();
    if (ra && rb) return Scalar(*ra * *rb);
    if (ra) return Scalar(std::get<RationalFunction>(b.value_).scaled(*ra));
    if (rb) return Scalar(std::get<RationalFunction>(a.value_).scaled(*rb));
    return Scalar(a.to_rational_function() * b.to_rational_function());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
    const auto* ra = a.as_rational();
    const auto* rb = b.as_rational();
    if (ra && rb) return Scalar(*ra / *rb);
    if (rb) return Scalar(std::get<RationalFunction>(a.value_).scaled(rb->inverse()));
    return Scalar(a.to_rational_function() / b.to_rational_function());
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  Scalar pow(std::uint64_t k) const {
    Scalar result(1);
    Scalar base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  /// Value at l = point. Throws PoleError if the denominator vanishes there.
  Rational eval(const Rational& point) const {
    if (const auto* r = as_rational()) return *r;
    return std::get<RationalFunction>(value_).eval(point);
  }

  std::string str() const {
    if (const auto* r = as_rational()) return r->str();
    return std::get<RationalFunction>(value_).str();
  }

 private:
  std::variant<Rational, RationalFunction> value_;
};

inline Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar scalar_div(const Scalar& a, const Scalar& b) { return a / b; }
inline Rational scalar_eval(const Scalar& a, const Rational& point) { return a.eval(point); }

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := '-' factor | atom ['^' uint]
// atom   := integer | 'l' | '(' expr ')'
// Unary minus binds looser than '^': "-l^2" is -(l^2).
class ScalarParser {
 public:
  static constexpr std::uint64_t max_exponent = 4096;

  ScalarParser(std::string_view text, ScalarDomain domain) : text_(text), domain_(domain) {}

  Scalar parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool is_digit(std::size_t p) const { return p < text_.size() && text_[p] >= '0' && text_[p] <= '9'; }

  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  Scalar term() {
    Scalar acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Scalar d = factor();
        if (d.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero at offset " + std::to_string(at));
        acc /= d;
      } else {
        return acc;
      }
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    Scalar base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      if (!is_digit(pos_)) throw ParseError(pos_, "expected exponent");
      std::uint64_t k = 0;
      while (is_digit(pos_)) {
        k = k * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (k > max_exponent) throw ParseError(start, "exponent too large");
        ++pos_;
      }
      return base.pow(k);
    }
    return base;
  }
  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (c == 'l') {
      if (domain_ == ScalarDomain::rational)
        throw Error(ErrorCode::domain, "indeterminate 'l' in a rational-domain coefficient at offset " +
                                           std::to_string(pos_));
      ++pos_;
      return Scalar::indeterminate();
    }
    if (is_digit(pos_)) {
      std::size_t start = pos_;
      while (is_digit(pos_)) ++pos_;
      return Scalar(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  ScalarDomain domain_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a coefficient expression; the indeterminate is spelled `l`.
inline Scalar parse_scalar(std::string_view text, ScalarDomain domain) {
  return detail::ScalarParser(text, domain).parse();
}

/// Parses a plain rational such as "3/2" or "-4".
inline Rational parse_rational(std::string_view text) {
  Scalar s = parse_scalar(text, ScalarDomain::rational);
  return *s.as_rational();
}

}  // namespace hly
