#pragma once

// Exact scalars, dense polynomials in t over the integers, and truncated
// power series in x with polynomial coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cathankel/errors.hpp"

namespace cathankel {

using ExactInt = mpz_class;
/// GMP keeps mpq_class canonical: lowest terms, positive denominator.
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Binomial coefficient with the convention binom(n,k) = 0 for k < 0 and
/// for 0 <= n < k. Negative n uses the falling-factorial definition.
/// Computed as the running product of (n-k+i)/i; every partial quotient is
/// itself a binomial coefficient, so each division is exact.
inline ExactInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (n >= 0 && k > n - k) k = n - k;
  ExactInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

/// (-1)^e for e >= 0 given as a small exponent.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// (-1)^binom(n,2) read off n mod 4 without forming binom(n,2).
inline int sign_binom2(long n) {
  long r = ((n % 4) + 4) % 4;
  return (r == 0 || r == 1) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

/// Dense univariate polynomial in t with exact integer coefficients,
/// stored in ascending degree. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(ExactInt(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(ExactInt(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(ExactInt c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  Poly(std::initializer_list<ExactInt> cs) : coeffs_(cs) { normalize(); }
  explicit Poly(std::vector<ExactInt> cs) : coeffs_(std::move(cs)) { normalize(); }

  /// t^e
  static Poly monomial(std::size_t e, ExactInt c = 1) {
    if (c == 0) return {};
    std::vector<ExactInt> cs(e + 1);
    cs[e] = std::move(c);
    return Poly(std::move(cs));
  }

  const std::vector<ExactInt>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Degree, or nullopt for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  ExactInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactInt(0); }
  ExactInt constant() const { return coeff(0); }
  const ExactInt& leading() const { return coeffs_.back(); }

  ExactInt eval(const ExactInt& t) const {
    ExactInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Canonical text form: ascending degree, e.g. "1+3*t+t^2", "-t-t^2", "0".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const ExactInt& c = coeffs_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      ExactInt mag = neg ? ExactInt(-c) : c;
      if (neg)
        out += '-';
      else if (!out.empty())
        out += '+';
      if (i == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += 't';
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  /// Inverse of to_string. Also tolerates whitespace, repeated powers and
  /// coefficient-free forms such as "t" or "2t^3".
  static Poly parse(std::string_view s);

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<ExactInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

inline Poly Poly::parse(std::string_view s) {
  std::string src;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  if (src.empty()) throw ParseError("empty polynomial string");

  std::vector<ExactInt> cs;
  std::size_t pos = 0;
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
    return src.substr(start, p - start);
  };
  bool first = true;
  while (pos < src.size()) {
    bool neg = false;
    if (src[pos] == '+' || src[pos] == '-') {
      neg = src[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial: " + src);
    }
    first = false;
    ExactInt coef = 1;
    std::string num = digits(pos);
    bool have_num = !num.empty();
    if (have_num) coef = ExactInt(num);
    std::size_t exp = 0;
    if (pos < src.size() && src[pos] == '*') {
      if (!have_num) throw ParseError("dangling '*' in polynomial: " + src);
      ++pos;
      if (pos >= src.size() || src[pos] != 't') throw ParseError("expected 't' after '*': " + src);
    }
    if (pos < src.size() && src[pos] == 't') {
      ++pos;
      exp = 1;
      if (pos < src.size() && src[pos] == '^') {
        ++pos;
        std::string e = digits(pos);
        if (e.empty()) throw ParseError("missing exponent in polynomial: " + src);
        exp = std::stoul(e);
      }
    } else if (!have_num) {
      throw ParseError("malformed term in polynomial: " + src);
    }
    if (cs.size() <= exp) cs.resize(exp + 1);
    cs[exp] += neg ? ExactInt(-coef) : coef;
  }
  return Poly(std::move(cs));
}

/// Exact quotient a / b in Z[t]. Throws NonExactDivision when b does not
/// divide a, including when an intermediate leading coefficient is not
/// divisible by lc(b).
inline Poly poly_exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (a.is_zero()) return {};
  const std::size_t db = *b.degree();
  if (*a.degree() < db) throw NonExactDivision("non-exact division: " + a.to_string() + " / " + b.to_string());

  const ExactInt& lc = b.leading();
  std::vector<ExactInt> rem = a.coeffs();
  std::vector<ExactInt> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t()))
      throw NonExactDivision("non-exact division: " + a.to_string() + " / " + b.to_string());
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(rem[i - db + j].get_mpz_t(), q.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    quot[i - db] = std::move(q);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw NonExactDivision("non-exact division: " + a.to_string() + " / " + b.to_string());
  return Poly(std::move(quot));
}

inline Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultSeriesOrder = 64;

/// Truncated power series sum_{n<order} c_n x^n with Poly coefficients.
/// Binary operations truncate to the smaller operand order.
class Series {
 public:
  explicit Series(std::size_t order = kDefaultSeriesOrder) : coeffs_(order) {}
  Series(std::vector<Poly> cs, std::size_t order) : coeffs_(std::move(cs)) { coeffs_.resize(order); }

  /// Constant series c (+ O(x^order)).
  static Series constant(Poly c, std::size_t order = kDefaultSeriesOrder) {
    Series s(order);
    if (order > 0) s.coeffs_[0] = std::move(c);
    return s;
  }
  static Series one(std::size_t order = kDefaultSeriesOrder) { return constant(Poly(1), order); }
  /// c * x^e
  static Series monomial(std::size_t e, Poly c, std::size_t order = kDefaultSeriesOrder) {
    Series s(order);
    if (e < order) s.coeffs_[e] = std::move(c);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& operator[](std::size_t n) const { return coeffs_[n]; }
  const Poly& constant_term() const { return coeffs_.front(); }

  Poly coeff(long n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= coeffs_.size()) return {};
    return coeffs_[static_cast<std::size_t>(n)];
  }

  Series truncated(std::size_t order) const {
    return Series(std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size())), order);
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  /// Coefficientwise scaling by a polynomial in t.
  friend Series operator*(const Poly& c, const Series& s) {
    Series r(s.order());
    for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = c * s.coeffs_[i];
    return r;
  }

  /// Multiply by x^e, keeping the order.
  Series shifted(std::size_t e) const {
    Series r(order());
    for (std::size_t i = 0; i + e < order(); ++i) r.coeffs_[i + e] = coeffs_[i];
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Poly> coeffs_;
};

inline Series series_mul(const Series& a, const Series& b) { return a * b; }

/// 1/a up to a's order. The constant term must be +1 or -1.
inline Series series_reciprocal(const Series& a) {
  if (a.order() == 0) return a;
  const Poly& a0 = a.constant_term();
  if (!(a0 == Poly(1) || a0 == Poly(-1)))
    throw NonUnitConstantTerm("series constant term is not a unit: " + a0.to_string());
  std::vector<Poly> b(a.order());
  b[0] = a0;  // a0 is its own inverse
  for (std::size_t n = 1; n < a.order(); ++n) {
    Poly acc;
    for (std::size_t i = 1; i <= n; ++i)
      if (!a[i].is_zero()) acc += a[i] * b[n - i];
    b[n] = a0 == Poly(1) ? -acc : acc;
  }
  return Series(std::move(b), a.order());
}

/// a^k for k >= 1 by binary powering.
inline Series series_pow(const Series& a, unsigned k) {
  if (k == 0) return Series::one(a.order());
  Series result = Series::one(a.order());
  Series base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace cathankel
