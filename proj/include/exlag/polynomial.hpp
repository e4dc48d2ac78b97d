#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "exlag/error.hpp"
#include "exlag/rational.hpp"

namespace exlag {

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list and has degree -1. Two polynomials are equal iff their
/// coefficient lists are equal.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  /// c * x^power
  static Polynomial monomial(const T& c, std::size_t power) {
    std::vector<T> v(power + 1, T{});
    v[power] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }
  T leading() const { return coeffs_.empty() ? T{} : coeffs_.back(); }

  /// Horner evaluation in the coefficient type.
  T operator()(const T& at) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial derivative(unsigned order = 1) const {
    if (order == 0) return *this;
    if (coeffs_.size() <= order) return {};
    std::vector<T> out(coeffs_.size() - order);
    for (std::size_t i = order; i < coeffs_.size(); ++i) {
      T factor(1);
      for (unsigned j = 0; j < order; ++j) factor = factor * T(static_cast<long>(i - j));
      out[i - order] = factor * coeffs_[i];
    }
    return Polynomial(std::move(out));
  }

  /// x -> p(-x)
  Polynomial reflect() const {
    std::vector<T> out = coeffs_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Polynomial(std::move(out));
  }

  Polynomial operator-() const {
    std::vector<T> out = coeffs_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T{});
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T{});
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c = c * s;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T{}) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == T{}) continue;
      if (!first) os << " + ";
      os << "(" << p.coeffs_[i] << ")";
      if (i > 0) os << "*x";
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<BigRational>;

/// Quotient and remainder of a by b over a field.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw ParameterError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  std::vector<T> rem = a.coeffs();
  std::vector<T> quot(rem.size() - b.coeffs().size() + 1, T{});
  const T lead = b.leading();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == T{}) continue;
    T q = rem[i] / lead;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Exact quotient a / b; throws if b does not divide a.
inline RationalPolynomial exact_div(const RationalPolynomial& a, const RationalPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("exact polynomial division left a remainder");
  return q;
}

/// Scales p so that its leading coefficient is 1 (zero stays zero).
inline RationalPolynomial monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return p * (BigRational(1) / p.leading());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return monic(a);
  if (b.degree() == 0) return RationalPolynomial::constant(BigRational(1));
  // Monic remainders keep coefficient growth in check.
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    auto r = monic(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Coefficient-wise conversion to extended-precision floating point.
inline Polynomial<long double> to_numeric(const RationalPolynomial& p) {
  std::vector<long double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_long_double());
  return Polynomial<long double>(std::move(out));
}

/// Horner evaluation of a real polynomial at a complex point.
template <class R>
std::complex<R> eval_complex(const Polynomial<R>& p, std::complex<R> z) {
  std::complex<R> acc{};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace exlag
