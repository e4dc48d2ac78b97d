#pragma once

#include <ostream>
#include <utility>

#include "exlag/polynomial.hpp"

namespace exlag {

/// num/den over Q in canonical form: den monic, gcd(num, den) = 1, and the
/// zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(RationalPolynomial::constant(BigRational(1))) {}
  RationalFunction(RationalPolynomial p)  // NOLINT: polynomials embed implicitly
      : num_(std::move(p)), den_(RationalPolynomial::constant(BigRational(1))) {}
  RationalFunction(RationalPolynomial num, RationalPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ParameterError("rational function with zero denominator");
    canonicalize();
  }

  const RationalPolynomial& num() const { return num_; }
  const RationalPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// (a/b)' = (a' b/g - a b'/g) / (b b/g) with g = gcd(b, b').
  RationalFunction derivative() const {
    if (den_.degree() == 0) return RationalFunction(num_.derivative() * (BigRational(1) / den_.leading()));
    const auto db = den_.derivative();
    const auto g = gcd(den_, db);
    const auto bg = exact_div(den_, g);
    return {num_.derivative() * bg - num_ * exact_div(db, g), den_ * bg};
  }

  RationalFunction operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
  }

  // Sum and product use the reduced-operand shortcuts: only gcds of the
  // factors are needed, not of the full result.
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return RationalFunction(a.num_ + b.num_);
    const auto g = gcd(a.den_, b.den_);
    const auto bd = exact_div(b.den_, g);
    auto num = a.num_ * bd + b.num_ * exact_div(a.den_, g);
    auto den = a.den_ * bd;
    if (g.degree() > 0 && !num.is_zero()) {
      const auto h = gcd(num, g);
      if (h.degree() > 0) {
        num = exact_div(num, h);
        den = exact_div(den, h);
      }
    }
    return from_coprime(std::move(num), std::move(den));
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return RationalFunction(a.num_ * b.num_);
    const auto g1 = gcd(a.num_, b.den_);
    const auto g2 = gcd(b.num_, a.den_);
    auto num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    auto den = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    return from_coprime(std::move(num), std::move(den));
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ParameterError("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    if (f.is_polynomial()) return os << f.num_;
    return os << "[" << f.num_ << "] / [" << f.den_ << "]";
  }

 private:
  /// num/den already coprime; only the denominator is made monic.
  static RationalFunction from_coprime(RationalPolynomial num, RationalPolynomial den) {
    RationalFunction out;
    if (num.is_zero()) return out;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.make_monic();
    return out;
  }

  void make_monic() {
    BigRational lead = den_.leading();
    if (lead != BigRational(1)) {
      BigRational inv = BigRational(1) / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  void canonicalize() {
    if (num_.is_zero()) {
      den_ = RationalPolynomial::constant(BigRational(1));
      return;
    }
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    make_monic();
  }

  RationalPolynomial num_;
  RationalPolynomial den_;
};

}  // namespace exlag
