#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "exlag/error.hpp"

namespace exlag {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT: implicit by intent
  BigRational(long num, long den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p/q", "p", or a plain decimal such as "-4.25".
  static BigRational parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
      while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
      while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    };
    trim(s);
    if (s.empty()) throw ParameterError("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw ParameterError("malformed rational '" + std::string(text) + "'");
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      if (digits.empty() || digits == "-") throw ParameterError("malformed rational '" + std::string(text) + "'");
      s = digits + "/" + den;
    }
    auto valid = [](std::string_view part, bool allow_sign) {
      if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
      if (part.empty()) return false;
      for (char ch : part)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string_view view(s);
    bool ok = slash == std::string::npos ? valid(view, true)
                                         : valid(view.substr(0, slash), true) && valid(view.substr(slash + 1), false);
    if (!ok) throw ParameterError("malformed rational '" + std::string(text) + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParameterError("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw ParameterError("rational with zero denominator");
    q.canonicalize();
    return BigRational(std::move(q));
  }

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Largest integer not exceeding the value.
  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
  }
  mpz_class ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
  }

  /// "p/q" with q printed even when it is 1.
  std::string to_string() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

  double to_double() const { return value_.get_d(); }

  /// Conversion accurate to extended precision (two-term split through mpf).
  long double to_long_double() const {
    mpf_class f(value_, 160);
    double hi = f.get_d();
    mpf_class rest = f - mpf_class(hi, 160);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
  }

  BigRational operator-() const { return BigRational(mpq_class(-value_)); }
  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw ParameterError("division by zero rational");
    value_ /= o.value_;
    return *this;
  }
  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

inline BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

/// Rising factorial (a)_j = a(a+1)...(a+j-1), with (a)_0 = 1.
inline BigRational pochhammer(const BigRational& a, unsigned j) {
  BigRational out(1);
  for (unsigned i = 0; i < j; ++i) out *= a + BigRational(static_cast<long>(i));
  return out;
}

/// Generalized binomial top(top-1)...(top-bottom+1)/bottom!.
inline BigRational gen_binomial(const BigRational& top, unsigned bottom) {
  BigRational num(1);
  mpz_class fact = 1;
  for (unsigned i = 0; i < bottom; ++i) {
    num *= top - BigRational(static_cast<long>(i));
    fact *= i + 1;
  }
  return num / BigRational(mpq_class(fact));
}

/// True when r is one of 0, -1, -2, ...
inline bool is_nonpositive_integer(const BigRational& r) { return r.is_integer() && r.sign() <= 0; }

/// True when r is one of -1, -2, -3, ...
inline bool is_negative_integer(const BigRational& r) { return r.is_integer() && r.sign() < 0; }

}  // namespace exlag

template <>
struct std::hash<exlag::BigRational> {
  std::size_t operator()(const exlag::BigRational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};
