#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "exlag/diff_operator.hpp"
#include "exlag/laguerre.hpp"
#include "exlag/poly_matrix.hpp"

namespace exlag {

/// Pair F = (F1, F2) of finite sets of positive integers, each stored in
/// strictly increasing order.
class PairF {
 public:
  PairF() = default;
  PairF(std::vector<long> f1, std::vector<long> f2) : f1_(canonical(std::move(f1), "f1")), f2_(canonical(std::move(f2), "f2")) {}

  const std::vector<long>& f1() const { return f1_; }
  const std::vector<long>& f2() const { return f2_; }
  long k1() const { return static_cast<long>(f1_.size()); }
  long k2() const { return static_cast<long>(f2_.size()); }
  long k() const { return k1() + k2(); }
  bool empty() const { return f1_.empty() && f2_.empty(); }
  bool in_f1(long n) const { return std::binary_search(f1_.begin(), f1_.end(), n); }

  std::string to_string() const {
    auto set = [](const std::vector<long>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    return "(" + set(f1_) + "," + set(f2_) + ")";
  }

  friend bool operator==(const PairF&, const PairF&) = default;

 private:
  static std::vector<long> canonical(std::vector<long> v, const char* name) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] <= 0) throw ParameterError(std::string(name) + " contains the non-positive element " + std::to_string(v[i]));
      if (i > 0 && v[i] == v[i - 1]) throw ParameterError(std::string(name) + " repeats the element " + std::to_string(v[i]));
    }
    return v;
  }

  std::vector<long> f1_;
  std::vector<long> f2_;
};

/// u_F = sum F1 + sum F2 - C(k1+1, 2) - C(k2, 2)
inline long pair_uf(const PairF& F) {
  long u = 0;
  for (long f : F.f1()) u += f;
  for (long f : F.f2()) u += f;
  u -= F.k1() * (F.k1() + 1) / 2;
  u -= F.k2() * (F.k2() - 1) / 2;
  if (u < 0) throw ParameterError("u_F = " + std::to_string(u) + " is negative for " + F.to_string());
  return u;
}

/// sigma_F = {u, u+1, ...} \ {u + f : f in F1}, kept as offset plus exclusions.
struct SigmaF {
  long u = 0;
  std::vector<long> excluded;

  explicit SigmaF(const PairF& F) : u(pair_uf(F)) {
    for (long f : F.f1()) excluded.push_back(u + f);
  }

  bool contains(long n) const { return n >= u && !std::binary_search(excluded.begin(), excluded.end(), n); }

  std::vector<long> prefix(std::size_t count) const {
    std::vector<long> out;
    for (long n = u; out.size() < count; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }
};

inline std::vector<long> sigma_prefix(const PairF& F, std::size_t count) { return SigmaF(F).prefix(count); }

namespace detail {

/// Row of derivatives of L_f^alpha, orders 0..width-1.
inline std::vector<RationalPolynomial> derivative_row(unsigned f, const BigRational& alpha, std::size_t width) {
  std::vector<RationalPolynomial> row;
  row.reserve(width);
  auto p = laguerre_poly(f, alpha);
  for (std::size_t j = 0; j < width; ++j) {
    row.push_back(p);
    p = p.derivative();
  }
  return row;
}

/// Row of L_f^{alpha+j}(-x), j = 0..width-1.
inline std::vector<RationalPolynomial> reflected_row(unsigned f, const BigRational& alpha, std::size_t width) {
  std::vector<RationalPolynomial> row;
  row.reserve(width);
  for (std::size_t j = 0; j < width; ++j) row.push_back(laguerre_reflected(f, alpha, static_cast<unsigned>(j)));
  return row;
}

/// Stacks the F1 and F2 rows under an optional leading row.
inline PolyMatrix pair_matrix(const PairF& F, const BigRational& alpha, std::size_t width,
                              std::vector<RationalPolynomial> leading = {}) {
  std::vector<RationalPolynomial> entries = std::move(leading);
  for (long f : F.f1()) {
    auto row = derivative_row(static_cast<unsigned>(f), alpha, width);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  for (long f : F.f2()) {
    auto row = reflected_row(static_cast<unsigned>(f), alpha, width);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return PolyMatrix(width, width, std::move(entries));
}

}  // namespace detail

/// Omega_F^alpha: the k x k determinant with F1 rows of derivatives of
/// L_f^alpha and F2 rows of L_f^{alpha+j}(-x). Equal to 1 when k = 0.
inline RationalPolynomial omega(const PairF& F, const BigRational& alpha) {
  require_laguerre_alpha(alpha);
  auto det = determinant(detail::pair_matrix(F, alpha, static_cast<std::size_t>(F.k())));
  if (det.is_zero())
    throw DegeneracyError("Omega vanishes identically for F = " + F.to_string() + ", alpha = " + alpha.to_string());
  return det;
}

/// L_n^{alpha;F}: the (k+1) x (k+1) determinant whose first row holds the
/// derivatives of L_{n-u_F}^alpha, followed by the F1 and F2 rows.
inline RationalPolynomial exceptional_poly(long n, const PairF& F, const BigRational& alpha) {
  require_laguerre_alpha(alpha);
  SigmaF sigma(F);
  if (!sigma.contains(n))
    throw IndexError("n = " + std::to_string(n) + " is not in sigma_F for F = " + F.to_string());
  const auto width = static_cast<std::size_t>(F.k() + 1);
  auto lead = detail::derivative_row(static_cast<unsigned>(n - sigma.u), alpha, width);
  return determinant(detail::pair_matrix(F, alpha, width, std::move(lead)));
}

/// D_F = x d^2 + h1 d + h0, coefficients over the common denominator Omega.
inline LinearDiffOperator exceptional_operator(const PairF& F, const BigRational& alpha) {
  const auto om = omega(F, alpha);
  const auto d1 = om.derivative();
  const auto d2 = d1.derivative();
  const BigRational ak = alpha + BigRational(F.k());
  const auto x = RationalPolynomial::x();
  // h1 * Omega = (alpha + k + 1 - x) Omega - 2 x Omega'
  auto h1 = RationalPolynomial{ak + BigRational(1), BigRational(-1)} * om - x * d1 * BigRational(2);
  // h0 * Omega = -(k1 + u) Omega + (x - alpha - k) Omega' + x Omega''
  auto h0 = om * BigRational(-(F.k1() + pair_uf(F))) + RationalPolynomial{-ak, BigRational(1)} * d1 + x * d2;
  return LinearDiffOperator({RationalFunction(h0, om), RationalFunction(h1, om), RationalFunction(x)});
}

/// Outcome of an exact identity check; residual is zero iff ok.
struct IdentityCheck {
  bool ok = false;
  RationalPolynomial residual;
};

/// Checks D_F(L_n^{alpha;F}) = -n L_n^{alpha;F} with all denominators
/// cleared by Omega, so the residual is an exact polynomial.
inline IdentityCheck verify_eigen(long n, const PairF& F, const BigRational& alpha) {
  const auto p = exceptional_poly(n, F, alpha);
  const auto om = omega(F, alpha);
  const auto d1 = om.derivative();
  const auto d2 = d1.derivative();
  const BigRational ak = alpha + BigRational(F.k());
  const auto x = RationalPolynomial::x();
  auto c2 = x * om;
  auto c1 = RationalPolynomial{ak + BigRational(1), BigRational(-1)} * om - x * d1 * BigRational(2);
  auto c0 = om * BigRational(-(F.k1() + pair_uf(F))) + RationalPolynomial{-ak, BigRational(1)} * d1 + x * d2;
  auto residual = c2 * p.derivative(2) + c1 * p.derivative() + c0 * p + om * p * BigRational(n);
  return {residual.is_zero(), std::move(residual)};
}

/// x^{exponent} e^{-x} / omega(x)^2
struct ExceptionalWeight {
  BigRational exponent;
  RationalPolynomial omega;
};

inline ExceptionalWeight weight(const PairF& F, const BigRational& alpha) {
  return {alpha + BigRational(F.k()), omega(F, alpha)};
}

/// Removes the largest element of component 1 or 2.
inline PairF reduce_pair(const PairF& F, int component) {
  if (component != 1 && component != 2) throw ParameterError("component must be 1 or 2");
  auto f1 = F.f1();
  auto f2 = F.f2();
  auto& target = component == 1 ? f1 : f2;
  if (target.empty())
    throw ReductionError("component " + std::to_string(component) + " of " + F.to_string() + " is empty");
  target.pop_back();
  return PairF(std::move(f1), std::move(f2));
}

}  // namespace exlag
