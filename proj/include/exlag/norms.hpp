#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "exlag/exceptional.hpp"
#include "exlag/quadrature.hpp"
#include "exlag/special.hpp"
#include "exlag/sturm.hpp"

namespace exlag {

/// Gamma(n+alpha+1) prod_{F1}(n-f) prod_{F2}(n+alpha+f+1) / n!
inline double closed_form_norm(long n, const PairF& F, long double alpha) {
  if (n < 0) throw IndexError("closed-form norm index must be nonnegative");
  if (F.in_f1(n)) throw IndexError("n = " + std::to_string(n) + " lies in F1 of " + F.to_string());
  if (!(alpha + F.k() > -1)) throw ParameterError("closed-form norm needs alpha + k > -1");
  long double value = gamma_value(static_cast<double>(n + alpha + 1));
  for (long j = 2; j <= n; ++j) value /= j;
  for (long f : F.f1()) value *= static_cast<long double>(n - f);
  for (long f : F.f2()) value *= n + alpha + f + 1;
  return static_cast<double>(value);
}

inline double closed_form_norm(long n, const PairF& F, const BigRational& alpha) {
  return closed_form_norm(n, F, alpha.to_long_double());
}

/// Numeric comparison of one Gram entry against its closed form.
struct NormResult {
  long n = 0;
  long m = 0;
  std::complex<double> numeric;
  std::complex<double> closed_form;
  /// |numeric - closed_form| / max(|closed_form|, floor_scale), where
  /// floor_scale is the geometric mean of the two diagonal closed forms.
  double rel_error = 0;
  std::string method;
  int nodes = 0;
  bool converged = false;
};

/// Exact and extended-precision views of one exceptional family, with
/// L_n^{alpha;F} memoized. Not safe for concurrent use.
class ExceptionalFamily {
 public:
  ExceptionalFamily(PairF F, BigRational alpha)
      : pair_(std::move(F)), alpha_(std::move(alpha)), sigma_(pair_), omega_(exlag::omega(pair_, alpha_)),
        omega_numeric_(to_numeric(omega_)) {}

  const PairF& pair() const { return pair_; }
  const BigRational& alpha() const { return alpha_; }
  long u() const { return sigma_.u; }
  const SigmaF& sigma() const { return sigma_; }
  const RationalPolynomial& omega() const { return omega_; }
  const Polynomial<long double>& omega_numeric() const { return omega_numeric_; }
  BigRational exponent() const { return alpha_ + BigRational(pair_.k()); }

  const RationalPolynomial& poly(long n) {
    auto it = polys_.find(n);
    if (it == polys_.end()) it = polys_.emplace(n, exceptional_poly(n, pair_, alpha_)).first;
    return it->second;
  }
  const Polynomial<long double>& poly_numeric(long n) {
    auto it = numeric_.find(n);
    if (it == numeric_.end()) it = numeric_.emplace(n, to_numeric(poly(n))).first;
    return it->second;
  }

 private:
  PairF pair_;
  BigRational alpha_;
  SigmaF sigma_;
  RationalPolynomial omega_;
  Polynomial<long double> omega_numeric_;
  std::map<long, RationalPolynomial> polys_;
  std::map<long, Polynomial<long double>> numeric_;
};

/// Truncation point where x^d e^{-x} has dropped 1e-18 below its peak,
/// never below max(50, 2d + 10).
inline double truncation_length(double effective_degree) {
  const double d = std::max(effective_degree, 0.0);
  double R = std::max(50.0, 2 * d + 10);
  if (d > 0) {
    const double peak = d * std::log(d) - d;
    while (d * std::log(R) - R > peak - 41.5) R += 5;
  }
  return R;
}

struct AxisIntegral {
  long double value = 0;
  /// Integral of |f| against the weight, the scale for relative tests.
  long double scale = 0;
  std::string method;
  int nodes = 0;
  bool converged = false;
};

/// Integral of f(x) x^beta e^{-x} over (0, inf). Gauss-Laguerre sizes
/// 16, 32, ..., max_nodes until successive values agree to tol relative to
/// the absolute scale; otherwise tanh-sinh on [0, R] plus a tail estimate.
template <class F>
AxisIntegral integrate_half_line(F&& f, double beta, double tol, double effective_degree, int max_nodes = 512) {
  AxisIntegral out;
  long double prev = 0;
  bool have_prev = false;
  for (int m = 16; m <= max_nodes; m *= 2) {
    const auto& rule = cached_gauss_laguerre_rule(m, beta);
    long double sum = 0, abs_sum = 0;
    for (int i = 0; i < m; ++i) {
      if (rule.weights[i] == 0) continue;
      const long double v = rule.weights[i] * f(static_cast<long double>(rule.nodes[i]));
      sum += v;
      abs_sum += std::fabs(v);
    }
    out = {sum, abs_sum, "gauss-laguerre", m, false};
    if (have_prev && std::fabs(sum - prev) <= tol * abs_sum) {
      out.converged = true;
      return out;
    }
    prev = sum;
    have_prev = true;
  }

  const double R = truncation_length(effective_degree + beta);
  const long double b = beta;
  auto g = [&](long double x) { return std::pow(x, b) * std::exp(-x) * f(x); };
  auto ts = tanh_sinh(g, R, tol, 14);
  const long double gR = std::fabs(g(static_cast<long double>(R)));
  const long double d = std::max(effective_degree + beta, 0.0);
  const long double tail = gR * R / std::max<long double>(R - d, 1);
  out.value = ts.value;
  out.scale = ts.abs_integral;
  out.method = "tanh-sinh";
  out.nodes = ts.levels;
  out.converged = ts.converged && tail <= tol * std::max(out.scale, std::fabs(out.value));
  return out;
}

/// Omega has no root in [0, inf); throws CertificateError with the count otherwise.
inline void require_positive_omega(const ExceptionalFamily& fam) {
  const long roots = sturm_nonneg_roots(fam.omega());
  if (roots != 0)
    throw CertificateError("Omega has " + std::to_string(roots) + " distinct root(s) in [0, inf) for F = " +
                           fam.pair().to_string() + ", alpha = " + fam.alpha().to_string());
}

inline NormResult real_axis_gram(ExceptionalFamily& fam, long n, long m, double tol) {
  for (long idx : {n, m})
    if (!fam.sigma().contains(idx))
      throw IndexError("index " + std::to_string(idx) + " is not in sigma_F for F = " + fam.pair().to_string());
  const BigRational expo = fam.exponent();
  if (!(expo > BigRational(-1))) throw ParameterError("real-axis Gram needs alpha + k > -1");
  require_positive_omega(fam);

  const auto& pn = fam.poly_numeric(n);
  const auto& pm = fam.poly_numeric(m);
  const auto& om = fam.omega_numeric();
  auto f = [&](long double x) {
    const long double w = om(x);
    return pn(x) * pm(x) / (w * w);
  };
  const double eff = pn.degree() + pm.degree() - 2.0 * om.degree();
  const auto integral = integrate_half_line(f, static_cast<double>(expo.to_long_double()), tol, eff);

  const long double alpha = fam.alpha().to_long_double();
  const double cn = closed_form_norm(n - fam.u(), fam.pair(), alpha);
  const double cm = closed_form_norm(m - fam.u(), fam.pair(), alpha);
  NormResult out;
  out.n = n;
  out.m = m;
  out.numeric = static_cast<double>(integral.value);
  out.closed_form = n == m ? cn : 0.0;
  const double floor_scale = std::sqrt(std::fabs(cn * cm));
  out.rel_error = std::abs(out.numeric - out.closed_form) / std::max(std::abs(out.closed_form), floor_scale);
  out.method = integral.method;
  out.nodes = integral.nodes;
  out.converged = integral.converged;
  return out;
}

inline NormResult real_axis_gram(long n, long m, const PairF& F, const BigRational& alpha, double tol) {
  ExceptionalFamily fam(F, alpha);
  return real_axis_gram(fam, n, m, tol);
}

/// Upper triangle (n <= m) of the Gram matrix over the given sigma_F indices, row-major.
inline std::vector<NormResult> real_axis_gram_matrix(ExceptionalFamily& fam, const std::vector<long>& indices,
                                                     double tol) {
  std::vector<NormResult> out;
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i; j < indices.size(); ++j) out.push_back(real_axis_gram(fam, indices[i], indices[j], tol));
  return out;
}

/// Integral over (0, inf) of num(x)/den(x)^2 x^beta e^{-x}.
inline AxisIntegral axis_rational_integral(const RationalPolynomial& num, const RationalPolynomial& den, double beta,
                                           double tol) {
  const auto p = to_numeric(num);
  const auto q = to_numeric(den);
  auto f = [&](long double x) {
    const long double w = q(x);
    return p(x) / (w * w);
  };
  return integrate_half_line(f, beta, tol, p.degree() - 2.0 * q.degree());
}

}  // namespace exlag
