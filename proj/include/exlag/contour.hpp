#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exlag/norms.hpp"
#include "exlag/roots.hpp"

namespace exlag {

/// Lambda_r truncated at Re z = truncation_R: the ray x + ir traversed
/// inward, the left half of |z| = r from ir to -ir, then the ray x - ir
/// outward. Rays use ray_steps Gauss-Legendre panels, the arc arc_steps.
struct ContourSpec {
  double r = 0.5;
  double truncation_R = 50;
  int ray_steps = 200;
  int arc_steps = 16;

  void validate() const {
    if (!(r > 0)) throw ParameterError("contour radius must be positive");
    if (!(r < truncation_R)) throw ParameterError("contour radius must be below the truncation point");
    if (ray_steps < 1 || arc_steps < 1) throw ParameterError("contour step counts must be positive");
  }
};

/// z^a on the plane cut along [0, inf), arg z in (0, 2 pi).
inline Complex cut_power(Complex z, long double a) {
  long double arg = std::atan2(z.imag(), z.real());
  if (arg <= 0) arg += 2 * std::numbers::pi_v<long double>;
  return std::exp(a * Complex(std::log(std::abs(z)), arg));
}

/// e^{2 pi i a} - 1
inline std::complex<double> contour_prefactor(long double a) {
  const long double t = 2 * std::numbers::pi_v<long double> * a;
  return {static_cast<double>(std::cos(t) - 1), static_cast<double>(std::sin(t))};
}

inline constexpr int kContourPanelOrder = 20;

/// Points and dz-weights of the discretized path; h(z) integrates as sum w h(z).
struct ContourNodes {
  std::vector<Complex> z;
  std::vector<Complex> w;
};

inline ContourNodes contour_nodes(const ContourSpec& spec) {
  spec.validate();
  const auto& gl = cached_gauss_legendre_rule(kContourPanelOrder);
  const long double r = spec.r;
  const long double R = spec.truncation_R;
  ContourNodes out;
  // Upper ray, t from R down to 0: dz = -dt.
  const long double width = R / spec.ray_steps;
  for (int p = spec.ray_steps - 1; p >= 0; --p)
    for (int i = kContourPanelOrder - 1; i >= 0; --i) {
      const long double t = width * (p + (gl.nodes[i] + 1) / 2);
      out.z.emplace_back(t, r);
      out.w.emplace_back(-width / 2 * gl.weights[i], 0);
    }
  // Left semicircle, theta from pi/2 to 3 pi/2: dz = i z dtheta.
  const long double pi = std::numbers::pi_v<long double>;
  const long double dtheta = pi / spec.arc_steps;
  for (int p = 0; p < spec.arc_steps; ++p)
    for (int i = 0; i < kContourPanelOrder; ++i) {
      const long double theta = pi / 2 + dtheta * (p + (gl.nodes[i] + 1) / 2);
      const Complex z = std::polar(r, theta);
      out.z.push_back(z);
      out.w.push_back(Complex(0, 1) * z * (dtheta / 2 * gl.weights[i]));
    }
  // Lower ray, t from 0 to R: dz = dt.
  for (int p = 0; p < spec.ray_steps; ++p)
    for (int i = 0; i < kContourPanelOrder; ++i) {
      const long double t = width * (p + (gl.nodes[i] + 1) / 2);
      out.z.emplace_back(t, -r);
      out.w.emplace_back(width / 2 * gl.weights[i], 0);
    }
  return out;
}

/// Integral over Lambda_r of h(z) z^a e^{-z} dz.
template <class H>
Complex contour_integrate(H&& h, long double a, const ContourSpec& spec) {
  const auto nodes = contour_nodes(spec);
  Complex sum = 0;
  for (std::size_t i = 0; i < nodes.z.size(); ++i) {
    const Complex z = nodes.z[i];
    sum += nodes.w[i] * h(z) * cut_power(z, a) * std::exp(-z);
  }
  return sum;
}

/// Contour integral with panel doubling until two successive values agree
/// to rel_tol (at most four refinements).
template <class H>
Complex contour_integrate_refined(H&& h, long double a, ContourSpec spec, double rel_tol, int* panels_used = nullptr) {
  Complex prev = contour_integrate(h, a, spec);
  for (int round = 0; round < 4; ++round) {
    spec.ray_steps *= 2;
    spec.arc_steps *= 2;
    const Complex next = contour_integrate(h, a, spec);
    const bool done = std::abs(next - prev) <= rel_tol * std::max(std::abs(next), static_cast<long double>(1e-300));
    prev = next;
    if (done) break;
  }
  if (panels_used) *panels_used = spec.ray_steps;
  return prev;
}

/// Distance from a point to the (untruncated) path Lambda_r.
inline long double distance_to_path(Complex p, long double r) {
  const long double x = p.real(), y = p.imag();
  const Complex top(0, r), bottom(0, -r);
  long double d_upper = x >= 0 ? std::fabs(y - r) : std::abs(p - top);
  long double d_lower = x >= 0 ? std::fabs(y + r) : std::abs(p - bottom);
  long double d_arc = x <= 0 ? std::fabs(std::abs(p) - r) : std::min(std::abs(p - top), std::abs(p - bottom));
  return std::min({d_upper, d_lower, d_arc});
}

/// Inside the region enclosed by Lambda_r: |z| < r, or Re z > 0 and |Im z| < r.
inline bool inside_path(Complex p, long double r) {
  return std::abs(p) < r || (p.real() > 0 && std::fabs(p.imag()) < r);
}

struct RadiusChoice {
  double r = 0.5;
  /// Smallest distance from any considered root to the path.
  double clearance = 0;
  std::vector<Complex> roots;
  std::string policy;
};

/// All subpairs H = (H1, H2) with H1 in F1, H2 in F2.
inline std::vector<PairF> subpairs(const PairF& F) {
  std::vector<PairF> out;
  const std::size_t k1 = F.f1().size(), k2 = F.f2().size();
  for (std::size_t m1 = 0; m1 < (std::size_t{1} << k1); ++m1)
    for (std::size_t m2 = 0; m2 < (std::size_t{1} << k2); ++m2) {
      std::vector<long> h1, h2;
      for (std::size_t i = 0; i < k1; ++i)
        if (m1 >> i & 1) h1.push_back(F.f1()[i]);
      for (std::size_t i = 0; i < k2; ++i)
        if (m2 >> i & 1) h2.push_back(F.f2()[i]);
      out.emplace_back(std::move(h1), std::move(h2));
    }
  return out;
}

/// Radius for Lambda_r avoiding the given roots. Candidates are
/// 0.5 * 0.85^j, j = 0..199; the first whose clearance from every root is at
/// least r/2 wins. No root in `interior` may lie inside the path.
inline RadiusChoice radius_for_roots(std::vector<Complex> roots, const std::vector<Complex>& interior) {
  RadiusChoice out;
  out.roots = std::move(roots);
  out.policy = std::string("first r in 0.5*0.85^j with root clearance >= r/2") +
               (interior.empty() ? "" : " and no root of Omega_F inside the path");
  long double r = 0.5;
  for (int j = 0; j < 200; ++j, r *= 0.85L) {
    long double clearance = std::numeric_limits<long double>::infinity();
    bool blocked = false;
    for (const auto& z : out.roots) clearance = std::min(clearance, distance_to_path(z, r));
    for (const auto& z : interior) {
      clearance = std::min(clearance, distance_to_path(z, r));
      if (inside_path(z, r)) blocked = true;
    }
    if (!blocked && clearance >= r / 2) {
      out.r = static_cast<double>(r);
      out.clearance = static_cast<double>(std::isinf(clearance) ? r : clearance);
      return out;
    }
  }
  std::ostringstream msg;
  msg << "no feasible contour radius; obstructing roots:";
  for (const std::vector<Complex>* set : {&std::as_const(out.roots), &interior})
    for (const auto& z : *set) msg << " (" << static_cast<double>(z.real()) << "," << static_cast<double>(z.imag()) << ")";
  throw SearchError(msg.str());
}

inline RadiusChoice radius_for_roots(std::vector<Complex> roots, bool interior_clear) {
  if (!interior_clear) return radius_for_roots(std::move(roots), std::vector<Complex>{});
  auto interior = roots;
  return radius_for_roots(std::move(roots), interior);
}

/// Radius keeping every Omega_H, H ranging over the subpairs of F, off the
/// path. With interior_clear the roots of Omega_F must also lie outside it.
inline RadiusChoice find_radius(const PairF& F, const BigRational& alpha, bool interior_clear = false) {
  std::vector<Complex> roots;
  for (const auto& H : subpairs(F)) {
    auto hr = polynomial_roots(omega(H, alpha));
    roots.insert(roots.end(), hr.begin(), hr.end());
  }
  std::vector<Complex> interior;
  if (interior_clear) interior = polynomial_roots(omega(F, alpha));
  return radius_for_roots(std::move(roots), interior);
}

/// Default spec for a given radius and integrand degree.
inline ContourSpec default_contour_spec(double r, double effective_degree) {
  ContourSpec spec;
  spec.r = r;
  spec.truncation_R = truncation_length(effective_degree);
  const double width = std::min(0.25, r / 2);
  spec.ray_steps = static_cast<int>(std::ceil(spec.truncation_R / width));
  spec.arc_steps = 16;
  return spec;
}

struct PathCheck {
  double min_modulus = 0;
  double max_modulus = 0;
};

/// Samples |Omega| along the discretized path.
inline PathCheck omega_on_path(const Polynomial<long double>& om, const ContourSpec& spec) {
  const auto nodes = contour_nodes(spec);
  PathCheck out{std::numeric_limits<double>::infinity(), 0};
  for (const auto& z : nodes.z) {
    const double v = static_cast<double>(std::abs(eval_complex(om, z)));
    out.min_modulus = std::min(out.min_modulus, v);
    out.max_modulus = std::max(out.max_modulus, v);
  }
  return out;
}

/// Integral over Lambda_r of L_n L_m z^{alpha+k} e^{-z} / Omega^2 against
/// (e^{2 pi i alpha} - 1) times the closed-form norm. n, m are sigma_F
/// indices.
inline NormResult contour_gram(ExceptionalFamily& fam, long n, long m, const ContourSpec& spec,
                               double rel_tol = 1e-11) {
  for (long idx : {n, m})
    if (!fam.sigma().contains(idx))
      throw IndexError("index " + std::to_string(idx) + " is not in sigma_F for F = " + fam.pair().to_string());
  spec.validate();
  const auto& om = fam.omega_numeric();
  const auto check = omega_on_path(om, spec);
  if (check.min_modulus < 1e-9 * check.max_modulus)
    throw PathError("min |Omega| on the path is " + std::to_string(check.min_modulus) +
                    "; Omega nearly vanishes on Lambda_r, decrease r");
  if (fam.omega().degree() > 0)
    for (const auto& z : polynomial_roots(fam.omega()))
      if (distance_to_path(z, spec.r) < 1e-8)
        throw PathError("Omega has a root on Lambda_r at (" + std::to_string(static_cast<double>(z.real())) + ", " +
                        std::to_string(static_cast<double>(z.imag())) + "), decrease r");

  const auto& pn = fam.poly_numeric(n);
  const auto& pm = fam.poly_numeric(m);
  auto h = [&](Complex z) {
    const Complex w = eval_complex(om, z);
    return eval_complex(pn, z) * eval_complex(pm, z) / (w * w);
  };
  const long double a = fam.exponent().to_long_double();
  int panels = 0;
  const Complex value = contour_integrate_refined(h, a, spec, rel_tol, &panels);

  const long double alpha = fam.alpha().to_long_double();
  const auto pre = contour_prefactor(alpha);
  NormResult out;
  out.n = n;
  out.m = m;
  out.numeric = {static_cast<double>(value.real()), static_cast<double>(value.imag())};
  const double cn = closed_form_norm(n - fam.u(), fam.pair(), alpha);
  const double cm = closed_form_norm(m - fam.u(), fam.pair(), alpha);
  out.closed_form = n == m ? pre * cn : std::complex<double>(0);
  double floor_scale = std::abs(pre) * std::sqrt(std::fabs(cn * cm));
  if (floor_scale == 0) floor_scale = std::sqrt(std::fabs(cn * cm));
  out.rel_error = std::abs(out.numeric - out.closed_form) / std::max(std::abs(out.closed_form), floor_scale);
  out.method = "contour-gauss-legendre";
  out.nodes = panels;
  out.converged = true;
  return out;
}

inline NormResult contour_gram(long n, long m, const PairF& F, const BigRational& alpha, const ContourSpec& spec) {
  ExceptionalFamily fam(F, alpha);
  return contour_gram(fam, n, m, spec);
}

/// Integral over Lambda_r of num(z)/den(z)^2 z^a e^{-z}.
inline Complex contour_rational_integral(const RationalPolynomial& num, const RationalPolynomial& den, long double a,
                                         const ContourSpec& spec, double rel_tol = 1e-12) {
  const auto p = to_numeric(num);
  const auto q = to_numeric(den);
  auto h = [&](Complex z) {
    const Complex w = eval_complex(q, z);
    return eval_complex(p, z) / (w * w);
  };
  return contour_integrate_refined(h, a, spec, rel_tol);
}

}  // namespace exlag
