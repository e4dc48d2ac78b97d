#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "exlag/error.hpp"
#include "exlag/special.hpp"

namespace exlag {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// m-point rule for the weight x^beta e^{-x} on (0, inf), from the
/// eigendecomposition of the Jacobi matrix of the Laguerre recurrence:
/// diagonal 2j + beta + 1, off-diagonal sqrt(j (j + beta)).
inline QuadratureRule gauss_laguerre_rule(int m, double beta) {
  if (m < 1) throw ParameterError("quadrature size must be positive");
  if (!(beta > -1.0)) throw ParameterError("Gauss-Laguerre exponent must exceed -1, got " + std::to_string(beta));
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int j = 0; j < m; ++j) diag(j) = 2.0 * j + beta + 1.0;
  for (int j = 1; j < m; ++j) sub(j - 1) = std::sqrt(j * (j + beta));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error("Jacobi matrix eigensolver failed");

  const double mu0 = gamma_value(beta + 1.0);
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

/// Memoized gauss_laguerre_rule; rules are shared read-only.
inline const QuadratureRule& cached_gauss_laguerre_rule(int m, double beta) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, QuadratureRule> table;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(m, beta);
  auto it = table.find(key);
  if (it == table.end()) it = table.emplace(key, gauss_laguerre_rule(m, beta)).first;
  return it->second;
}

/// m-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_m.
inline QuadratureRule gauss_legendre_rule(int m) {
  if (m < 1) throw ParameterError("quadrature size must be positive");
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (m + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= m; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= m; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
    }
    const long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[m - 1 - i] = static_cast<double>(x);
    rule.weights[i] = rule.weights[m - 1 - i] = static_cast<double>(w);
  }
  return rule;
}

inline const QuadratureRule& cached_gauss_legendre_rule(int m) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> table;
  std::lock_guard lock(mutex);
  auto it = table.find(m);
  if (it == table.end()) it = table.emplace(m, gauss_legendre_rule(m)).first;
  return it->second;
}

struct TanhSinhResult {
  long double value = 0;
  long double abs_sum = 0;
  /// Estimate of the integral of |g|.
  long double abs_integral = 0;
  bool converged = false;
  int levels = 0;
};

/// Double-exponential quadrature of g over [0, length]. The substitution
/// x = length / (1 + exp(pi sinh t)) keeps points near 0 accurate, so an
/// integrable x^beta endpoint singularity is handled.
template <class F>
TanhSinhResult tanh_sinh(F&& g, long double length, long double rel_tol, int max_levels = 12) {
  const long double half_pi = std::numbers::pi_v<long double> / 2;
  auto sample = [&](long double t, long double& abs_acc) -> long double {
    const long double u = half_pi * std::sinh(t);
    if (std::fabs(u) > 11000) return 0;
    const long double e = std::exp(-2 * std::fabs(u));
    // x = length / (1 + e^{2u}); for u > 0 evaluate in the small form.
    const long double x = u > 0 ? length * e / (1 + e) : length / (1 + e);
    if (!(x > 0) || !(x < length)) return 0;
    const long double cu = std::cosh(u);
    const long double w = length * half_pi * std::cosh(t) / (2 * cu * cu);
    const long double v = g(x) * w;
    abs_acc += std::fabs(v);
    return v;
  };
  const long double t_max = 6.5L;
  long double h = 1;
  TanhSinhResult res;
  long double sum = sample(0, res.abs_sum);
  for (long double t = h; t <= t_max; t += h) sum += sample(t, res.abs_sum) + sample(-t, res.abs_sum);
  long double estimate = sum * h;
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    for (long double t = h; t <= t_max; t += 2 * h) sum += sample(t, res.abs_sum) + sample(-t, res.abs_sum);
    const long double next = sum * h;
    res.levels = level;
    // abs_sum * h approximates the integral of |g| on the current grid.
    if (level >= 3 && std::fabs(next - estimate) <= rel_tol * res.abs_sum * h) {
      res.value = next;
      res.abs_integral = res.abs_sum * h;
      res.converged = true;
      return res;
    }
    estimate = next;
  }
  res.value = estimate;
  res.abs_integral = res.abs_sum * h;
  return res;
}

}  // namespace exlag
