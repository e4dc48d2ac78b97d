#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <vector>

#include "exlag/polynomial.hpp"

namespace exlag {

using Complex = std::complex<long double>;

/// All complex roots of p with multiplicity: exact zero roots are split off,
/// the rest come from the companion-matrix eigenvalues, each refined by
/// Newton steps in extended precision while the residual decreases.
inline std::vector<Complex> polynomial_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw ParameterError("roots of the zero polynomial");
  std::vector<Complex> roots;
  std::size_t shift = 0;
  while (shift < p.coeffs().size() && p.coeffs()[shift].is_zero()) ++shift;
  roots.assign(shift, Complex(0));
  std::vector<BigRational> rest(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
  const RationalPolynomial q = monic(RationalPolynomial(std::move(rest)));
  const int deg = q.degree();
  if (deg <= 0) return roots;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -q[static_cast<std::size_t>(i)].to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);

  const auto qn = to_numeric(q);
  const auto dq = qn.derivative();
  for (int i = 0; i < deg; ++i) {
    Complex z(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
    long double best = std::abs(eval_complex(qn, z));
    for (int iter = 0; iter < 50 && best > 0; ++iter) {
      const Complex d = eval_complex(dq, z);
      if (std::abs(d) == 0) break;
      const Complex next = z - eval_complex(qn, z) / d;
      const long double res = std::abs(eval_complex(qn, next));
      if (!(res < best)) break;
      z = next;
      best = res;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace exlag
