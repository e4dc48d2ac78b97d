#pragma once

#include <string>
#include <vector>

#include "exlag/exceptional.hpp"

namespace exlag {

/// One Darboux step between F and the pair obtained by dropping the largest
/// element of one component:
///   D_reduced = B A + shift_reduced Id,   D_full = A B + shift_full Id.
struct DarbouxStep {
  PairF pair;
  int component = 1;
  PairF reduced;
  long removed = 0;
  BigRational alpha;
  LinearDiffOperator a_op;
  LinearDiffOperator b_op;
  BigRational eigen_shift_full;
  BigRational eigen_shift_reduced;
};

inline DarbouxStep build_step(const PairF& F, int component, const BigRational& alpha) {
  DarbouxStep step;
  step.pair = F;
  step.component = component;
  step.reduced = reduce_pair(F, component);
  step.removed = component == 1 ? F.f1().back() : F.f2().back();
  step.alpha = alpha;

  const auto full = omega(F, alpha);
  const auto red = omega(step.reduced, alpha);
  const auto x = RationalPolynomial::x();
  const BigRational ak = alpha + BigRational(F.k());
  const long u_full = pair_uf(F);
  const long u_red = pair_uf(step.reduced);
  const BigRational f(step.removed);

  RationalFunction a1(-full, red);
  RationalFunction b1(-(x * red), full);
  RationalFunction a0, b0;
  if (component == 1) {
    a0 = RationalFunction(full.derivative(), red);
    b0 = RationalFunction(x * red.derivative() + RationalPolynomial{-ak, BigRational(1)} * red, full);
    step.eigen_shift_reduced = -(f + BigRational(u_red));
    step.eigen_shift_full = -(f + BigRational(u_full));
  } else {
    a0 = RationalFunction(full.derivative() + full, red);
    b0 = RationalFunction(x * red.derivative() - red * ak, full);
    step.eigen_shift_reduced = alpha + f - BigRational(u_red) + BigRational(1);
    step.eigen_shift_full = alpha + f - BigRational(u_full) + BigRational(1);
  }
  step.a_op = LinearDiffOperator({a0, a1});
  step.b_op = LinearDiffOperator({b0, b1});
  return step;
}

/// Residuals of A(q) = p and B(p) = -mu q; ok iff both are zero.
struct LadderCheck {
  bool ok = false;
  RationalFunction residual_a;
  RationalFunction residual_b;
};

/// Checks the two ladder relations between L_{n+u_reduced}^{alpha;reduced}
/// and L_{n+u_F}^{alpha;F}.
inline LadderCheck verify_ladder(const PairF& F, int component, const BigRational& alpha, long n) {
  if (n < 0 || F.in_f1(n)) throw IndexError("ladder index n = " + std::to_string(n) + " must be a nonnegative integer outside F1");
  const auto step = build_step(F, component, alpha);
  const auto q = exceptional_poly(n + pair_uf(step.reduced), step.reduced, alpha);
  const auto p = exceptional_poly(n + pair_uf(F), F, alpha);
  const BigRational nn(n);
  const BigRational f(step.removed);
  const BigRational mu = component == 1 ? nn - f : alpha + nn + f + BigRational(1);

  LadderCheck out;
  out.residual_a = step.a_op.apply(q) - RationalFunction(p);
  out.residual_b = step.b_op.apply(p) + RationalFunction(q * mu);
  out.ok = out.residual_a.is_zero() && out.residual_b.is_zero();
  return out;
}

struct FactorizationCheck {
  bool ok = false;
  bool reduced_coeffs_ok = false;
  bool full_coeffs_ok = false;
  /// First probe degree j where x^j disagrees, or -1.
  int failing_probe = -1;
  LinearDiffOperator reduced_residual;
  LinearDiffOperator full_residual;
};

/// Checks D_reduced = B A + shift_reduced and D_full = A B + shift_full
/// coefficient-wise, then again on the probe basis 1, x, ..., x^probe_degree.
inline FactorizationCheck verify_factorization(const DarbouxStep& step, int probe_degree) {
  if (probe_degree < 0) throw ParameterError("probe degree must be nonnegative");
  const auto d_red = exceptional_operator(step.reduced, step.alpha);
  const auto d_full = exceptional_operator(step.pair, step.alpha);
  const auto ba = step.b_op * step.a_op + LinearDiffOperator::identity(step.eigen_shift_reduced);
  const auto ab = step.a_op * step.b_op + LinearDiffOperator::identity(step.eigen_shift_full);

  FactorizationCheck out;
  out.reduced_residual = ba - d_red;
  out.full_residual = ab - d_full;
  out.reduced_coeffs_ok = out.reduced_residual.coeffs().empty();
  out.full_coeffs_ok = out.full_residual.coeffs().empty();

  for (int j = 0; j <= probe_degree && out.failing_probe < 0; ++j) {
    const auto probe = RationalPolynomial::monomial(BigRational(1), static_cast<std::size_t>(j));
    // Composition is evaluated as two successive applications, independent
    // of the symbolic product above.
    auto lhs_red = step.b_op.apply(step.a_op.apply(probe)) + RationalFunction(probe * step.eigen_shift_reduced);
    auto lhs_full = step.a_op.apply(step.b_op.apply(probe)) + RationalFunction(probe * step.eigen_shift_full);
    if (!(lhs_red == d_red.apply(probe)) || !(lhs_full == d_full.apply(probe))) out.failing_probe = j;
  }
  out.ok = out.reduced_coeffs_ok && out.full_coeffs_ok && out.failing_probe < 0;
  return out;
}

/// The k steps from F down to (empty, empty): F1 is emptied first, then F2,
/// largest element first within each component.
inline std::vector<DarbouxStep> full_chain(const PairF& F, const BigRational& alpha) {
  std::vector<DarbouxStep> chain;
  PairF current = F;
  while (!current.empty()) {
    const int component = current.f1().empty() ? 2 : 1;
    chain.push_back(build_step(current, component, alpha));
    current = chain.back().reduced;
  }
  return chain;
}

/// Applies the A operators of the chain, last step first, to L_n^alpha.
/// For n outside F1 the result should be L_{n+u_F}^{alpha;F}.
inline RationalPolynomial chain_ladder(const std::vector<DarbouxStep>& chain, long n, const BigRational& alpha) {
  if (n < 0) throw IndexError("ladder index must be nonnegative");
  RationalPolynomial p = laguerre_poly(static_cast<unsigned>(n), alpha);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    auto image = it->a_op.apply(p);
    if (!image.is_polynomial())
      throw CertificateError("A operator for " + it->pair.to_string() + " produced a non-polynomial image");
    p = image.num();
  }
  return p;
}

}  // namespace exlag
