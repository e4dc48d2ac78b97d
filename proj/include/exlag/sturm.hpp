#pragma once

#include <vector>

#include "exlag/polynomial.hpp"

namespace exlag {

namespace detail {

inline int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace detail

/// Sturm sequence p, p', -rem(p, p'), ... computed exactly.
inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

/// Number of distinct real roots of p in [0, +inf).
///
/// Works on the square-free part. A root at 0 is read off the constant term
/// and deflated; roots in (0, inf) are V(0) - V(+inf) over the Sturm chain,
/// with V(+inf) taken from the leading coefficients.
inline long sturm_nonneg_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw ParameterError("root count of the zero polynomial");
  auto q = p;
  if (q.degree() > 0) q = exact_div(q, gcd(q, q.derivative()));
  long count = 0;
  if (q.degree() > 0 && q[0].is_zero()) {
    ++count;
    q = exact_div(q, RationalPolynomial::x());
  }
  if (q.degree() <= 0) return count;

  const auto chain = sturm_chain(q);
  std::vector<int> at_zero, at_inf;
  for (const auto& s : chain) {
    at_zero.push_back(s[0].sign());
    at_inf.push_back(s.leading().sign());
  }
  return count + detail::count_variations(at_zero) - detail::count_variations(at_inf);
}

}  // namespace exlag
