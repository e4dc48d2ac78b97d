#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "exlag/diff_operator.hpp"
#include "exlag/polynomial.hpp"

namespace exlag {

struct LaguerreParams {
  unsigned n = 0;
  BigRational alpha;
};

/// Throws ParameterError when alpha is one of -1, -2, -3, ...
inline void require_laguerre_alpha(const BigRational& alpha) {
  if (is_negative_integer(alpha))
    throw ParameterError("Laguerre parameter alpha = " + alpha.to_string() + " is a negative integer");
}

namespace detail {

inline RationalPolynomial laguerre_sum(unsigned n, const BigRational& alpha) {
  // L_n^a(x) = sum_j (-x)^j / j! * binom(n + a, n - j)
  std::vector<BigRational> coeffs(n + 1);
  const BigRational top = alpha + BigRational(static_cast<long>(n));
  BigRational inv_fact(1);
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) inv_fact /= BigRational(static_cast<long>(j));
    BigRational term = inv_fact * gen_binomial(top, n - j);
    coeffs[j] = (j % 2 == 0) ? term : -term;
  }
  return RationalPolynomial(std::move(coeffs));
}

/// Per-process memo of L_n^alpha; guarded for concurrent callers.
class LaguerreCache {
 public:
  RationalPolynomial get(unsigned n, const BigRational& alpha) {
    auto key = std::make_pair(n, alpha.to_string());
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto poly = laguerre_sum(n, alpha);
    std::lock_guard lock(mutex_);
    return table_.emplace(std::move(key), std::move(poly)).first->second;
  }

  static LaguerreCache& instance() {
    static LaguerreCache cache;
    return cache;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<unsigned, std::string>, RationalPolynomial> table_;
};

}  // namespace detail

/// Classical Laguerre polynomial L_n^alpha from its explicit sum.
inline RationalPolynomial laguerre_poly(const LaguerreParams& p) {
  require_laguerre_alpha(p.alpha);
  return detail::LaguerreCache::instance().get(p.n, p.alpha);
}

inline RationalPolynomial laguerre_poly(unsigned n, const BigRational& alpha) { return laguerre_poly({n, alpha}); }

/// x -> L_f^{alpha + shift}(-x)
inline RationalPolynomial laguerre_reflected(unsigned f, const BigRational& alpha, unsigned shift) {
  return laguerre_poly(f, alpha + BigRational(static_cast<long>(shift))).reflect();
}

/// D_alpha = x d^2 + (alpha + 1 - x) d
inline LinearDiffOperator classical_operator(const BigRational& alpha) {
  require_laguerre_alpha(alpha);
  RationalPolynomial first{alpha + BigRational(1), BigRational(-1)};
  return LinearDiffOperator({RationalFunction{}, RationalFunction(first), RationalFunction(RationalPolynomial::x())});
}

}  // namespace exlag
