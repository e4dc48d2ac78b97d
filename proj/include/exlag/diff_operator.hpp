#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "exlag/rational_function.hpp"

namespace exlag {

/// Linear differential operator sum_j coeffs[j](x) d^j/dx^j with rational
/// function coefficients. Trailing zero coefficients are dropped, so the
/// last stored coefficient is never identically zero.
class LinearDiffOperator {
 public:
  LinearDiffOperator() = default;
  explicit LinearDiffOperator(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static LinearDiffOperator identity(const BigRational& scale = BigRational(1)) {
    return LinearDiffOperator({RationalFunction(RationalPolynomial::constant(scale))});
  }

  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of d^j (zero above the order).
  RationalFunction coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : RationalFunction{}; }

  RationalFunction apply(const RationalPolynomial& p) const {
    RationalFunction out;
    RationalPolynomial deriv = p;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (deriv.is_zero()) break;
      if (!coeffs_[j].is_zero()) out += coeffs_[j] * RationalFunction(deriv);
      if (j + 1 < coeffs_.size()) deriv = deriv.derivative();
    }
    return out;
  }

  RationalFunction apply(const RationalFunction& f) const {
    RationalFunction out;
    RationalFunction deriv = f;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (deriv.is_zero()) break;
      if (!coeffs_[j].is_zero()) out += coeffs_[j] * deriv;
      if (j + 1 < coeffs_.size()) deriv = deriv.derivative();
    }
    return out;
  }

  friend LinearDiffOperator operator+(const LinearDiffOperator& a, const LinearDiffOperator& b) {
    std::vector<RationalFunction> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) + b.coeff(j);
    return LinearDiffOperator(std::move(out));
  }
  friend LinearDiffOperator operator-(const LinearDiffOperator& a, const LinearDiffOperator& b) {
    std::vector<RationalFunction> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) - b.coeff(j);
    return LinearDiffOperator(std::move(out));
  }

  /// Composition (a * b)(f) = a(b(f)), expanded with the Leibniz rule:
  /// a_i d^i (b_j d^j) = sum_l C(i,l) a_i b_j^{(i-l)} d^{j+l}.
  friend LinearDiffOperator operator*(const LinearDiffOperator& a, const LinearDiffOperator& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<RationalFunction> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      // derivs[m] = b_j^{(m)}
      std::vector<RationalFunction> derivs{b.coeffs_[j]};
      for (std::size_t m = 1; m < a.coeffs_.size(); ++m) derivs.push_back(derivs.back().derivative());
      for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        long binom = 1;
        for (std::size_t l = 0; l <= i; ++l) {
          if (l > 0) binom = binom * static_cast<long>(i - l + 1) / static_cast<long>(l);
          const auto& d = derivs[i - l];
          if (d.is_zero()) continue;
          out[j + l] += RationalFunction(RationalPolynomial::constant(BigRational(binom))) * a.coeffs_[i] * d;
        }
      }
    }
    return LinearDiffOperator(std::move(out));
  }

  friend bool operator==(const LinearDiffOperator& a, const LinearDiffOperator& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const LinearDiffOperator& op) {
    os << "{";
    for (std::size_t j = 0; j < op.coeffs_.size(); ++j) {
      if (j) os << ", ";
      os << "d^" << j << ": " << op.coeffs_[j];
    }
    return os << "}";
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<RationalFunction> coeffs_;
};

}  // namespace exlag
