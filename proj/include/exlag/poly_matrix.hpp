#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "exlag/error.hpp"
#include "exlag/polynomial.hpp"

namespace exlag {

/// Row-major matrix of rational polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<RationalPolynomial> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DimensionError("matrix entry count does not match its shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RationalPolynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const RationalPolynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalPolynomial> entries_;
};

namespace detail {

inline void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
}

inline RationalPolynomial cofactor_expand(const PolyMatrix& m, std::vector<std::size_t>& rows,
                                          std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return RationalPolynomial::constant(BigRational(1));
  if (n == 1) return m(rows[0], cols[0]);
  RationalPolynomial total;
  const std::size_t r0 = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    const auto& entry = m(r0, cols[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(n - 1);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    auto minor = entry * cofactor_expand(m, sub_rows, sub_cols);
    if (j % 2 == 0)
      total += minor;
    else
      total -= minor;
  }
  return total;
}

}  // namespace detail

/// Laplace expansion along the first row. Exponential cost; used for small
/// matrices and as an independent check of the elimination route.
inline RationalPolynomial determinant_cofactor(const PolyMatrix& m) {
  detail::require_square(m);
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto cols = idx;
  return detail::cofactor_expand(m, idx, cols);
}

/// Fraction-free (Bareiss) elimination over Q[x].
///
/// The pivot in each column is the nonzero entry of lowest degree among the
/// remaining rows. Every division by the previous pivot is exact. If no
/// nonzero pivot exists the column is identically zero and so is the
/// determinant. The 0x0 determinant is 1.
inline RationalPolynomial determinant(PolyMatrix m) {
  detail::require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return RationalPolynomial::constant(BigRational(1));
  if (n <= 2) return determinant_cofactor(m);

  bool negate = false;
  RationalPolynomial prev = RationalPolynomial::constant(BigRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (pivot == n || m(i, k).degree() < m(pivot, k).degree()) pivot = i;
    }
    if (pivot == n) return {};
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = prev.degree() == 0 && prev.leading() == BigRational(1) ? std::move(num) : exact_div(num, prev);
      }
      m(i, k) = {};
    }
    prev = m(k, k);
  }
  auto det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace exlag
