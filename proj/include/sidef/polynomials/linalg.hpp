#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sidef/polynomials/poly.hpp"

namespace sidef {

/// Dense exact matrix, row-major.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && detail::field_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      }
      const F inv = F(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || detail::field_zero((*this)(i, c))) continue;
        const F f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of the right nullspace, each vector normalized to 1 at its free column.
  std::vector<std::vector<F>> nullspace() const {
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, F(0));
      v[free] = F(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Solves M x = b exactly; nullopt when inconsistent. Free variables are 0.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<F> x(cols_, F(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
    return x;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

/// Matrix whose column j holds the coefficients of basis[j] (rows = degrees).
template <Field F>
Matrix<F> coefficient_matrix(const std::vector<Poly<F>>& basis, std::size_t rows) {
  Matrix<F> m(rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = basis[j].coeff(i);
  }
  return m;
}

template <Field F>
std::size_t max_length(const std::vector<Poly<F>>& polys) {
  std::size_t n = 1;
  for (const auto& p : polys) n = std::max(n, p.coefficients().size());
  return n;
}

/// Exact linear independence of a list of polynomials.
template <Field F>
bool linearly_independent(const std::vector<Poly<F>>& basis) {
  return coefficient_matrix(basis, max_length(basis)).rank() == basis.size();
}

/// Whether every polynomial of `inner` lies in span(outer).
template <Field F>
bool span_contains(const std::vector<Poly<F>>& outer, const std::vector<Poly<F>>& inner) {
  std::vector<Poly<F>> all = outer;
  all.insert(all.end(), inner.begin(), inner.end());
  const std::size_t rows = max_length(all);
  return coefficient_matrix(outer, rows).rank() == coefficient_matrix(all, rows).rank();
}

/// Basis of span(polys) with pairwise distinct degrees (echelon form from the top).
template <Field F>
std::vector<Poly<F>> degree_echelon(const std::vector<Poly<F>>& polys) {
  const std::size_t rows = max_length(polys);
  // Reverse the coefficient order so rref pivots on the highest degree first.
  Matrix<F> m(polys.size(), rows);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t d = 0; d < rows; ++d) m(i, rows - 1 - d) = polys[i].coeff(d);
  }
  const auto pivots = m.rref();
  std::vector<Poly<F>> out;
  for (std::size_t i = pivots.size(); i-- > 0;) {
    std::vector<F> c(rows, F(0));
    for (std::size_t d = 0; d < rows; ++d) c[d] = m(i, rows - 1 - d);
    out.emplace_back(std::move(c));
  }
  return out;  // ascending degree
}

}  // namespace sidef
