#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace icosa {

/// Dense matrix over an exact field (Rational, Golden, ...). Elimination
/// pivots on the first nonzero entry, which is only sound because the
/// scalar types here are exact.
template <typename S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, S fill = S(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols_ == y.rows_);
    Matrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == S(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
      }
    return p;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix s = x;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += y.data_[i];
    return s;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
    Matrix s = x;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= y.data_[i];
    return s;
  }

  Matrix& operator*=(const S& c) {
    for (auto& v : data_) v *= c;
    return *this;
  }

  /// Row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == S(0)) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      S inv = S(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == S(0)) continue;
        S f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix tmp = *this;
    return tmp.row_reduce().size();
  }

  S determinant() const {
    assert(rows_ == cols_);
    Matrix tmp = *this;
    S det = S(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && tmp(p, c) == S(0)) ++p;
      if (p == rows_) return S(0);
      if (p != c) {
        tmp.swap_rows(p, c);
        det = -det;
      }
      det *= tmp(c, c);
      S inv = S(1) / tmp(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (tmp(i, c) == S(0)) continue;
        S f = tmp(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) tmp(i, j) -= f * tmp(c, j);
      }
    }
    return det;
  }

  /// Basis of the right nullspace, one column vector per basis element.
  std::vector<std::vector<S>> nullspace() const {
    Matrix tmp = *this;
    auto pivots = tmp.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<S> v(cols_, S(0));
      v[free] = S(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -tmp(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of A x = b, or nullopt if inconsistent.
  std::optional<std::vector<S>> solve(const std::vector<S>& b) const {
    assert(b.size() == rows_);
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.row_reduce();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<S> x(cols_, S(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<S> data_;
};

/// Rank of a list of row vectors.
template <typename S>
std::size_t span_rank(const std::vector<std::vector<S>>& rows) {
  if (rows.empty()) return 0;
  Matrix<S> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m.rank();
}

}  // namespace icosa
