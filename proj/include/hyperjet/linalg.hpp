#pragma once

// Small dense exact matrices: products, rank, determinant, inverse.

#include "hyperjet/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperjet {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  /// Row-major construction from nested rows; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw std::invalid_argument("ragged matrix rows");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch");
    }
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  std::vector<Rational> apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) {
      throw std::invalid_argument("matrix-vector shape mismatch");
    }
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        y[i] += (*this)(i, j) * x[j];
      }
    }
    return y;
  }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

// In-place row reduction. Returns rank; `sign` tracks row swaps.
inline std::size_t row_reduce(RationalMatrix& m, int& sign) {
  sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(pivot, c), m(rank, c));
      }
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) -= factor * m(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline std::size_t rank(RationalMatrix m) {
  int sign = 1;
  return detail::row_reduce(m, sign);
}

inline Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  int sign = 1;
  const std::size_t r = detail::row_reduce(m, sign);
  if (r < m.rows()) return Rational(0);
  Rational det = sign;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    det *= m(i, i);
  }
  return det;
}

/// Gauss-Jordan inverse; throws std::domain_error when singular.
inline RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) {
      throw std::domain_error("matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace hyperjet
