#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices, the triangle-embedded matrices S_w and T_w,
 *        mod-2 reduction and fraction-free rank.
 *
 * Storage is row-major. operator() is 0-based; entry() is the 1-based
 * accessor used at the API surface, matching triangle coordinates.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/error.hpp"
#include "hosoya/fibonacci.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix square(std::size_t n, const T& fill = T(0)) { return Matrix(n, n, fill); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Row-major construction from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// 1-based, bounds-checked.
  const T& entry(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > rows_ || j > cols_) {
      throw DomainError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range");
    }
    return (*this)(i - 1, j - 1);
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  /// Canonical row-major element sequence.
  const std::vector<T>& data() const noexcept { return data_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<BigInt>;

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum: shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

/// u v^T for column vectors u, v.
template <typename T>
Matrix<T> outer(const std::vector<T>& u, const std::vector<T>& v) {
  Matrix<T> out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  return out;
}

/// Symmetric 0/1 matrix including the diagonal.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool value) { bits_[i * n_ + j] = value; }

  /// 1-based, bounds-checked.
  bool entry(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("bit matrix entry out of range");
    return (*this)(i - 1, j - 1);
  }

  std::vector<int> row(std::size_t i) const {
    std::vector<int> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = (*this)(i, j) ? 1 : 0;
    return out;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

namespace detail {
inline void require_width(std::int64_t w, const char* what) {
  if (w < 1) throw DomainError(std::string(what) + ": w must be >= 1, got " + std::to_string(w));
}
}  // namespace detail

/// S_w, entry(i,j) = H(i+j-1, j): row i reads the triangle diagonal starting at H(i,i).
inline ExactMatrix build_S(std::int64_t w) {
  detail::require_width(w, "build_S");
  const auto n = static_cast<std::size_t>(w);
  ExactMatrix m(n, n);
  for (std::int64_t i = 1; i <= w; ++i)
    for (std::int64_t j = 1; j <= w; ++j)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = det_entry({i + j - 1, j});
  return m;
}

/// T_w, entry(i,j) = HF(i+j-1, j) = F(i) F(j).
inline ExactMatrix build_T(std::int64_t w) {
  detail::require_width(w, "build_T");
  const auto n = static_cast<std::size_t>(w);
  ExactMatrix m(n, n);
  for (std::int64_t i = 1; i <= w; ++i)
    for (std::int64_t j = 1; j <= w; ++j)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = hosoya_entry({i + j - 1, j});
  return m;
}

/// S_w = u1 v1^T + u2 v2^T with Fibonacci runs along the triangle's sides.
struct RankTwoDecomposition {
  std::vector<BigInt> u1, v1, u2, v2;

  ExactMatrix reconstruct() const { return outer(u1, v1) + outer(u2, v2); }
};

inline RankTwoDecomposition rank2_vectors(std::int64_t w) {
  detail::require_width(w, "rank2_vectors");
  const auto n = static_cast<std::size_t>(w);
  RankTwoDecomposition d;
  for (std::size_t i = 0; i < n; ++i) {
    d.u1.push_back(fib(i));
    d.v1.push_back(fib(i + 1));
    d.u2.push_back(fib(i + 2));
    d.v2.push_back(fib(i));
  }
  return d;
}

/// Entrywise least non-negative residue mod 2.
inline BitMatrix mod2(const ExactMatrix& m) {
  if (!m.is_square()) throw DomainError("mod2: matrix must be square");
  BitMatrix bits(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) bits.set(i, j, boost::multiprecision::bit_test(abs(m(i, j)), 0));
  return bits;
}

/// Rank over the rationals by Bareiss fraction-free elimination. Every
/// division by the previous pivot is exact; a remainder throws.
template <typename T>
std::size_t exact_rank(const Matrix<T>& input) {
  Matrix<T> a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  T previous_pivot(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(rank, j), a(pivot_row, j));

    const T pivot = a(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a(i, j) = exact_div(pivot * a(i, j) - a(i, col) * a(rank, j), previous_pivot);
      }
      a(i, col) = 0;
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace hosoya
