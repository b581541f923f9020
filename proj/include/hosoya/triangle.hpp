#pragma once

/**
 * @file triangle.hpp
 * @brief Entry and row access for the determinant Hosoya triangle and the
 *        Hosoya triangle.
 *
 * Rows are numbered r >= 1 and positions 1 <= k <= r from the left.
 *
 *   determinant triangle:  H(r,k)  = F(k+1) F(r-k+2) - F(k) F(r-k+1)
 *   Hosoya triangle:       HF(r,k) = F(k) F(r-k+1)
 */

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/error.hpp"
#include "hosoya/fibonacci.hpp"

namespace hosoya {

struct TrianglePosition {
  std::int64_t r = 1;
  std::int64_t k = 1;

  friend bool operator==(const TrianglePosition&, const TrianglePosition&) = default;
};

enum class TriangleKind { DetHosoya, Hosoya };

inline void validate(const TrianglePosition& pos) {
  if (pos.r < 1 || pos.k < 1 || pos.k > pos.r) {
    throw DomainError("triangle position (" + std::to_string(pos.r) + "," +
                      std::to_string(pos.k) + ") requires 1 <= k <= r");
  }
}

namespace detail {
inline std::size_t index(std::int64_t i) { return static_cast<std::size_t>(i); }
}  // namespace detail

inline BigInt det_entry(const TrianglePosition& pos) {
  validate(pos);
  using detail::index;
  const auto [r, k] = pos;
  return fib(index(k + 1)) * fib(index(r - k + 2)) - fib(index(k)) * fib(index(r - k + 1));
}

inline BigInt hosoya_entry(const TrianglePosition& pos) {
  validate(pos);
  using detail::index;
  return fib(index(pos.k)) * fib(index(pos.r - pos.k + 1));
}

inline BigInt entry(TriangleKind kind, const TrianglePosition& pos) {
  return kind == TriangleKind::DetHosoya ? det_entry(pos) : hosoya_entry(pos);
}

/// [entry(r,1), ..., entry(r,r)].
inline std::vector<BigInt> row(TriangleKind kind, std::int64_t r) {
  if (r < 1) throw DomainError("row index must be >= 1, got " + std::to_string(r));
  std::vector<BigInt> values;
  values.reserve(detail::index(r));
  for (std::int64_t k = 1; k <= r; ++k) values.push_back(entry(kind, {r, k}));
  return values;
}

/// H(r,k) = F(k-1) F(r-k+2) + F(k) F(r-k); same values as det_entry.
inline BigInt det_entry_sum_form(const TrianglePosition& pos) {
  validate(pos);
  using detail::index;
  const auto [r, k] = pos;
  return fib(index(k - 1)) * fib(index(r - k + 2)) + fib(index(k)) * fib(index(r - k));
}

/**
 * Rows 1..max_r of the determinant triangle built only from
 *   H(r,k) = H(r-1,k) + H(r-2,k)        (k <= r-2)
 *   H(r,k) = H(r-1,k-1) + H(r-2,k-2)    (otherwise)
 * and the seeds H(1,1) = 0, H(2,1) = H(2,2) = 1, H(3,2) = 3.
 * rows[r-1][k-1] = H(r,k).
 */
inline std::vector<std::vector<BigInt>> recurrence_rows(std::int64_t max_r) {
  if (max_r < 1) throw DomainError("recurrence_rows: max_r must be >= 1");
  std::vector<std::vector<BigInt>> rows;
  for (std::int64_t r = 1; r <= max_r; ++r) {
    std::vector<BigInt> current(detail::index(r));
    for (std::int64_t k = 1; k <= r; ++k) {
      BigInt& value = current[detail::index(k - 1)];
      if (r == 1) value = 0;
      else if (r == 2) value = 1;
      else if (r == 3 && k == 2) value = 3;
      else if (k <= r - 2) value = rows[detail::index(r - 2)][detail::index(k - 1)] + rows[detail::index(r - 3)][detail::index(k - 1)];
      else value = rows[detail::index(r - 2)][detail::index(k - 2)] + rows[detail::index(r - 3)][detail::index(k - 3)];
    }
    rows.push_back(std::move(current));
  }
  return rows;
}

/// (F(gcd(k+1, r+2)), F(gcd(k, r+2))); both divide det_entry(pos).
inline std::pair<BigInt, BigInt> divisibility_witnesses(const TrianglePosition& pos) {
  validate(pos);
  const auto [r, k] = pos;
  return {fib(detail::index(std::gcd(k + 1, r + 2))), fib(detail::index(std::gcd(k, r + 2)))};
}

/**
 * Coefficients of the bivariate series (x + y + xy) / ((1 - x - x^2)(1 - y - y^2)),
 * expanded through total degree max_r.
 *
 * Index correspondence: H(r,k) is the coefficient of x^(k-1) y^(r-k), so row r
 * of the triangle is the anti-diagonal of total degree r - 1.
 */
class GeneratingTable {
 public:
  explicit GeneratingTable(std::size_t degree) : degree_(degree), coeffs_(degree + 1) {
    for (std::size_t a = 0; a <= degree; ++a) coeffs_[a].resize(degree - a + 1);
  }

  std::size_t degree() const noexcept { return degree_; }

  /// Coefficient of x^a y^b (a + b <= degree).
  const BigInt& coefficient(std::size_t a, std::size_t b) const { return coeffs_.at(a).at(b); }
  BigInt& coefficient(std::size_t a, std::size_t b) { return coeffs_.at(a).at(b); }

  /// H(r,k) read off the series; requires r - 1 <= degree.
  const BigInt& entry(const TrianglePosition& pos) const {
    validate(pos);
    if (detail::index(pos.r - 1) > degree_) {
      throw DomainError("row " + std::to_string(pos.r) + " lies beyond the expanded degree");
    }
    return coefficient(detail::index(pos.k - 1), detail::index(pos.r - pos.k));
  }

  std::vector<BigInt> row(std::int64_t r) const {
    std::vector<BigInt> values;
    for (std::int64_t k = 1; k <= r; ++k) values.push_back(entry({r, k}));
    return values;
  }

 private:
  std::size_t degree_;
  std::vector<std::vector<BigInt>> coeffs_;
};

namespace detail {

/// First `count` coefficients of 1 / d(x) for a power series with d[0] = +-1.
inline std::vector<BigInt> series_inverse(const std::vector<BigInt>& d, std::size_t count) {
  std::vector<BigInt> inverse(count);
  for (std::size_t i = 0; i < count; ++i) {
    BigInt acc = i == 0 ? BigInt(1) : BigInt(0);
    for (std::size_t j = 1; j <= i && j < d.size(); ++j) acc -= d[j] * inverse[i - j];
    inverse[i] = exact_div(acc, d[0]);
  }
  return inverse;
}

}  // namespace detail

inline GeneratingTable genfunc_table(std::int64_t max_r) {
  if (max_r < 1 || max_r > 64) {
    throw DomainError("genfunc_table: max_r must lie in [1, 64], got " + std::to_string(max_r));
  }
  const auto degree = detail::index(max_r);
  const std::vector<BigInt> denominator{1, -1, -1};
  const auto g = detail::series_inverse(denominator, degree + 1);

  // numerator x + y + xy as (power of x, power of y) terms
  constexpr std::pair<std::size_t, std::size_t> numerator[] = {{1, 0}, {0, 1}, {1, 1}};

  GeneratingTable table(degree);
  for (std::size_t a = 0; a <= degree; ++a) {
    for (std::size_t b = 0; a + b <= degree; ++b) {
      BigInt sum = 0;
      for (const auto& [p, q] : numerator) {
        if (p <= a && q <= b) sum += g[a - p] * g[b - q];
      }
      table.coefficient(a, b) = sum;
    }
  }
  return table;
}

}  // namespace hosoya
