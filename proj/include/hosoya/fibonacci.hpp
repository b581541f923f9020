#pragma once

/**
 * @file fibonacci.hpp
 * @brief Exact Fibonacci numbers, F(0) = 0, F(1) = 1.
 *
 * Values come from a process-wide append-only table that grows on demand.
 * Readers take a shared lock; extension takes the exclusive lock, so the
 * table is extended at most once per index even under concurrent callers.
 */

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "hosoya/bigint.hpp"

namespace hosoya {

namespace detail {

class FibonacciTable {
 public:
  BigInt get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    values_.reserve(n + 1);
    while (values_.size() <= n) {
      const std::size_t size = values_.size();
      values_.push_back(values_[size - 1] + values_[size - 2]);
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<BigInt> values_{BigInt(0), BigInt(1)};
};

inline FibonacciTable& fibonacci_table() {
  static FibonacciTable table;
  return table;
}

}  // namespace detail

/// F(n) under F(0) = 0, F(1) = 1, F(n) = F(n-1) + F(n-2).
inline BigInt fib(std::size_t n) { return detail::fibonacci_table().get(n); }

/// F(n) is even exactly when 3 divides n.
constexpr bool fib_is_even(std::size_t n) noexcept { return n % 3 == 0; }

}  // namespace hosoya
