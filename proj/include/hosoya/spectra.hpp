#pragma once

/**
 * @file spectra.hpp
 * @brief Exact characteristic polynomials and the spectral predicates built
 *        on them: integer roots, integrality, distinct eigenvalue count,
 *        energy, and the three join formulas.
 *
 * Every characteristic polynomial here is det(xI - M), hence monic. No
 * floating point is used anywhere.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/error.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/matrix.hpp"
#include "hosoya/polynomial.hpp"

namespace hosoya {

/**
 * det(xI - M) by the Faddeev-LeVerrier recurrence
 *
 *   N_1 = I,  c_{n-k} = -tr(M N_k) / k,  N_{k+1} = M N_k + c_{n-k} I,
 *
 * every division by k asserted exact. Zero entries of M are skipped in the
 * products, which makes 0/1 adjacency matrices cheap.
 */
inline IntPolynomial char_poly(const ExactMatrix& m) {
  if (!m.is_square()) throw DomainError("char_poly: matrix must be square");
  const std::size_t n = m.rows();

  std::vector<std::vector<std::pair<std::size_t, BigInt>>> nonzeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (m(i, l) != 0) nonzeros[i].emplace_back(l, m(i, l));

  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  ExactMatrix current = ExactMatrix::identity(n);
  ExactMatrix product(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt sum = 0;
        for (const auto& [l, value] : nonzeros[i]) sum += value * current(l, j);
        product(i, j) = std::move(sum);
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += product(i, i);
    c[n - k] = -exact_div(trace, BigInt(static_cast<std::int64_t>(k)));
    if (k < n) {
      std::swap(current, product);
      for (std::size_t i = 0; i < n; ++i) current(i, i) += c[n - k];
    }
  }
  return IntPolynomial(std::move(c));
}

/// D - A for a loopless graph.
inline ExactMatrix laplacian_matrix(const Graph& g) {
  if (g.has_loops()) throw DomainError("laplacian_matrix: graph has loops");
  ExactMatrix l = g.adjacency_matrix();
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) = -l(i, j);
    l(i, i) = g.degree(i + 1);
  }
  return l;
}

inline IntPolynomial adjacency_char_poly(const Graph& g) { return char_poly(g.adjacency_matrix()); }
inline IntPolynomial laplacian_char_poly(const Graph& g) { return char_poly(laplacian_matrix(g)); }

struct RootExtraction {
  std::vector<BigInt> integer_roots;  // with multiplicity, descending
  IntPolynomial remainder;            // free of integer roots
};

namespace detail {

/// Positive divisors of |c| that do not exceed `limit`, ascending.
inline std::vector<BigInt> bounded_divisors(const BigInt& c, const BigInt& limit) {
  const BigInt value = abs(c);
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  const BigInt root = isqrt(value);
  if (limit <= root) {
    for (BigInt d = 1; d <= limit; ++d)
      if (value % d == 0) small.push_back(d);
    return small;
  }
  for (BigInt d = 1; d <= root; ++d) {
    if (value % d != 0) continue;
    small.push_back(d);
    const BigInt partner = value / d;
    if (partner != d && partner <= limit) large.push_back(partner);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Smallest x >= 0 with x^k >= value.
inline BigInt ceil_root(const BigInt& value, unsigned k) {
  if (value <= 1 || k == 1) return value;
  BigInt lo = 1;
  BigInt hi = 1;
  while (boost::multiprecision::pow(hi, k) < value) hi *= 2;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) >= value) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

/// Fujiwara's bound: every root satisfies
/// |z| <= 2 max(|a_{n-1}/a_n|, |a_{n-2}/a_n|^(1/2), ..., |a_0/(2 a_n)|^(1/n)).
inline BigInt root_bound(const IntPolynomial& p) {
  const auto n = static_cast<std::size_t>(p.degree());
  const BigInt lead = abs(p.leading());
  BigInt largest = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt magnitude = abs(p.coefficient(n - k));
    if (magnitude == 0) continue;
    const BigInt denominator = k == n ? BigInt(2 * lead) : lead;
    const BigInt ratio = (magnitude + denominator - 1) / denominator;
    largest = std::max(largest, ceil_root(ratio, static_cast<unsigned>(k)));
  }
  return 2 * largest;
}

}  // namespace detail

/**
 * Strip every integer root. Zero roots go first; every other integer root
 * divides the constant term of what remains, so the positive and negative
 * divisors of that constant (capped by Fujiwara's bound) are each divided out
 * to full multiplicity. Whatever is left has no integer root.
 */
inline RootExtraction extract_integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("extract_integer_roots: zero polynomial");
  RootExtraction out;
  std::vector<BigInt> coeffs = p.coeffs();
  std::size_t zeros = 0;
  while (coeffs[zeros] == 0) ++zeros;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));
  IntPolynomial rest(std::move(coeffs));
  out.integer_roots.assign(zeros, BigInt(0));

  if (rest.degree() > 0) {
    const auto candidates = detail::bounded_divisors(rest.constant_term(), detail::root_bound(rest));
    for (const BigInt& d : candidates) {
      for (const BigInt& root : {d, BigInt(-d)}) {
        while (rest.degree() > 0 && rest.evaluate(root) == 0) {
          rest = exact_quotient(rest, IntPolynomial::linear(root));
          out.integer_roots.push_back(root);
        }
      }
    }
  }
  std::sort(out.integer_roots.begin(), out.integer_roots.end(), std::greater<>());
  out.remainder = std::move(rest);
  return out;
}

/// All roots integers, i.e. nothing but a constant survives root stripping.
inline bool is_integral(const IntPolynomial& p) { return extract_integer_roots(p).remainder.degree() == 0; }

/// Degree of the squarefree part, deg p - deg gcd(p, p').
inline std::size_t distinct_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("distinct_root_count: zero polynomial");
  if (p.degree() == 0) return 0;
  const IntPolynomial g = gcd(p, p.derivative());
  return static_cast<std::size_t>(p.degree() - g.degree());
}

/// Sum of |eigenvalue| with multiplicity; only defined for integral spectra.
inline BigInt energy_integral(const IntPolynomial& p) {
  const RootExtraction roots = extract_integer_roots(p);
  if (roots.remainder.degree() != 0) throw DomainError("energy_integral: spectrum is not integral");
  BigInt energy = 0;
  for (const auto& r : roots.integer_roots) energy += abs(r);
  return energy;
}

namespace detail {

inline BigInt sign_power(std::int64_t exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

inline void require_degree(const IntPolynomial& p, std::int64_t n, const char* what) {
  if (p.degree() != n) {
    throw DomainError(std::string(what) + ": expected degree " + std::to_string(n) + ", got " +
                      std::to_string(p.degree()));
  }
}

}  // namespace detail

/**
 * Characteristic polynomial of G1 ∇ G2 from those of G1, G2 and their
 * complements:
 *
 *   (-1)^n2 P1(x) Q2(-x-1) + (-1)^n1 P2(x) Q1(-x-1) - (-1)^(n1+n2) Q1(-x-1) Q2(-x-1)
 *
 * with Qi the complement's polynomial. Result is monic-normalised.
 */
inline IntPolynomial join_char_poly(const IntPolynomial& p1, const IntPolynomial& p2, const IntPolynomial& p1_complement,
                                    const IntPolynomial& p2_complement, std::int64_t n1, std::int64_t n2) {
  detail::require_degree(p1, n1, "join_char_poly(G1)");
  detail::require_degree(p2, n2, "join_char_poly(G2)");
  detail::require_degree(p1_complement, n1, "join_char_poly(complement G1)");
  detail::require_degree(p2_complement, n2, "join_char_poly(complement G2)");
  const IntPolynomial shift{BigInt(-1), BigInt(-1)};  // -x - 1
  const IntPolynomial q1 = p1_complement.compose(shift);
  const IntPolynomial q2 = p2_complement.compose(shift);
  using detail::sign_power;
  const IntPolynomial result =
      sign_power(n2) * (p1 * q2) + sign_power(n1) * (p2 * q1) - sign_power(n1 + n2) * (q1 * q2);
  return monic(result);
}

/// Join of an r1-regular graph on n1 vertices with an r2-regular graph on n2:
/// P1 P2 / ((x-r1)(x-r2)) * ((x-r1)(x-r2) - n1 n2).
inline IntPolynomial regular_join_char_poly(const IntPolynomial& p1, const IntPolynomial& p2, std::int64_t r1,
                                            std::int64_t r2, std::int64_t n1, std::int64_t n2) {
  detail::require_degree(p1, n1, "regular_join_char_poly(G1)");
  detail::require_degree(p2, n2, "regular_join_char_poly(G2)");
  const auto l1 = IntPolynomial::linear(BigInt(r1));
  const auto l2 = IntPolynomial::linear(BigInt(r2));
  auto [q1, rem1] = divmod(p1, l1);
  auto [q2, rem2] = divmod(p2, l2);
  if (!rem1.is_zero() || !rem2.is_zero()) {
    throw DomainError("regular_join_char_poly: x - r does not divide the given polynomial");
  }
  return monic(q1 * q2 * (l1 * l2 - IntPolynomial::constant(BigInt(n1) * BigInt(n2))));
}

/// Adjacency of the join: [[A1, J], [J, A2]].
inline ExactMatrix join_adjacency(const ExactMatrix& a1, const ExactMatrix& a2) {
  if (!a1.is_square() || !a2.is_square()) throw DomainError("join_adjacency: blocks must be square");
  const std::size_t m = a1.rows();
  const std::size_t n = a2.rows();
  ExactMatrix out(m + n, m + n, BigInt(1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = a1(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(m + i, m + j) = a2(i, j);
  return out;
}

/**
 * Characteristic polynomial of [[A1, J], [J, A2]] for symmetric blocks with
 * arbitrary diagonals (loops allowed). With Ai~ = J - Ai,
 *
 *   (-1)^m P(A1~)(-x) P(A2)(x) + (-1)^n P(A1)(x) P(A2~)(-x)
 *     - (-1)^(m+n) P(A1~)(-x) P(A2~)(-x).
 */
inline IntPolynomial zhang_join_char_poly(const ExactMatrix& a1, const ExactMatrix& a2) {
  if (!a1.is_square() || !a2.is_square()) throw DomainError("zhang_join_char_poly: blocks must be square");
  const auto m = static_cast<std::int64_t>(a1.rows());
  const auto n = static_cast<std::int64_t>(a2.rows());
  auto tilde = [](const ExactMatrix& a) {
    ExactMatrix out(a.rows(), a.cols(), BigInt(1));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= a(i, j);
    return out;
  };
  const IntPolynomial negate_x{BigInt(0), BigInt(-1)};
  const IntPolynomial t1 = char_poly(tilde(a1)).compose(negate_x);
  const IntPolynomial t2 = char_poly(tilde(a2)).compose(negate_x);
  const IntPolynomial p1 = char_poly(a1);
  const IntPolynomial p2 = char_poly(a2);
  using detail::sign_power;
  return monic(sign_power(m) * (t1 * p2) + sign_power(n) * (p1 * t2) - sign_power(m + n) * (t1 * t2));
}

/// (r1 - r2)^2 + 4 n1 n2 is a perfect square; n1, n2 >= 1 expected.
inline bool perfect_square_criterion(std::int64_t r1, std::int64_t r2, std::int64_t n1, std::int64_t n2) {
  const BigInt diff = BigInt(r1) - BigInt(r2);
  return is_perfect_square(diff * diff + 4 * BigInt(n1) * BigInt(n2));
}

/// Positive p, q with p q = 2 n r and p - q = n - 1.
struct IntegralityWitness {
  BigInt p;
  BigInt q;

  friend bool operator==(const IntegralityWitness&, const IntegralityWitness&) = default;
};

/// (n - 1)^2 + 8 n r, the discriminant of x^2 - (n-1) x - 2nr.
inline BigInt integrality_discriminant(std::int64_t n, std::int64_t r) {
  const BigInt nm1 = BigInt(n) - 1;
  return nm1 * nm1 + 8 * BigInt(n) * BigInt(r);
}

/**
 * Witness that (K_n ⊔ K_n) ∇ K̄_r is integral, found by direct search over
 * q; cross-checked against the discriminant being a perfect square.
 */
inline std::optional<IntegralityWitness> integrality_condition(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1) throw DomainError("integrality_condition: n and r must be >= 1");
  const BigInt target = 2 * BigInt(n) * BigInt(r);
  const BigInt gap = BigInt(n) - 1;
  std::optional<IntegralityWitness> witness;
  for (BigInt q = 1; q * (q + gap) <= target; ++q) {
    if (q * (q + gap) == target) {
      witness = IntegralityWitness{q + gap, q};
      break;
    }
  }
  if (witness.has_value() != is_perfect_square(integrality_discriminant(n, r))) {
    throw ExactnessError("integrality_condition: witness search and discriminant test disagree");
  }
  return witness;
}

}  // namespace hosoya
