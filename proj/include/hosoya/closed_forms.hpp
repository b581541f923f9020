#pragma once

/**
 * @file closed_forms.hpp
 * @brief Closed-form characteristic polynomials of the basic graphs and of
 *        every family, expanded and monic-normalised.
 *
 * These are the expected values the computed spectra are compared against;
 * nothing here calls char_poly.
 */

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "hosoya/bigint.hpp"
#include "hosoya/error.hpp"
#include "hosoya/families.hpp"
#include "hosoya/polynomial.hpp"

namespace hosoya {

namespace closed_form {

inline IntPolynomial x_pow(std::int64_t k) { return IntPolynomial::monomial(static_cast<std::size_t>(k)); }

/// (x - root)^k
inline IntPolynomial root_pow(std::int64_t root, std::int64_t k) {
  return pow(IntPolynomial::linear(BigInt(root)), static_cast<std::size_t>(k));
}

/// x^2 + b x + c
inline IntPolynomial quadratic(const BigInt& b, const BigInt& c) { return IntPolynomial{c, b, BigInt(1)}; }

/// x^3 + a x^2 + b x + c
inline IntPolynomial cubic(const BigInt& a, const BigInt& b, const BigInt& c) {
  return IntPolynomial{c, b, a, BigInt(1)};
}

}  // namespace closed_form

struct CompleteKind { std::int64_t n; };
struct CompleteBipartiteKind { std::int64_t m, n; };
struct EmptyKind { std::int64_t n; };
struct TwoCliquesKind { std::int64_t m, n; };
using BasicGraphKind = std::variant<CompleteKind, CompleteBipartiteKind, EmptyKind, TwoCliquesKind>;

/**
 *   K_n          (x - (n-1)) (x+1)^(n-1)
 *   K_{m,n}      x^(m+n-2) (x^2 - mn)
 *   K̄_n          x^n
 *   K_m ⊔ K_n    (x - (n-1)) (x - (m-1)) (x+1)^(m+n-2)
 */
inline IntPolynomial basic_char_poly(const BasicGraphKind& kind) {
  using namespace closed_form;
  auto require = [](std::int64_t size) {
    if (size < 1) throw DomainError("basic_char_poly: sizes must be >= 1");
  };
  return std::visit(
      [&](const auto& k) -> IntPolynomial {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, CompleteKind>) {
          require(k.n);
          return root_pow(k.n - 1, 1) * root_pow(-1, k.n - 1);
        } else if constexpr (std::is_same_v<K, CompleteBipartiteKind>) {
          require(k.m);
          require(k.n);
          return x_pow(k.m + k.n - 2) * quadratic(0, -BigInt(k.m) * k.n);
        } else if constexpr (std::is_same_v<K, EmptyKind>) {
          require(k.n);
          return x_pow(k.n);
        } else {
          require(k.m);
          require(k.n);
          return root_pow(k.n - 1, 1) * root_pow(k.m - 1, 1) * root_pow(-1, k.m + k.n - 2);
        }
      },
      kind);
}

namespace closed_form {

/**
 * (K_n ⊔ K_m) ∇ K̄_r:
 *   x^(r-1) (x+1)^(m+n-2) [x^3 - (m+n-2) x^2 - ((m+n)(r+1) - mn - 1) x - r(m+n-2mn)]
 */
inline IntPolynomial two_cliques_join_general(std::int64_t n, std::int64_t m, std::int64_t r) {
  const BigInt N(n), M(m), R(r);
  const BigInt linear_coeff = -((M + N) * (R + 1) - M * N - 1);
  const BigInt constant_coeff = -R * (M + N - 2 * M * N);
  return x_pow(r - 1) * root_pow(-1, m + n - 2) * cubic(-(M + N - 2), linear_coeff, constant_coeff);
}

/// The same polynomial with the constant written as -((m+n) r - 2 m n r).
inline BigInt two_cliques_join_constant_expanded(std::int64_t n, std::int64_t m, std::int64_t r) {
  const BigInt N(n), M(m), R(r);
  return -((M + N) * R - 2 * M * N * R);
}

inline BigInt two_cliques_join_constant_factored(std::int64_t n, std::int64_t m, std::int64_t r) {
  const BigInt N(n), M(m), R(r);
  return -R * (M + N - 2 * M * N);
}

/// (K_n ⊔ K_n) ∇ K̄_r:  x^(r-1) (x+1)^(2(n-1)) (x - (n-1)) (x^2 - (n-1) x - 2nr)
inline IntPolynomial two_equal_cliques_join(std::int64_t n, std::int64_t r) {
  return x_pow(r - 1) * root_pow(-1, 2 * (n - 1)) * root_pow(n - 1, 1) *
         quadratic(-BigInt(n - 1), -2 * BigInt(n) * r);
}

/// K_n ∇ K̄_r:  x^(r-1) (x+1)^(n-1) (x^2 - (n-1) x - nr)
inline IntPolynomial clique_join_empty(std::int64_t n, std::int64_t r) {
  return x_pow(r - 1) * root_pow(-1, n - 1) * quadratic(-BigInt(n - 1), -BigInt(n) * r);
}

inline IntPolynomial join_family(std::int64_t n, std::int64_t m, std::int64_t r) {
  const IntPolynomial general = two_cliques_join_general(n, m, r);
  if (n == m) {
    const IntPolynomial equal = two_equal_cliques_join(n, r);
    if (equal != general) throw ExactnessError("two-clique join closed forms disagree at n = m");
  }
  return general;
}

// NoLoops(w), adjacency.

inline IntPolynomial no_loops_tt_t1(std::int64_t t) {  // w = 3t + 1
  if (t == 1) return x_pow(2) * root_pow(-2, 1) * root_pow(2, 1);
  return x_pow(t) * root_pow(2 * t, 1) * (root_pow(-1, 2) - IntPolynomial::constant(BigInt(t) * t)) *
         root_pow(-1, 2 * (t - 1));
}
inline IntPolynomial no_loops_tt_t1_general(std::int64_t t) {
  return x_pow(t) * root_pow(2 * t, 1) * (root_pow(-1, 2) - IntPolynomial::constant(BigInt(t) * t)) *
         root_pow(-1, 2 * (t - 1));
}

inline IntPolynomial no_loops_ttt_general(std::int64_t t) {  // w = 3t
  return x_pow(t - 1) * root_pow(-1, 2 * (t - 1)) * root_pow(t - 1, 1) *
         quadratic(-BigInt(t - 1), -2 * BigInt(t) * t);
}
inline IntPolynomial no_loops_ttt(std::int64_t t) {
  if (t == 1) return x_pow(1) * quadratic(0, -2);
  return no_loops_ttt_general(t);
}

inline IntPolynomial no_loops_t_t1_t1_general(std::int64_t t) {  // w = 3t + 2
  const BigInt T(t);
  return x_pow(t) * root_pow(-1, 2 * t - 1) * cubic(1 - 2 * T, -(T * T + 4 * T + 1), (2 * T * T - 1) * (T + 1));
}
inline IntPolynomial no_loops_t_t1_t1(std::int64_t t) {
  if (t == 1) return x_pow(1) * root_pow(-1, 1) * cubic(-1, -6, 2);
  return no_loops_t_t1_t1_general(t);
}

// Loops(w), adjacency.

inline IntPolynomial loops_poly(std::int64_t t, std::int64_t residue) {
  const BigInt T(t);
  switch (residue) {
    case 0: return x_pow(3 * (t - 1)) * root_pow(2 * t, 1) * quadratic(0, -T * T);
    case 1: return x_pow(3 * t - 2) * root_pow(t, 1) * quadratic(-T, -2 * T * (T + 1));
    default: return x_pow(3 * t - 1) * cubic(-(2 * T + 1), -(T + 1) * (T + 1), 2 * T * (T + 1) * (T + 1));
  }
}

// NoLoops(w), Laplacian.

inline IntPolynomial laplacian_poly(std::int64_t t, std::int64_t residue) {
  switch (residue) {
    case 0: return x_pow(1) * root_pow(t, 1) * root_pow(3 * t, 1) * root_pow(2 * t, 3 * (t - 1));
    case 1:
      return x_pow(1) * root_pow(t + 1, 1) * root_pow(3 * t + 1, 1) * root_pow(2 * t, t) *
             root_pow(2 * t + 1, 2 * (t - 1));
    default:
      return x_pow(1) * root_pow(t + 1, 1) * root_pow(3 * t + 2, 1) * root_pow(2 * (t + 1), t) *
             root_pow(2 * t + 1, 2 * t - 1);
  }
}

// ComplementNoLoops(w), adjacency.

inline IntPolynomial complement_poly(std::int64_t t, std::int64_t residue) {
  const BigInt T(t);
  switch (residue) {
    case 0: return x_pow(2 * (t - 1)) * quadratic(0, -T * T) * root_pow(t - 1, 1) * root_pow(-1, t - 1);
    case 1: return x_pow(2 * (t - 1)) * root_pow(t, 2) * root_pow(-t, 1) * root_pow(-1, t);
    default: return x_pow(2 * t - 1) * root_pow(t, 1) * root_pow(-1, t) * quadratic(0, -T * (T + 1));
  }
}

}  // namespace closed_form

enum class SpectrumKind { Adjacency, Laplacian };

inline std::string spectrum_name(SpectrumKind kind) {
  return kind == SpectrumKind::Adjacency ? "adjacency" : "laplacian";
}

/**
 * Closed-form characteristic polynomial for a family member. Laplacian forms
 * exist for NoLoops only; other Laplacian requests are a domain error.
 */
inline IntPolynomial expected_poly(const FamilySpec& spec, SpectrumKind selector = SpectrumKind::Adjacency) {
  using namespace closed_form;
  validate(spec);
  const std::int64_t t = spec.t();
  const std::int64_t residue = spec.residue();

  if (selector == SpectrumKind::Laplacian) {
    if (spec.kind != FamilyKind::NoLoops) {
      throw DomainError("no closed-form Laplacian polynomial for " + to_string(spec));
    }
    return monic(laplacian_poly(t, residue));
  }

  switch (spec.kind) {
    case FamilyKind::NoLoops: {
      IntPolynomial special;
      IntPolynomial general;
      switch (residue) {
        case 0: special = no_loops_ttt(t); general = no_loops_ttt_general(t); break;
        case 1: special = no_loops_tt_t1(t); general = no_loops_tt_t1_general(t); break;
        default: special = no_loops_t_t1_t1(t); general = no_loops_t_t1_t1_general(t); break;
      }
      if (special != general) throw ExactnessError("t = 1 special case disagrees with the general formula");
      return monic(special);
    }
    case FamilyKind::Loops: return monic(loops_poly(t, residue));
    case FamilyKind::ComplementNoLoops: return monic(complement_poly(t, residue));
    case FamilyKind::Theta: {
      // Only non-zero eigenvalue: the looped clique's size.
      const std::int64_t clique = 2 * t + residue;
      return monic(x_pow(spec.w - 1) * root_pow(clique, 1));
    }
    case FamilyKind::ThetaComplement: return monic(clique_join_empty(t, spec.w - t));
    case FamilyKind::Join: return monic(join_family(spec.n, spec.m, spec.r));
  }
  throw DomainError("expected_poly: unsupported family");
}

/**
 * The four polynomials that rule out integer roots for the non-integral
 * residues:
 *   p1 = x^2 + (1-t) x - 2t^2
 *   p2 = x^3 + (1-2t) x^2 - (t^2+4t+1) x + (2t^3+2t^2-t-1)
 *   p3 = x^2 - t x - 2t(t+1)
 *   p4 = x^3 - (2t+1) x^2 - (t+1)^2 x + 2t(t+1)^2
 */
inline std::array<IntPolynomial, 4> lemma_polynomials(std::int64_t t) {
  using namespace closed_form;
  if (t < 1) throw DomainError("lemma_polynomials: t must be >= 1");
  const BigInt T(t);
  return {
      quadratic(1 - T, -2 * T * T),
      cubic(1 - 2 * T, -(T * T + 4 * T + 1), 2 * T * T * T + 2 * T * T - T - 1),
      quadratic(-T, -2 * T * (T + 1)),
      cubic(-(2 * T + 1), -(T + 1) * (T + 1), 2 * T * (T + 1) * (T + 1)),
  };
}

}  // namespace hosoya
