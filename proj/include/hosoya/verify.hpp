#pragma once

/**
 * @file verify.hpp
 * @brief Registry of claim checks and the suite runner that turns them into a
 *        deterministic report.
 *
 * Every check owns a parameter domain derived from t_max (w runs over
 * 3..3*t_max+2) and an evaluator returning an expected and a computed string.
 * A check passes iff the two strings are identical.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hosoya/bigint.hpp"
#include "hosoya/closed_forms.hpp"
#include "hosoya/error.hpp"
#include "hosoya/families.hpp"
#include "hosoya/fibonacci.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/matrix.hpp"
#include "hosoya/polynomial.hpp"
#include "hosoya/spectra.hpp"
#include "hosoya/triangle.hpp"

#ifndef HOSOYA_VERSION
#define HOSOYA_VERSION "0.0.0"
#endif

namespace hosoya {

inline constexpr std::int64_t kDefaultTMax = 13;
inline constexpr std::int64_t kMaxTMax = 20;

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

using CheckParams = std::map<std::string, std::int64_t>;

struct ClaimCheck {
  std::string name;
  CheckParams params;
  CheckStatus status = CheckStatus::Skipped;
  std::string expected;
  std::string computed;
  std::string paper_ref;
};

struct StatusCounts {
  std::size_t pass = 0, fail = 0, skipped = 0;
};

struct VerificationReport {
  std::int64_t t_min = 1;
  std::int64_t t_max = 1;
  std::vector<ClaimCheck> checks;
  StatusCounts summary;
  std::string toolkit_version = HOSOYA_VERSION;
  std::string digest;
};

/// What an evaluator hands back; skipped marks a parameter outside the
/// check's domain.
struct Outcome {
  std::string expected;
  std::string computed;
  bool skipped = false;

  static Outcome skip(std::string why) { return {"n/a", std::move(why), true}; }
};

struct CheckDefinition {
  std::string name;
  std::string statement;  // the mathematical claim, reported as paper_ref
  std::function<std::vector<CheckParams>(std::int64_t t_max)> domain;
  std::function<Outcome(const CheckParams&)> evaluate;
};

namespace verify_detail {

inline std::int64_t w_max(std::int64_t t_max) { return 3 * t_max + 2; }

inline std::vector<CheckParams> range(const std::string& key, std::int64_t lo, std::int64_t hi) {
  std::vector<CheckParams> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back({{key, v}});
  return out;
}

inline auto w_domain() {
  return [](std::int64_t t_max) { return range("w", 3, w_max(t_max)); };
}
inline auto t_domain() {
  return [](std::int64_t t_max) { return range("t", 1, t_max); };
}

inline std::string poly_str(const IntPolynomial& p) {
  std::string out = "[";
  const auto coeffs = serialize(p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += (i ? "," : "") + coeffs[i];
  return out + "]";
}

template <typename Range>
std::string list_str(const Range& values) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << ']';
  return out.str();
}

/// expected = claim; computed = claim when it holds, else the counterexample.
inline Outcome holds(const std::string& claim, const std::optional<std::string>& counterexample) {
  return {claim, counterexample ? *counterexample : claim};
}

inline Outcome equal(const std::string& expected, const std::string& computed) { return {expected, computed}; }

inline std::string matrix_str(const ExactMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).str();
  }
  return out;
}

inline std::string bits_str(const BitMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.size(); ++j) out += m(i, j) ? '1' : '0';
  }
  return out;
}

inline std::string graph_str(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " edges=" << g.edge_count() << " loops=" << list_str(g.looped_vertices());
  return out.str();
}

inline std::string graph_claim(const Graph& expected, const Graph& computed) {
  return expected == computed ? graph_str(expected) : graph_str(computed) + " (differs)";
}

inline IntPolynomial adjacency_poly(const FamilySpec& spec) { return monic(adjacency_char_poly(family_graph(spec))); }

inline std::string integral_str(bool integral) { return integral ? "integral" : "not integral"; }

// S_7 as displayed, and its reduction mod 2.
inline const std::vector<std::vector<std::int64_t>>& golden_s7() {
  static const std::vector<std::vector<std::int64_t>> m = {
      {0, 1, 1, 2, 3, 5, 8},          {1, 3, 4, 7, 11, 18, 29},       {1, 4, 5, 9, 14, 23, 37},
      {2, 7, 9, 16, 25, 41, 66},      {3, 11, 14, 25, 39, 64, 103},   {5, 18, 23, 41, 64, 105, 169},
      {8, 29, 37, 66, 103, 169, 272},
  };
  return m;
}
inline const std::vector<std::string>& golden_s7_mod2() {
  static const std::vector<std::string> m = {"0110110", "1101101", "1011011", "0110110",
                                             "1101101", "1011011", "0110110"};
  return m;
}

inline std::vector<CheckDefinition> build_registry() {
  std::vector<CheckDefinition> r;

  // ---- Fibonacci numbers ----
  r.push_back({"fib-gcd", "gcd(F_m, F_n) = F_gcd(m,n) for all 1 <= n <= n_max",
               [](std::int64_t t_max) {
                 auto out = range("m", 1, w_max(t_max));
                 for (auto& params : out) params["n_max"] = w_max(t_max);
                 return out;
               },
               [](const CheckParams& p) {
                 const std::int64_t m = p.at("m");
                 std::optional<std::string> bad;
                 for (std::int64_t n = 1; n <= p.at("n_max") && !bad; ++n) {
                   const auto g = std::gcd(m, n);
                   if (boost::multiprecision::gcd(fib(static_cast<std::size_t>(m)), fib(static_cast<std::size_t>(n))) !=
                       fib(static_cast<std::size_t>(g))) bad = "fails at n=" + std::to_string(n);
                 }
                 return holds("gcd identity holds", bad);
               }});
  r.push_back({"fib-parity", "F_n is even iff 3 divides n", [](std::int64_t t_max) { return range("n", 0, w_max(t_max)); },
               [](const CheckParams& p) {
                 const auto n = static_cast<std::size_t>(p.at("n"));
                 return equal(fib_is_even(n) ? "even" : "odd",
                              boost::multiprecision::bit_test(fib(n), 0) ? "odd" : "even");
               }});
  r.push_back({"cassini", "F_(n+1) F_(n-1) - F_n^2 = (-1)^n", [](std::int64_t t_max) { return range("n", 1, w_max(t_max)); },
               [](const CheckParams& p) {
                 const auto n = static_cast<std::size_t>(p.at("n"));
                 const BigInt value = fib(n + 1) * fib(n - 1) - fib(n) * fib(n);
                 return equal(n % 2 == 0 ? "1" : "-1", value.str());
               }});

  // ---- triangles ----
  r.push_back({"triangle-forms",
               "H(r,k) = F_(k+1)F_(r-k+2) - F_kF_(r-k+1) = F_(k-1)F_(r-k+2) + F_kF_(r-k) = value from the two "
               "row recurrences seeded by H(1,1)=0, H(2,1)=H(2,2)=1, H(3,2)=3",
               [](std::int64_t t_max) { return range("r", 1, w_max(t_max)); },
               [](const CheckParams& p) {
                 const std::int64_t rr = p.at("r");
                 const auto det = row(TriangleKind::DetHosoya, rr);
                 std::vector<BigInt> sum;
                 for (std::int64_t k = 1; k <= rr; ++k) sum.push_back(det_entry_sum_form({rr, k}));
                 const auto rec = recurrence_rows(rr).back();
                 std::string computed = list_str(sum);
                 if (rec != sum) computed += " vs recurrence " + list_str(rec);
                 return equal(list_str(det), computed);
               }});
  r.push_back({"triangle-symmetry", "H(r,k) = H(r,r-k+1) and HF(r,k) = HF(r,r-k+1)",
               [](std::int64_t t_max) { return range("r", 1, w_max(t_max)); },
               [](const CheckParams& p) {
                 const std::int64_t rr = p.at("r");
                 std::optional<std::string> bad;
                 for (std::int64_t k = 1; k <= rr && !bad; ++k) {
                   if (det_entry({rr, k}) != det_entry({rr, rr - k + 1}) ||
                       hosoya_entry({rr, k}) != hosoya_entry({rr, rr - k + 1}))
                     bad = "asymmetric at k=" + std::to_string(k);
                 }
                 return holds("row is symmetric", bad);
               }});
  r.push_back({"even-rows", "every entry of row 3m+1 of the determinant triangle is even",
               [](std::int64_t t_max) { return range("m", 1, t_max); },
               [](const CheckParams& p) {
                 const std::int64_t rr = 3 * p.at("m") + 1;
                 std::optional<std::string> bad;
                 for (std::int64_t k = 1; k <= rr && !bad; ++k)
                   if (boost::multiprecision::bit_test(det_entry({rr, k}), 0)) bad = "odd at k=" + std::to_string(k);
                 return holds("row " + std::to_string(rr) + " all even", bad);
               }});
  r.push_back({"divisibility", "F_gcd(k+1,r+2) and F_gcd(k,r+2) both divide H(r,k)",
               [](std::int64_t t_max) { return range("r", 1, w_max(t_max)); },
               [](const CheckParams& p) {
                 const std::int64_t rr = p.at("r");
                 std::optional<std::string> bad;
                 for (std::int64_t k = 1; k <= rr && !bad; ++k) {
                   const auto [a, b] = divisibility_witnesses({rr, k});
                   const BigInt h = det_entry({rr, k});
                   if (!divides(a, h) || !divides(b, h)) bad = "fails at k=" + std::to_string(k);
                 }
                 return holds("both witnesses divide every entry", bad);
               }});
  r.push_back({"genfunc", "(x+y+xy)/((1-x-x^2)(1-y-y^2)) has H(r,k) as coefficient of x^(k-1) y^(r-k)",
               [](std::int64_t t_max) { return std::vector<CheckParams>{{{"max_r", std::min<std::int64_t>(w_max(t_max), 64)}}}; },
               [](const CheckParams& p) {
                 const std::int64_t max_r = p.at("max_r");
                 const auto table = genfunc_table(max_r);
                 std::optional<std::string> bad;
                 for (std::int64_t rr = 1; rr <= max_r && !bad; ++rr)
                   if (table.row(rr) != row(TriangleKind::DetHosoya, rr)) bad = "row " + std::to_string(rr) + " differs";
                 return holds("series reproduces rows 1.." + std::to_string(max_r), bad);
               }});

  // ---- matrices ----
  r.push_back({"golden-s7", "S_7 and S_7 mod 2 equal the displayed 7x7 matrices",
               [](std::int64_t) { return std::vector<CheckParams>{{{"w", 7}}}; },
               [](const CheckParams&) {
                 std::string expected;
                 for (std::size_t i = 0; i < 7; ++i) {
                   if (i) expected += ";";
                   for (std::size_t j = 0; j < 7; ++j) expected += (j ? " " : "") + std::to_string(golden_s7()[i][j]);
                 }
                 std::string expected_bits;
                 for (std::size_t i = 0; i < 7; ++i) expected_bits += (i ? ";" : "") + golden_s7_mod2()[i];
                 const ExactMatrix s = build_S(7);
                 return equal(expected + " | " + expected_bits, matrix_str(s) + " | " + bits_str(mod2(s)));
               }});
  r.push_back({"s-rank", "rank S_w <= 2", w_domain(), [](const CheckParams& p) {
                 const auto rank = exact_rank(build_S(p.at("w")));
                 return holds("rank <= 2", rank <= 2 ? std::nullopt : std::optional<std::string>("rank " + std::to_string(rank)));
               }});
  r.push_back({"t-rank", "rank T_w = 1", w_domain(), [](const CheckParams& p) {
                 return equal("1", std::to_string(exact_rank(build_T(p.at("w")))));
               }});
  r.push_back({"rank-two-decomposition", "S_w = u1 v1^T + u2 v2^T with Fibonacci vectors", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 const ExactMatrix s = build_S(w);
                 const ExactMatrix rebuilt = rank2_vectors(w).reconstruct();
                 return equal(matrix_str(s), matrix_str(rebuilt));
               }});
  r.push_back({"s-mod2-law", "S_w(i,j) is even iff i+j = 2 (mod 3)", w_domain(), [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 BitMatrix law(static_cast<std::size_t>(w));
                 for (std::int64_t i = 1; i <= w; ++i)
                   for (std::int64_t j = 1; j <= w; ++j)
                     law.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), (i + j) % 3 != 2);
                 return equal(bits_str(law), bits_str(mod2(build_S(w))));
               }});
  r.push_back({"t-mod2-law", "T_w(i,j) is even iff 3 divides i or j", w_domain(), [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 BitMatrix law(static_cast<std::size_t>(w));
                 for (std::int64_t i = 1; i <= w; ++i)
                   for (std::int64_t j = 1; j <= w; ++j)
                     law.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), i % 3 != 0 && j % 3 != 0);
                 return equal(bits_str(law), bits_str(mod2(build_T(w))));
               }});
  r.push_back({"s-diagonal-rows", "row i of S_w is H(i,i), H(i+1,i), ..., H(w+i-1,i)",
               [](std::int64_t t_max) { return range("w", 3, std::min<std::int64_t>(w_max(t_max), 12)); },
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 ExactMatrix diag(static_cast<std::size_t>(w), static_cast<std::size_t>(w));
                 for (std::int64_t i = 1; i <= w; ++i)
                   for (std::int64_t j = 1; j <= w; ++j)
                     diag(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = det_entry({i + j - 1, i});
                 return equal(matrix_str(diag), matrix_str(build_S(w)));
               }});

  // ---- graphs ----
  r.push_back({"graph-structure", "the graph of S_w mod 2 is (K*_a ⊔ K*_b) ∇ K̄_c after grouping indices by residue mod 3",
               w_domain(), [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 return equal(graph_str(family_graph(FamilySpec::loops(w))),
                              graph_claim(family_graph(FamilySpec::loops(w)), graph_of_S(w)));
               }});
  r.push_back({"theta-structure", "the graph of T_w mod 2 is K*_(2t+r) ⊔ K̄_t", w_domain(), [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 return equal(graph_str(family_graph(FamilySpec::theta(w))),
                              graph_claim(family_graph(FamilySpec::theta(w)), graph_of_T(w)));
               }});
  r.push_back({"complement-structure", "the complement of (K_a ⊔ K_b) ∇ K̄_c is K_(a,b) ⊔ K_c", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 const Graph expected = family_graph(FamilySpec::complement_no_loops(w));
                 return equal(graph_str(expected),
                              graph_claim(expected, complement(family_graph(FamilySpec::no_loops(w)))));
               }});
  r.push_back({"theta-complement-structure", "the complement of K*_(2t+r) ⊔ K̄_t is K_t ∇ K̄_(w-t)", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 const Graph expected = family_graph(FamilySpec::theta_complement(w));
                 const Graph computed = complement(family_graph(FamilySpec::theta(w))).relabeled(theta_complement_relabel(w));
                 return equal(graph_str(expected), graph_claim(expected, computed));
               }});
  r.push_back({"regularity",
               "(K_a ⊔ K_b) ∇ K̄_c is 2t-regular for w = 3t+1; otherwise max and min degree differ by one "
               "(2t and 2t-1 for w = 3t, 2t+1 and 2t for w = 3t+2)",
               w_domain(), [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 const std::int64_t t = w / 3;
                 std::string expected;
                 switch (w % 3) {
                   case 1: expected = "regular degree " + std::to_string(2 * t); break;
                   case 0: expected = "almost regular max " + std::to_string(2 * t) + " min " + std::to_string(2 * t - 1); break;
                   default: expected = "almost regular max " + std::to_string(2 * t + 1) + " min " + std::to_string(2 * t);
                 }
                 const DegreeStats s = degree_stats(family_graph(FamilySpec::no_loops(w)));
                 std::string computed = s.is_regular ? "regular degree " + std::to_string(s.delta_max)
                                                     : (s.is_almost_regular ? "almost regular" : "irregular") +
                                                           std::string(" max ") + std::to_string(s.delta_max) +
                                                           " min " + std::to_string(s.delta_min);
                 return equal(expected, computed);
               }});
  r.push_back({"loop-placement",
               "in the looped family every minimum-degree vertex carries a loop; for w = 3t the loops are exactly "
               "those vertices; for w = 3t+1 there are 2t loops",
               w_domain(), [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 const std::int64_t t = w / 3;
                 const Graph g = family_graph(FamilySpec::loops(w));
                 const DegreeStats s = degree_stats(g);
                 std::set<std::size_t> minimum;
                 for (std::size_t v = 1; v <= g.vertex_count(); ++v)
                   if (g.degree(v) == s.delta_min) minimum.insert(v);
                 const auto looped_list = g.looped_vertices();
                 const std::set<std::size_t> looped(looped_list.begin(), looped_list.end());
                 switch (w % 3) {
                   case 1: return equal(std::to_string(2 * t) + " loops", std::to_string(looped.size()) + " loops");
                   case 0: return equal("loops at " + list_str(minimum), "loops at " + list_str(looped));
                   default: {
                     const bool covered = std::includes(looped.begin(), looped.end(), minimum.begin(), minimum.end());
                     return holds("minimum-degree vertices looped",
                                  covered ? std::nullopt : std::optional<std::string>("loops at " + list_str(looped)));
                   }
                 }
               }});
  r.push_back({"cograph", "every family graph and its complement has no induced P4", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 std::optional<std::string> bad;
                 for (const FamilySpec& spec : {FamilySpec::no_loops(w), FamilySpec::loops(w), FamilySpec::theta(w),
                                                FamilySpec::complement_no_loops(w), FamilySpec::theta_complement(w)}) {
                   if (!bad && !is_cograph(family_graph(spec))) bad = to_string(spec) + " has an induced P4";
                 }
                 return holds("all P4-free", bad);
               }});
  r.push_back({"royle-rank",
               "the adjacency rank of (K_a ⊔ K_b) ∇ K̄_c equals its number of distinct non-zero rows, "
               "2t+1, 2t+1, 2(t+1) for w = 3t, 3t+1, 3t+2",
               [](std::int64_t t_max) { return range("w", 3, w_max(std::min<std::int64_t>(t_max, 10))); },
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 const std::int64_t t = w / 3;
                 const std::int64_t claimed = w % 3 == 2 ? 2 * (t + 1) : 2 * t + 1;
                 const Graph g = family_graph(FamilySpec::no_loops(w));
                 const auto rows = distinct_nonzero_rows(g);
                 const auto rank = exact_rank(g.adjacency_matrix());
                 return equal("rows " + std::to_string(claimed) + " rank " + std::to_string(claimed),
                              "rows " + std::to_string(rows) + " rank " + std::to_string(rank));
               }});

  // ---- spectra ----
  r.push_back({"basic-polys",
               "char polys of K_n, K_(n,n), K̄_n, K_n ⊔ K_(n+1): (x-(n-1))(x+1)^(n-1), x^(2n-2)(x^2-n^2), x^n, "
               "(x-n)(x-(n-1))(x+1)^(2n-1)",
               [](std::int64_t t_max) { return range("n", 1, w_max(t_max) / 2); },
               [](const CheckParams& p) {
                 const std::int64_t n = p.at("n");
                 const auto un = static_cast<std::size_t>(n);
                 const std::string expected =
                     poly_str(basic_char_poly(CompleteKind{n})) + poly_str(basic_char_poly(CompleteBipartiteKind{n, n})) +
                     poly_str(basic_char_poly(EmptyKind{n})) + poly_str(basic_char_poly(TwoCliquesKind{n, n + 1}));
                 const std::string computed =
                     poly_str(adjacency_char_poly(Graph::complete(un))) +
                     poly_str(adjacency_char_poly(Graph::complete_bipartite(un, un))) +
                     poly_str(adjacency_char_poly(Graph::empty(un))) +
                     poly_str(adjacency_char_poly(disjoint_union(Graph::complete(un), Graph::complete(un + 1))));
                 return equal(expected, computed);
               }});
  r.push_back({"corollary1-polys",
               "char poly of (K_a ⊔ K_b) ∇ K̄_c: x^t(x-2t)((x+1)^2-t^2)(x+1)^(2t-2) for w=3t+1; "
               "x^(t-1)(x+1)^(2t-2)(x-(t-1))(x^2-(t-1)x-2t^2) for w=3t; "
               "x^t(x+1)^(2t-1)(x^3+(1-2t)x^2-(t^2+4t+1)x+(2t^2-1)(t+1)) for w=3t+2",
               w_domain(), [](const CheckParams& p) {
                 const auto spec = FamilySpec::no_loops(p.at("w"));
                 return equal(poly_str(expected_poly(spec)), poly_str(adjacency_poly(spec)));
               }});
  r.push_back({"loops-polys",
               "char poly of (K*_a ⊔ K*_b) ∇ K̄_c: x^(3t-3)(x-2t)(x^2-t^2) for w=3t; "
               "x^(3t-2)(x-t)(x^2-tx-2t(t+1)) for w=3t+1; x^(3t-1)(x^3-(2t+1)x^2-(t+1)^2x+2t(t+1)^2) for w=3t+2",
               w_domain(), [](const CheckParams& p) {
                 const auto spec = FamilySpec::loops(p.at("w"));
                 return equal(poly_str(expected_poly(spec)), poly_str(adjacency_poly(spec)));
               }});
  r.push_back({"zhang-loops",
               "the join formula with J - A blocks reproduces the char poly of (K*_a ⊔ K*_b) ∇ K̄_c", w_domain(),
               [](const CheckParams& p) {
                 const auto spec = FamilySpec::loops(p.at("w"));
                 const BlockSizes b = family_blocks(spec);
                 const Graph cliques = disjoint_union(Graph::complete(b.u, true), Graph::complete(b.v, true));
                 const IntPolynomial zhang =
                     zhang_join_char_poly(cliques.adjacency_matrix(), Graph::empty(b.z).adjacency_matrix());
                 return equal(poly_str(adjacency_poly(spec)), poly_str(zhang));
               }});
  r.push_back({"laplacian-polys",
               "Laplacian char poly of (K_a ⊔ K_b) ∇ K̄_c: x(x-t)(x-3t)(x-2t)^(3t-3) for w=3t; "
               "x(x-(t+1))(x-(3t+1))(x-2t)^t(x-(2t+1))^(2t-2) for w=3t+1; "
               "x(x-(t+1))(x-(3t+2))(x-2(t+1))^t(x-(2t+1))^(2t-1) for w=3t+2",
               w_domain(), [](const CheckParams& p) {
                 const auto spec = FamilySpec::no_loops(p.at("w"));
                 return equal(poly_str(expected_poly(spec, SpectrumKind::Laplacian)),
                              poly_str(monic(laplacian_char_poly(family_graph(spec)))));
               }});
  r.push_back({"laplacian-integral", "every loopless family graph is Laplacian integral (cographs)", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 std::optional<std::string> bad;
                 for (const FamilySpec& spec : {FamilySpec::no_loops(w), FamilySpec::complement_no_loops(w),
                                                FamilySpec::theta_complement(w)}) {
                   if (!bad && !is_integral(laplacian_char_poly(family_graph(spec)))) bad = to_string(spec) + " not integral";
                 }
                 return holds("Laplacian integral", bad);
               }});
  r.push_back({"laplacian-trace", "the Laplacian eigenvalues of a loopless graph sum to its degree sum",
               [](std::int64_t t_max) {
                 // kind 0..4 indexes the five w-families; looped ones are outside the domain
                 std::vector<CheckParams> out;
                 for (std::int64_t w = 3; w <= w_max(t_max); ++w)
                   for (std::int64_t kind = 0; kind < 5; ++kind) out.push_back({{"w", w}, {"kind", kind}});
                 return out;
               },
               [](const CheckParams& p) {
                 static const FamilyKind kinds[] = {FamilyKind::NoLoops, FamilyKind::Loops, FamilyKind::Theta,
                                                    FamilyKind::ThetaComplement, FamilyKind::ComplementNoLoops};
                 const FamilySpec spec{kinds[p.at("kind")], p.at("w")};
                 if (spec.has_loops()) return Outcome::skip(to_string(spec) + " has loops");
                 const Graph g = family_graph(spec);
                 BigInt degree_sum = 0;
                 for (std::size_t v = 1; v <= g.vertex_count(); ++v) degree_sum += g.degree(v);
                 const auto roots = extract_integer_roots(laplacian_char_poly(g));
                 BigInt root_sum = 0;
                 for (const auto& root : roots.integer_roots) root_sum += root;
                 // sum of all roots from the trace coefficient, independent of extraction
                 const IntPolynomial lp = laplacian_char_poly(g);
                 const BigInt trace = -lp.coefficient(static_cast<std::size_t>(lp.degree() - 1));
                 std::string computed = trace.str();
                 if (roots.remainder.degree() == 0 && root_sum != trace) computed += " vs roots " + root_sum.str();
                 return equal(degree_sum.str(), computed);
               }});
  r.push_back({"complement-polys",
               "char poly of K_(a,b) ⊔ K_c: x^(2t-2)(x^2-t^2)(x-(t-1))(x+1)^(t-1) for w=3t; "
               "x^(2t-2)(x-t)^2(x+t)(x+1)^t for w=3t+1; x^(2t-1)(x-t)(x+1)^t(x^2-t(t+1)) for w=3t+2",
               w_domain(), [](const CheckParams& p) {
                 const auto spec = FamilySpec::complement_no_loops(p.at("w"));
                 return equal(poly_str(expected_poly(spec)), poly_str(adjacency_poly(spec)));
               }});
  r.push_back({"theta-polys", "char poly of K*_(2t+r) ⊔ K̄_t is x^(w-1)(x-(2t+r))", w_domain(),
               [](const CheckParams& p) {
                 const auto spec = FamilySpec::theta(p.at("w"));
                 return equal(poly_str(expected_poly(spec)), poly_str(adjacency_poly(spec)));
               }});
  r.push_back({"theta-complement-polys", "char poly of K_n ∇ K̄_r is x^(r-1)(x+1)^(n-1)(x^2-(n-1)x-nr), n=t, r=w-t",
               w_domain(), [](const CheckParams& p) {
                 const auto spec = FamilySpec::theta_complement(p.at("w"));
                 return equal(poly_str(expected_poly(spec)), poly_str(adjacency_poly(spec)));
               }});
  r.push_back({"integrality-noloops", "(K_a ⊔ K_b) ∇ K̄_c is integral iff w = 1 (mod 3)", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 return equal(integral_str(w % 3 == 1), integral_str(is_integral(adjacency_poly(FamilySpec::no_loops(w)))));
               }});
  r.push_back({"integrality-loops", "(K*_a ⊔ K*_b) ∇ K̄_c is integral iff w = 0 (mod 3)", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 return equal(integral_str(w % 3 == 0), integral_str(is_integral(adjacency_poly(FamilySpec::loops(w)))));
               }});
  r.push_back({"integrality-theta", "K*_(2t+r) ⊔ K̄_t is always integral", w_domain(), [](const CheckParams& p) {
                 return equal(integral_str(true), integral_str(is_integral(adjacency_poly(FamilySpec::theta(p.at("w"))))));
               }});
  r.push_back({"integrality-theta-complement", "K_t ∇ K̄_(w-t) is integral iff w = 2 (mod 3)", w_domain(),
               [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 return equal(integral_str(w % 3 == 2),
                              integral_str(is_integral(adjacency_poly(FamilySpec::theta_complement(w)))));
               }});
  r.push_back({"criterion-coherence",
               "(K_n ⊔ K_n) ∇ K̄_r is integral iff 2nr = pq, n-1 = p-q for positive p, q iff "
               "(n-1)^2 + 8nr is a perfect square",
               [](std::int64_t t_max) {
                 std::vector<CheckParams> out;
                 for (std::int64_t n = 1; n <= t_max + 2; ++n)
                   for (std::int64_t rr = 1; rr <= t_max + 2; ++rr) out.push_back({{"n", n}, {"r", rr}});
                 return out;
               },
               [](const CheckParams& p) {
                 const std::int64_t n = p.at("n");
                 const std::int64_t rr = p.at("r");
                 const bool witness = integrality_condition(n, rr).has_value();
                 const bool square = perfect_square_criterion(n - 1, 0, 2 * n, rr);
                 const bool integral = is_integral(adjacency_poly(FamilySpec::join(n, n, rr)));
                 const std::string expected = witness ? "integral" : "not integral";
                 std::string computed = integral_str(integral);
                 if (square != witness) computed += " (square test disagrees)";
                 return equal(expected, computed);
               }});
  r.push_back({"join-polys",
               "char poly of (K_n ⊔ K_m) ∇ K̄_r is x^(r-1)(x+1)^(m+n-2)[x^3-(m+n-2)x^2-((m+n)(r+1)-mn-1)x-r(m+n-2mn)]",
               [](std::int64_t t_max) {
                 std::vector<CheckParams> out;
                 const std::int64_t hi = std::min<std::int64_t>(t_max + 1, 5);
                 for (std::int64_t n = 1; n <= hi; ++n)
                   for (std::int64_t m = 1; m <= hi; ++m)
                     for (std::int64_t rr = 1; rr <= hi; ++rr) out.push_back({{"n", n}, {"m", m}, {"r", rr}});
                 return out;
               },
               [](const CheckParams& p) {
                 const auto spec = FamilySpec::join(p.at("n"), p.at("m"), p.at("r"));
                 return equal(poly_str(expected_poly(spec)), poly_str(adjacency_poly(spec)));
               }});
  r.push_back({"join-constant-renderings", "-((m+n)r - 2mnr) = -r(m+n-2mn) for all m, r <= 10",
               [](std::int64_t) { return range("n", 1, 10); },
               [](const CheckParams& p) {
                 const std::int64_t n = p.at("n");
                 std::optional<std::string> bad;
                 for (std::int64_t m = 1; m <= 10 && !bad; ++m)
                   for (std::int64_t rr = 1; rr <= 10 && !bad; ++rr)
                     if (closed_form::two_cliques_join_constant_expanded(n, m, rr) !=
                         closed_form::two_cliques_join_constant_factored(n, m, rr))
                       bad = "differs at m=" + std::to_string(m) + " r=" + std::to_string(rr);
                 return holds("renderings agree", bad);
               }});
  r.push_back({"lemma-polys",
               "x^2+(1-t)x-2t^2, x^3+(1-2t)x^2-(t^2+4t+1)x+(2t^2-1)(t+1), x^2-tx-2t(t+1), "
               "x^3-(2t+1)x^2-(t+1)^2x+2t(t+1)^2 have no integer roots",
               t_domain(), [](const CheckParams& p) {
                 std::vector<std::size_t> counts;
                 for (const auto& poly : lemma_polynomials(p.at("t")))
                   counts.push_back(extract_integer_roots(poly).integer_roots.size());
                 return equal("integer roots [0,0,0,0]", "integer roots " + list_str(counts));
               }});
  r.push_back({"energy", "the energy of (K_t ⊔ K_t) ∇ K̄_(t+1) is 6t-2", t_domain(), [](const CheckParams& p) {
                 const std::int64_t t = p.at("t");
                 return equal(std::to_string(6 * t - 2),
                              energy_integral(adjacency_poly(FamilySpec::no_loops(3 * t + 1))).str());
               }});
  r.push_back({"distinct-eigenvalues", "every family graph and complement has at most five distinct eigenvalues",
               w_domain(), [](const CheckParams& p) {
                 const std::int64_t w = p.at("w");
                 std::optional<std::string> bad;
                 for (const FamilySpec& spec : {FamilySpec::no_loops(w), FamilySpec::loops(w), FamilySpec::theta(w),
                                                FamilySpec::complement_no_loops(w), FamilySpec::theta_complement(w)}) {
                   const auto count = distinct_root_count(adjacency_poly(spec));
                   if (!bad && count > 5) bad = to_string(spec) + " has " + std::to_string(count);
                 }
                 return holds("at most 5", bad);
               }});
  r.push_back({"complement-four-eigenvalues", "K_(t,t) ⊔ K_(t+1) has exactly four distinct eigenvalues", t_domain(),
               [](const CheckParams& p) {
                 const auto spec = FamilySpec::complement_no_loops(3 * p.at("t") + 1);
                 return equal("4", std::to_string(distinct_root_count(adjacency_poly(spec))));
               }});
  r.push_back({"eq8-join", "the complement-based join formula reproduces the char poly of (K_a ⊔ K_b) ∇ K̄_c",
               w_domain(), [](const CheckParams& p) {
                 const auto spec = FamilySpec::no_loops(p.at("w"));
                 const BlockSizes b = family_blocks(spec);
                 const Graph g1 = disjoint_union(Graph::complete(b.u), Graph::complete(b.v));
                 const Graph g2 = Graph::empty(b.z);
                 const IntPolynomial via_formula =
                     join_char_poly(adjacency_char_poly(g1), adjacency_char_poly(g2), adjacency_char_poly(complement(g1)),
                                    adjacency_char_poly(complement(g2)), static_cast<std::int64_t>(g1.vertex_count()),
                                    static_cast<std::int64_t>(g2.vertex_count()));
                 return equal(poly_str(adjacency_poly(spec)), poly_str(via_formula));
               }});
  r.push_back({"regular-join",
               "for r1-, r2-regular G1, G2: P(G1 ∇ G2) = P1 P2 ((x-r1)(x-r2) - n1n2) / ((x-r1)(x-r2))", w_domain(),
               [](const CheckParams& p) {
                 const auto spec = FamilySpec::no_loops(p.at("w"));
                 const BlockSizes b = family_blocks(spec);
                 if (b.u != b.v) return Outcome::skip("K_a ⊔ K_b is not regular");
                 const Graph g1 = disjoint_union(Graph::complete(b.u), Graph::complete(b.v));
                 const IntPolynomial via_formula = regular_join_char_poly(
                     adjacency_char_poly(g1), adjacency_char_poly(Graph::empty(b.z)), static_cast<std::int64_t>(b.u) - 1, 0,
                     static_cast<std::int64_t>(g1.vertex_count()), static_cast<std::int64_t>(b.z));
                 return equal(poly_str(adjacency_poly(spec)), poly_str(via_formula));
               }});
  return r;
}

}  // namespace verify_detail

inline const std::vector<CheckDefinition>& check_registry() {
  static const std::vector<CheckDefinition> registry = verify_detail::build_registry();
  return registry;
}

inline std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& c : check_registry()) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  return names;
}

/// Canonical JSON of the report body; field order is alphabetical.
inline nlohmann::json report_body_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"params", c.params},
                      {"status", status_name(c.status)},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"paper_ref", c.paper_ref}});
  }
  return {{"t_range", {report.t_min, report.t_max}},
          {"checks", checks},
          {"summary", {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skipped", report.summary.skipped}}}};
}

/// FNV-1a 64 of the canonical report body, as 16 hex digits.
inline std::string report_digest(const VerificationReport& report) {
  const std::string text = report_body_json(report).dump();
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

inline nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json j = report_body_json(report);
  j["digest"] = report.digest;
  j["toolkit_version"] = report.toolkit_version;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string report_csv(const VerificationReport& report) {
  std::string out = "name,params,status,expected,computed,paper_ref\n";
  for (const auto& c : report.checks) {
    std::string params;
    for (const auto& [k, v] : c.params) params += (params.empty() ? "" : ";") + k + "=" + std::to_string(v);
    out += csv_field(c.name) + "," + csv_field(params) + "," + status_name(c.status) + "," + csv_field(c.expected) + "," +
           csv_field(c.computed) + "," + csv_field(c.paper_ref) + "\n";
  }
  return out;
}

/**
 * Run the selected checks (all when `selection` is empty) for 1 <= t <= t_max.
 * threads = 0 picks the hardware concurrency. Failures are recorded, never
 * thrown; the result does not depend on the thread count.
 */
inline VerificationReport run_suite(std::int64_t t_max, const std::vector<std::string>& selection = {},
                                    unsigned threads = 0) {
  if (t_max < 1 || t_max > kMaxTMax) {
    throw DomainError("t_max must lie in [1, " + std::to_string(kMaxTMax) + "], got " + std::to_string(t_max));
  }
  const auto& registry = check_registry();
  std::vector<const CheckDefinition*> chosen;
  if (selection.empty()) {
    for (const auto& c : registry) chosen.push_back(&c);
  } else {
    for (const auto& name : selection) {
      auto it = std::find_if(registry.begin(), registry.end(), [&](const CheckDefinition& c) { return c.name == name; });
      if (it == registry.end()) {
        std::string valid;
        for (const auto& n : check_names()) valid += (valid.empty() ? "" : ", ") + n;
        throw DomainError("unknown check '" + name + "'; valid checks: " + valid);
      }
      if (std::find(chosen.begin(), chosen.end(), &*it) == chosen.end()) chosen.push_back(&*it);
    }
  }

  struct Job {
    const CheckDefinition* def;
    CheckParams params;
  };
  std::vector<Job> jobs;
  for (const auto* def : chosen)
    for (auto& params : def->domain(t_max)) jobs.push_back({def, std::move(params)});

  std::vector<ClaimCheck> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      ClaimCheck& out = results[i];
      out.name = job.def->name;
      out.params = job.params;
      out.paper_ref = job.def->statement;
      try {
        const Outcome o = job.def->evaluate(job.params);
        out.expected = o.expected;
        out.computed = o.computed;
        out.status = o.skipped ? CheckStatus::Skipped : (o.expected == o.computed ? CheckStatus::Pass : CheckStatus::Fail);
      } catch (const std::exception& e) {
        out.expected = out.expected.empty() ? "no error" : out.expected;
        out.computed = std::string("error: ") + e.what();
        out.status = CheckStatus::Fail;
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(results.begin(), results.end(), [](const ClaimCheck& a, const ClaimCheck& b) {
    return std::tie(a.name, a.params) < std::tie(b.name, b.params);
  });

  VerificationReport report;
  report.t_max = t_max;
  report.checks = std::move(results);
  for (const auto& c : report.checks) {
    switch (c.status) {
      case CheckStatus::Pass: ++report.summary.pass; break;
      case CheckStatus::Fail: ++report.summary.fail; break;
      case CheckStatus::Skipped: ++report.summary.skipped; break;
    }
  }
  report.digest = report_digest(report);
  return report;
}

}  // namespace hosoya
