#include <gtest/gtest.h>

#include <random>

#include "hosoya/closed_forms.hpp"
#include "hosoya/families.hpp"
#include "hosoya/spectra.hpp"
#include "oracles.hpp"

using namespace hosoya;

namespace {

IntPolynomial P(std::initializer_list<BigInt> c) { return IntPolynomial(c); }

IntPolynomial roots_poly(std::initializer_list<int> roots) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int r : roots) p *= IntPolynomial::linear(r);
  return p;
}

IntPolynomial family_poly(const FamilySpec& spec) { return monic(adjacency_char_poly(family_graph(spec))); }

std::vector<BigInt> ints(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST(CharPoly, SmallExamples) {
  EXPECT_EQ(adjacency_char_poly(Graph::complete(2)), P({-1, 0, 1}));
  EXPECT_EQ(char_poly(ExactMatrix(1, 1)), IntPolynomial::x());
  EXPECT_EQ(adjacency_char_poly(family_graph(FamilySpec::no_loops(4))), roots_poly({0, 0, 2, -2}));
  EXPECT_THROW(char_poly(ExactMatrix(2, 3)), DomainError);
}

TEST(CharPoly, AgreesWithCofactorOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Graph g = oracle::random_graph(rng, n, trial % 3 == 0);
    EXPECT_EQ(adjacency_char_poly(g), oracle::cofactor_char_poly(g.adjacency_matrix())) << "trial " << trial;
    if (!g.has_loops()) {
      EXPECT_EQ(laplacian_char_poly(g), oracle::cofactor_char_poly(laplacian_matrix(g))) << "trial " << trial;
    }
  }
  // integer matrices beyond 0/1
  std::uniform_int_distribution<int> value(-5, 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = value(rng);
    EXPECT_EQ(char_poly(m), oracle::cofactor_char_poly(m));
  }
  for (int w = 3; w <= 8; ++w)
    for (const auto& spec : {FamilySpec::no_loops(w), FamilySpec::loops(w), FamilySpec::theta(w)}) {
      const Graph g = family_graph(spec);
      EXPECT_EQ(adjacency_char_poly(g), oracle::cofactor_char_poly(g.adjacency_matrix())) << to_string(spec);
    }
}

TEST(Laplacian, Matrix) {
  EXPECT_EQ(laplacian_matrix(Graph::complete(2)), ExactMatrix::from_rows({{1, -1}, {-1, 1}}));
  EXPECT_EQ(laplacian_matrix(Graph::empty(3)), ExactMatrix(3, 3));
  EXPECT_THROW(laplacian_matrix(Graph::complete(2, true)), DomainError);
  EXPECT_EQ(laplacian_char_poly(family_graph(FamilySpec::no_loops(4))), roots_poly({0, 2, 2, 4}));
}

TEST(Laplacian, TraceEqualsDegreeSum) {
  for (int w = 3; w <= 40; ++w)
    for (const auto& spec : {FamilySpec::no_loops(w), FamilySpec::complement_no_loops(w), FamilySpec::theta_complement(w)}) {
      const Graph g = family_graph(spec);
      const IntPolynomial lp = laplacian_char_poly(g);
      EXPECT_EQ(-lp.coefficient(lp.degree() - 1), 2 * BigInt(g.edge_count())) << to_string(spec);
      const auto roots = extract_integer_roots(lp);
      ASSERT_EQ(roots.remainder, P({1})) << to_string(spec);
      BigInt sum = 0;
      for (const auto& r : roots.integer_roots) sum += r;
      EXPECT_EQ(sum, 2 * BigInt(g.edge_count()));
    }
}

TEST(Roots, Extraction) {
  const auto a = extract_integer_roots(roots_poly({0, 0, 2, -2}));
  EXPECT_EQ(a.integer_roots, ints({2, 0, 0, -2}));
  EXPECT_EQ(a.remainder, P({1}));

  const auto b = extract_integer_roots(P({-2, 0, 1}));
  EXPECT_TRUE(b.integer_roots.empty());
  EXPECT_EQ(b.remainder, P({-2, 0, 1}));

  const auto c = extract_integer_roots(P({2, -6, -1, 1}));
  EXPECT_TRUE(c.integer_roots.empty());
  EXPECT_THROW(extract_integer_roots(IntPolynomial{}), DomainError);
}

TEST(Roots, ProductReconstructsInput) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < trial % 5; ++i) p *= IntPolynomial::linear(root(rng));
    // an irreducible-ish quadratic factor half the time
    if (trial % 2) p *= P({coeff(rng) * 2 + 1, coeff(rng), 1});
    const auto e = extract_integer_roots(p);
    IntPolynomial rebuilt = e.remainder;
    for (const auto& r : e.integer_roots) rebuilt *= IntPolynomial::linear(r);
    EXPECT_EQ(rebuilt, p) << to_string(p);
    EXPECT_TRUE(oracle::brute_integer_roots(e.remainder).empty()) << to_string(p);
    auto sorted = oracle::brute_integer_roots(p);
    std::sort(sorted.rbegin(), sorted.rend());
    EXPECT_EQ(e.integer_roots, sorted) << to_string(p);
  }
}

TEST(Roots, LargeConstantTerms) {
  // Laplacian constants grow quickly; the search must stay bounded
  const IntPolynomial p = roots_poly({90, 90, 89, 45, 3, 1}) * P({-2, 0, 1});
  const auto e = extract_integer_roots(p);
  EXPECT_EQ(e.integer_roots, ints({90, 90, 89, 45, 3, 1}));
  EXPECT_EQ(e.remainder, P({-2, 0, 1}));
}

TEST(Integrality, Examples) {
  EXPECT_TRUE(is_integral(family_poly(FamilySpec::no_loops(7))));
  EXPECT_FALSE(is_integral(family_poly(FamilySpec::no_loops(6))));
  EXPECT_TRUE(is_integral(IntPolynomial::x()));
}

TEST(Integrality, ResidueSweeps) {
  for (int w = 3; w <= 40; ++w) {
    EXPECT_EQ(is_integral(family_poly(FamilySpec::no_loops(w))), w % 3 == 1) << w;
    EXPECT_EQ(is_integral(family_poly(FamilySpec::loops(w))), w % 3 == 0) << w;
    EXPECT_EQ(is_integral(family_poly(FamilySpec::theta_complement(w))), w % 3 == 2) << w;
    EXPECT_TRUE(is_integral(family_poly(FamilySpec::theta(w)))) << w;
  }
}

TEST(DistinctRoots, Examples) {
  EXPECT_EQ(distinct_root_count(family_poly(FamilySpec::no_loops(7))), 5U);
  EXPECT_EQ(distinct_root_count(family_poly(FamilySpec::complement_no_loops(7))), 4U);
  EXPECT_EQ(distinct_root_count(pow(IntPolynomial::linear(1), 3)), 1U);
  EXPECT_THROW(distinct_root_count(IntPolynomial{}), DomainError);
}

TEST(DistinctRoots, AtMostFiveAcrossFamilies) {
  for (int w = 3; w <= 40; ++w)
    for (const auto& spec : {FamilySpec::no_loops(w), FamilySpec::loops(w), FamilySpec::theta(w),
                             FamilySpec::complement_no_loops(w), FamilySpec::theta_complement(w)})
      EXPECT_LE(distinct_root_count(family_poly(spec)), 5U) << to_string(spec);
}

TEST(DistinctRoots, ComplementOfRegularFamily) {
  // 2K_2 at t = 1 has spectrum {1, -1}; from t = 2 on there are four values
  EXPECT_EQ(distinct_root_count(family_poly(FamilySpec::complement_no_loops(4))), 2U);
  for (int t = 2; t <= 13; ++t)
    EXPECT_EQ(distinct_root_count(family_poly(FamilySpec::complement_no_loops(3 * t + 1))), 4U) << t;
}

TEST(Energy, RegularFamily) {
  EXPECT_EQ(energy_integral(family_poly(FamilySpec::no_loops(7))), 10);
  EXPECT_EQ(energy_integral(family_poly(FamilySpec::no_loops(4))), 4);
  EXPECT_EQ(energy_integral(IntPolynomial::monomial(5)), 0);
  for (int t = 1; t <= 13; ++t) EXPECT_EQ(energy_integral(family_poly(FamilySpec::no_loops(3 * t + 1))), 6 * t - 2);
  EXPECT_THROW(energy_integral(P({-2, 0, 1})), DomainError);
}

TEST(JoinFormulas, ComplementBased) {
  const auto via = [](const Graph& g1, const Graph& g2) {
    return join_char_poly(adjacency_char_poly(g1), adjacency_char_poly(g2), adjacency_char_poly(complement(g1)),
                          adjacency_char_poly(complement(g2)), static_cast<std::int64_t>(g1.vertex_count()),
                          static_cast<std::int64_t>(g2.vertex_count()));
  };
  const Graph two_k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
  EXPECT_EQ(via(two_k2, Graph::empty(3)), family_poly(FamilySpec::no_loops(7)));
  EXPECT_EQ(via(Graph::empty(1), Graph::empty(1)), P({-1, 0, 1}));
  EXPECT_EQ(via(disjoint_union(Graph::complete(1), Graph::complete(2)), Graph::empty(1)),
            P({1, 1}) * P({1, -3, -1, 1}));
  EXPECT_THROW(join_char_poly(P({0, 1}), P({0, 1}), P({0, 1}), P({0, 1}), 2, 1), DomainError);
}

TEST(JoinFormulas, RegularGraphs) {
  const IntPolynomial two_k2 = adjacency_char_poly(disjoint_union(Graph::complete(2), Graph::complete(2)));
  EXPECT_EQ(regular_join_char_poly(two_k2, IntPolynomial::monomial(3), 1, 0, 4, 3),
            family_poly(FamilySpec::no_loops(7)));
  EXPECT_EQ(regular_join_char_poly(IntPolynomial::x(), IntPolynomial::x(), 0, 0, 1, 1), P({-1, 0, 1}));
  EXPECT_EQ(regular_join_char_poly(adjacency_char_poly(Graph::complete(3)), IntPolynomial::monomial(2), 2, 0, 3, 2),
            monic(adjacency_char_poly(join(Graph::complete(3), Graph::empty(2)))));
  // K_3 is not 1-regular
  EXPECT_THROW(regular_join_char_poly(adjacency_char_poly(Graph::complete(3)), IntPolynomial::x(), 1, 0, 3, 1),
               DomainError);
}

TEST(JoinFormulas, ComplementMatrixBasedHandlesLoops) {
  const Graph loops2 = disjoint_union(Graph::complete(2, true), Graph::complete(2, true));
  EXPECT_EQ(zhang_join_char_poly(loops2.adjacency_matrix(), Graph::empty(3).adjacency_matrix()),
            IntPolynomial::monomial(4) * IntPolynomial::linear(2) * P({-12, -2, 1}));
  EXPECT_EQ(zhang_join_char_poly(ExactMatrix(1, 1), ExactMatrix(1, 1)), P({-1, 0, 1}));
  EXPECT_EQ(zhang_join_char_poly(loops2.adjacency_matrix(), Graph::empty(2).adjacency_matrix()),
            IntPolynomial::monomial(3) * IntPolynomial::linear(4) * P({-4, 0, 1}));
}

TEST(JoinFormulas, RandomisedAgainstDirectComputation) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n1 = 1 + trial % 4;
    const std::size_t n2 = 1 + (trial / 4) % 4;
    const Graph g1 = oracle::random_graph(rng, n1, false);
    const Graph g2 = oracle::random_graph(rng, n2, false);
    const IntPolynomial direct = monic(adjacency_char_poly(join(g1, g2)));
    EXPECT_EQ(join_char_poly(adjacency_char_poly(g1), adjacency_char_poly(g2), adjacency_char_poly(complement(g1)),
                             adjacency_char_poly(complement(g2)), static_cast<std::int64_t>(n1),
                             static_cast<std::int64_t>(n2)),
              direct);
    EXPECT_EQ(zhang_join_char_poly(g1.adjacency_matrix(), g2.adjacency_matrix()), direct);

    const Graph l1 = oracle::random_graph(rng, n1, true);
    const Graph l2 = oracle::random_graph(rng, n2, true);
    EXPECT_EQ(zhang_join_char_poly(l1.adjacency_matrix(), l2.adjacency_matrix()),
              monic(char_poly(join_adjacency(l1.adjacency_matrix(), l2.adjacency_matrix()))));

    // regular pieces: unions of equal cliques
    const std::size_t k = 1 + trial % 3;
    const Graph r1 = disjoint_union(Graph::complete(k), Graph::complete(k));
    const Graph r2 = Graph::complete(1 + trial % 2);
    EXPECT_EQ(regular_join_char_poly(adjacency_char_poly(r1), adjacency_char_poly(r2), static_cast<std::int64_t>(k) - 1,
                                     static_cast<std::int64_t>(r2.vertex_count()) - 1,
                                     static_cast<std::int64_t>(2 * k), static_cast<std::int64_t>(r2.vertex_count())),
              monic(adjacency_char_poly(join(r1, r2))));
  }
}

TEST(Criteria, PerfectSquare) {
  EXPECT_TRUE(perfect_square_criterion(1, 0, 4, 3));
  EXPECT_FALSE(perfect_square_criterion(1, 0, 4, 2));
  EXPECT_TRUE(perfect_square_criterion(0, 0, 1, 1));
}

TEST(Criteria, IntegralityWitness) {
  EXPECT_EQ(integrality_condition(2, 3), (IntegralityWitness{4, 3}));
  EXPECT_FALSE(integrality_condition(2, 2).has_value());
  EXPECT_EQ(integrality_discriminant(2, 2), 33);
  EXPECT_EQ(integrality_condition(1, 2), (IntegralityWitness{2, 2}));
  EXPECT_THROW(integrality_condition(0, 1), DomainError);
  EXPECT_THROW(integrality_condition(1, 0), DomainError);
}

TEST(Criteria, WitnessInvariants) {
  for (int n = 1; n <= 30; ++n)
    for (int r = 1; r <= 30; ++r)
      if (const auto w = integrality_condition(n, r)) {
        EXPECT_EQ(w->p * w->q, 2 * n * r);
        EXPECT_EQ(w->p - w->q, n - 1);
        EXPECT_GT(w->q, 0);
      }
}

TEST(Criteria, CoherentWithDirectSpectrum) {
  for (int n = 1; n <= 15; ++n)
    for (int r = 1; r <= 15; ++r) {
      const bool witness = integrality_condition(n, r).has_value();
      EXPECT_EQ(witness, perfect_square_criterion(n - 1, 0, 2 * n, r)) << n << "," << r;
      EXPECT_EQ(witness, is_integral(family_poly(FamilySpec::join(n, n, r)))) << n << "," << r;
    }
}
