#include <gtest/gtest.h>

#include "hosoya/families.hpp"
#include "hosoya/graph.hpp"
#include "oracles.hpp"

using namespace hosoya;

namespace {
Graph path4() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}); }
}  // namespace

TEST(Graph, AtomicGraphs) {
  const Graph k2 = Graph::complete(2);
  EXPECT_EQ(k2.edge_count(), 1U);
  EXPECT_FALSE(k2.has_loops());
  const Graph k1 = Graph::complete(1, true);
  EXPECT_TRUE(k1.has_loop(1));
  EXPECT_EQ(k1.edge_count(), 0U);
  const Graph e3 = Graph::empty(3);
  EXPECT_EQ(e3.edge_count(), 0U);
  EXPECT_EQ(e3.loop_count(), 0U);
  EXPECT_THROW(Graph::complete(0), DomainError);
  EXPECT_THROW(Graph::empty(0), DomainError);
}

TEST(Graph, UnionAndJoin) {
  const Graph two_k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
  EXPECT_EQ(two_k2.vertex_count(), 4U);
  EXPECT_EQ(two_k2.edge_count(), 2U);
  EXPECT_EQ(disjoint_union(Graph::empty(1), Graph::empty(1)), Graph::empty(2));

  const Graph looped = disjoint_union(Graph::complete(2, true), Graph::complete(3, true));
  EXPECT_EQ(looped.vertex_count(), 5U);
  EXPECT_EQ(looped.edge_count(), 4U);
  EXPECT_EQ(looped.loop_count(), 5U);

  const Graph g7 = join(two_k2, Graph::empty(3));
  EXPECT_EQ(g7.vertex_count(), 7U);
  for (std::size_t v = 1; v <= 7; ++v) EXPECT_EQ(g7.degree(v), 4U);

  EXPECT_EQ(join(Graph::empty(1), Graph::empty(1)), Graph::complete(2));
  const Graph star = join(Graph::complete(1), Graph::empty(4));
  EXPECT_EQ(star.degree(1), 4U);
  for (std::size_t v = 2; v <= 5; ++v) EXPECT_EQ(star.degree(v), 1U);
}

TEST(Graph, Complement) {
  EXPECT_EQ(complement(Graph::empty(3)), Graph::complete(3));
  EXPECT_EQ(complement(family_graph(FamilySpec::no_loops(6))),
            disjoint_union(Graph::complete_bipartite(2, 2), Graph::complete(2)));
  EXPECT_EQ(complement(family_graph(FamilySpec::theta(5))).relabeled(theta_complement_relabel(5)),
            join(Graph::complete(1), Graph::empty(4)));
  // loops are dropped
  EXPECT_FALSE(complement(Graph::complete(3, true)).has_loops());
}

TEST(Graph, FromBitmatrix) {
  const Graph g = from_bitmatrix(mod2(build_S(7)));
  EXPECT_EQ(g.looped_vertices(), (std::vector<std::size_t>{2, 3, 5, 6}));
  EXPECT_EQ(from_bitmatrix(BitMatrix(1)), Graph::empty(1));
  BitMatrix asym(2);
  asym.set(0, 1, true);
  EXPECT_THROW(from_bitmatrix(asym), DomainError);
}

TEST(Graph, RelabelRejectsNonPermutations) {
  const Graph g = Graph::empty(3);
  EXPECT_THROW(g.relabeled({1, 2}), DomainError);
  EXPECT_THROW(g.relabeled({1, 1, 2}), DomainError);
  EXPECT_THROW(g.relabeled({0, 1, 2}), DomainError);
}

TEST(Families, MatchBlockOracle) {
  for (int w = 3; w <= 40; ++w) {
    const auto b = family_blocks(FamilySpec::no_loops(w));
    EXPECT_EQ(family_graph(FamilySpec::no_loops(w)), oracle::two_cliques_join_empty(b.u, b.v, b.z, false)) << w;
    EXPECT_EQ(family_graph(FamilySpec::loops(w)), oracle::two_cliques_join_empty(b.u, b.v, b.z, true)) << w;
  }
  const auto b7 = family_blocks(FamilySpec::no_loops(7));
  EXPECT_EQ(std::make_tuple(b7.u, b7.v, b7.z), std::make_tuple(2U, 2U, 3U));
  const auto b8 = family_blocks(FamilySpec::no_loops(8));
  EXPECT_EQ(std::make_tuple(b8.u, b8.v, b8.z), std::make_tuple(2U, 3U, 3U));
  const auto b6 = family_blocks(FamilySpec::no_loops(6));
  EXPECT_EQ(std::make_tuple(b6.u, b6.v, b6.z), std::make_tuple(2U, 2U, 2U));
}

TEST(Families, ThetaShape) {
  const Graph theta7 = family_graph(FamilySpec::theta(7));
  EXPECT_EQ(theta7, disjoint_union(Graph::complete(5, true), Graph::empty(2)));
  std::size_t isolated = 0;
  for (std::size_t v = 1; v <= 7; ++v) isolated += theta7.degree(v) == 0;
  EXPECT_EQ(isolated, 2U);
}

TEST(Families, RejectSmallWidths) {
  EXPECT_THROW(family_graph(FamilySpec::no_loops(2)), DomainError);
  EXPECT_THROW(family_graph(FamilySpec::join(0, 1, 1)), DomainError);
  EXPECT_THROW(residue_relabel(2), DomainError);
}

TEST(Families, ParseSpecs) {
  EXPECT_EQ(parse_family_spec("noloops:7"), FamilySpec::no_loops(7));
  EXPECT_EQ(parse_family_spec("theta-complement:5"), FamilySpec::theta_complement(5));
  EXPECT_EQ(parse_family_spec("join:1,2,3"), FamilySpec::join(1, 2, 3));
  EXPECT_EQ(to_string(parse_family_spec("complement:9")), "complement:9");
  for (const char* bad : {"", "noloops", "noloops:", "noloops:x", "cycle:5", "join:1,2", "join:1,2,x", "loops:2"})
    EXPECT_THROW(parse_family_spec(bad), DomainError) << bad;
}

TEST(Families, ResidueRelabel) {
  EXPECT_EQ(residue_relabel(7), (std::vector<std::size_t>{3, 6, 2, 5, 1, 4, 7}));
  EXPECT_EQ(residue_relabel(3), (std::vector<std::size_t>{3, 2, 1}));
}

TEST(Families, GraphOfSIsLoopedFamily) {
  for (int w = 3; w <= 40; ++w) EXPECT_EQ(graph_of_S(w), family_graph(FamilySpec::loops(w))) << w;
}

TEST(Families, GraphOfTIsTheta) {
  for (int w = 3; w <= 40; ++w) EXPECT_EQ(graph_of_T(w), family_graph(FamilySpec::theta(w))) << w;
}

TEST(Families, ComplementsMatch) {
  for (int w = 3; w <= 40; ++w) {
    EXPECT_EQ(complement(family_graph(FamilySpec::no_loops(w))), family_graph(FamilySpec::complement_no_loops(w)));
    EXPECT_EQ(complement(family_graph(FamilySpec::theta(w))).relabeled(theta_complement_relabel(w)),
              family_graph(FamilySpec::theta_complement(w)));
  }
}

TEST(Degrees, RegularExactlyWhenWidthIsOneModThree) {
  for (int w = 3; w <= 40; ++w) {
    const int t = w / 3;
    const DegreeStats s = degree_stats(family_graph(FamilySpec::no_loops(w)));
    EXPECT_EQ(s.is_regular, w % 3 == 1) << w;
    if (w % 3 == 1) {
      EXPECT_EQ(s.delta_max, static_cast<std::size_t>(2 * t));
    } else {
      EXPECT_TRUE(s.is_almost_regular) << w;
    }
  }
}

TEST(Degrees, CountsPerResidue) {
  // w = 6: degree 4 twice, degree 3 four times
  const DegreeStats six = degree_stats(family_graph(FamilySpec::no_loops(6)));
  EXPECT_EQ(six.counts, (std::map<std::size_t, std::size_t>{{3, 4}, {4, 2}}));
  for (int t = 1; t <= 13; ++t) {
    const auto counts = degree_stats(family_graph(FamilySpec::no_loops(3 * t))).counts;
    EXPECT_EQ(counts.at(2 * t), static_cast<std::size_t>(t));
    EXPECT_EQ(counts.at(2 * t - 1), static_cast<std::size_t>(2 * t));
    // w = 3t+2: the K_t block sits at 2t, everything else at 2t+1
    const auto counts2 = degree_stats(family_graph(FamilySpec::no_loops(3 * t + 2))).counts;
    EXPECT_EQ(counts2.at(2 * t + 1), static_cast<std::size_t>(2 * t + 2));
    EXPECT_EQ(counts2.at(2 * t), static_cast<std::size_t>(t));
  }
  EXPECT_TRUE(degree_stats(Graph::empty(5)).is_regular);
}

TEST(Degrees, LoopsDoNotCount) {
  EXPECT_EQ(degree_stats(family_graph(FamilySpec::loops(7))).counts,
            degree_stats(family_graph(FamilySpec::no_loops(7))).counts);
}

TEST(Loops, Placement) {
  for (int w = 3; w <= 40; ++w) {
    const int t = w / 3;
    const Graph g = family_graph(FamilySpec::loops(w));
    const DegreeStats s = degree_stats(g);
    for (std::size_t v = 1; v <= g.vertex_count(); ++v) {
      const bool minimal = g.degree(v) == s.delta_min;
      if (w % 3 == 0) {
        EXPECT_EQ(g.has_loop(v), minimal) << w << " v" << v;
      }
      if (w % 3 == 2 && minimal) {
        EXPECT_TRUE(g.has_loop(v)) << w << " v" << v;
      }
    }
    if (w % 3 == 1) {
      EXPECT_EQ(g.loop_count(), static_cast<std::size_t>(2 * t));
    }
    // every clique vertex is looped, so for w = 3t+2 loops also sit at degree 2t+1
    if (w % 3 == 2) {
      EXPECT_EQ(g.loop_count(), static_cast<std::size_t>(2 * t + 1));
    }
  }
}

TEST(Cographs, FamiliesArePathFree) {
  EXPECT_FALSE(is_cograph(path4()));
  EXPECT_TRUE(is_cograph(family_graph(FamilySpec::theta(10))));
  for (int w = 3; w <= 25; ++w)
    for (const auto& spec : {FamilySpec::no_loops(w), FamilySpec::loops(w), FamilySpec::theta(w),
                             FamilySpec::theta_complement(w), FamilySpec::complement_no_loops(w)}) {
      EXPECT_TRUE(is_cograph(family_graph(spec))) << to_string(spec);
    }
}

TEST(Cographs, DetectsInducedPathInsideLargerGraph) {
  Graph g = Graph::complete(6);
  g.set_edge(1, 3, false);
  g.set_edge(1, 4, false);
  g.set_edge(2, 4, false);
  // 1-2-3-4 is now induced
  EXPECT_FALSE(is_cograph(g));
}

TEST(Duplicates, Classes) {
  const auto g7 = duplicate_vertex_classes(family_graph(FamilySpec::no_loops(7)));
  EXPECT_NE(std::find(g7.begin(), g7.end(), std::vector<std::size_t>{5, 6, 7}), g7.end());
  EXPECT_EQ(duplicate_vertex_classes(Graph::complete(3)).size(), 3U);
  const auto theta = duplicate_vertex_classes(family_graph(FamilySpec::theta(7)));
  EXPECT_NE(std::find(theta.begin(), theta.end(), std::vector<std::size_t>{6, 7}), theta.end());
}

TEST(Rows, DistinctNonzeroRowsAndRank) {
  EXPECT_EQ(distinct_nonzero_rows(Graph::empty(4)), 0U);
  EXPECT_EQ(distinct_nonzero_rows(family_graph(FamilySpec::no_loops(7))), 5U);
  EXPECT_EQ(distinct_nonzero_rows(family_graph(FamilySpec::no_loops(8))), 6U);
  for (int t = 2; t <= 10; ++t)
    for (int residue = 0; residue < 3; ++residue) {
      const Graph g = family_graph(FamilySpec::no_loops(3 * t + residue));
      const std::size_t expected = residue == 2 ? 2 * (t + 1) : 2 * t + 1;
      EXPECT_EQ(distinct_nonzero_rows(g), expected);
      EXPECT_EQ(exact_rank(g.adjacency_matrix()), expected);
    }
  // t = 1: P_3 and C_4 have rank 2, one below the pattern
  EXPECT_EQ(exact_rank(family_graph(FamilySpec::no_loops(3)).adjacency_matrix()), 2U);
  EXPECT_EQ(exact_rank(family_graph(FamilySpec::no_loops(4)).adjacency_matrix()), 2U);
  EXPECT_EQ(distinct_nonzero_rows(family_graph(FamilySpec::no_loops(4))), 2U);
  EXPECT_EQ(exact_rank(family_graph(FamilySpec::no_loops(5)).adjacency_matrix()), 4U);
}

TEST(Rows, RankEqualsDistinctRowsForCographs) {
  for (int w = 3; w <= 30; ++w)
    for (const auto& spec : {FamilySpec::no_loops(w), FamilySpec::complement_no_loops(w),
                             FamilySpec::theta_complement(w)}) {
      const Graph g = family_graph(spec);
      EXPECT_EQ(distinct_nonzero_rows(g), exact_rank(g.adjacency_matrix())) << to_string(spec);
    }
}
