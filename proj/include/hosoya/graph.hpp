#pragma once

/**
 * @file graph.hpp
 * @brief Loop-aware undirected graphs on vertices labelled 1..n.
 *
 * Adjacency is a dense symmetric bit matrix without diagonal; loops live in a
 * separate per-vertex flag. Degrees never count loops. Complement is taken on
 * the underlying simple graph and is loopless.
 */

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/error.hpp"
#include "hosoya/matrix.hpp"

namespace hosoya {

class Graph {
 public:
  using Row = boost::dynamic_bitset<>;

  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adjacency_(n, Row(n)), loops_(n) {}

  static Graph empty(std::size_t n) {
    if (n < 1) throw DomainError("empty graph needs at least one vertex");
    return Graph(n);
  }

  static Graph complete(std::size_t n, bool with_loops = false) {
    if (n < 1) throw DomainError("complete graph needs at least one vertex");
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
      g.adjacency_[u].set();
      g.adjacency_[u].reset(u);
    }
    if (with_loops) g.loops_.set();
    return g;
  }

  static Graph complete_bipartite(std::size_t m, std::size_t n);

  /// Edges given as 1-based label pairs; (v, v) adds a loop.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u == v) {
        g.set_loop(u, true);
      } else {
        g.set_edge(u, v, true);
      }
    }
    return g;
  }

  std::size_t vertex_count() const noexcept { return n_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    check(u);
    check(v);
    return u != v && adjacency_[u - 1].test(v - 1);
  }
  bool has_loop(std::size_t v) const {
    check(v);
    return loops_.test(v - 1);
  }
  bool has_loops() const noexcept { return loops_.any(); }

  void set_edge(std::size_t u, std::size_t v, bool present) {
    check(u);
    check(v);
    if (u == v) throw DomainError("set_edge: use set_loop for diagonal entries");
    adjacency_[u - 1].set(v - 1, present);
    adjacency_[v - 1].set(u - 1, present);
  }
  void set_loop(std::size_t v, bool present) {
    check(v);
    loops_.set(v - 1, present);
  }

  /// Loopless degree.
  std::size_t degree(std::size_t v) const {
    check(v);
    return adjacency_[v - 1].count();
  }

  /// Open neighbourhood as a bit row (0-based bit positions); loops excluded.
  const Row& neighborhood(std::size_t v) const {
    check(v);
    return adjacency_[v - 1];
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.count();
    return twice / 2;
  }
  std::size_t loop_count() const { return loops_.count(); }

  std::vector<std::size_t> looped_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v)
      if (loops_.test(v)) out.push_back(v + 1);
    return out;
  }

  /// Edges (u < v), sorted; loops not included.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adjacency_[u].test(v)) out.emplace_back(u + 1, v + 1);
    return out;
  }

  /// Adjacency matrix with loop flags on the diagonal.
  ExactMatrix adjacency_matrix() const {
    ExactMatrix m(n_, n_);
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v)
        if (adjacency_[u].test(v)) m(u, v) = 1;
      if (loops_.test(u)) m(u, u) = 1;
    }
    return m;
  }

  /// New graph whose vertex k is this graph's vertex order[k-1]; order is a
  /// permutation of 1..n.
  Graph relabeled(const std::vector<std::size_t>& order) const {
    if (order.size() != n_) throw DomainError("relabeled: permutation has wrong length");
    std::vector<bool> seen(n_, false);
    for (std::size_t label : order) {
      if (label < 1 || label > n_ || seen[label - 1]) throw DomainError("relabeled: not a permutation");
      seen[label - 1] = true;
    }
    Graph g(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        if (adjacency_[order[a] - 1].test(order[b] - 1)) g.adjacency_[a].set(b);
      g.loops_.set(a, loops_.test(order[a] - 1));
    }
    return g;
  }

  Graph without_loops() const {
    Graph g = *this;
    g.loops_.reset();
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_ && a.loops_ == b.loops_;
  }

  friend Graph disjoint_union(const Graph& g1, const Graph& g2);
  friend Graph join(const Graph& g1, const Graph& g2);
  friend Graph complement(const Graph& g);

 private:
  void check(std::size_t v) const {
    if (v < 1 || v > n_) throw DomainError("vertex label " + std::to_string(v) + " out of range");
  }

  std::size_t n_ = 0;
  std::vector<Row> adjacency_;
  Row loops_;
};

namespace detail {

/// g1 and g2 laid side by side, g1 first; cross pairs adjacent iff `cross`.
inline Graph place_side_by_side(const Graph& g1, const Graph& g2, bool cross) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  Graph g = Graph::from_edges(n1 + n2, {});
  for (std::size_t u = 1; u <= n1; ++u) {
    if (g1.has_loop(u)) g.set_loop(u, true);
    for (std::size_t v = u + 1; v <= n1; ++v)
      if (g1.has_edge(u, v)) g.set_edge(u, v, true);
    if (cross)
      for (std::size_t v = 1; v <= n2; ++v) g.set_edge(u, n1 + v, true);
  }
  for (std::size_t u = 1; u <= n2; ++u) {
    if (g2.has_loop(u)) g.set_loop(n1 + u, true);
    for (std::size_t v = u + 1; v <= n2; ++v)
      if (g2.has_edge(u, v)) g.set_edge(n1 + u, n1 + v, true);
  }
  return g;
}

}  // namespace detail

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return detail::place_side_by_side(g1, g2, false);
}

/// Disjoint union plus every edge between the two vertex sets.
inline Graph join(const Graph& g1, const Graph& g2) { return detail::place_side_by_side(g1, g2, true); }

inline Graph complement(const Graph& g) {
  Graph out(g.n_);
  for (std::size_t u = 0; u < g.n_; ++u) {
    out.adjacency_[u] = ~g.adjacency_[u];
    out.adjacency_[u].reset(u);
  }
  return out;
}

inline Graph Graph::complete_bipartite(std::size_t m, std::size_t n) {
  return join(Graph::empty(m), Graph::empty(n));
}

/// Off-diagonal ones become edges, diagonal ones loops.
inline Graph from_bitmatrix(const BitMatrix& bits) {
  if (!bits.is_symmetric()) throw DomainError("from_bitmatrix: matrix is not symmetric");
  Graph g = Graph::from_edges(bits.size(), {});
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits(i, i)) g.set_loop(i + 1, true);
    for (std::size_t j = i + 1; j < bits.size(); ++j)
      if (bits(i, j)) g.set_edge(i + 1, j + 1, true);
  }
  return g;
}

struct DegreeStats {
  std::size_t delta_max = 0;
  std::size_t delta_min = 0;
  std::map<std::size_t, std::size_t> counts;  // degree -> number of vertices
  bool is_regular = false;
  bool is_almost_regular = false;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  if (g.vertex_count() == 0) return stats;
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) ++stats.counts[g.degree(v)];
  stats.delta_min = stats.counts.begin()->first;
  stats.delta_max = stats.counts.rbegin()->first;
  stats.is_regular = stats.delta_max == stats.delta_min;
  stats.is_almost_regular = stats.delta_max == stats.delta_min + 1;
  return stats;
}

/// No induced P4, by exhaustive search over 4-subsets of the simple graph.
inline bool is_cograph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t picked[4];
  for (picked[0] = 1; picked[0] <= n; ++picked[0])
    for (picked[1] = picked[0] + 1; picked[1] <= n; ++picked[1])
      for (picked[2] = picked[1] + 1; picked[2] <= n; ++picked[2])
        for (picked[3] = picked[2] + 1; picked[3] <= n; ++picked[3]) {
          // An induced P4 has exactly three edges and degree sequence (1,1,2,2).
          std::size_t degree[4] = {0, 0, 0, 0};
          std::size_t edges = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              if (g.has_edge(picked[a], picked[b])) {
                ++edges;
                ++degree[a];
                ++degree[b];
              }
          if (edges != 3) continue;
          std::sort(std::begin(degree), std::end(degree));
          if (degree[0] == 1 && degree[1] == 1 && degree[2] == 2 && degree[3] == 2) return false;
        }
  return true;
}

/// Vertices grouped by identical open neighbourhoods, each class sorted and
/// classes ordered by their smallest label.
inline std::vector<std::vector<std::size_t>> duplicate_vertex_classes(const Graph& g) {
  std::map<Graph::Row, std::vector<std::size_t>> by_neighborhood;
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) by_neighborhood[g.neighborhood(v)].push_back(v);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [row, members] : by_neighborhood) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// Number of distinct non-zero rows of the adjacency matrix, loop entries
/// included on the diagonal.
inline std::size_t distinct_nonzero_rows(const Graph& g) {
  std::set<Graph::Row> rows;
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) {
    Graph::Row row = g.neighborhood(v);
    if (g.has_loop(v)) row.set(v - 1);
    if (row.any()) rows.insert(std::move(row));
  }
  return rows.size();
}

}  // namespace hosoya
