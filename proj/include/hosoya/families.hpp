#pragma once

/**
 * @file families.hpp
 * @brief The graph families read off the two triangles mod 2.
 *
 * With w = 3t + residue (t >= 1):
 *
 *   Loops(w)    (K*_a ⊔ K*_b) ∇ K̄_c      graph of S_w mod 2
 *   NoLoops(w)  (K_a ⊔ K_b) ∇ K̄_c        the same without loops
 *   ComplementNoLoops(w)  K_{a,b} ⊔ K_c  complement of NoLoops(w)
 *   Theta(w)    K*_{2t+residue} ⊔ K̄_t    graph of T_w mod 2
 *   ThetaComplement(w)  K_t ∇ K̄_{w-t}    complement of Theta(w)
 *   Join(n,m,r) (K_n ⊔ K_m) ∇ K̄_r
 *
 * where (a, b, c) = (t, t, t), (t, t, t+1), (t, t+1, t+1) for residue 0, 1, 2.
 *
 * Canonical vertex order is first clique block, second clique block, then
 * the empty block (for ThetaComplement: the clique K_t, then the empty part).
 */

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hosoya/error.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/matrix.hpp"

namespace hosoya {

enum class FamilyKind { NoLoops, Loops, Theta, ThetaComplement, ComplementNoLoops, Join };

struct FamilySpec {
  FamilyKind kind = FamilyKind::NoLoops;
  std::int64_t w = 3;
  std::int64_t n = 0, m = 0, r = 0;  // Join only

  static FamilySpec no_loops(std::int64_t w) { return {FamilyKind::NoLoops, w}; }
  static FamilySpec loops(std::int64_t w) { return {FamilyKind::Loops, w}; }
  static FamilySpec theta(std::int64_t w) { return {FamilyKind::Theta, w}; }
  static FamilySpec theta_complement(std::int64_t w) { return {FamilyKind::ThetaComplement, w}; }
  static FamilySpec complement_no_loops(std::int64_t w) { return {FamilyKind::ComplementNoLoops, w}; }
  static FamilySpec join(std::int64_t n, std::int64_t m, std::int64_t r) {
    return {FamilyKind::Join, n + m + r, n, m, r};
  }

  std::int64_t t() const noexcept { return w / 3; }
  std::int64_t residue() const noexcept { return w % 3; }
  bool has_loops() const noexcept { return kind == FamilyKind::Loops || kind == FamilyKind::Theta; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline void validate(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Join) {
    if (spec.n < 1 || spec.m < 1 || spec.r < 1) throw DomainError("join family needs n, m, r >= 1");
  } else if (spec.w < 3) {
    throw DomainError("family needs w >= 3 (t >= 1), got w = " + std::to_string(spec.w));
  }
}

inline std::string kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::NoLoops: return "noloops";
    case FamilyKind::Loops: return "loops";
    case FamilyKind::Theta: return "theta";
    case FamilyKind::ThetaComplement: return "theta-complement";
    case FamilyKind::ComplementNoLoops: return "complement";
    case FamilyKind::Join: return "join";
  }
  return "?";
}

inline std::string to_string(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Join) {
    return "join:" + std::to_string(spec.n) + "," + std::to_string(spec.m) + "," + std::to_string(spec.r);
  }
  return kind_name(spec.kind) + ":" + std::to_string(spec.w);
}

namespace detail {

inline std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError("cannot parse integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace detail

/// "<kind>:<w>" with kind in {noloops, loops, theta, theta-complement,
/// complement}, or "join:<n>,<m>,<r>".
inline FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("family spec '" + std::string(text) + "' must look like kind:w or join:n,m,r");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);

  FamilySpec spec;
  if (kind == "join") {
    const auto c1 = args.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : args.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw DomainError("join spec needs three values: join:n,m,r");
    spec = FamilySpec::join(detail::parse_int(args.substr(0, c1), text),
                            detail::parse_int(args.substr(c1 + 1, c2 - c1 - 1), text),
                            detail::parse_int(args.substr(c2 + 1), text));
  } else {
    const std::int64_t w = detail::parse_int(args, text);
    if (kind == "noloops") spec = FamilySpec::no_loops(w);
    else if (kind == "loops") spec = FamilySpec::loops(w);
    else if (kind == "theta") spec = FamilySpec::theta(w);
    else if (kind == "theta-complement") spec = FamilySpec::theta_complement(w);
    else if (kind == "complement") spec = FamilySpec::complement_no_loops(w);
    else throw DomainError("unknown family kind '" + std::string(kind) + "'");
  }
  validate(spec);
  return spec;
}

/// Sizes of the labelled blocks in canonical order: first clique (u),
/// second clique (v), empty or isolated part (z).
struct BlockSizes {
  std::size_t u = 0, v = 0, z = 0;
};

inline BlockSizes family_blocks(const FamilySpec& spec) {
  validate(spec);
  if (spec.kind == FamilyKind::Join) {
    return {static_cast<std::size_t>(spec.n), static_cast<std::size_t>(spec.m), static_cast<std::size_t>(spec.r)};
  }
  const auto t = static_cast<std::size_t>(spec.t());
  const auto residue = static_cast<std::size_t>(spec.residue());
  const auto w = static_cast<std::size_t>(spec.w);
  switch (spec.kind) {
    case FamilyKind::Theta: return {2 * t + residue, 0, t};
    case FamilyKind::ThetaComplement: return {t, 0, w - t};
    default: break;
  }
  switch (residue) {
    case 0: return {t, t, t};
    case 1: return {t, t, t + 1};
    default: return {t, t + 1, t + 1};
  }
}

inline Graph family_graph(const FamilySpec& spec) {
  const BlockSizes b = family_blocks(spec);
  switch (spec.kind) {
    case FamilyKind::NoLoops:
    case FamilyKind::Join:
      return join(disjoint_union(Graph::complete(b.u), Graph::complete(b.v)), Graph::empty(b.z));
    case FamilyKind::Loops:
      return join(disjoint_union(Graph::complete(b.u, true), Graph::complete(b.v, true)), Graph::empty(b.z));
    case FamilyKind::ComplementNoLoops:
      return disjoint_union(Graph::complete_bipartite(b.u, b.v), Graph::complete(b.z));
    case FamilyKind::Theta:
      return disjoint_union(Graph::complete(b.u, true), Graph::empty(b.z));
    case FamilyKind::ThetaComplement:
      return join(Graph::complete(b.u), Graph::empty(b.z));
  }
  throw DomainError("unknown family kind");
}

/// Order of S_w indices realising Loops(w): indices = 0 (mod 3) form the
/// first clique, = 2 (mod 3) the second, = 1 (mod 3) the empty block, each
/// in increasing order. Pass to Graph::relabeled.
inline std::vector<std::size_t> residue_relabel(std::int64_t w) {
  if (w < 3) throw DomainError("residue_relabel: w must be >= 3, got " + std::to_string(w));
  std::vector<std::size_t> order;
  for (const std::int64_t residue : {0, 2, 1})
    for (std::int64_t i = 1; i <= w; ++i)
      if (i % 3 == residue) order.push_back(static_cast<std::size_t>(i));
  return order;
}

/// Order of T_w indices realising Theta(w): indices not divisible by 3 (the
/// looped clique) first, then the multiples of 3 (isolated vertices).
inline std::vector<std::size_t> theta_relabel(std::int64_t w) {
  if (w < 3) throw DomainError("theta_relabel: w must be >= 3, got " + std::to_string(w));
  std::vector<std::size_t> order;
  for (std::int64_t i = 1; i <= w; ++i)
    if (i % 3 != 0) order.push_back(static_cast<std::size_t>(i));
  for (std::int64_t i = 3; i <= w; i += 3) order.push_back(static_cast<std::size_t>(i));
  return order;
}

/// Order taking complement(Theta(w)) to ThetaComplement(w): the t formerly
/// isolated vertices (now the clique) move to the front.
inline std::vector<std::size_t> theta_complement_relabel(std::int64_t w) {
  const BlockSizes b = family_blocks(FamilySpec::theta(w));
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i <= b.z; ++i) order.push_back(b.u + i);
  for (std::size_t i = 1; i <= b.u; ++i) order.push_back(i);
  return order;
}

/// The graph of S_w mod 2 in canonical family order.
inline Graph graph_of_S(std::int64_t w) {
  return from_bitmatrix(mod2(build_S(w))).relabeled(residue_relabel(w));
}

/// The graph of T_w mod 2 in canonical family order.
inline Graph graph_of_T(std::int64_t w) {
  return from_bitmatrix(mod2(build_T(w))).relabeled(theta_relabel(w));
}

}  // namespace hosoya
