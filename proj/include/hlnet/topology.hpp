#pragma once

// Builders for the hypercube-like families: Q_n, the varietal hypercube VQ_n
// (recursive and closed-form adjacency), the perfect-matching composition,
// seeded random HL-networks, and the Cayley graphs Gamma_{k,l} / Delta_n.
//
// Bit strings are written x_n ... x_1; position i is bit i-1 of the vertex
// index, so label "010" is vertex 2.

#include "hlnet/compact_graph.hpp"
#include "hlnet/report.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hlnet::topology {

struct MatchingPolicy {
  enum class Kind { identity, seeded, explicit_map };

  Kind kind = Kind::identity;
  std::uint64_t seed = 0;
  std::vector<Vertex> map;

  std::string canonical() const;
};

enum class Family { hypercube, vq_recursive, vq_rule, gamma, delta, random_hl, g84, compose };

/**
 * Declarative description of a graph to build. Textual forms:
 *
 *   hypercube:n=3          vq:n=4 (alias vq-recursive)   vq-rule:n=4
 *   gamma:k=5,l=0          delta:n=9                     random-hl:n=6,seed=42
 *   g84
 *   compose:left=(hypercube:n=2),right=(hypercube:n=2),matching=explicit(0.1.3.2)
 *
 * Matching forms are identity, seeded(<u64>) and explicit(<i0>.<i1>...).
 * Both VQ builders produce the same graph, so both canonicalise to "vq:n=".
 */
struct TopologySpec {
  Family family = Family::hypercube;
  int n = 0;
  int k = 0;
  int l = 0;
  std::uint64_t seed = 0;
  std::shared_ptr<const TopologySpec> left;
  std::shared_ptr<const TopologySpec> right;
  MatchingPolicy matching;

  static TopologySpec parse(std::string_view text);
  std::string canonical() const;
  int dimension() const;
  /// Cayley-graph families carry group structure (vertex 0 is the identity).
  bool is_cayley() const { return family == Family::gamma || family == Family::delta; }
  /// Families whose vertices 0..2^m-1 induce an m-dimensional sub-network.
  bool nests_subnetworks() const { return !is_cayley(); }
  /// (k, l) of the underlying group for Cayley families.
  std::pair<int, int> group_shape() const;
};

CompactGraph hypercube(int n);

/// G0 ⊕ G1: disjoint union (G1 shifted by |G0|) plus edges {v, |G0| + m(v)}.
CompactGraph compose_hl(const CompactGraph &g0, const CompactGraph &g1, std::span<const Vertex> matching);

/// Bijection [0, order) -> [0, order) realising a policy; seeded matchings
/// use a Fisher-Yates shuffle driven by mt19937_64.
std::vector<Vertex> make_matching(const MatchingPolicy &policy, std::size_t order);

CompactGraph random_hl(int n, std::uint64_t seed);
CompactGraph vq_recursive(int n);
CompactGraph vq_by_rule(int n);
CompactGraph gamma(int k, int l);
CompactGraph delta(int n);
CompactGraph g84();

/// Vertex bijection delta(n) -> vq_recursive(n): the element
/// (a_1^2)^x1 b_1^x2 (a_1b_1)^x3 ... c_1^x(3s+1) ... goes to label x_n...x_1.
std::vector<Vertex> vq_iso_map(int n);

CompactGraph build(const TopologySpec &spec);

/// Constructive check that Gamma_{k,l} = Gamma[M] ⊕ Gamma[M b] with
/// M = <S - {b}>, b = b_k (or c_l when k = 0), and Gamma[M] isomorphic to
/// Gamma_{k-1,l+2} (Gamma_{0,l-1}) through the canonical re-indexing.
VerificationReport hl_decompose(int k, int l);

} // namespace hlnet::topology
