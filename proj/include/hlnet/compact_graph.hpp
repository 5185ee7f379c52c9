#pragma once

#include "hlnet/vertex_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hlnet {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on dense vertex indices 0..order-1.
 *
 * Adjacency is stored as sorted neighbor lists (CSR); `adjacency(v)` gives
 * the row as a VertexSet. Labels are optional decoration, pairwise distinct
 * when present.
 */
class CompactGraph {
public:
  CompactGraph() = default;

  /// Duplicate edges collapse; self-loops, out-of-range endpoints and bad
  /// labels throw invalid_argument.
  static CompactGraph from_edges(std::size_t order, std::span<const Edge> edges,
                                 std::vector<std::string> labels = {});

  /// Rows must be symmetric and loop-free.
  static CompactGraph from_rows(std::vector<std::vector<Vertex>> rows,
                                std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  VertexSet adjacency(Vertex v) const;

  /// Common degree when the graph is regular.
  std::optional<std::size_t> regular_degree() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  std::string label(Vertex v) const;

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet full_set() const { return VertexSet::full(order()); }

private:
  void validate_labels() const;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

} // namespace hlnet
