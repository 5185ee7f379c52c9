#pragma once

#include "hlnet/compact_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hlnet {

/// N(U): union of the neighbor rows of U, minus U itself.
VertexSet neighborhood(const CompactGraph &g, const VertexSet &u);

/// Connected components of G - removed, ordered by size descending then by
/// least member ascending.
std::vector<VertexSet> components(const CompactGraph &g, const VertexSet &removed);

/// Sizes of components(g, removed), in the same order.
std::vector<std::size_t> component_sizes(const CompactGraph &g, const VertexSet &removed);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const CompactGraph &g);

VertexSet common_neighbors(const CompactGraph &g, Vertex u, Vertex w);

/// Largest |N(u) ∩ N(w)| over distinct vertex pairs.
std::size_t max_common_neighbors(const CompactGraph &g);

bool is_bipartite(const CompactGraph &g);

struct ShapeClass {
  enum class Kind { star, path, cycle, other };

  Kind kind = Kind::other;
  /// star: {center}; path: {end, end} ascending; otherwise empty.
  std::vector<Vertex> anchors;

  bool operator==(const ShapeClass &) const = default;
};

std::string to_string(ShapeClass::Kind kind);

/// Shape of the induced subgraph G[U]. A single vertex, a single edge and a
/// two-edge path are all reported as stars (K_{1,0}, K_{1,1}, K_{1,2}); for
/// K_{1,1} the center is the smaller index. Throws invalid_argument when U
/// is empty or G[U] is disconnected.
ShapeClass classify_induced(const CompactGraph &g, const VertexSet &u);

/// True iff G[U] is connected; the empty set counts as connected.
bool is_connected_induced(const CompactGraph &g, const VertexSet &u);

/// True iff `map` is an isomorphism G -> H. Throws invalid_argument when the
/// orders differ or the map is not a bijection.
bool check_isomorphism_by_map(const CompactGraph &g, const CompactGraph &h,
                              std::span<const Vertex> map);

} // namespace hlnet

namespace hlnet {

struct InducedSubgraph {
  CompactGraph graph;
  std::vector<Vertex> original; ///< new index -> vertex of the parent graph
};

/// G[U] re-indexed by ascending member order; labels carry over.
InducedSubgraph induced_subgraph(const CompactGraph &g, const VertexSet &u);

} // namespace hlnet
