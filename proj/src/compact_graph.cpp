#include "hlnet/compact_graph.hpp"

#include "hlnet/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace hlnet {

CompactGraph CompactGraph::from_edges(std::size_t order, std::span<const Edge> edges,
                                      std::vector<std::string> labels) {
  if (order > max_order)
    fail_argument("graph order " + std::to_string(order) + " exceeds 2^20");
  std::vector<std::vector<Vertex>> rows(order);
  for (const auto &[u, v] : edges) {
    if (u >= order || v >= order)
      fail_argument("edge endpoint out of range");
    if (u == v)
      fail_argument("self-loop at vertex " + std::to_string(u));
    rows[u].push_back(v);
    rows[v].push_back(u);
  }
  for (auto &row : rows) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return from_rows(std::move(rows), std::move(labels));
}

CompactGraph CompactGraph::from_rows(std::vector<std::vector<Vertex>> rows,
                                     std::vector<std::string> labels) {
  const std::size_t order = rows.size();
  if (order > max_order)
    fail_argument("graph order " + std::to_string(order) + " exceeds 2^20");
  CompactGraph g;
  g.offsets_.reserve(order + 1);
  g.offsets_.push_back(0);
  for (Vertex u = 0; u < order; ++u) {
    auto &row = rows[u];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      fail_argument("duplicate neighbor in row " + std::to_string(u));
    for (Vertex v : row) {
      if (v >= order)
        fail_argument("neighbor out of range in row " + std::to_string(u));
      if (v == u)
        fail_argument("self-loop at vertex " + std::to_string(u));
    }
    g.targets_.insert(g.targets_.end(), row.begin(), row.end());
    g.offsets_.push_back(g.targets_.size());
  }
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v : g.neighbors(u))
      if (!g.adjacent(v, u))
        fail_argument("asymmetric adjacency between " + std::to_string(u) + " and " +
                      std::to_string(v));
  g.labels_ = std::move(labels);
  g.validate_labels();
  return g;
}

void CompactGraph::validate_labels() const {
  if (labels_.empty())
    return;
  if (labels_.size() != order())
    fail_argument("label count does not match graph order");
  std::unordered_set<std::string> seen;
  for (const auto &l : labels_)
    if (!seen.insert(l).second)
      fail_argument("duplicate vertex label '" + l + "'");
}

std::span<const Vertex> CompactGraph::neighbors(Vertex v) const {
  if (v >= order())
    fail_argument("vertex " + std::to_string(v) + " out of range");
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool CompactGraph::adjacent(Vertex u, Vertex v) const {
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

VertexSet CompactGraph::adjacency(Vertex v) const { return VertexSet::of(order(), neighbors(v)); }

std::optional<std::size_t> CompactGraph::regular_degree() const {
  if (order() == 0)
    return std::nullopt;
  const std::size_t d = degree(0);
  for (Vertex v = 1; v < order(); ++v)
    if (degree(v) != d)
      return std::nullopt;
  return d;
}

std::string CompactGraph::label(Vertex v) const {
  if (v >= order())
    fail_argument("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> CompactGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

} // namespace hlnet
