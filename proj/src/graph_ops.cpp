#include "hlnet/graph_ops.hpp"

#include "hlnet/error.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace hlnet {

namespace {

void require_capacity(const CompactGraph &g, const VertexSet &s) {
  if (s.capacity() != g.order())
    fail_argument("vertex set capacity " + std::to_string(s.capacity()) +
                  " does not match graph order " + std::to_string(g.order()));
}

// Flood fill inside `allowed` starting at `seed`; marks visited vertices.
VertexSet flood(const CompactGraph &g, Vertex seed, const VertexSet &allowed,
                std::vector<Vertex> &stack) {
  VertexSet part(g.order());
  part.set(seed);
  stack.clear();
  stack.push_back(seed);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (allowed.test(w) && !part.test(w)) {
        part.set(w);
        stack.push_back(w);
      }
  }
  return part;
}

} // namespace

VertexSet neighborhood(const CompactGraph &g, const VertexSet &u) {
  require_capacity(g, u);
  VertexSet out(g.order());
  u.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v))
      out.set(w);
  });
  return out - u;
}

std::vector<VertexSet> components(const CompactGraph &g, const VertexSet &removed) {
  require_capacity(g, removed);
  VertexSet remaining = removed.complement();
  std::vector<VertexSet> parts;
  std::vector<Vertex> stack;
  while (auto seed = remaining.first()) {
    VertexSet part = flood(g, *seed, remaining, stack);
    remaining -= part;
    parts.push_back(std::move(part));
  }
  // Parts were discovered in order of their least member, so a stable sort by
  // size alone yields (size desc, least member asc).
  std::stable_sort(parts.begin(), parts.end(),
                   [](const VertexSet &a, const VertexSet &b) { return a.count() > b.count(); });
  return parts;
}

std::vector<std::size_t> component_sizes(const CompactGraph &g, const VertexSet &removed) {
  std::vector<std::size_t> sizes;
  for (const auto &part : components(g, removed))
    sizes.push_back(part.count());
  return sizes;
}

std::optional<std::size_t> girth(const CompactGraph &g) {
  const std::size_t n = g.order();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = unseen;
  std::vector<std::size_t> dist(n, unseen);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n && best > 3; ++root) {
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      // Cycles closed from depth d or deeper have length at least 2d.
      if (best != unseen && 2 * dist[v] >= best)
        break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == unseen) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
    for (Vertex v : queue)
      dist[v] = unseen;
  }
  if (best == unseen)
    return std::nullopt;
  return best;
}

VertexSet common_neighbors(const CompactGraph &g, Vertex u, Vertex w) {
  if (u == w)
    fail_argument("common_neighbors requires distinct vertices");
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(w);
  std::vector<Vertex> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return VertexSet::of(g.order(), both);
}

std::size_t max_common_neighbors(const CompactGraph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> hits(n, 0);
  std::vector<Vertex> touched;
  std::size_t best = 0;
  for (Vertex v = 0; v < n; ++v) {
    touched.clear();
    for (Vertex u : g.neighbors(v))
      for (Vertex w : g.neighbors(u)) {
        if (w == v)
          continue;
        if (hits[w]++ == 0)
          touched.push_back(w);
        best = std::max(best, hits[w]);
      }
    for (Vertex w : touched)
      hits[w] = 0;
  }
  return best;
}

bool is_bipartite(const CompactGraph &g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1)
      continue;
    side[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string to_string(ShapeClass::Kind kind) {
  switch (kind) {
  case ShapeClass::Kind::star:
    return "star";
  case ShapeClass::Kind::path:
    return "path";
  case ShapeClass::Kind::cycle:
    return "cycle";
  case ShapeClass::Kind::other:
    break;
  }
  return "other";
}

bool is_connected_induced(const CompactGraph &g, const VertexSet &u) {
  require_capacity(g, u);
  const auto seed = u.first();
  if (!seed)
    return true;
  std::vector<Vertex> stack;
  return flood(g, *seed, u, stack).count() == u.count();
}

ShapeClass classify_induced(const CompactGraph &g, const VertexSet &u) {
  require_capacity(g, u);
  if (u.empty())
    fail_argument("classify_induced requires a non-empty vertex set");
  if (!is_connected_induced(g, u))
    fail_argument("classify_induced requires a connected induced subgraph");

  const auto members = u.members();
  std::vector<std::size_t> degree(members.size(), 0);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbors(members[i]))
      if (u.test(w))
        ++degree[i];
    edges += degree[i];
  }
  edges /= 2;
  const std::size_t k = members.size();

  if (k == 1)
    return {ShapeClass::Kind::star, {members[0]}};
  // Connected with k-1 edges and a vertex of degree k-1: every edge touches it.
  const auto hub = std::max_element(degree.begin(), degree.end());
  if (edges == k - 1 && *hub == k - 1)
    return {ShapeClass::Kind::star, {members[static_cast<std::size_t>(hub - degree.begin())]}};

  const bool max_two = std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d <= 2; });
  if (max_two && edges == k - 1) {
    std::vector<Vertex> ends;
    for (std::size_t i = 0; i < k; ++i)
      if (degree[i] == 1)
        ends.push_back(members[i]);
    return {ShapeClass::Kind::path, ends};
  }
  if (max_two && edges == k && k >= 3)
    return {ShapeClass::Kind::cycle, {}};
  return {ShapeClass::Kind::other, {}};
}

bool check_isomorphism_by_map(const CompactGraph &g, const CompactGraph &h,
                              std::span<const Vertex> map) {
  if (g.order() != h.order())
    fail_argument("isomorphism check requires equal orders");
  if (map.size() != g.order())
    fail_argument("isomorphism map is not total");
  std::vector<bool> hit(h.order(), false);
  for (Vertex image : map) {
    if (image >= h.order() || hit[image])
      fail_argument("isomorphism map is not a bijection");
    hit[image] = true;
  }
  if (g.edge_count() != h.edge_count())
    return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && !h.adjacent(map[u], map[v]))
        return false;
  return true;
}

} // namespace hlnet

namespace hlnet {

InducedSubgraph induced_subgraph(const CompactGraph &g, const VertexSet &u) {
  require_capacity(g, u);
  InducedSubgraph out;
  out.original = u.members();
  std::vector<Vertex> position(g.order(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i)
    position[out.original[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> rows(out.original.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i]))
      if (u.test(w))
        rows[i].push_back(position[w]);
    if (g.has_labels())
      labels.push_back(g.label(out.original[i]));
  }
  out.graph = CompactGraph::from_rows(std::move(rows), std::move(labels));
  return out;
}

} // namespace hlnet
