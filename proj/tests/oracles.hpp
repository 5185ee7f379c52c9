#pragma once

// Test-side reference implementations. They deliberately share no code with
// the library: plain adjacency lists, union-find, and dihedral elements as
// permutations of the square's corners instead of normal forms.

#include "hlnet/compact_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Adj = std::vector<std::vector<int>>;

inline Adj adjacency_of(const hlnet::CompactGraph &g) {
  Adj adj(g.order());
  for (const auto &[u, v] : g.edges()) {
    adj[u].push_back(static_cast<int>(v));
    adj[v].push_back(static_cast<int>(u));
  }
  return adj;
}

inline std::set<std::pair<int, int>> edge_set(const Adj &adj) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int v : adj[u])
      out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

inline std::set<std::pair<int, int>> edge_set(const hlnet::CompactGraph &g) { return edge_set(adjacency_of(g)); }

/// Pairs of n-bit strings at Hamming distance one.
inline std::set<std::pair<int, int>> hypercube_edges(int n) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < (1 << n); ++u)
    for (int v = u + 1; v < (1 << n); ++v) {
      int d = u ^ v;
      if (d != 0 && (d & (d - 1)) == 0)
        out.insert({u, v});
    }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Component sizes of G - removed, largest first.
inline std::vector<std::size_t> component_sizes(const Adj &adj, const std::vector<bool> &removed) {
  UnionFind uf(adj.size());
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    if (!removed[u])
      for (int v : adj[u])
        if (!removed[v])
          uf.unite(u, v);
  std::vector<std::size_t> count(adj.size(), 0);
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    if (!removed[u])
      ++count[uf.find(u)];
  std::vector<std::size_t> out;
  for (auto c : count)
    if (c > 0)
      out.push_back(c);
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::vector<bool> mask(std::size_t order, const std::vector<int> &members) {
  std::vector<bool> m(order, false);
  for (int v : members)
    m[v] = true;
  return m;
}

inline std::set<int> boundary(const Adj &adj, const std::vector<int> &u) {
  std::set<int> inside(u.begin(), u.end());
  std::set<int> out;
  for (int v : u)
    for (int w : adj[v])
      if (!inside.count(w))
        out.insert(w);
  return out;
}

inline bool is_rg_cutset(const Adj &adj, const std::vector<int> &s, int g) {
  const auto sizes = component_sizes(adj, mask(adj.size(), s));
  return sizes.size() >= 2 && sizes.back() >= static_cast<std::size_t>(g) + 1;
}

/// Minimum R_g-cutset size by scanning every vertex subset (order <= 20).
inline int kappa_by_subsets(const Adj &adj, int g) {
  const int n = static_cast<int>(adj.size());
  int best = -1;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const int size = __builtin_popcount(bits);
    if (best != -1 && size >= best)
      continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (bits >> v & 1)
        s.push_back(v);
    if (is_rg_cutset(adj, s, g))
      best = size;
  }
  return best;
}

/// Isomorphism by trying every permutation (order <= 9).
inline bool isomorphic(const Adj &a, const Adj &b) {
  if (a.size() != b.size())
    return false;
  const auto ea = edge_set(a);
  const auto eb = edge_set(b);
  if (ea.size() != eb.size())
    return false;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto &[u, v] : ea)
      if (!eb.count({std::min(p[u], p[v]), std::max(p[u], p[v])})) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Dihedral group of the square as permutations of corners 0..3:
/// a rotates (i -> i+1), b reflects (i -> -i).
using Perm = std::array<int, 4>;

inline Perm compose(const Perm &f, const Perm &g) { // (f∘g)(i) = f(g(i))
  Perm out{};
  for (int i = 0; i < 4; ++i)
    out[i] = f[g[i]];
  return out;
}

inline Perm dihedral(int x, int y) { // a^x b^y
  Perm a{1, 2, 3, 0};
  Perm b{0, 3, 2, 1};
  Perm out{0, 1, 2, 3};
  for (int i = 0; i < x; ++i)
    out = compose(out, a);
  if (y)
    out = compose(out, b);
  return out;
}

inline std::pair<int, int> dihedral_normal_form(const Perm &p) {
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 2; ++y)
      if (dihedral(x, y) == p)
        return {x, y};
  return {-1, -1};
}

/// Element of D8^k x Z2^l as permutations and bits.
struct ProductElement {
  std::vector<Perm> d;
  std::vector<int> c;
};

inline ProductElement product(const ProductElement &g, const ProductElement &h) {
  ProductElement out;
  for (std::size_t i = 0; i < g.d.size(); ++i)
    out.d.push_back(compose(g.d[i], h.d[i]));
  for (std::size_t j = 0; j < g.c.size(); ++j)
    out.c.push_back(g.c[j] ^ h.c[j]);
  return out;
}

/// The documented vertex index: cyclic bits lowest, then one base-8 digit
/// 2x+y per dihedral factor.
inline std::uint32_t index_of(const ProductElement &e) {
  std::uint32_t index = 0;
  std::uint32_t weight = 1;
  for (int bit : e.c) {
    index += weight * static_cast<std::uint32_t>(bit);
    weight *= 2;
  }
  for (const auto &p : e.d) {
    const auto [x, y] = dihedral_normal_form(p);
    index += weight * static_cast<std::uint32_t>(2 * x + y);
    weight *= 8;
  }
  return index;
}

inline ProductElement element_at(int k, int l, std::uint32_t index) {
  ProductElement e;
  for (int j = 0; j < l; ++j) {
    e.c.push_back(static_cast<int>(index & 1));
    index >>= 1;
  }
  for (int i = 0; i < k; ++i) {
    const int digit = static_cast<int>(index & 7);
    e.d.push_back(dihedral(digit / 2, digit % 2));
    index >>= 3;
  }
  return e;
}

/// Generators a_i^2, b_i, a_ib_i (per factor), then c_j.
inline std::vector<ProductElement> generators(int k, int l) {
  std::vector<ProductElement> out;
  const auto identity = [&] {
    ProductElement e;
    e.d.assign(static_cast<std::size_t>(k), dihedral(0, 0));
    e.c.assign(static_cast<std::size_t>(l), 0);
    return e;
  };
  for (int i = 0; i < k; ++i)
    for (auto [x, y] : {std::pair{2, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
      auto e = identity();
      e.d[static_cast<std::size_t>(i)] = dihedral(x, y);
      out.push_back(e);
    }
  for (int j = 0; j < l; ++j) {
    auto e = identity();
    e.c[static_cast<std::size_t>(j)] = 1;
    out.push_back(e);
  }
  return out;
}

/// Cayley graph edges {g, s g} built from the permutation model.
inline std::set<std::pair<int, int>> cayley_edges(int k, int l) {
  const auto gens = generators(k, l);
  const std::uint32_t order = (1u << l) << (3 * k);
  std::set<std::pair<int, int>> out;
  for (std::uint32_t v = 0; v < order; ++v) {
    const auto g = element_at(k, l, v);
    for (const auto &s : gens) {
      const int w = static_cast<int>(index_of(product(s, g)));
      if (w != static_cast<int>(v))
        out.insert({std::min<int>(v, w), std::max<int>(v, w)});
    }
  }
  return out;
}

/// VQ_n adjacency from the closed-form rule, applied to label strings
/// x_n ... x_1 (leftmost character is x_n).
inline std::set<std::pair<int, int>> vq_rule_edges(int n) {
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < (1 << n); ++u) {
    std::string x(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
      x[static_cast<std::size_t>(n - i)] = (u >> (i - 1) & 1) ? '1' : '0';
    auto at = [&](std::string &s, int i) -> char & { return s[static_cast<std::size_t>(n - i)]; };
    for (int i = 1; i <= n; ++i) {
      std::string y = x;
      at(y, i) = at(x, i) == '1' ? '0' : '1';
      if (i % 3 == 0) {
        const int sum = ((at(x, i - 1) - '0') + (at(x, i - 2) - '0')) % 2;
        at(y, i - 2) = static_cast<char>('0' + sum);
      }
      const int v = std::stoi(y, nullptr, 2);
      out.insert({std::min(u, v), std::max(u, v)});
    }
  }
  return out;
}

/// Shortest cycle by removing each edge and measuring the BFS distance
/// between its endpoints; 0 for forests.
inline int girth(const Adj &adj) {
  int best = 0;
  const int n = static_cast<int>(adj.size());
  for (const auto &[s, t] : edge_set(adj)) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : adj[v]) {
        if ((v == s && w == t) || (v == t && w == s) || dist[w] != -1)
          continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
    if (dist[t] != -1 && (best == 0 || dist[t] + 1 < best))
      best = dist[t] + 1;
  }
  return best;
}

} // namespace oracle
