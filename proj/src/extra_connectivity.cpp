#include "hlnet/extra_connectivity.hpp"

#include "hlnet/error.hpp"
#include "hlnet/graph_ops.hpp"
#include "hlnet/progress.hpp"
#include "hlnet/rng.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <memory>

namespace hlnet::extra {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// Advances `idx` (strictly increasing, values < n) to the next combination
/// in lexicographic order, leaving positions below `fixed` untouched.
bool next_combination(std::vector<Vertex> &idx, std::size_t fixed, std::size_t n) {
  const std::size_t c = idx.size();
  std::size_t j = c;
  while (j > fixed) {
    --j;
    if (idx[j] < n - (c - j)) {
      ++idx[j];
      for (std::size_t t = j + 1; t < c; ++t)
        idx[t] = idx[t - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Lexicographic chunks of the c-subsets of [0, n): one per prefix of length
/// min(c, 2).
struct ChunkPlan {
  std::size_t n;
  std::size_t c;
  std::size_t prefix;
  std::vector<std::array<Vertex, 2>> prefixes;

  ChunkPlan(std::size_t order, std::size_t cardinality)
      : n(order), c(cardinality), prefix(std::min<std::size_t>(cardinality, 2)) {
    if (prefix == 1) {
      for (Vertex a = 0; a < n; ++a)
        prefixes.push_back({a, 0});
    } else {
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          prefixes.push_back({a, b});
    }
  }

  /// Visits every combination with the chunk's prefix in lexicographic order
  /// until visit() returns true. Returns whether it stopped early.
  template <class Visit> bool run(std::size_t chunk, Visit &&visit) const {
    std::vector<Vertex> idx(c);
    for (std::size_t i = 0; i < prefix; ++i)
      idx[i] = prefixes[chunk][i];
    for (std::size_t i = prefix; i < c; ++i)
      idx[i] = idx[i - 1] + 1;
    if (c > 0 && idx[c - 1] >= n)
      return false;
    do {
      if (visit(idx))
        return true;
    } while (next_combination(idx, prefix, n));
    return false;
  }
};

/// R_g-cutset test on graphs with at most 64 vertices using word masks.
class MaskTester {
public:
  MaskTester(const CompactGraph &g, int extra) : need_(static_cast<unsigned>(extra) + 1) {
    rows_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex w : g.neighbors(v))
        rows_[v] |= std::uint64_t{1} << w;
    full_ = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  }

  bool operator()(std::span<const Vertex> s) const {
    std::uint64_t removed = 0;
    for (Vertex v : s)
      removed |= std::uint64_t{1} << v;
    std::uint64_t rest = full_ & ~removed;
    if (static_cast<unsigned>(std::popcount(rest)) < 2 * need_)
      return false;
    int parts = 0;
    while (rest != 0) {
      std::uint64_t part = rest & (0 - rest);
      std::uint64_t frontier = part;
      while (frontier != 0) {
        std::uint64_t reach = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1)
          reach |= rows_[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = reach & rest & ~part;
        part |= frontier;
      }
      if (static_cast<unsigned>(std::popcount(part)) < need_)
        return false;
      rest &= ~part;
      ++parts;
    }
    return parts >= 2;
  }

private:
  unsigned need_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> rows_;
};

class SetTester {
public:
  SetTester(const CompactGraph &g, int extra) : graph_(g), extra_(extra) {}

  bool operator()(std::span<const Vertex> s) const {
    return is_rg_cutset(graph_, VertexSet::of(graph_.order(), s), extra_);
  }

private:
  const CompactGraph &graph_;
  int extra_;
};

template <class Tester>
std::optional<std::vector<Vertex>> first_cutset(const Tester &test, std::size_t order, std::size_t cardinality,
                                                unsigned threads) {
  const ChunkPlan plan(order, cardinality);
  std::atomic<std::size_t> best_chunk{none};
  std::vector<std::vector<Vertex>> found(plan.prefixes.size());
  detail::for_each_chunk(plan.prefixes.size(), threads, [&](std::size_t chunk, unsigned) {
    if (chunk > best_chunk.load())
      return;
    std::size_t visits = 0;
    plan.run(chunk, [&](const std::vector<Vertex> &s) {
      if ((++visits & 0xFFFF) == 0 && best_chunk.load() < chunk)
        return true;
      if (!test(s))
        return false;
      found[chunk] = s;
      std::size_t current = best_chunk.load();
      while (chunk < current && !best_chunk.compare_exchange_weak(current, chunk)) {
      }
      return true;
    });
  });
  const std::size_t best = best_chunk.load();
  if (best == none)
    return std::nullopt;
  return found[best];
}

template <class Tester>
std::vector<std::vector<Vertex>> every_cutset(const Tester &test, std::size_t order, std::size_t cardinality,
                                              unsigned threads) {
  const ChunkPlan plan(order, cardinality);
  std::vector<std::vector<std::vector<Vertex>>> per_chunk(plan.prefixes.size());
  detail::for_each_chunk(plan.prefixes.size(), threads, [&](std::size_t chunk, unsigned) {
    plan.run(chunk, [&](const std::vector<Vertex> &s) {
      if (test(s))
        per_chunk[chunk].push_back(s);
      return false;
    });
  });
  std::vector<std::vector<Vertex>> out;
  for (auto &chunk : per_chunk)
    for (auto &s : chunk)
      out.push_back(std::move(s));
  return out;
}

/// Incremental state for rooted connected-set extension.
class ConnectedSetWalker {
public:
  explicit ConnectedSetWalker(const CompactGraph &g) : graph_(g), cover_(g.order(), 0) {}

  template <class Visit> void run_root(Vertex root, std::size_t min_size, std::size_t max_size, Visit &visit) {
    add(root);
    std::vector<Vertex> ext;
    for (Vertex w : graph_.neighbors(root))
      if (w > root)
        ext.push_back(w);
    extend(ext, root, min_size, max_size, visit);
    remove(root);
  }

  /// 0 marks vertices outside A ∪ N(A).
  const std::vector<std::uint32_t> &cover() const { return cover_; }

private:
  template <class Visit>
  void extend(std::vector<Vertex> ext, Vertex root, std::size_t min_size, std::size_t max_size, Visit &visit) {
    if (members_.size() >= min_size)
      visit(std::span<const Vertex>(members_), covered_ - members_.size());
    if (members_.size() == max_size)
      return;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      // Exclusive neighbors of w: beyond the root and outside N[A].
      for (Vertex u : graph_.neighbors(w))
        if (u > root && cover_[u] == 0)
          next.push_back(u);
      add(w);
      extend(std::move(next), root, min_size, max_size, visit);
      remove(w);
    }
  }

  void bump(Vertex v) {
    if (cover_[v]++ == 0)
      ++covered_;
  }
  void drop(Vertex v) {
    if (--cover_[v] == 0)
      --covered_;
  }
  void add(Vertex w) {
    members_.push_back(w);
    bump(w);
    for (Vertex u : graph_.neighbors(w))
      bump(u);
  }
  void remove(Vertex w) {
    members_.pop_back();
    drop(w);
    for (Vertex u : graph_.neighbors(w))
      drop(u);
  }

  const CompactGraph &graph_;
  std::vector<std::uint32_t> cover_;
  std::vector<Vertex> members_;
  std::size_t covered_ = 0;
};

/// Components of G - (A ∪ N(A)) all have >= need vertices and there is one.
bool rest_is_large(const CompactGraph &g, const std::vector<std::uint32_t> &cover, std::size_t need,
                   std::vector<std::uint32_t> &seen, std::uint32_t &epoch, std::vector<Vertex> &stack) {
  ++epoch;
  bool any = false;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (cover[root] != 0 || seen[root] == epoch)
      continue;
    any = true;
    std::size_t size = 0;
    seen[root] = epoch;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v))
        if (cover[w] == 0 && seen[w] != epoch) {
          seen[w] = epoch;
          stack.push_back(w);
        }
    }
    if (size < need)
      return false;
  }
  return any;
}

Json sizes_json(const std::vector<std::size_t> &sizes) { return Json(sizes); }

} // namespace

std::int64_t f_value(std::int64_t n, std::int64_t g) {
  if (n < 1 || g < 0)
    fail_argument("f_n(g) requires n >= 1 and g >= 0");
  return n * (g + 1) - g * (g + 3) / 2;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
  case CertificateKind::exact:
    return "exact";
  case CertificateKind::upper_bound:
    return "upper-bound";
  case CertificateKind::lower_bound_cited:
    break;
  }
  return "lower-bound-cited";
}

VerificationReport f_monotonicity_check(int n) {
  if (n < 4)
    fail_argument("f monotonicity check requires n >= 4");
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "f-monotone";
  r.parameters = {{"n", n}};
  std::vector<std::int64_t> values;
  for (int g = 0; g <= n; ++g)
    values.push_back(f_value(n, g));
  for (int g = 1; g <= n - 2; ++g)
    if (values[static_cast<std::size_t>(g)] <= values[static_cast<std::size_t>(g - 1)])
      r.refute("not strictly increasing", {{"g", g}, {"f(g-1)", values[static_cast<std::size_t>(g - 1)]},
                                           {"f(g)", values[static_cast<std::size_t>(g)]}});
  const auto at = [&](int g) { return values[static_cast<std::size_t>(g)]; };
  const std::int64_t max_value = static_cast<std::int64_t>(n) * (n - 1) / 2 + 1;
  if (*std::max_element(values.begin(), values.end()) != max_value || at(n - 2) != max_value)
    r.refute("maximum is not f_n(n-2) = n(n-1)/2 + 1", {{"f(n-2)", at(n - 2)}, {"expected", max_value}});
  if (at(n - 1) != at(n - 2))
    r.refute("f_n(n-1) != f_n(n-2)", {{"f(n-1)", at(n - 1)}, {"f(n-2)", at(n - 2)}});
  if (!(at(n - 2) > at(n)))
    r.refute("f_n(n-2) <= f_n(n)", {{"f(n-2)", at(n - 2)}, {"f(n)", at(n)}});
  if (at(n) != at(n - 3))
    r.refute("f_n(n) != f_n(n-3)", {{"f(n)", at(n)}, {"f(n-3)", at(n - 3)}});
  for (int g = 0; g <= n - 4; ++g)
    if (!(at(n - 3) > at(g)))
      r.refute("f_n(n-3) <= f_n(g)", {{"g", g}});
  r.witness = {{"values", values}, {"maximum", max_value}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport f_sum_inequality_check(int n_max) {
  if (n_max < 4)
    fail_argument("f sum inequality check requires nmax >= 4");
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "f-sum-inequality";
  r.parameters = {{"nmax", n_max}};
  std::size_t checked = 0;
  std::size_t excluded = 0;
  for (int n = 4; n <= n_max; ++n)
    for (int g1 = 0; g1 <= n - 2; ++g1)
      for (int g2 = 0; g2 <= n - 2; ++g2)
        for (int g = 0; g <= n - 3; ++g) {
          if (!(g1 + g2 + 2 > g + 1)) {
            ++excluded;
            continue;
          }
          ++checked;
          const auto lhs = f_value(n - 1, g1) + f_value(n - 1, g2);
          const auto rhs = f_value(n, g) + 1;
          if (lhs < rhs)
            r.refute("inequality violated",
                     {{"n", n}, {"g1", g1}, {"g2", g2}, {"g", g}, {"lhs", lhs}, {"rhs", rhs}});
        }
  r.witness = {{"triplesChecked", checked}, {"triplesExcluded", excluded}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

bool is_rg_cutset(const CompactGraph &g, const VertexSet &s, int extra) {
  if (extra < 0)
    fail_argument("g must be non-negative");
  const auto sizes = component_sizes(g, s);
  if (sizes.size() < 2)
    return false;
  return sizes.back() >= static_cast<std::size_t>(extra) + 1;
}

CutsetCertificate exact_extra_connectivity(const CompactGraph &g, int extra, std::size_t max_cardinality,
                                           SearchOptions options) {
  if (extra < 0)
    fail_argument("g must be non-negative");
  const std::size_t order = g.order();
  max_cardinality = std::min(max_cardinality, order);
  CutsetCertificate cert;
  cert.kind = CertificateKind::exact;
  cert.extra = extra;
  for (std::size_t c = 1; c <= max_cardinality; ++c) {
    std::optional<std::vector<Vertex>> hit;
    if (order <= 64)
      hit = first_cutset(MaskTester(g, extra), order, c, options.threads);
    else
      hit = first_cutset(SetTester(g, extra), order, c, options.threads);
    if (hit) {
      cert.value = c;
      cert.witness = *hit;
      cert.cutset = *hit;
      cert.component_sizes = component_sizes(g, VertexSet::of(order, *hit));
      cert.budget = {{"maxCardinality", max_cardinality}, {"exhaustedBelow", c}};
      return cert;
    }
    report_progress("exact g=" + std::to_string(extra) + ": cardinality " + std::to_string(c) +
                    " exhausted (" + std::to_string(binomial(order, c)) + " subsets)");
  }
  cert.outcome = SearchOutcome::bounded;
  cert.budget = {{"maxCardinality", max_cardinality}, {"exhaustedThrough", max_cardinality}};
  return cert;
}

std::vector<std::vector<Vertex>> all_rg_cutsets(const CompactGraph &g, int extra, std::size_t cardinality,
                                                SearchOptions options) {
  if (extra < 0)
    fail_argument("g must be non-negative");
  if (cardinality == 0 || cardinality > g.order())
    return {};
  if (g.order() <= 64)
    return every_cutset(MaskTester(g, extra), g.order(), cardinality, options.threads);
  return every_cutset(SetTester(g, extra), g.order(), cardinality, options.threads);
}

void for_each_connected_set(const CompactGraph &g, std::size_t min_size, std::size_t max_size,
                            const ConnectedSetVisitor &visit) {
  if (min_size < 1)
    min_size = 1;
  if (max_size < min_size)
    return;
  ConnectedSetWalker walker(g);
  auto forward = [&](std::span<const Vertex> members, std::size_t boundary) { visit(members, boundary); };
  for (Vertex root = 0; root < g.order(); ++root)
    walker.run_root(root, min_size, max_size, forward);
}

CutsetCertificate upper_bound_by_small_side(const CompactGraph &g, int extra, std::size_t size_cap,
                                            SearchOptions options) {
  if (extra < 0)
    fail_argument("g must be non-negative");
  const std::size_t need = static_cast<std::size_t>(extra) + 1;
  if (size_cap < need)
    fail_argument("size cap must be at least g+1");
  if (size_cap > g.order() / 2)
    fail_argument("size cap must not exceed half the graph order");

  struct Best {
    std::size_t value = none;
    std::vector<Vertex> side;
  };
  const unsigned workers = detail::resolve_threads(options.threads);
  std::vector<Best> per_root(g.order());
  std::atomic<std::size_t> global_best{none};

  struct Scratch {
    std::unique_ptr<ConnectedSetWalker> walker;
    std::vector<std::uint32_t> seen;
    std::uint32_t epoch = 0;
    std::vector<Vertex> stack;
  };
  std::vector<Scratch> scratch(workers);

  detail::for_each_chunk(g.order(), options.threads, [&](std::size_t root, unsigned worker) {
    Scratch &s = scratch[worker];
    if (!s.walker) {
      s.walker = std::make_unique<ConnectedSetWalker>(g);
      s.seen.assign(g.order(), 0);
    }
    Best &best = per_root[root];
    auto visit = [&](std::span<const Vertex> members, std::size_t boundary) {
      if (boundary > best.value || boundary > global_best.load())
        return;
      if (g.order() < members.size() + boundary + need)
        return;
      std::vector<Vertex> sorted(members.begin(), members.end());
      std::sort(sorted.begin(), sorted.end());
      if (boundary == best.value && !(sorted < best.side))
        return;
      if (!rest_is_large(g, s.walker->cover(), need, s.seen, s.epoch, s.stack))
        return;
      best.value = boundary;
      best.side = std::move(sorted);
      std::size_t current = global_best.load();
      while (boundary < current && !global_best.compare_exchange_weak(current, boundary)) {
      }
    };
    s.walker->run_root(static_cast<Vertex>(root), need, size_cap, visit);
  });

  CutsetCertificate cert;
  cert.kind = CertificateKind::upper_bound;
  cert.extra = extra;
  cert.budget = {{"sizeCap", size_cap}, {"minSize", need}};
  const Best *winner = nullptr;
  for (const auto &b : per_root)
    if (b.value != none && (winner == nullptr || b.value < winner->value ||
                            (b.value == winner->value && b.side < winner->side)))
      winner = &b;
  if (winner == nullptr) {
    cert.outcome = SearchOutcome::bounded;
    return cert;
  }
  const VertexSet side = VertexSet::of(g.order(), winner->side);
  const VertexSet cut = neighborhood(g, side);
  cert.value = winner->value;
  cert.witness = winner->side;
  cert.cutset = cut.members();
  cert.component_sizes = component_sizes(g, cut);
  return cert;
}

StarNeighborhood min_star_neighborhood(const group::GeneratingSet &gens, const CompactGraph &graph, int extra) {
  if (extra < 0)
    fail_argument("g must be non-negative");
  if (graph.order() != gens.shape.order())
    fail_argument("graph does not match the generating set");
  const std::size_t leaves = static_cast<std::size_t>(extra);
  if (leaves > gens.size())
    fail_argument("star needs g <= number of generators");

  std::vector<Vertex> leaf_vertex;
  for (const auto &s : gens.elements)
    leaf_vertex.push_back(group::index_of(s));

  StarNeighborhood out;
  std::vector<Vertex> idx(leaves);
  for (std::size_t i = 0; i < leaves; ++i)
    idx[i] = static_cast<Vertex>(i);
  std::vector<Vertex> star;
  std::vector<Vertex> around;
  do {
    ++out.leaf_sets;
    bool independent = true;
    for (std::size_t i = 0; i < leaves && independent; ++i)
      for (std::size_t j = i + 1; j < leaves && independent; ++j)
        if (graph.adjacent(leaf_vertex[idx[i]], leaf_vertex[idx[j]]))
          independent = false;
    if (!independent)
      continue;
    ++out.star_sets;
    star.assign(1, 0);
    for (Vertex i : idx)
      star.push_back(leaf_vertex[i]);
    std::sort(star.begin(), star.end());
    around.clear();
    for (Vertex v : star)
      for (Vertex w : graph.neighbors(v))
        if (!std::binary_search(star.begin(), star.end(), w))
          around.push_back(w);
    std::sort(around.begin(), around.end());
    const auto size = static_cast<std::size_t>(std::unique(around.begin(), around.end()) - around.begin());
    if (!out.value || size < *out.value) {
      out.value = size;
      out.leaves.assign(idx.begin(), idx.end());
      out.star = star;
    }
  } while (leaves > 0 && next_combination(idx, 0, gens.size()));

  if (out.value) {
    const VertexSet cut = neighborhood(graph, VertexSet::of(graph.order(), out.star));
    out.cutset_valid = is_rg_cutset(graph, cut, extra);
  }
  return out;
}

int hl_dimension(const CompactGraph &g) {
  const std::size_t order = g.order();
  if (order < 2 || !std::has_single_bit(order))
    fail_argument("expected an HL-network (order must be a power of two)");
  const int n = std::countr_zero(order);
  const auto d = g.regular_degree();
  if (!d || *d != static_cast<std::size_t>(n))
    fail_argument("expected an HL-network (must be n-regular on 2^n vertices)");
  return n;
}

bool big_component_check(const CompactGraph &g, const VertexSet &s, int extra, int k01) {
  const int n = hl_dimension(g);
  if (n < 5)
    fail_argument("big component check requires n >= 5");
  if (extra < 0 || extra > n - 3)
    fail_argument("big component check requires 0 <= g <= n-3");
  if (k01 != 0 && k01 != 1)
    fail_argument("k must be 0 or 1");
  if (s.capacity() != g.order())
    fail_argument("vertex set capacity does not match graph order");
  const auto budget = f_value(n, extra) - k01;
  if (static_cast<std::int64_t>(s.count()) > budget)
    fail_argument("|S| exceeds f_n(g) - k");
  const auto sizes = component_sizes(g, s);
  const std::size_t largest = sizes.empty() ? 0 : sizes.front();
  const auto bound = static_cast<std::int64_t>(g.order()) - static_cast<std::int64_t>(s.count()) - (extra + 1 - k01);
  return static_cast<std::int64_t>(largest) >= bound;
}

VerificationReport hyper_kg_check(const CompactGraph &g, int extra, const VertexSet &s) {
  Stopwatch clock;
  VerificationReport r;
  r.claim_id = "hyper-kappa-g";
  r.parameters = {{"g", extra}};
  const auto sizes = component_sizes(g, s);
  const bool ok = sizes.size() == 2 && (sizes[0] == static_cast<std::size_t>(extra) + 1 ||
                                        sizes[1] == static_cast<std::size_t>(extra) + 1);
  if (ok)
    r.witness = {{"cutset", s.members()}, {"componentSizes", sizes_json(sizes)}};
  else
    r.refute("G - S is not two components with one of size g+1",
             {{"cutset", s.members()}, {"componentSizes", sizes_json(sizes)}});
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport neighborhood_bound_check(const CompactGraph &g, int gmax, std::size_t exhaustive_cap,
                                            std::size_t samples, std::uint64_t seed) {
  Stopwatch clock;
  const int n = hl_dimension(g);
  if (gmax < 0)
    fail_argument("gmax must be non-negative");
  VerificationReport r;
  r.claim_id = "neighborhood-bound";
  r.parameters = {{"gmax", gmax}, {"exhaustiveCap", exhaustive_cap}, {"samples", samples}, {"seed", seed}};
  r.seeds.push_back(seed);

  const std::size_t order = g.order();
  std::vector<std::uint32_t> stamp(order, 0);
  std::vector<bool> inside(order, false);
  std::uint32_t epoch = 0;
  auto boundary = [&](std::span<const Vertex> u) {
    for (Vertex v : u)
      inside[v] = true;
    ++epoch;
    std::size_t count = 0;
    for (Vertex v : u)
      for (Vertex w : g.neighbors(v))
        if (!inside[w] && stamp[w] != epoch) {
          stamp[w] = epoch;
          ++count;
        }
    for (Vertex v : u)
      inside[v] = false;
    return count;
  };

  Rng rng(seed);
  Json rows = Json::array();
  for (int extra = 0; extra <= gmax; ++extra) {
    const std::size_t size = static_cast<std::size_t>(extra) + 1;
    if (size > order)
      break;
    if (2 * n < extra + 2)
      fail_argument("n must be at least ceil((g+2)/2) for g=" + std::to_string(extra));
    const auto bound = f_value(n, extra);
    std::size_t best = none;
    std::vector<Vertex> best_set;
    std::size_t tested = 0;
    const bool exhaustive = size <= exhaustive_cap;
    auto consider = [&](const std::vector<Vertex> &u) {
      ++tested;
      const auto b = boundary(u);
      if (b < best) {
        best = b;
        best_set = u;
      }
    };
    if (exhaustive) {
      std::vector<Vertex> idx(size);
      for (std::size_t i = 0; i < size; ++i)
        idx[i] = static_cast<Vertex>(i);
      do
        consider(idx);
      while (next_combination(idx, 0, order));
    } else {
      std::vector<Vertex> pool(order);
      for (std::size_t i = 0; i < order; ++i)
        pool[i] = static_cast<Vertex>(i);
      for (std::size_t t = 0; t < samples; ++t) {
        for (std::size_t i = 0; i < size; ++i)
          std::swap(pool[i], pool[i + rng.below(order - i)]);
        std::vector<Vertex> u(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(u.begin(), u.end());
        consider(u);
      }
    }
    rows.push_back({{"size", size},
                    {"f", bound},
                    {"minBoundary", best},
                    {"exhaustive", exhaustive},
                    {"tested", tested},
                    {"argmin", best_set}});
    if (tested > 0 && static_cast<std::int64_t>(best) < bound)
      r.refute("|N(U)| below f_n(|U|-1)", {{"set", best_set}, {"boundary", best}, {"f", bound}});
  }
  r.witness = {{"n", n}, {"sizes", rows}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

} // namespace hlnet::extra
