#include "hlnet/lemmas.hpp"

#include "hlnet/dihedral.hpp"
#include "hlnet/error.hpp"
#include "hlnet/extra_connectivity.hpp"
#include "hlnet/graph_ops.hpp"
#include "hlnet/progress.hpp"
#include "hlnet/rng.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace hlnet::verify {

namespace {

using extra::f_value;
using topology::TopologySpec;

VerificationReport start(std::string id, Json parameters) {
  VerificationReport r;
  r.claim_id = std::move(id);
  r.parameters = std::move(parameters);
  return r;
}

std::vector<Vertex> sorted(std::span<const Vertex> members) {
  std::vector<Vertex> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

bool next_combination(std::vector<std::size_t> &idx, std::size_t n) {
  const std::size_t c = idx.size();
  for (std::size_t j = c; j-- > 0;) {
    if (idx[j] < n - (c - j)) {
      ++idx[j];
      for (std::size_t t = j + 1; t < c; ++t)
        idx[t] = idx[t - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t c) {
  std::vector<std::size_t> idx(c);
  for (std::size_t i = 0; i < c; ++i)
    idx[i] = i;
  return idx;
}

std::vector<Vertex> common(const CompactGraph &g, Vertex u, Vertex w) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(w);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Json shape_json(const ShapeClass &shape) { return {{"kind", to_string(shape.kind)}, {"anchors", shape.anchors}}; }

/// Folds a per-instance report into an aggregate one.
void absorb(VerificationReport &total, const VerificationReport &part, const Json &key) {
  Json row = key;
  row["status"] = to_string(part.status);
  if (!part.witness.is_null())
    row["witness"] = part.witness;
  if (!total.witness.is_object())
    total.witness = Json::object();
  total.witness["instances"].push_back(std::move(row));
  if (part.status == ReportStatus::refuted) {
    Json counter = key;
    counter["counterwitness"] = part.counterwitness;
    total.refute(part.detail, counter);
  } else if (part.status == ReportStatus::bounded && total.status == ReportStatus::verified) {
    total.status = ReportStatus::bounded;
    total.detail = part.detail;
  }
  for (auto seed : part.seeds)
    if (std::find(total.seeds.begin(), total.seeds.end(), seed) == total.seeds.end())
      total.seeds.push_back(seed);
  for (const auto &p : part.population)
    if (std::find(total.population.begin(), total.population.end(), p) == total.population.end())
      total.population.push_back(p);
  total.notes.insert(total.notes.end(), part.notes.begin(), part.notes.end());
}

/// Shared sweep for the star and component lemmas: every connected A with
/// |A| <= max_size and |N(A)| = f_n(|A|-1) must have an accepted shape.
template <class Accept>
void optimal_shape_sweep(VerificationReport &r, const CompactGraph &g, int n, std::size_t max_size, Accept accept,
                         bool assert_shapes) {
  std::vector<std::size_t> connected(max_size + 1, 0);
  std::vector<std::size_t> optimal(max_size + 1, 0);
  std::vector<std::map<std::string, std::size_t>> shapes(max_size + 1);
  Json exceptions = Json::array();
  std::size_t exception_count = 0;
  extra::for_each_connected_set(g, 1, max_size, [&](std::span<const Vertex> members, std::size_t boundary) {
    const std::size_t size = members.size();
    ++connected[size];
    if (static_cast<std::int64_t>(boundary) != f_value(n, static_cast<std::int64_t>(size) - 1))
      return;
    ++optimal[size];
    const auto set = sorted(members);
    const auto shape = classify_induced(g, VertexSet::of(g.order(), set));
    ++shapes[size][to_string(shape.kind) + (shape.kind == ShapeClass::Kind::path
                                                ? "(" + std::to_string(size) + " vertices)"
                                                : "")];
    if (accept(shape, size))
      return;
    ++exception_count;
    if (exceptions.size() < 16)
      exceptions.push_back({{"set", set}, {"boundary", boundary}, {"shape", shape_json(shape)}});
  });
  Json rows = Json::array();
  for (std::size_t size = 1; size <= max_size; ++size) {
    Json counts = Json::object();
    for (const auto &[name, count] : shapes[size])
      counts[name] = count;
    rows.push_back({{"size", size},
                    {"f", f_value(n, static_cast<std::int64_t>(size) - 1)},
                    {"connectedSets", connected[size]},
                    {"optimalSets", optimal[size]},
                    {"optimalShapes", counts}});
  }
  r.witness = {{"sizes", rows}, {"exceptions", exception_count}};
  if (exception_count > 0) {
    if (assert_shapes)
      r.refute("an optimal connected set has a disallowed shape", exceptions.front());
    else
      r.witness["observedExceptions"] = exceptions;
  }
}

group::GeneratingSet require_small_gamma(int k, int l, std::size_t max_order) {
  if (k < 0 || l < 0 || 3 * k + l < 1 || 3 * k + l > 20)
    fail_argument("(k, l) must satisfy k, l >= 0 and 1 <= 3k+l <= 20");
  const group::GroupShape shape{k, l};
  if (shape.order() > max_order)
    fail_argument("group order " + std::to_string(shape.order()) + " exceeds " + std::to_string(max_order));
  return group::generating_set(k, l);
}

std::string gamma_name(int k, int l) { return "gamma:k=" + std::to_string(k) + ",l=" + std::to_string(l); }

} // namespace

VerificationReport verify_star_lemma(int n, int gmax, bool explore) {
  if (n == 3 && !explore)
    fail_argument("n = 3 is outside the lemma's range; pass explore=1 to record observations");
  if (n < 3 || n > 5)
    fail_argument("lemma-star requires n in {4, 5}");
  if (gmax < 0 || gmax > 5)
    fail_argument("lemma-star requires 0 <= gmax <= 5");
  Stopwatch clock;
  auto r = start("lemma-star", {{"n", n}, {"gmax", gmax}, {"explore", explore}});
  const auto q = topology::hypercube(n);
  r.population.push_back("hypercube:n=" + std::to_string(n));
  const bool asserted = n >= 4;
  optimal_shape_sweep(
      r, q, n, static_cast<std::size_t>(gmax) + 1,
      [](const ShapeClass &shape, std::size_t) { return shape.kind == ShapeClass::Kind::star; }, asserted);
  if (!asserted) {
    r.status = ReportStatus::bounded;
    r.detail = "exploratory run at n=3: shapes recorded, nothing asserted";
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_hyper_kappa(const std::vector<TopologySpec> &specs, RunOptions options) {
  Stopwatch clock;
  Json names = Json::array();
  for (const auto &s : specs)
    names.push_back(s.canonical());
  auto r = start("lemma-hyper-kappa", {{"topologies", names}});
  for (const auto &spec : specs) {
    const int n = spec.dimension();
    if (n < 2 || n > 5)
      fail_argument("lemma-hyper-kappa requires dimensions 2..5: " + spec.canonical());
    const auto g = topology::build(spec);
    auto part = start("lemma-hyper-kappa", {});
    part.population.push_back(spec.canonical());
    const auto cert = extra::exact_extra_connectivity(g, 0, g.order(), {options.threads});
    if (!cert.value) {
      part.refute("graph has no disconnecting set", Json::object());
    } else {
      const auto cuts = extra::all_rg_cutsets(g, 0, *cert.value, {options.threads});
      part.witness = {{"kappa", *cert.value}, {"minimumCuts", cuts.size()}};
      if (*cert.value != static_cast<std::size_t>(n))
        part.refute("minimum disconnecting set size differs from n", {{"kappa", *cert.value}, {"n", n}});
      for (const auto &cut : cuts) {
        const auto sizes = component_sizes(g, VertexSet::of(g.order(), cut));
        if (sizes.size() != 2 || sizes.back() != 1) {
          part.refute("minimum cut does not isolate exactly one vertex", {{"cutset", cut}, {"componentSizes", sizes}});
          break;
        }
      }
    }
    absorb(r, part, {{"spec", spec.canonical()}});
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_unique_common_neighbor(int k, int l) {
  Stopwatch clock;
  const auto gens = require_small_gamma(k, l, 4096);
  auto r = start("lemma-common-neighbor", {{"k", k}, {"l", l}});
  r.population.push_back(gamma_name(k, l));
  const auto g = group::cayley_graph(gens);
  const auto shape = gens.shape;

  // pairs[v][i] = {b_i v, a_ib_i v}, sorted.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> pairs(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto element = group::element_at(shape, v);
    for (int i = 0; i < k; ++i) {
      Vertex u = group::index_of(gens.elements[static_cast<std::size_t>(3 * i + 1)] * element);
      Vertex w = group::index_of(gens.elements[static_cast<std::size_t>(3 * i + 2)] * element);
      pairs[v].emplace_back(std::min(u, w), std::max(u, w));
    }
  }

  std::size_t pairs_examined = 0;
  std::size_t unique_pairs = 0;
  for (Vertex v = 0; v < g.order() && r.status != ReportStatus::refuted; ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++pairs_examined;
        const auto cn = common(g, nb[i], nb[j]);
        if (cn.size() != 1)
          continue;
        ++unique_pairs;
        const std::pair<Vertex, Vertex> p{nb[i], nb[j]};
        if (std::find(pairs[v].begin(), pairs[v].end(), p) == pairs[v].end())
          r.refute("pair with a unique common neighbor is not {b_i v, a_ib_i v}",
                   {{"v", v}, {"u", nb[i]}, {"w", nb[j]}});
      }
  }
  std::size_t converse = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    for (const auto &[u, w] : pairs[v]) {
      ++converse;
      const auto cn = common(g, u, w);
      if (cn.size() != 1 || cn.front() != v)
        r.refute("{b_i v, a_ib_i v} does not have v as its only common neighbor",
                 {{"v", v}, {"u", u}, {"w", w}, {"common", cn}});
    }
  r.witness = {{"vertices", g.order()},
               {"neighborPairs", pairs_examined},
               {"uniqueCommonNeighborPairs", unique_pairs},
               {"conversePairsChecked", converse}};
  if (r.verified() && k == 0)
    r.detail = "verified vacuously: no dihedral factor, no pair has a unique common neighbor";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_component_lemma(int k, int l, int gmax) {
  Stopwatch clock;
  const auto gens = require_small_gamma(k, l, 4096);
  const int n = 3 * k + l;
  if (n < 5)
    fail_argument("lemma-component requires n = 3k+l >= 5");
  if (gmax < 0 || gmax > n - 4)
    fail_argument("lemma-component requires 0 <= gmax <= n-4");
  auto r = start("lemma-component", {{"k", k}, {"l", l}, {"gmax", gmax}});
  r.population.push_back(gamma_name(k, l));
  const auto g = group::cayley_graph(gens);
  optimal_shape_sweep(
      r, g, n, static_cast<std::size_t>(gmax) + 1,
      [](const ShapeClass &shape, std::size_t size) {
        return shape.kind == ShapeClass::Kind::star || (shape.kind == ShapeClass::Kind::path && size == 4);
      },
      true);
  if (gmax >= 3) {
    std::size_t paths = 0;
    for (const auto &row : r.witness["sizes"])
      if (row["size"] == 4 && row["optimalShapes"].contains("path(4 vertices)"))
        paths = row["optimalShapes"]["path(4 vertices)"].get<std::size_t>();
    r.notes.push_back("optimal 4-vertex paths observed: " + std::to_string(paths));
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_counterexample(int k, int g) {
  if (k < 5 || k > 6)
    fail_argument("thm-cor requires k in {5, 6}");
  if (g < 2 * k + 1 || g > 3 * k - 4)
    fail_argument("thm-cor requires 2k+1 <= g <= 3k-4");
  Stopwatch clock;
  const int n = 3 * k;
  auto r = start("thm-cor", {{"k", k}, {"g", g}});
  r.population.push_back(gamma_name(k, 0));
  const auto gens = group::generating_set(k, 0);
  report_progress("building " + gamma_name(k, 0));
  const auto graph = group::cayley_graph(gens);
  report_progress("sweeping star leaf sets");
  const auto star = extra::min_star_neighborhood(gens, graph, g);

  const auto f = f_value(n, g);
  const auto expected_sets = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(g));
  if (star.leaf_sets != expected_sets)
    r.refute("leaf-set sweep was not exhaustive", {{"leafSets", star.leaf_sets}, {"expected", expected_sets}});
  if (!star.value)
    r.refute("no leaf set induces a star", Json::object());
  else if (static_cast<std::int64_t>(*star.value) < f + 1)
    r.refute("a star attains a neighborhood of at most f_n(g)",
             {{"leaves", star.leaves}, {"star", star.star}, {"boundary", *star.value}, {"f", f}});

  // Pigeonhole: g > 2k forces some factor to contribute both b_i and a_ib_i.
  std::size_t without_pair = 0;
  auto idx = first_combination(static_cast<std::size_t>(g));
  do {
    bool has_pair = false;
    for (int i = 0; i < k && !has_pair; ++i) {
      const auto b = static_cast<std::size_t>(3 * i + 1);
      has_pair = std::binary_search(idx.begin(), idx.end(), b) && std::binary_search(idx.begin(), idx.end(), b + 1);
    }
    if (!has_pair) {
      if (without_pair == 0)
        r.refute("leaf set without a {b_i, a_ib_i} pair", {{"leaves", idx}});
      ++without_pair;
    }
  } while (next_combination(idx, static_cast<std::size_t>(n)));

  Json pair_rows = Json::array();
  for (int i = 0; i < k; ++i) {
    const auto bi = group::index_of(gens.elements[static_cast<std::size_t>(3 * i + 1)]);
    const auto abi = group::index_of(gens.elements[static_cast<std::size_t>(3 * i + 2)]);
    const auto cn = common(graph, bi, abi);
    pair_rows.push_back({{"pair", {gens.names[static_cast<std::size_t>(3 * i + 1)],
                                   gens.names[static_cast<std::size_t>(3 * i + 2)]}},
                         {"commonNeighbors", cn}});
    if (cn != std::vector<Vertex>{0})
      r.refute("{b_i, a_ib_i} has a common neighbor other than the identity",
               {{"b", bi}, {"ab", abi}, {"common", cn}});
  }

  Json leaf_names = Json::array();
  for (auto i : star.leaves)
    leaf_names.push_back(gens.names[i]);
  r.witness = {{"n", n},
               {"f", f},
               {"required", f + 1},
               {"leafSets", star.leaf_sets},
               {"starSets", star.star_sets},
               {"minimumStarNeighborhood", star.value ? Json(*star.value) : Json()},
               {"bestLeaves", leaf_names},
               {"bestStar", star.star},
               {"bestStarCutsetIsRg", star.cutset_valid},
               {"leafSetsWithoutPair", without_pair},
               {"pairs", pair_rows}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_vq_upper_bound(int n, int gmax) {
  const int s = n / 3;
  const int t = n % 3;
  if (s < 3)
    fail_argument("thm-varietal requires n = 3s+t with s >= 3");
  if (n > 12)
    fail_argument("thm-varietal requires 2^n <= 4096");
  if (gmax < 0 || gmax > n - s)
    fail_argument("thm-varietal requires 0 <= gmax <= n-s");
  Stopwatch clock;
  auto r = start("thm-varietal", {{"n", n}, {"gmax", gmax}});
  r.population.push_back("delta:n=" + std::to_string(n));
  const auto gens = group::generating_set(s, t);
  const auto graph = group::cayley_graph(gens);

  std::vector<std::size_t> prime;
  for (int i = 0; i < s; ++i) {
    prime.push_back(static_cast<std::size_t>(3 * i));
    prime.push_back(static_cast<std::size_t>(3 * i + 1));
  }
  for (int j = 0; j < t; ++j)
    prime.push_back(static_cast<std::size_t>(3 * s + j));

  Json rows = Json::array();
  for (int g = 0; g <= gmax; ++g) {
    std::vector<Vertex> members{0};
    Json names = Json::array();
    for (int j = 0; j < g; ++j) {
      const auto gen = prime[static_cast<std::size_t>(j)];
      members.push_back(group::index_of(gens.elements[gen]));
      names.push_back(gens.names[gen]);
    }
    const auto set = VertexSet::of(graph.order(), members);
    const auto shape = classify_induced(graph, set);
    const auto boundary = neighborhood(graph, set).count();
    const auto f = f_value(n, g);
    rows.push_back({{"g", g}, {"leaves", names}, {"shape", shape_json(shape)}, {"boundary", boundary}, {"f", f}});
    if (shape.kind != ShapeClass::Kind::star || shape.anchors != std::vector<Vertex>{0})
      r.refute("prefix set is not a star centered at the identity", {{"g", g}, {"set", sorted(members)}});
    if (static_cast<std::int64_t>(boundary) != f)
      r.refute("|N(V')| differs from f_n(g)", {{"g", g}, {"set", sorted(members)}, {"boundary", boundary}, {"f", f}});
  }

  std::size_t pairs = 0;
  for (std::size_t i = 0; i < prime.size(); ++i)
    for (std::size_t j = i + 1; j < prime.size(); ++j) {
      ++pairs;
      const auto &a = gens.elements[prime[i]];
      const auto &b = gens.elements[prime[j]];
      const auto product = group::index_of(a * b);
      std::vector<Vertex> expected{0, product};
      std::sort(expected.begin(), expected.end());
      const auto cn = common(graph, group::index_of(a), group::index_of(b));
      if (product == 0 || cn != expected)
        r.refute("generator pair does not have exactly the common neighbors e and aa'",
                 {{"a", gens.names[prime[i]]}, {"b", gens.names[prime[j]]}, {"common", cn}});
    }
  r.witness = {{"s", s}, {"t", t}, {"prefixes", rows}, {"generatorPairs", pairs}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_corollary23(const std::vector<TopologySpec> &specs, int g, RunOptions options) {
  if (g != 2 && g != 3)
    fail_argument("cor-kappa23 requires g in {2, 3}");
  Stopwatch clock;
  Json names = Json::array();
  for (const auto &s : specs)
    names.push_back(s.canonical());
  auto r = start("cor-kappa23", {{"g", g}, {"topologies", names}});
  const int nmin = g == 2 ? 5 : 6;
  for (const auto &spec : specs) {
    const int n = spec.dimension();
    if (n < nmin || n > 8)
      fail_argument("cor-kappa23 requires dimensions " + std::to_string(nmin) + "..8: " + spec.canonical());
    const auto graph = topology::build(spec);
    const auto f = f_value(n, g);
    auto part = start("cor-kappa23", {});
    part.population.push_back(spec.canonical());

    std::optional<std::vector<Vertex>> witness;
    std::string method;
    if (spec.nests_subnetworks()) {
      // Vertices 0..2^g-1 form the first g-dimensional sub-network.
      const std::size_t sub_order = std::size_t{1} << g;
      std::vector<Vertex> range(sub_order);
      for (std::size_t i = 0; i < sub_order; ++i)
        range[i] = static_cast<Vertex>(i);
      const auto sub = induced_subgraph(graph, VertexSet::of(graph.order(), range));
      extra::hl_dimension(sub.graph);
      extra::for_each_connected_set(
          sub.graph, static_cast<std::size_t>(g) + 1, static_cast<std::size_t>(g) + 1,
          [&](std::span<const Vertex> members, std::size_t) {
            std::vector<Vertex> a;
            for (Vertex v : members)
              a.push_back(sub.original[v]);
            std::sort(a.begin(), a.end());
            const auto set = VertexSet::of(graph.order(), a);
            const auto kind = classify_induced(graph, set).kind;
            if (kind != ShapeClass::Kind::star && kind != ShapeClass::Kind::path)
              return;
            if (static_cast<std::int64_t>(neighborhood(graph, set).count()) != f)
              return;
            if (!witness || a < *witness)
              witness = a;
          });
      if (witness)
        method = "sub-network";
    }
    std::optional<std::size_t> searched;
    if (!witness) {
      const auto cert = extra::upper_bound_by_small_side(graph, g, static_cast<std::size_t>(g) + 1, {options.threads});
      searched = cert.value;
      if (cert.value && static_cast<std::int64_t>(*cert.value) == f) {
        witness = cert.witness;
        method = "small-side search";
      }
    }
    if (!witness) {
      part.refute("no connected A with |A| = g+1 and |N(A)| = f_n(g)",
                  {{"f", f}, {"smallSideMinimum", searched ? Json(*searched) : Json()}});
    } else {
      const auto set = VertexSet::of(graph.order(), *witness);
      const auto cut = neighborhood(graph, set);
      const auto shape = classify_induced(graph, set);
      part.witness = {{"method", method},
                      {"A", *witness},
                      {"shape", shape_json(shape)},
                      {"boundary", cut.count()},
                      {"f", f}};
      if (!extra::is_rg_cutset(graph, cut, g))
        part.refute("N(A) is not an R_g-cutset", {{"A", *witness}, {"cutset", cut.members()}});
    }
    absorb(r, part, {{"spec", spec.canonical()}, {"n", n}});
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_big_component_lemma(int n, int g, std::size_t trials, std::uint64_t seed) {
  if (n < 5 || n > 6)
    fail_argument("lemma-structure requires n in {5, 6}");
  if (g < 0 || g > n - 3)
    fail_argument("lemma-structure requires 0 <= g <= n-3");
  Stopwatch clock;
  auto r = start("lemma-structure", {{"n", n}, {"g", g}, {"trials", trials}, {"seed", seed}});
  r.seeds.push_back(seed);
  Rng rng(seed);
  std::vector<CompactGraph> instances;
  for (int i = 0; i < 5; ++i) {
    TopologySpec spec;
    spec.family = topology::Family::random_hl;
    spec.n = n;
    spec.seed = rng.next();
    r.population.push_back(spec.canonical());
    instances.push_back(topology::build(spec));
  }
  const std::size_t order = instances.front().order();

  auto check = [&](std::size_t instance, const std::vector<Vertex> &s, int k01) {
    const auto &graph = instances[instance];
    const auto set = VertexSet::of(order, s);
    if (extra::big_component_check(graph, set, g, k01))
      return true;
    r.refute("largest component below 2^n - |S| - (g+1-k)",
             {{"spec", r.population[instance]},
              {"k", k01},
              {"S", s},
              {"componentSizes", component_sizes(graph, set)}});
    return false;
  };

  Json rows = Json::array();
  for (int k01 = 0; k01 <= 1; ++k01) {
    const auto budget = static_cast<std::size_t>(f_value(n, g) - k01);
    std::vector<Vertex> pool(order);
    for (std::size_t i = 0; i < order; ++i)
      pool[i] = static_cast<Vertex>(i);
    std::size_t passed = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const auto size = static_cast<std::size_t>(rng.below(budget + 1));
      for (std::size_t i = 0; i < size; ++i)
        std::swap(pool[i], pool[i + rng.below(order - i)]);
      std::vector<Vertex> s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
      std::sort(s.begin(), s.end());
      if (!check(trial % instances.size(), s, k01))
        break;
      ++passed;
    }
    Json row = {{"k", k01}, {"maxCutset", budget}, {"randomTrialsPassed", passed}};
    if (n == 5 && g == 0 && r.verified()) {
      std::size_t exhaustive = 0;
      for (std::size_t size = 0; size <= budget && r.verified(); ++size) {
        if (size == 0) {
          ++exhaustive;
          check(0, {}, k01);
          continue;
        }
        auto idx = first_combination(size);
        do {
          ++exhaustive;
          if (!check(0, std::vector<Vertex>(idx.begin(), idx.end()), k01))
            break;
        } while (next_combination(idx, order));
      }
      row["exhaustiveSubsets"] = exhaustive;
      row["exhaustiveInstance"] = r.population.front();
    }
    rows.push_back(row);
  }
  r.witness = {{"cases", rows}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_extra_zero(const std::vector<TopologySpec> &specs, int gmin, int gmax,
                                     RunOptions options) {
  Stopwatch clock;
  Json names = Json::array();
  for (const auto &s : specs)
    names.push_back(s.canonical());
  auto r = start("thm-extra-0", {{"topologies", names}, {"gmin", gmin}, {"gmax", gmax}});
  for (const auto &spec : specs) {
    const int n = spec.dimension();
    if (n < 5)
      fail_argument("thm-extra-0 requires n >= 5: " + spec.canonical());
    const auto graph = topology::build(spec);
    if (graph.order() > 64)
      fail_argument("thm-extra-0 searches exhaustively and accepts at most 64 vertices: " + spec.canonical());
    if (gmin < 0 || gmax > n - 3 || gmin > gmax)
      fail_argument("thm-extra-0 requires 0 <= gmin <= gmax <= n-3");
    for (int g = gmin; g <= gmax; ++g) {
      auto part = start("thm-extra-0", {});
      part.population.push_back(spec.canonical());
      const auto f = f_value(n, g);
      report_progress(spec.canonical() + ": exhaustive R_" + std::to_string(g) + "-cutset search");
      const auto cert = extra::exact_extra_connectivity(graph, g, static_cast<std::size_t>(f), {options.threads});
      if (cert.value && static_cast<std::int64_t>(*cert.value) < f) {
        part.refute("R_g-cutset smaller than f_n(g)",
                    {{"cutset", cert.cutset}, {"componentSizes", cert.component_sizes}, {"f", f}});
      } else if (!cert.value) {
        part.witness = {{"f", f}, {"kappaAtMostF", false}};
        part.notes.push_back(spec.canonical() + " g=" + std::to_string(g) + ": no R_g-cutset of size <= f_n(g)");
      } else {
        const auto cuts = extra::all_rg_cutsets(graph, g, static_cast<std::size_t>(f), {options.threads});
        for (const auto &cut : cuts) {
          const auto check = extra::hyper_kg_check(graph, g, VertexSet::of(graph.order(), cut));
          if (!check.verified()) {
            part.refute("minimum R_g-cutset is not hyper-kappa_g", check.counterwitness);
            break;
          }
        }
        part.witness = {{"f", f}, {"kappa", *cert.value}, {"minimumCutsets", cuts.size()}, {"first", cert.cutset}};
      }
      if (g == n - 3)
        part.notes.push_back(spec.canonical() + " g=" + std::to_string(g) + " is the boundary case g = n-3");
      absorb(r, part, {{"spec", spec.canonical()}, {"g", g}});
    }
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_girth_common(const std::vector<TopologySpec> &specs) {
  Stopwatch clock;
  Json names = Json::array();
  for (const auto &s : specs)
    names.push_back(s.canonical());
  auto r = start("girth-common", {{"topologies", names}});
  for (const auto &spec : specs) {
    if (spec.dimension() < 2)
      fail_argument("girth-common requires n >= 2: " + spec.canonical());
    const auto graph = topology::build(spec);
    auto part = start("girth-common", {});
    part.population.push_back(spec.canonical());
    const auto girth_value = girth(graph);
    const auto common_max = max_common_neighbors(graph);
    part.witness = {{"girth", girth_value ? Json(*girth_value) : Json()}, {"maxCommonNeighbors", common_max}};
    if (!girth_value || *girth_value != 4)
      part.refute("girth differs from 4", part.witness);
    else if (common_max != 2)
      part.refute("maximum number of common neighbors differs from 2", part.witness);
    absorb(r, part, {{"spec", spec.canonical()}});
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_neighborhood_bound(const std::vector<TopologySpec> &specs, int gmax,
                                             std::size_t exhaustive_cap, std::size_t samples, std::uint64_t seed) {
  Stopwatch clock;
  Json names = Json::array();
  for (const auto &s : specs)
    names.push_back(s.canonical());
  auto r = start("neighborhood-bound", {{"topologies", names},
                                        {"gmax", gmax},
                                        {"cap", exhaustive_cap},
                                        {"samples", samples},
                                        {"seed", seed}});
  for (const auto &spec : specs) {
    const auto graph = topology::build(spec);
    auto part = extra::neighborhood_bound_check(graph, gmax, exhaustive_cap, samples, seed);
    part.population.push_back(spec.canonical());
    absorb(r, part, {{"spec", spec.canonical()}});
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_vq_isomorphism(int nmin, int nmax) {
  if (nmin < 1 || nmax > 12 || nmin > nmax)
    fail_argument("iso-vq-delta requires 1 <= nmin <= nmax <= 12");
  Stopwatch clock;
  auto r = start("iso-vq-delta", {{"nmin", nmin}, {"nmax", nmax}});
  Json rows = Json::array();
  for (int n = nmin; n <= nmax; ++n) {
    r.population.push_back("delta:n=" + std::to_string(n));
    r.population.push_back("vq:n=" + std::to_string(n));
    const auto map = topology::vq_iso_map(n);
    const bool ok = check_isomorphism_by_map(topology::delta(n), topology::vq_recursive(n), map);
    rows.push_back({{"n", n}, {"isomorphism", ok}});
    if (!ok)
      r.refute("vq_iso_map is not an isomorphism", {{"n", n}});
  }
  r.witness = {{"dimensions", rows}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_vq_rule(int nmin, int nmax) {
  if (nmin < 1 || nmax > 16 || nmin > nmax)
    fail_argument("vq-rule requires 1 <= nmin <= nmax <= 16");
  Stopwatch clock;
  auto r = start("vq-rule", {{"nmin", nmin}, {"nmax", nmax}});
  Json rows = Json::array();
  for (int n = nmin; n <= nmax; ++n) {
    r.population.push_back("vq:n=" + std::to_string(n));
    const auto rule = topology::vq_by_rule(n).edges();
    const auto recursive = topology::vq_recursive(n).edges();
    rows.push_back({{"n", n}, {"edges", rule.size()}, {"identical", rule == recursive}});
    if (rule != recursive) {
      std::vector<Edge> diff;
      std::set_symmetric_difference(rule.begin(), rule.end(), recursive.begin(), recursive.end(),
                                    std::back_inserter(diff));
      r.refute("edge sets differ", {{"n", n}, {"edge", {diff.front().first, diff.front().second}}});
    }
  }
  r.witness = {{"dimensions", rows}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_f_monotone(int nmin, int nmax) {
  if (nmin < 4 || nmin > nmax)
    fail_argument("f-monotone requires 4 <= nmin <= nmax");
  Stopwatch clock;
  auto r = start("f-monotone", {{"nmin", nmin}, {"nmax", nmax}});
  for (int n = nmin; n <= nmax; ++n)
    absorb(r, extra::f_monotonicity_check(n), {{"n", n}});
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace {

/// Typed access to claim parameters given as strings or integers. Every
/// value read is recorded in `resolved`; leftover keys are rejected.
class Params {
public:
  Params(const Json &raw, std::string claim) : claim_(std::move(claim)) {
    if (raw.is_null())
      return;
    if (!raw.is_object())
      fail_argument("claim parameters must be an object");
    for (auto it = raw.begin(); it != raw.end(); ++it) {
      if (it.value().is_string())
        raw_[it.key()] = it.value().get<std::string>();
      else if (it.value().is_number_integer() || it.value().is_number_unsigned() || it.value().is_boolean())
        raw_[it.key()] = it.value().is_boolean() ? std::to_string(it.value().get<bool>() ? 1 : 0) : it.value().dump();
      else
        fail_argument("parameter " + it.key() + " must be a string or an integer");
    }
  }

  bool has(const std::string &key) const { return raw_.count(key) != 0; }

  std::int64_t integer(const std::string &key, std::int64_t fallback) {
    const auto value = has(key) ? parse_int(key, take(key)) : fallback;
    resolved[key] = value;
    return value;
  }

  std::uint64_t unsigned_integer(const std::string &key, std::uint64_t fallback) {
    const auto value = has(key) ? parse_unsigned(key, take(key)) : fallback;
    resolved[key] = value;
    return value;
  }

  std::pair<int, int> range(const std::string &key, int lo, int hi) {
    if (has(key)) {
      const auto text = take(key);
      const auto dots = text.find("..");
      if (dots == std::string::npos) {
        lo = hi = static_cast<int>(parse_int(key, text));
      } else {
        lo = static_cast<int>(parse_int(key, text.substr(0, dots)));
        hi = static_cast<int>(parse_int(key, text.substr(dots + 2)));
      }
    }
    if (lo > hi)
      fail_argument("parameter " + key + " is an empty range");
    resolved[key] = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
    return {lo, hi};
  }

  std::vector<TopologySpec> specs(const std::string &key, const std::string &fallback) {
    const std::string text = has(key) ? take(key) : fallback;
    std::vector<TopologySpec> out;
    std::string joined;
    std::size_t begin = 0;
    while (begin <= text.size()) {
      auto end = text.find(';', begin);
      if (end == std::string::npos)
        end = text.size();
      const auto item = text.substr(begin, end - begin);
      if (!item.empty())
        for (const auto &one : expand_seed_range(item)) {
          out.push_back(TopologySpec::parse(one));
          joined += (joined.empty() ? "" : ";") + out.back().canonical();
        }
      begin = end + 1;
    }
    if (out.empty())
      fail_argument("parameter " + key + " lists no topology");
    resolved[key] = joined;
    return out;
  }

  void finish() const {
    for (const auto &[key, value] : raw_)
      if (used_.count(key) == 0)
        fail_argument("claim " + claim_ + " has no parameter '" + key + "'");
  }

  Json resolved = Json::object();

private:
  std::string take(const std::string &key) {
    used_.insert(key);
    return raw_.at(key);
  }

  /// "random-hl:n=4,seed=1..5" stands for one spec per seed.
  static std::vector<std::string> expand_seed_range(const std::string &text) {
    const auto pos = text.find("seed=");
    if (pos == std::string::npos)
      return {text};
    const auto dots = text.find("..", pos);
    if (dots == std::string::npos)
      return {text};
    auto tail = text.find_first_of(",)", dots);
    if (tail == std::string::npos)
      tail = text.size();
    const auto lo = parse_unsigned("seed", text.substr(pos + 5, dots - pos - 5));
    const auto hi = parse_unsigned("seed", text.substr(dots + 2, tail - dots - 2));
    if (lo > hi || hi - lo >= 1000)
      fail_argument("seed range must be ascending and list at most 1000 seeds");
    std::vector<std::string> out;
    for (auto seed = lo; seed <= hi; ++seed)
      out.push_back(text.substr(0, pos + 5) + std::to_string(seed) + text.substr(tail));
    return out;
  }

  static std::uint64_t parse_unsigned(const std::string &key, const std::string &text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      fail_argument("parameter " + key + " must be a non-negative integer, got '" + text + "'");
    return value;
  }

  static std::int64_t parse_int(const std::string &key, const std::string &text) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      fail_argument("parameter " + key + " must be an integer, got '" + text + "'");
    return value;
  }

  std::string claim_;
  std::map<std::string, std::string> raw_;
  std::set<std::string> used_;
};

int as_int(std::int64_t v, const char *key) {
  if (v < -1000000 || v > 1000000)
    fail_argument(std::string("parameter ") + key + " out of range");
  return static_cast<int>(v);
}

const char *const default_hl_sample = "hypercube:n=6;random-hl:n=6,seed=1;vq:n=7;delta:n=8";

} // namespace

const std::vector<ClaimInfo> &claims() {
  static const std::vector<ClaimInfo> table = {
      {"f-monotone", "f_n(g) increases strictly up to g=n-2, then the stated plateau and drop", "n=4..20"},
      {"f-sum-inequality", "f_{n-1}(g1) + f_{n-1}(g2) >= f_n(g) + 1 whenever g1+g2+2 > g+1", "nmax=12"},
      {"neighborhood-bound", "|N(U)| >= f_n(|U|-1) for small vertex sets U",
       "topologies=hypercube:n=4;random-hl:n=5,seed=1 gmax=2 cap=3 samples=1000 seed=1"},
      {"girth-common", "girth 4 and at most two common neighbors",
       "topologies=hypercube:n=4;g84;vq:n=5;delta:n=6;random-hl:n=5,seed=1"},
      {"lemma-star", "optimal connected sets in Q_n induce stars", "n=4 gmax=4 explore=0"},
      {"lemma-hyper-kappa", "every minimum vertex cut isolates a single vertex",
       "topologies=hypercube:n=3;g84;random-hl:n=4,seed=1..5"},
      {"lemma-structure", "G - S keeps a component of >= 2^n - |S| - (g+1-k) vertices",
       "n=5 g=0 trials=1000 seed=1"},
      {"thm-extra-0", "kappa_g >= f_n(g) and minimum R_g-cutsets are hyper-kappa_g",
       "topologies=hypercube:n=5;random-hl:n=5,seed=1 g=0..1"},
      {"cor-kappa23", "witness A with |N(A)| = 3n-5 (g=2) or 4n-9 (g=3)",
       std::string("topologies=") + default_hl_sample + " g=2"},
      {"iso-vq-delta", "Delta_n is isomorphic to VQ_n under the explicit map", "n=1..10"},
      {"vq-rule", "closed-form VQ_n adjacency equals the recursive construction", "n=1..12"},
      {"thm-varietal", "star prefixes of a_i^2, b_i, c_j in Delta_n attain f_n(g)", "n=9 gmax=n-floor(n/3)"},
      {"lemma-hl-decompose", "Gamma_{k,l} splits into two Gamma_{k-1,l+2} halves joined by a perfect matching",
       "k=1 l=0"},
      {"lemma-common-neighbor", "unique common neighbors come exactly from {b_i v, a_ib_i v}", "k=1 l=0"},
      {"lemma-component", "optimal connected sets in Gamma_{k,l} are stars or 4-vertex paths", "k=2 l=0 gmax=2"},
      {"thm-cor", "every star in Gamma_{k,0} has |N| > f_{3k}(g) for g = 2k+1", "k=5 g=2k+1"},
  };
  return table;
}

VerificationReport run_claim(const std::string &id, const Json &raw, RunOptions options) {
  Params p(raw, id);
  VerificationReport r;
  if (id == "f-monotone") {
    const auto [lo, hi] = p.range("n", 4, 20);
    p.finish();
    r = verify_f_monotone(lo, hi);
  } else if (id == "f-sum-inequality") {
    const int nmax = as_int(p.integer("nmax", 12), "nmax");
    p.finish();
    r = extra::f_sum_inequality_check(nmax);
  } else if (id == "neighborhood-bound") {
    const auto specs = p.specs("topologies", "hypercube:n=4;random-hl:n=5,seed=1");
    const int gmax = as_int(p.integer("gmax", 2), "gmax");
    const auto cap = p.unsigned_integer("cap", 3);
    const auto samples = p.unsigned_integer("samples", 1000);
    const auto seed = p.unsigned_integer("seed", 1);
    p.finish();
    r = verify_neighborhood_bound(specs, gmax, cap, samples, seed);
  } else if (id == "girth-common") {
    const auto specs = p.specs("topologies", "hypercube:n=4;g84;vq:n=5;delta:n=6;random-hl:n=5,seed=1");
    p.finish();
    r = verify_girth_common(specs);
  } else if (id == "lemma-star") {
    const int n = as_int(p.integer("n", 4), "n");
    const int gmax = as_int(p.integer("gmax", 4), "gmax");
    const bool explore = p.integer("explore", 0) != 0;
    p.finish();
    r = verify_star_lemma(n, gmax, explore);
  } else if (id == "lemma-hyper-kappa") {
    const auto specs = p.specs("topologies", "hypercube:n=3;g84;random-hl:n=4,seed=1..5");
    p.finish();
    r = verify_hyper_kappa(specs, options);
  } else if (id == "lemma-structure") {
    const int n = as_int(p.integer("n", 5), "n");
    const int g = as_int(p.integer("g", 0), "g");
    const auto trials = p.unsigned_integer("trials", 1000);
    const auto seed = p.unsigned_integer("seed", 1);
    p.finish();
    r = verify_big_component_lemma(n, g, trials, seed);
  } else if (id == "thm-extra-0") {
    const auto specs = p.specs("topologies", "hypercube:n=5;random-hl:n=5,seed=1");
    const auto [lo, hi] = p.range("g", 0, 1);
    p.finish();
    r = verify_extra_zero(specs, lo, hi, options);
  } else if (id == "cor-kappa23") {
    const auto specs = p.specs("topologies", default_hl_sample);
    const int g = as_int(p.integer("g", 2), "g");
    p.finish();
    r = verify_corollary23(specs, g, options);
  } else if (id == "iso-vq-delta") {
    const auto [lo, hi] = p.range("n", 1, 10);
    p.finish();
    r = verify_vq_isomorphism(lo, hi);
  } else if (id == "vq-rule") {
    const auto [lo, hi] = p.range("n", 1, 12);
    p.finish();
    r = verify_vq_rule(lo, hi);
  } else if (id == "thm-varietal") {
    const auto [lo, hi] = p.range("n", 9, 9);
    const bool fixed_gmax = p.has("gmax");
    const int gmax = fixed_gmax ? as_int(p.integer("gmax", 0), "gmax") : -1;
    p.finish();
    r = start("thm-varietal", {});
    Stopwatch clock;
    for (int n = lo; n <= hi; ++n)
      absorb(r, verify_vq_upper_bound(n, fixed_gmax ? gmax : n - n / 3), {{"n", n}});
    r.elapsed_ms = clock.elapsed_ms();
  } else if (id == "lemma-hl-decompose") {
    const int k = as_int(p.integer("k", 1), "k");
    const int l = as_int(p.integer("l", 0), "l");
    p.finish();
    r = topology::hl_decompose(k, l);
  } else if (id == "lemma-common-neighbor") {
    const int k = as_int(p.integer("k", 1), "k");
    const int l = as_int(p.integer("l", 0), "l");
    p.finish();
    r = verify_unique_common_neighbor(k, l);
  } else if (id == "lemma-component") {
    const int k = as_int(p.integer("k", 2), "k");
    const int l = as_int(p.integer("l", 0), "l");
    const int gmax = as_int(p.integer("gmax", 2), "gmax");
    p.finish();
    r = verify_component_lemma(k, l, gmax);
  } else if (id == "thm-cor") {
    const int k = as_int(p.integer("k", 5), "k");
    const int g = as_int(p.integer("g", 2 * k + 1), "g");
    p.finish();
    r = verify_counterexample(k, g);
  } else {
    fail_argument("unknown claim '" + id + "'");
  }
  r.claim_id = id;
  r.parameters = p.resolved;
  return r;
}

} // namespace hlnet::verify
