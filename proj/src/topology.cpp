#include "hlnet/topology.hpp"

#include "hlnet/dihedral.hpp"
#include "hlnet/error.hpp"
#include "hlnet/graph_ops.hpp"
#include "hlnet/rng.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace hlnet::topology {

namespace {

std::string bit_label(std::uint32_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if ((value >> i) & 1U)
      s[static_cast<std::size_t>(width - 1 - i)] = '1';
  return s;
}

void require_dimension(int n, int lo, int hi, const char *what) {
  if (n < lo || n > hi)
    fail_argument(std::string(what) + ": dimension " + std::to_string(n) + " outside [" +
                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

template <class Int> Int parse_int(std::string_view text, const char *what) {
  Int value{};
  const auto *first = text.data();
  const auto *last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    fail_argument(std::string("invalid ") + what + " '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  return s;
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
    if (depth < 0)
      fail_argument("unbalanced parentheses in topology spec");
  }
  if (depth != 0)
    fail_argument("unbalanced parentheses in topology spec");
  parts.push_back(trim(text.substr(start)));
  return parts;
}

std::string_view strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    return s.substr(1, s.size() - 2);
  return s;
}

MatchingPolicy parse_matching(std::string_view text) {
  MatchingPolicy m;
  if (text == "identity")
    return m;
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    fail_argument("invalid matching '" + std::string(text) + "'");
  const auto head = text.substr(0, open);
  const auto body = text.substr(open + 1, text.size() - open - 2);
  if (head == "seeded") {
    m.kind = MatchingPolicy::Kind::seeded;
    m.seed = parse_int<std::uint64_t>(body, "matching seed");
  } else if (head == "explicit") {
    m.kind = MatchingPolicy::Kind::explicit_map;
    for (auto part : split_top(body, '.'))
      m.map.push_back(parse_int<Vertex>(part, "matching entry"));
  } else {
    fail_argument("unknown matching kind '" + std::string(head) + "'");
  }
  return m;
}

std::map<std::string, std::string_view, std::less<>> parse_params(std::string_view rest) {
  std::map<std::string, std::string_view, std::less<>> params;
  if (rest.empty())
    return params;
  for (auto item : split_top(rest, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail_argument("expected key=value in topology spec, got '" + std::string(item) + "'");
    const std::string key(trim(item.substr(0, eq)));
    if (!params.emplace(key, trim(item.substr(eq + 1))).second)
      fail_argument("duplicate key '" + key + "' in topology spec");
  }
  return params;
}

} // namespace

std::string MatchingPolicy::canonical() const {
  switch (kind) {
  case Kind::identity:
    return "identity";
  case Kind::seeded:
    return "seeded(" + std::to_string(seed) + ")";
  case Kind::explicit_map:
    break;
  }
  std::string out = "explicit(";
  for (std::size_t i = 0; i < map.size(); ++i)
    out += (i ? "." : "") + std::to_string(map[i]);
  return out + ")";
}

TopologySpec TopologySpec::parse(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  const auto family = trim(text.substr(0, colon));
  const auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto params = parse_params(rest);

  auto take = [&](const char *key) -> std::string_view {
    const auto it = params.find(key);
    if (it == params.end())
      fail_argument("topology '" + std::string(family) + "' requires parameter '" + key + "'");
    const auto value = it->second;
    params.erase(it);
    return value;
  };

  TopologySpec spec;
  if (family == "hypercube") {
    spec.family = Family::hypercube;
    spec.n = parse_int<int>(take("n"), "n");
  } else if (family == "vq" || family == "vq-recursive") {
    spec.family = Family::vq_recursive;
    spec.n = parse_int<int>(take("n"), "n");
  } else if (family == "vq-rule") {
    spec.family = Family::vq_rule;
    spec.n = parse_int<int>(take("n"), "n");
  } else if (family == "gamma") {
    spec.family = Family::gamma;
    spec.k = parse_int<int>(take("k"), "k");
    spec.l = parse_int<int>(take("l"), "l");
  } else if (family == "delta") {
    spec.family = Family::delta;
    spec.n = parse_int<int>(take("n"), "n");
  } else if (family == "random-hl") {
    spec.family = Family::random_hl;
    spec.n = parse_int<int>(take("n"), "n");
    spec.seed = parse_int<std::uint64_t>(take("seed"), "seed");
  } else if (family == "g84") {
    spec.family = Family::g84;
  } else if (family == "compose") {
    spec.family = Family::compose;
    spec.left = std::make_shared<TopologySpec>(parse(strip_parens(take("left"))));
    spec.right = std::make_shared<TopologySpec>(parse(strip_parens(take("right"))));
    spec.matching = params.count("matching") ? parse_matching(take("matching")) : MatchingPolicy{};
  } else {
    fail_argument("unknown topology family '" + std::string(family) + "'");
  }
  if (!params.empty())
    fail_argument("unexpected parameter '" + params.begin()->first + "' for topology '" +
                  std::string(family) + "'");

  switch (spec.family) {
  case Family::hypercube:
    require_dimension(spec.n, 1, 20, "hypercube");
    break;
  case Family::vq_recursive:
  case Family::vq_rule:
    require_dimension(spec.n, 1, 16, "vq");
    break;
  case Family::gamma:
    if (spec.k < 0 || spec.l < 0 || 3 * spec.k + spec.l < 1)
      fail_argument("gamma requires k, l >= 0 and 3k + l >= 1");
    require_dimension(3 * spec.k + spec.l, 1, 20, "gamma");
    break;
  case Family::delta:
    require_dimension(spec.n, 1, 20, "delta");
    break;
  case Family::random_hl:
    require_dimension(spec.n, 1, 16, "random-hl");
    break;
  case Family::g84:
    break;
  case Family::compose:
    if (spec.left->dimension() != spec.right->dimension())
      fail_argument("compose requires operands of equal dimension");
    require_dimension(spec.dimension(), 1, 20, "compose");
    break;
  }
  return spec;
}

std::string TopologySpec::canonical() const {
  switch (family) {
  case Family::hypercube:
    return "hypercube:n=" + std::to_string(n);
  case Family::vq_recursive:
  case Family::vq_rule:
    return "vq:n=" + std::to_string(n);
  case Family::gamma:
    return "gamma:k=" + std::to_string(k) + ",l=" + std::to_string(l);
  case Family::delta:
    return "delta:n=" + std::to_string(n);
  case Family::random_hl:
    return "random-hl:n=" + std::to_string(n) + ",seed=" + std::to_string(seed);
  case Family::g84:
    return "g84";
  case Family::compose:
    break;
  }
  return "compose:left=(" + left->canonical() + "),right=(" + right->canonical() +
         "),matching=" + matching.canonical();
}

int TopologySpec::dimension() const {
  switch (family) {
  case Family::gamma:
    return 3 * k + l;
  case Family::g84:
    return 3;
  case Family::compose:
    return left->dimension() + 1;
  default:
    return n;
  }
}

std::pair<int, int> TopologySpec::group_shape() const {
  if (family == Family::gamma)
    return {k, l};
  if (family == Family::delta)
    return {n / 3, n % 3};
  fail_argument("topology '" + canonical() + "' is not a Cayley graph");
}

CompactGraph hypercube(int n) {
  require_dimension(n, 1, 20, "hypercube");
  const std::uint32_t order = 1U << n;
  std::vector<std::vector<Vertex>> rows(order);
  std::vector<std::string> labels(order);
  for (std::uint32_t v = 0; v < order; ++v) {
    for (int i = 0; i < n; ++i)
      rows[v].push_back(v ^ (1U << i));
    labels[v] = bit_label(v, n);
  }
  return CompactGraph::from_rows(std::move(rows), std::move(labels));
}

CompactGraph compose_hl(const CompactGraph &g0, const CompactGraph &g1, std::span<const Vertex> matching) {
  const std::size_t m = g0.order();
  if (g1.order() != m)
    fail_argument("compose requires operands of equal order");
  if (matching.size() != m)
    fail_argument("matching is not total");
  std::vector<bool> hit(m, false);
  for (Vertex t : matching) {
    if (t >= m || hit[t])
      fail_argument("matching is not a bijection");
    hit[t] = true;
  }
  if (2 * m > max_order)
    fail_argument("composed graph exceeds 2^20 vertices");

  std::vector<std::vector<Vertex>> rows(2 * m);
  for (Vertex v = 0; v < m; ++v) {
    const auto a = g0.neighbors(v);
    rows[v].assign(a.begin(), a.end());
    rows[v].push_back(static_cast<Vertex>(m) + matching[v]);
    const auto b = g1.neighbors(v);
    for (Vertex w : b)
      rows[m + v].push_back(static_cast<Vertex>(m) + w);
  }
  for (Vertex v = 0; v < m; ++v)
    rows[m + matching[v]].push_back(v);

  std::vector<std::string> labels;
  if (g0.has_labels() && g1.has_labels()) {
    labels.reserve(2 * m);
    for (Vertex v = 0; v < m; ++v)
      labels.push_back("0" + g0.label(v));
    for (Vertex v = 0; v < m; ++v)
      labels.push_back("1" + g1.label(v));
  }
  return CompactGraph::from_rows(std::move(rows), std::move(labels));
}

std::vector<Vertex> make_matching(const MatchingPolicy &policy, std::size_t order) {
  switch (policy.kind) {
  case MatchingPolicy::Kind::identity:
    break;
  case MatchingPolicy::Kind::seeded: {
    std::vector<Vertex> map(order);
    std::iota(map.begin(), map.end(), Vertex{0});
    Rng rng(policy.seed);
    for (std::size_t i = order; i > 1; --i)
      std::swap(map[i - 1], map[rng.below(i)]);
    return map;
  }
  case MatchingPolicy::Kind::explicit_map:
    if (policy.map.size() != order)
      fail_argument("explicit matching has " + std::to_string(policy.map.size()) + " entries, expected " +
                    std::to_string(order));
    return policy.map;
  }
  std::vector<Vertex> map(order);
  std::iota(map.begin(), map.end(), Vertex{0});
  return map;
}

namespace {

CompactGraph single_vertex() { return CompactGraph::from_rows({{}}, {""}); }

CompactGraph random_hl_rec(int n, std::uint64_t seed) {
  if (n == 0)
    return single_vertex();
  Rng rng(seed);
  const std::uint64_t left_seed = rng.next();
  const std::uint64_t right_seed = rng.next();
  const std::uint64_t matching_seed = rng.next();
  const CompactGraph g0 = random_hl_rec(n - 1, left_seed);
  const CompactGraph g1 = random_hl_rec(n - 1, right_seed);
  MatchingPolicy policy{MatchingPolicy::Kind::seeded, matching_seed, {}};
  return compose_hl(g0, g1, make_matching(policy, g0.order()));
}

} // namespace

CompactGraph random_hl(int n, std::uint64_t seed) {
  require_dimension(n, 1, 16, "random-hl");
  return random_hl_rec(n, seed);
}

CompactGraph vq_recursive(int n) {
  require_dimension(n, 1, 16, "vq");
  CompactGraph g = compose_hl(single_vertex(), single_vertex(), std::vector<Vertex>{0});
  for (int m = 2; m <= n; ++m) {
    const std::uint32_t half = 1U << (m - 1);
    std::vector<Vertex> matching(half);
    for (std::uint32_t x = 0; x < half; ++x) {
      if (m % 3 != 0) {
        matching[x] = x;
      } else {
        // (x_{m-1} x_{m-2}) -> (x_{m-1}, x_{m-1} + x_{m-2}); lower bits unchanged.
        const std::uint32_t top = (x >> (m - 2)) & 1U;
        matching[x] = x ^ (top << (m - 3));
      }
    }
    g = compose_hl(g, g, matching);
  }
  return g;
}

CompactGraph vq_by_rule(int n) {
  require_dimension(n, 1, 16, "vq");
  const std::uint32_t order = 1U << n;
  std::vector<std::vector<Vertex>> rows(order);
  std::vector<std::string> labels(order);
  for (std::uint32_t u = 0; u < order; ++u) {
    for (int i = 1; i <= n; ++i) {
      std::uint32_t v = u ^ (1U << (i - 1));
      if (i % 3 == 0) {
        // y_{i-2} = x_{i-1} + x_{i-2}
        const std::uint32_t carry = (u >> (i - 2)) & 1U;
        v ^= carry << (i - 3);
      }
      rows[u].push_back(v);
    }
    labels[u] = bit_label(u, n);
  }
  return CompactGraph::from_rows(std::move(rows), std::move(labels));
}

CompactGraph gamma(int k, int l) { return group::cayley_graph(group::generating_set(k, l)); }

CompactGraph delta(int n) {
  require_dimension(n, 1, 20, "delta");
  return gamma(n / 3, n % 3);
}

CompactGraph g84() {
  const CompactGraph c4 = hypercube(2);
  return compose_hl(c4, c4, std::vector<Vertex>{0, 1, 3, 2});
}

std::vector<Vertex> vq_iso_map(int n) {
  require_dimension(n, 1, 16, "vq_iso_map");
  const int s = n / 3;
  const int t = n % 3;
  const group::GroupShape shape{s, t};
  const auto gens = group::generating_set(s, t);
  const std::uint32_t order = 1U << n;
  std::vector<Vertex> map(order, 0);
  std::vector<bool> hit(order, false);
  for (std::uint32_t x = 0; x < order; ++x) {
    // Exponent x_i sits on generator i-1 in (a_1^2, b_1, a_1b_1, ..., c_t) order.
    group::Element g = group::Element::identity(shape);
    for (int i = 0; i < n; ++i)
      if ((x >> i) & 1U)
        g = g * gens.elements[static_cast<std::size_t>(i)];
    const auto idx = group::index_of(g);
    if (hit[idx])
      fail_argument("vq_iso_map is not injective at n=" + std::to_string(n));
    hit[idx] = true;
    map[idx] = x;
  }
  return map;
}

CompactGraph build(const TopologySpec &spec) {
  switch (spec.family) {
  case Family::hypercube:
    return hypercube(spec.n);
  case Family::vq_recursive:
    return vq_recursive(spec.n);
  case Family::vq_rule:
    return vq_by_rule(spec.n);
  case Family::gamma:
    return gamma(spec.k, spec.l);
  case Family::delta:
    return delta(spec.n);
  case Family::random_hl:
    return random_hl(spec.n, spec.seed);
  case Family::g84:
    return g84();
  case Family::compose:
    break;
  }
  const CompactGraph g0 = build(*spec.left);
  const CompactGraph g1 = build(*spec.right);
  return compose_hl(g0, g1, make_matching(spec.matching, g0.order()));
}

VerificationReport hl_decompose(int k, int l) {
  Stopwatch clock;
  VerificationReport report;
  report.claim_id = "lemma-hl-decompose";
  report.parameters = {{"k", k}, {"l", l}};

  const auto gens = group::generating_set(k, l);
  const group::GroupShape shape{k, l};
  if (k == 0 && l < 2)
    fail_argument("decompose needs at least two generators");
  const CompactGraph whole = group::cayley_graph(gens);
  report.population.push_back(TopologySpec{Family::gamma, 0, k, l, 0, {}, {}, {}}.canonical());

  const std::string split_name = k > 0 ? "b" + std::to_string(k) : "c" + std::to_string(l);
  const std::size_t split = gens.find(split_name);
  const auto cosets = group::coset_decomposition(gens, split);
  const VertexSet &m = cosets.subgroup;
  const VertexSet other = m.complement();

  // Half isomorphic to Gamma_{k-1,l+2} (or Gamma_{0,l-1}).
  const group::GroupShape half_shape = k > 0 ? group::GroupShape{k - 1, l + 2} : group::GroupShape{0, l - 1};
  const auto half_gens = group::generating_set(half_shape.k, half_shape.l);
  const CompactGraph half = group::cayley_graph(half_gens);

  // Canonical re-indexing G_{k-1,l+2} -> M: shared factors carry over,
  // c_{l+1} -> a_k^2 and c_{l+2} -> a_k b_k.
  auto embed = [&](const group::Element &h) {
    group::Element g(shape);
    for (int i = 0; i < half_shape.k; ++i)
      g.set_dihedral(i, h.rotation(i), h.reflection(i));
    for (int j = 0; j < std::min(l, half_shape.l); ++j)
      g.set_cyclic(j, h.cyclic(j));
    if (k > 0) {
      if (h.cyclic(l) != 0)
        g = g * group::Element::a(shape, k - 1, 2);
      if (h.cyclic(l + 1) != 0)
        g = g * (group::Element::a(shape, k - 1) * group::Element::b(shape, k - 1));
    }
    return g;
  };

  const auto induced = induced_subgraph(whole, m);
  std::vector<Vertex> position(whole.order(), 0);
  for (std::size_t i = 0; i < induced.original.size(); ++i)
    position[induced.original[i]] = static_cast<Vertex>(i);

  std::vector<Vertex> reindex(half.order());
  VertexSet image(whole.order());
  for (std::uint32_t v = 0; v < half.order(); ++v) {
    const auto target = group::index_of(embed(group::element_at(half_shape, v)));
    if (!m.test(target)) {
      report.refute("re-indexing leaves the subgroup", {{"halfVertex", v}, {"image", target}});
      report.elapsed_ms = clock.elapsed_ms();
      return report;
    }
    image.set(target);
    reindex[v] = position[target];
  }
  if (!(image == m))
    report.refute("re-indexing is not onto the subgroup", Json::object());
  else if (!check_isomorphism_by_map(half, induced.graph, reindex))
    report.refute("induced half is not isomorphic to the smaller Cayley graph", Json::object());

  // Cross edges: every u in M has exactly one neighbor outside M, namely b*u.
  const group::Element &b = gens.elements[split];
  std::size_t cross = 0;
  VertexSet matched(whole.order());
  for (Vertex u : m.members()) {
    std::vector<Vertex> outside;
    for (Vertex w : whole.neighbors(u))
      if (!m.test(w))
        outside.push_back(w);
    const auto expected = group::index_of(b * group::element_at(shape, u));
    if (outside.size() != 1 || outside.front() != expected || matched.test(expected)) {
      report.refute("cross edges do not form the b-matching",
                    {{"vertex", u}, {"outsideNeighbors", outside}, {"expected", expected}});
      break;
    }
    matched.set(expected);
    ++cross;
  }
  if (report.verified() && !(matched == other))
    report.refute("cross edges miss part of the second coset", Json::object());

  // Right translation by b is an automorphism carrying M onto M*b.
  if (report.verified()) {
    for (Vertex u = 0; u < whole.order(); ++u) {
      if (m.test(u) == m.test(cosets.right_translation[u])) {
        report.refute("right translation does not swap the cosets", {{"vertex", u}});
        break;
      }
    }
    if (report.verified() && !check_isomorphism_by_map(whole, whole, cosets.right_translation))
      report.refute("right translation is not an automorphism", Json::object());
  }

  report.witness = {{"removedGenerator", split_name},
                    {"subgroupOrder", m.count()},
                    {"halfTopology", TopologySpec{Family::gamma, 0, half_shape.k, half_shape.l, 0, {}, {}, {}}.canonical()},
                    {"crossEdges", cross},
                    {"subgroup", m.members()}};
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

} // namespace hlnet::topology
