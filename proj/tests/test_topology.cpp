#include "hlnet/error.hpp"
#include "hlnet/graph_ops.hpp"
#include "hlnet/topology.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace hlnet;
using topology::TopologySpec;

namespace {

CompactGraph from_spec(const char *text) { return topology::build(TopologySpec::parse(text)); }

} // namespace

TEST_CASE("hypercube matches Hamming adjacency") {
  for (int n = 1; n <= 7; ++n) {
    const auto q = topology::hypercube(n);
    CHECK(q.order() == (std::size_t{1} << n));
    CHECK(oracle::edge_set(q) == oracle::hypercube_edges(n));
  }
  CHECK(topology::hypercube(3).label(5) == "101");
  CHECK_THROWS_AS(topology::hypercube(0), Error);
  CHECK_THROWS_AS(topology::hypercube(21), Error);
}

TEST_CASE("composition of small graphs") {
  const auto k1 = CompactGraph::from_edges(1, std::vector<Edge>{});
  const std::vector<Vertex> single{0};
  const auto k2 = topology::compose_hl(k1, k1, single);
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);

  const std::vector<Vertex> swap{1, 0};
  const auto c4 = topology::compose_hl(k2, k2, swap);
  CHECK(c4.regular_degree() == 2);
  CHECK(girth(c4) == std::size_t{4});

  const std::vector<Vertex> bad{0, 0};
  CHECK_THROWS_AS(topology::compose_hl(k2, k2, bad), Error);
  CHECK_THROWS_AS(topology::compose_hl(k2, k1, single), Error);
}

TEST_CASE("every matching of C4 with C4 gives Q3 or G(8,4)") {
  const auto c4 = topology::hypercube(2);
  const auto q3 = oracle::adjacency_of(topology::hypercube(3));
  const auto other = oracle::adjacency_of(topology::g84());
  CHECK_FALSE(oracle::isomorphic(q3, other));
  std::vector<Vertex> m{0, 1, 2, 3};
  int cube = 0;
  int twisted = 0;
  do {
    const auto adj = oracle::adjacency_of(topology::compose_hl(c4, c4, m));
    if (oracle::isomorphic(adj, q3))
      ++cube;
    else if (oracle::isomorphic(adj, other))
      ++twisted;
  } while (std::next_permutation(m.begin(), m.end()));
  CHECK(cube + twisted == 24);
  CHECK(cube > 0);
  CHECK(twisted > 0);
}

TEST_CASE("matching policies") {
  topology::MatchingPolicy identity;
  CHECK(topology::make_matching(identity, 4) == std::vector<Vertex>{0, 1, 2, 3});
  topology::MatchingPolicy seeded{topology::MatchingPolicy::Kind::seeded, 9, {}};
  auto m = topology::make_matching(seeded, 32);
  CHECK(m == topology::make_matching(seeded, 32));
  std::sort(m.begin(), m.end());
  std::vector<Vertex> all(32);
  std::iota(all.begin(), all.end(), Vertex{0});
  CHECK(m == all);
  topology::MatchingPolicy wrong{topology::MatchingPolicy::Kind::explicit_map, 0, {0, 1}};
  CHECK_THROWS_AS(topology::make_matching(wrong, 4), Error);
}

TEST_CASE("random HL-networks") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = topology::random_hl(2, seed);
    CHECK(g.regular_degree() == 2);
    CHECK(girth(g) == std::size_t{4});
  }
  const auto q3 = oracle::adjacency_of(topology::hypercube(3));
  const auto other = oracle::adjacency_of(topology::g84());
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto adj = oracle::adjacency_of(topology::random_hl(3, seed));
    REQUIRE((oracle::isomorphic(adj, q3) || oracle::isomorphic(adj, other)));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = topology::random_hl(5, seed);
    CHECK(g.regular_degree() == 5);
    CHECK(girth(g) == std::size_t{4});
    CHECK(components(g, g.empty_set()).size() == 1);
  }
  CHECK(oracle::edge_set(topology::random_hl(6, 42)) == oracle::edge_set(topology::random_hl(6, 42)));
  CHECK(oracle::edge_set(topology::random_hl(6, 42)) != oracle::edge_set(topology::random_hl(6, 43)));
}

TEST_CASE("varietal hypercube adjacency") {
  const auto vq3 = topology::vq_by_rule(3);
  CHECK(vq3.adjacent(2, 7));
  CHECK_FALSE(vq3.adjacent(2, 6));
  CHECK(vq3.adjacency(0).members() == std::vector<Vertex>{1, 2, 4});
  CHECK(vq3.adjacency(6).members() == std::vector<Vertex>{3, 4, 7});
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto rule = oracle::vq_rule_edges(n);
    CHECK(oracle::edge_set(topology::vq_by_rule(n)) == rule);
    CHECK(oracle::edge_set(topology::vq_recursive(n)) == rule);
  }
  CHECK_FALSE(is_bipartite(vq3));
  CHECK_FALSE(oracle::isomorphic(oracle::adjacency_of(vq3), oracle::adjacency_of(topology::hypercube(3))));
}

TEST_CASE("vertex map from Delta_n to VQ_n") {
  const auto map = topology::vq_iso_map(3);
  CHECK(map[0] == 0);
  CHECK(map[4] == 1); // a^2
  CHECK(map[1] == 2); // b
  CHECK(map[3] == 4); // ab
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto d = topology::delta(n);
    const auto v = topology::vq_recursive(n);
    const auto m = topology::vq_iso_map(n);
    const auto ed = oracle::edge_set(d);
    std::set<std::pair<int, int>> mapped;
    for (const auto &[a, b] : ed) {
      const int x = static_cast<int>(m[static_cast<std::size_t>(a)]);
      const int y = static_cast<int>(m[static_cast<std::size_t>(b)]);
      mapped.insert({std::min(x, y), std::max(x, y)});
    }
    CHECK(mapped == oracle::edge_set(v));
  }
}

TEST_CASE("Delta_n is Gamma_{n div 3, n mod 3}") {
  for (int n = 1; n <= 9; ++n)
    CHECK(oracle::edge_set(topology::delta(n)) == oracle::edge_set(topology::gamma(n / 3, n % 3)));
}

TEST_CASE("topology specs parse and canonicalise") {
  CHECK(TopologySpec::parse("hypercube:n=3").canonical() == "hypercube:n=3");
  CHECK(TopologySpec::parse("vq-rule:n=4").canonical() == "vq:n=4");
  CHECK(TopologySpec::parse("vq-recursive:n=4").canonical() == "vq:n=4");
  CHECK(TopologySpec::parse("g84").canonical() == "g84");
  CHECK(TopologySpec::parse("random-hl:n=6,seed=42").canonical() == "random-hl:n=6,seed=42");
  const char *composed = "compose:left=(hypercube:n=2),right=(hypercube:n=2),matching=explicit(0.1.3.2)";
  CHECK(TopologySpec::parse(composed).canonical() == composed);
  CHECK(TopologySpec::parse(composed).dimension() == 3);
  CHECK(TopologySpec::parse("delta:n=9").group_shape() == std::pair{3, 0});
  CHECK(TopologySpec::parse("gamma:k=2,l=1").dimension() == 7);
  CHECK(TopologySpec::parse("delta:n=9").is_cayley());
  CHECK_FALSE(TopologySpec::parse("vq:n=5").is_cayley());

  for (const char *bad : {"nope", "hypercube", "hypercube:n=x", "gamma:k=1", "hypercube:n=3,m=2", "hypercube:n=0",
                          "compose:left=(hypercube:n=2),right=(hypercube:n=1)",
                          "compose:left=(hypercube:n=2),right=(hypercube:n=2),matching=explicit(0.0.1.2)",
                          "gamma:k=0,l=0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(from_spec(bad), Error);
  }
}

TEST_CASE("composed spec builds the expected graph") {
  const auto g = from_spec("compose:left=(hypercube:n=2),right=(hypercube:n=2),matching=identity");
  CHECK(oracle::edge_set(g) == oracle::hypercube_edges(3));
}

TEST_CASE("Cayley graphs split along b into index-two halves") {
  for (auto [k, l] : {std::pair{1, 0}, std::pair{1, 2}, std::pair{2, 0}, std::pair{0, 3}, std::pair{2, 1}}) {
    CAPTURE(k);
    CAPTURE(l);
    const auto report = topology::hl_decompose(k, l);
    CHECK(report.verified());
  }
}
