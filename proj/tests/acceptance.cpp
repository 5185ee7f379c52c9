// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Library results are cross-checked against the
// test-side oracles wherever the instance is small enough.

#include "hlnet/dihedral.hpp"
#include "hlnet/extra_connectivity.hpp"
#include "hlnet/graph_ops.hpp"
#include "hlnet/lemmas.hpp"
#include "hlnet/topology.hpp"

#include "oracles.hpp"
#include "process.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace hlnet;
using topology::TopologySpec;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;

  void expect(bool condition, const std::string &what) {
    if (!condition && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &name, double limit_ms, const std::function<void(Outcome &)> &body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception &e) {
    outcome.expect(false, std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  outcome.expect(ms <= limit_ms, "time limit exceeded");
  if (!outcome.ok)
    ++failures;
  std::printf("%s %2d %-56s %10.1f ms (limit %.0f ms)%s%s\n", outcome.ok ? "PASS" : "FAIL", id, name.c_str(), ms,
              limit_ms, outcome.ok ? "" : "  ", outcome.why.c_str());
  std::fflush(stdout);
}

CompactGraph build(const std::string &spec) { return topology::build(TopologySpec::parse(spec)); }

std::vector<int> bits_to_list(std::uint32_t bits, int order) {
  std::vector<int> out;
  for (int v = 0; v < order; ++v)
    if (bits >> v & 1)
      out.push_back(v);
  return out;
}

int edges_within(const oracle::Adj &adj, const std::vector<int> &set) {
  int count = 0;
  for (int u : set)
    for (int w : adj[u])
      count += std::find(set.begin(), set.end(), w) != set.end();
  return count / 2;
}

bool induces_star(const oracle::Adj &adj, const std::vector<int> &set) {
  if (set.size() <= 2)
    return true;
  if (edges_within(adj, set) != static_cast<int>(set.size()) - 1)
    return false;
  for (int c : set) {
    int deg = 0;
    for (int w : adj[c])
      deg += std::find(set.begin(), set.end(), w) != set.end();
    if (deg == static_cast<int>(set.size()) - 1)
      return true;
  }
  return false;
}

bool connected(const oracle::Adj &adj, const std::vector<int> &set) {
  std::vector<bool> removed(adj.size(), true);
  for (int v : set)
    removed[v] = false;
  return oracle::component_sizes(adj, removed).size() == 1;
}

std::vector<int> to_ints(const std::vector<Vertex> &v) { return {v.begin(), v.end()}; }

oracle::Adj cayley_adjacency(int k, int l) {
  const std::uint32_t order = (1u << l) << (3 * k);
  oracle::Adj adj(order);
  for (const auto &[u, v] : oracle::cayley_edges(k, l)) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

/// Every minimum disconnecting set of a small graph, by subset scanning.
std::vector<std::vector<int>> minimum_cuts(const oracle::Adj &adj) {
  const int n = static_cast<int>(adj.size());
  const int kappa = oracle::kappa_by_subsets(adj, 0);
  std::vector<std::vector<int>> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (__builtin_popcount(bits) == kappa) {
      const auto s = bits_to_list(bits, n);
      if (oracle::is_rg_cutset(adj, s, 0))
        out.push_back(s);
    }
  return out;
}

} // namespace

int main() {
  criterion(1, "f-formula anchors", 1000, [](Outcome &o) {
    for (std::int64_t n = 3; n <= 20; ++n) {
      o.expect(extra::f_value(n, 0) == n, "f_n(0)");
      o.expect(extra::f_value(n, 1) == 2 * n - 2, "f_n(1)");
      o.expect(extra::f_value(n, 2) == 3 * n - 5, "f_n(2)");
      o.expect(extra::f_value(n, 3) == 4 * n - 9, "f_n(3)");
      o.expect(extra::f_value(n, n - 2) == n * (n - 1) / 2 + 1, "f_n(n-2)");
    }
  });

  criterion(2, "exact oracle matches known kappa_g values", 4 * 10000.0 + 600000, [](Outcome &o) {
    struct Case {
      const char *spec;
      int g;
      std::size_t expected;
    };
    for (const Case c : {Case{"hypercube:n=4", 0, 4}, Case{"hypercube:n=3", 1, 4}, Case{"g84", 1, 4},
                         Case{"hypercube:n=4", 1, 6}}) {
      const auto start = std::chrono::steady_clock::now();
      const auto g = build(c.spec);
      const auto cert = extra::exact_extra_connectivity(g, c.g, g.order());
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      o.expect(cert.value == c.expected, std::string("kappa value on ") + c.spec);
      o.expect(oracle::kappa_by_subsets(oracle::adjacency_of(g), c.g) == static_cast<int>(c.expected),
               std::string("subset oracle on ") + c.spec);
      o.expect(ms < 10000, std::string("per-instance time on ") + c.spec);
    }
    const auto q5 = topology::hypercube(5);
    const auto cert = extra::exact_extra_connectivity(q5, 2, 10);
    o.expect(cert.value == std::size_t{10}, "kappa_2(Q5) != 10");
    o.expect(cert.outcome == extra::SearchOutcome::definitive, "search not definitive");
    const auto adj = oracle::adjacency_of(q5);
    o.expect(oracle::is_rg_cutset(adj, to_ints(cert.cutset), 2), "certificate is not an R_2-cutset");
  });

  criterion(3, "witness upper bounds 3n-5 and 4n-9", 16 * 60000.0, [](Outcome &o) {
    for (int n = 5; n <= 8; ++n) {
      std::vector<std::string> specs{"hypercube:n=" + std::to_string(n)};
      for (int seed = 1; seed <= 3; ++seed)
        specs.push_back("random-hl:n=" + std::to_string(n) + ",seed=" + std::to_string(seed));
      for (const auto &spec : specs) {
        const auto g = build(spec);
        const auto adj = oracle::adjacency_of(g);
        for (int level = 2; level <= (n >= 6 ? 3 : 2); ++level) {
          const auto start = std::chrono::steady_clock::now();
          const auto cert = extra::upper_bound_by_small_side(g, level, static_cast<std::size_t>(level) + 1);
          const double ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          const std::size_t expected = level == 2 ? 3 * n - 5 : 4 * n - 9;
          o.expect(cert.value == expected, spec + " g=" + std::to_string(level) + " bound mismatch");
          const auto boundary = oracle::boundary(adj, to_ints(cert.witness));
          o.expect(boundary.size() == expected, spec + " witness boundary mismatch");
          o.expect(oracle::is_rg_cutset(adj, std::vector<int>(boundary.begin(), boundary.end()), level),
                   spec + " witness boundary is not an R_g-cutset");
          o.expect(ms < 60000, spec + " per-instance time");
        }
      }
    }
  });

  criterion(4, "star lemma on Q4, |U| <= 5", 60000, [](Outcome &o) {
    const auto report = verify::verify_star_lemma(4, 4, false);
    o.expect(report.verified(), "library sweep refuted: " + report.detail);
    o.expect(report.witness["exceptions"] == 0, "library sweep found exceptions");
    const auto adj = oracle::adjacency_of(topology::hypercube(4));
    for (std::uint32_t bits = 1; bits < (1u << 16); ++bits) {
      const int size = __builtin_popcount(bits);
      if (size > 5)
        continue;
      const auto u = bits_to_list(bits, 16);
      if (!connected(adj, u))
        continue;
      if (static_cast<std::int64_t>(oracle::boundary(adj, u).size()) == extra::f_value(4, size - 1))
        o.expect(induces_star(adj, u), "oracle found an optimal non-star");
    }
  });

  criterion(5, "hyper-kappa on L_3 and five members of L_4", 300000, [](Outcome &o) {
    const auto report = verify::run_claim("lemma-hyper-kappa", Json{{"topologies", "hypercube:n=3;g84;random-hl:n=4,seed=1..5"}});
    o.expect(report.verified(), "library check refuted: " + report.detail);
    o.expect(report.population.size() == 7, "population size");
    for (const auto &spec : report.population) {
      const auto adj = oracle::adjacency_of(build(spec));
      const auto cuts = minimum_cuts(adj);
      o.expect(!cuts.empty(), spec + " has no disconnecting set");
      for (const auto &cut : cuts) {
        const auto sizes = oracle::component_sizes(adj, oracle::mask(adj.size(), cut));
        o.expect(sizes.size() == 2 && sizes.back() == 1, spec + " minimum cut does not isolate one vertex");
      }
    }
  });

  criterion(6, "unique common neighbours in Gamma_{1,0..2}, Gamma_{2,0}", 60000, [](Outcome &o) {
    for (auto [k, l] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
      const auto name = "Gamma_{" + std::to_string(k) + "," + std::to_string(l) + "}";
      o.expect(verify::verify_unique_common_neighbor(k, l).verified(), name + " library check");
      const auto adj = cayley_adjacency(k, l);
      const auto gens = oracle::generators(k, l);
      for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        const auto x = oracle::element_at(k, l, static_cast<std::uint32_t>(v));
        std::set<std::pair<int, int>> special;
        for (int i = 0; i < k; ++i) {
          const int b = static_cast<int>(oracle::index_of(oracle::product(gens[3 * i + 1], x)));
          const int ab = static_cast<int>(oracle::index_of(oracle::product(gens[3 * i + 2], x)));
          special.insert({std::min(b, ab), std::max(b, ab)});
        }
        const auto &nb = adj[v];
        for (std::size_t i = 0; i < nb.size(); ++i)
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            int common = 0;
            for (int w : adj[nb[i]])
              common += std::find(adj[nb[j]].begin(), adj[nb[j]].end(), w) != adj[nb[j]].end();
            const bool unique = common == 1;
            const bool listed = special.count({std::min(nb[i], nb[j]), std::max(nb[i], nb[j])}) > 0;
            o.expect(unique == listed, name + " pair classification");
          }
      }
    }
  });

  criterion(7, "component lemma on Gamma_{2,0}, g <= 2", 300000, [](Outcome &o) {
    const auto report = verify::verify_component_lemma(2, 0, 2);
    o.expect(report.verified(), "library sweep refuted: " + report.detail);
    for (const auto &row : report.witness["sizes"])
      for (const auto &[shape, count] : row["optimalShapes"].items())
        o.expect(shape == "star", "optimal set with shape " + shape);
    const auto adj = cayley_adjacency(2, 0);
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> sets;
    for (int a = 0; a < n; ++a) {
      sets.push_back({a});
      for (int b = a + 1; b < n; ++b) {
        sets.push_back({a, b});
        for (int c = b + 1; c < n; ++c)
          sets.push_back({a, b, c});
      }
    }
    for (const auto &set : sets) {
      if (!connected(adj, set))
        continue;
      const auto boundary = oracle::boundary(adj, set);
      if (static_cast<std::int64_t>(boundary.size()) == extra::f_value(6, static_cast<std::int64_t>(set.size()) - 1))
        o.expect(induces_star(adj, set), "oracle found an optimal non-star");
    }
  });

  criterion(8, "Delta_n isomorphic to VQ_n; rule equals recursion", 60000, [](Outcome &o) {
    for (int n = 1; n <= 10; ++n)
      o.expect(check_isomorphism_by_map(topology::delta(n), topology::vq_recursive(n), topology::vq_iso_map(n)),
               "map fails at n=" + std::to_string(n));
    for (int n = 1; n <= 12; ++n) {
      const auto rule = oracle::edge_set(topology::vq_by_rule(n));
      o.expect(rule == oracle::edge_set(topology::vq_recursive(n)), "rule differs at n=" + std::to_string(n));
      o.expect(rule == oracle::vq_rule_edges(n), "oracle rule differs at n=" + std::to_string(n));
    }
  });

  criterion(9, "star prefixes in Delta_n attain f_n(g)", 60000, [](Outcome &o) {
    const auto report = verify::run_claim("thm-varietal", Json{{"n", "9..11"}});
    o.expect(report.verified(), "library check refuted: " + report.detail);
    for (int n = 9; n <= 11; ++n) {
      const int s = n / 3;
      const int t = n % 3;
      const auto adj = cayley_adjacency(s, t);
      const auto gens = oracle::generators(s, t);
      std::vector<int> prime;
      for (int i = 0; i < s; ++i) {
        prime.push_back(static_cast<int>(oracle::index_of(gens[3 * i])));
        prime.push_back(static_cast<int>(oracle::index_of(gens[3 * i + 1])));
      }
      for (int j = 0; j < t; ++j)
        prime.push_back(static_cast<int>(oracle::index_of(gens[3 * s + j])));
      for (int g = 0; g <= n - s; ++g) {
        std::vector<int> set{0};
        set.insert(set.end(), prime.begin(), prime.begin() + g);
        o.expect(static_cast<std::int64_t>(oracle::boundary(adj, set).size()) == extra::f_value(n, g),
                 "n=" + std::to_string(n) + " g=" + std::to_string(g));
      }
    }
  });

  criterion(10, "Gamma_{5,0}, g = 11: every star exceeds f_15(11)", 600000, [](Outcome &o) {
    const auto report = verify::verify_counterexample(5, 11);
    o.expect(report.verified(), "library check refuted: " + report.detail);
    o.expect(report.witness["leafSets"] == 1365, "leaf-set sweep incomplete");
    o.expect(report.witness["minimumStarNeighborhood"].get<std::int64_t>() >= extra::f_value(15, 11) + 1,
             "star neighbourhood below f+1");
    o.expect(report.witness["leafSetsWithoutPair"] == 0, "leaf set without a {b_i, a_ib_i} pair");

    // Independent sweep in the permutation model.
    const auto adj = cayley_adjacency(5, 0);
    const auto gens = oracle::generators(5, 0);
    std::vector<int> omega;
    for (const auto &s : gens)
      omega.push_back(static_cast<int>(oracle::index_of(s)));
    std::size_t sweeps = 0;
    std::size_t minimum = SIZE_MAX;
    for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
      if (__builtin_popcount(bits) != 11)
        continue;
      ++sweeps;
      bool has_pair = false;
      for (int i = 0; i < 5; ++i)
        has_pair |= (bits >> (3 * i + 1) & 1) && (bits >> (3 * i + 2) & 1);
      o.expect(has_pair, "oracle: leaf set without a pair");
      std::vector<int> set{0};
      for (int j = 0; j < 15; ++j)
        if (bits >> j & 1)
          set.push_back(omega[static_cast<std::size_t>(j)]);
      if (!induces_star(adj, set))
        continue;
      minimum = std::min(minimum, oracle::boundary(adj, set).size());
    }
    o.expect(sweeps == 1365, "oracle sweep size");
    o.expect(minimum != SIZE_MAX && static_cast<std::int64_t>(minimum) >= extra::f_value(15, 11) + 1,
             "oracle star neighbourhood below f+1");
    o.expect(report.witness["minimumStarNeighborhood"] == minimum, "library and oracle minima differ");
    for (int i = 0; i < 5; ++i) {
      const int b = omega[static_cast<std::size_t>(3 * i + 1)];
      const int ab = omega[static_cast<std::size_t>(3 * i + 2)];
      int common = 0;
      int which = -1;
      for (int w : adj[b])
        if (std::find(adj[ab].begin(), adj[ab].end(), w) != adj[ab].end()) {
          ++common;
          which = w;
        }
      o.expect(common == 1 && which == 0, "pair's unique common neighbour is not the centre");
    }
  });

  criterion(11, "f-sum inequality for n <= 12", 1000, [](Outcome &o) {
    o.expect(extra::f_sum_inequality_check(12).verified(), "inequality fails");
  });

  criterion(12, "deterministic, golden-identical CLI output", 300000, [](Outcome &o) {
    std::istringstream commands(testproc::golden("commands.txt"));
    std::string line;
    while (std::getline(commands, line)) {
      const auto tab = line.find('\t');
      const auto name = line.substr(0, tab);
      const auto args = line.substr(tab + 1);
      const auto first = testproc::run_cli(args);
      const auto second = testproc::run_cli(args);
      o.expect(first.code == 0 && second.code == 0, args + ": non-zero exit");
      o.expect(first.out == second.out, args + ": reruns differ");
      o.expect(first.out == testproc::golden(name), args + ": differs from golden " + name);
    }
    for (const char *args : {"kappa -t random-hl:n=5,seed=4 -g 1 -q", "kappa -t hypercube:n=7 -g 3 -m upper --size-cap 5 -q",
                             "verify thm-extra-0 -q"}) {
      const auto one = testproc::run_cli(std::string(args) + " -j 1");
      const auto four = testproc::run_cli(std::string(args) + " -j 4");
      o.expect(one.code == 0 && one.out == four.out, std::string(args) + ": thread count changes output");
    }
  });

  std::printf("%s: %d criterion check(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
