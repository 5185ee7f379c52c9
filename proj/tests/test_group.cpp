#include "hlnet/dihedral.hpp"
#include "hlnet/error.hpp"
#include "hlnet/graph_ops.hpp"
#include "hlnet/topology.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hlnet;
using group::Element;
using group::GroupShape;

namespace {

Element d8(int x, int y) {
  Element e(GroupShape{1, 0});
  e.set_dihedral(0, x, y);
  return e;
}

const std::vector<GroupShape> small_shapes{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 1}};

} // namespace

TEST_CASE("dihedral product rule") {
  const auto b = d8(0, 1);
  const auto a = d8(1, 0);
  CHECK(b * a == d8(3, 1));
  CHECK(d8(1, 1) * d8(1, 1) == Element::identity(GroupShape{1, 0}));
  const auto g = d8(2, 1);
  CHECK(g * Element::identity(GroupShape{1, 0}) == g);
  CHECK((b * a).to_string() == "a1^3b1");
  CHECK(Element::identity(GroupShape{1, 0}).to_string() == "e");
  CHECK_THROWS_AS(d8(1, 0) * Element::identity(GroupShape{1, 1}), Error);
}

TEST_CASE("normal-form products match the permutation model") {
  for (const auto shape : small_shapes) {
    CAPTURE(shape.k);
    CAPTURE(shape.l);
    for (std::uint32_t i = 0; i < shape.order(); ++i)
      for (std::uint32_t j = 0; j < shape.order(); ++j) {
        const auto lib = group::index_of(group::element_at(shape, i) * group::element_at(shape, j));
        const auto ref = oracle::index_of(
            oracle::product(oracle::element_at(shape.k, shape.l, i), oracle::element_at(shape.k, shape.l, j)));
        REQUIRE(lib == ref);
      }
  }
}

TEST_CASE("multiplication is associative on all triples of small groups") {
  for (const auto shape : small_shapes) {
    if (shape.order() > 64)
      continue;
    std::vector<Element> all;
    for (std::uint32_t i = 0; i < shape.order(); ++i)
      all.push_back(group::element_at(shape, i));
    for (const auto &x : all)
      for (const auto &y : all)
        for (const auto &z : all)
          REQUIRE((x * y) * z == x * (y * z));
  }
}

TEST_CASE("inverse and involutions") {
  const GroupShape shape{1, 1};
  CHECK(group::inverse(Element::identity(shape)).is_identity());
  CHECK(group::inverse(d8(1, 0)) == d8(3, 0));
  CHECK(group::inverse(d8(1, 1)) == d8(1, 1));
  for (std::uint32_t i = 0; i < shape.order(); ++i) {
    const auto g = group::element_at(shape, i);
    CHECK((g * group::inverse(g)).is_identity());
    CHECK(group::index_of(g) == i);
  }
  CHECK(group::is_involution(d8(2, 0)));
  CHECK_FALSE(group::is_involution(d8(1, 0)));
  CHECK_FALSE(group::is_involution(Element::identity(GroupShape{1, 0})));
  CHECK(group::is_involution(Element::c(GroupShape{0, 1}, 0)));
}

TEST_CASE("generating sets") {
  const auto g10 = group::generating_set(1, 0);
  CHECK(g10.names == std::vector<std::string>{"a1^2", "b1", "a1b1"});
  CHECK(group::generating_set(0, 3).names == std::vector<std::string>{"c1", "c2", "c3"});
  const auto g30 = group::generating_set(3, 0);
  CHECK(g30.size() == 9);
  for (const auto &s : g30.elements)
    CHECK(group::is_involution(s));
  CHECK(g30.find("b2") == 4);
  CHECK_THROWS_AS(group::generating_set(0, 0), Error);
}

TEST_CASE("Cayley graphs match the permutation model") {
  for (const auto shape : {GroupShape{1, 0}, GroupShape{1, 1}, GroupShape{2, 0}, GroupShape{1, 2},
                           GroupShape{0, 3}, GroupShape{2, 1}}) {
    CAPTURE(shape.k);
    CAPTURE(shape.l);
    const auto g = group::cayley_graph(group::generating_set(shape.k, shape.l));
    CHECK(g.order() == shape.order());
    CHECK(g.regular_degree() == static_cast<std::size_t>(shape.generator_count()));
    CHECK(oracle::edge_set(g) == oracle::cayley_edges(shape.k, shape.l));
  }
  const auto g10 = group::cayley_graph(group::generating_set(1, 0));
  CHECK(g10.edge_count() == 12);
  CHECK(g10.label(5) == "a1^2b1");
}

TEST_CASE("Gamma_{0,l} is the hypercube under the identity map") {
  for (int l = 1; l <= 6; ++l)
    CHECK(oracle::edge_set(topology::gamma(0, l)) == oracle::hypercube_edges(l));
}

TEST_CASE("right translations are automorphisms") {
  for (const auto shape : {GroupShape{1, 1}, GroupShape{2, 0}, GroupShape{3, 0}, GroupShape{2, 2}}) {
    const auto gens = group::generating_set(shape.k, shape.l);
    const auto g = group::cayley_graph(gens);
    std::vector<Element> all;
    for (std::uint32_t i = 0; i < shape.order(); ++i)
      all.push_back(group::element_at(shape, i));
    const auto edges = g.edges();
    for (const auto &h : all) {
      for (const auto &[u, v] : edges)
        REQUIRE(g.adjacent(group::index_of(all[u] * h), group::index_of(all[v] * h)));
    }
  }
}

TEST_CASE("b_i v and a_ib_i v have v as their only common neighbor") {
  for (const auto shape : {GroupShape{1, 0}, GroupShape{2, 0}, GroupShape{1, 2}}) {
    const auto gens = group::generating_set(shape.k, shape.l);
    const auto g = group::cayley_graph(gens);
    for (std::uint32_t v = 0; v < shape.order(); ++v) {
      const auto x = group::element_at(shape, v);
      for (int i = 0; i < shape.k; ++i) {
        const auto u = group::index_of(gens.elements[static_cast<std::size_t>(3 * i + 1)] * x);
        const auto w = group::index_of(gens.elements[static_cast<std::size_t>(3 * i + 2)] * x);
        REQUIRE(common_neighbors(g, u, w).members() == std::vector<Vertex>{v});
      }
    }
  }
}

TEST_CASE("coset decomposition") {
  const auto g10 = group::generating_set(1, 0);
  const auto split = group::coset_decomposition(g10, g10.find("b1"));
  // {e, a^2, ab, a^3 b} = indices {0, 4, 3, 7}
  CHECK(split.subgroup.members() == std::vector<Vertex>{0, 3, 4, 7});
  CHECK(split.right_translation[0] == 1);

  const auto g02 = group::generating_set(0, 2);
  CHECK(group::coset_decomposition(g02, g02.find("c2")).subgroup.members() == std::vector<Vertex>{0, 1});

  const auto g20 = group::generating_set(2, 0);
  CHECK(group::coset_decomposition(g20, g20.find("b2")).subgroup.count() == 32);

  try {
    group::coset_decomposition(g10, g10.find("a1^2"));
    FAIL("expected not-index-two");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::not_index_two);
  }
}
