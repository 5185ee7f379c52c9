#include "hlnet/error.hpp"
#include "hlnet/vertex_set.hpp"

#include <doctest.h>

using hlnet::Vertex;
using hlnet::VertexSet;

namespace {

VertexSet set_of(std::size_t capacity, std::vector<Vertex> members) { return VertexSet::of(capacity, members); }

} // namespace

TEST_CASE("vertex set basics across word boundaries") {
  VertexSet s(130);
  CHECK(s.empty());
  s.set(0);
  s.set(63);
  s.set(64);
  s.set(129);
  CHECK(s.count() == 4);
  CHECK(s.test(64));
  CHECK_FALSE(s.test(65));
  CHECK(s.members() == std::vector<Vertex>{0, 63, 64, 129});
  CHECK(s.first() == Vertex{0});
  s.reset(0);
  CHECK(s.first() == Vertex{63});
  CHECK(s.complement().count() == 130 - 3);
  CHECK(VertexSet::full(130).count() == 130);
}

TEST_CASE("vertex set algebra") {
  const auto a = set_of(10, {1, 2, 3});
  const auto b = set_of(10, {3, 4});
  CHECK((a | b).members() == std::vector<Vertex>{1, 2, 3, 4});
  CHECK((a & b).members() == std::vector<Vertex>{3});
  CHECK((a - b).members() == std::vector<Vertex>{1, 2});
  CHECK(a.intersects(b));
  CHECK(set_of(10, {3}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(hlnet::lex_less(set_of(10, {1, 5}), set_of(10, {2})));
  CHECK(hlnet::lex_less(set_of(10, {1}), set_of(10, {1, 2})));
}

TEST_CASE("vertex set rejects capacity mismatch and out-of-range members") {
  auto a = set_of(10, {1});
  const auto b = set_of(11, {1});
  CHECK_THROWS_AS(a |= b, hlnet::Error);
  CHECK_THROWS_AS(a.set(10), hlnet::Error);
  CHECK_THROWS_AS(set_of(4, {4}), hlnet::Error);
}
