#include "hlnet/dihedral.hpp"

#include "hlnet/error.hpp"

#include <algorithm>

namespace hlnet::group {

std::size_t GroupShape::order() const {
  return (std::size_t{1} << (3 * k)) << l;
}

Element::Element(GroupShape shape)
    : shape_(shape), rot_(static_cast<std::size_t>(shape.k), 0),
      ref_(static_cast<std::size_t>(shape.k), 0), cyc_(static_cast<std::size_t>(shape.l), 0) {
  if (shape.k < 0 || shape.l < 0)
    fail_argument("group shape must be non-negative");
  if (3 * shape.k + shape.l > 20)
    fail_argument("group order exceeds 2^20");
}

void Element::set_dihedral(int i, int x, int y) {
  rot_.at(static_cast<std::size_t>(i)) = static_cast<std::uint8_t>(((x % 4) + 4) % 4);
  ref_.at(static_cast<std::size_t>(i)) = static_cast<std::uint8_t>(((y % 2) + 2) % 2);
}

void Element::set_cyclic(int j, int z) {
  cyc_.at(static_cast<std::size_t>(j)) = static_cast<std::uint8_t>(((z % 2) + 2) % 2);
}

bool Element::is_identity() const {
  auto zero = [](std::uint8_t v) { return v == 0; };
  return std::all_of(rot_.begin(), rot_.end(), zero) && std::all_of(ref_.begin(), ref_.end(), zero) &&
         std::all_of(cyc_.begin(), cyc_.end(), zero);
}

std::string Element::to_string() const {
  std::string out;
  for (int i = 0; i < shape_.k; ++i) {
    const int x = rotation(i);
    if (x != 0) {
      out += "a" + std::to_string(i + 1);
      if (x > 1)
        out += "^" + std::to_string(x);
    }
    if (reflection(i) != 0)
      out += "b" + std::to_string(i + 1);
  }
  for (int j = 0; j < shape_.l; ++j)
    if (cyclic(j) != 0)
      out += "c" + std::to_string(j + 1);
  return out.empty() ? "e" : out;
}

Element Element::a(GroupShape shape, int i, int power) {
  Element g(shape);
  g.set_dihedral(i, power, 0);
  return g;
}

Element Element::b(GroupShape shape, int i) {
  Element g(shape);
  g.set_dihedral(i, 0, 1);
  return g;
}

Element Element::c(GroupShape shape, int j) {
  Element g(shape);
  g.set_cyclic(j, 1);
  return g;
}

Element multiply(const Element &g, const Element &h) {
  if (!(g.shape() == h.shape()))
    fail_argument("multiply: group shape mismatch");
  Element out(g.shape());
  for (int i = 0; i < g.shape().k; ++i) {
    const int sign = g.reflection(i) == 0 ? 1 : -1;
    out.set_dihedral(i, g.rotation(i) + sign * h.rotation(i), g.reflection(i) + h.reflection(i));
  }
  for (int j = 0; j < g.shape().l; ++j)
    out.set_cyclic(j, g.cyclic(j) + h.cyclic(j));
  return out;
}

Element operator*(const Element &g, const Element &h) { return multiply(g, h); }

Element inverse(const Element &g) {
  Element out(g.shape());
  for (int i = 0; i < g.shape().k; ++i) {
    // Reflections a^x b are involutions; rotations invert to a^-x.
    if (g.reflection(i) == 0)
      out.set_dihedral(i, -g.rotation(i), 0);
    else
      out.set_dihedral(i, g.rotation(i), 1);
  }
  for (int j = 0; j < g.shape().l; ++j)
    out.set_cyclic(j, g.cyclic(j));
  return out;
}

bool is_involution(const Element &g) { return !g.is_identity() && (g * g).is_identity(); }

std::uint32_t index_of(const Element &g) {
  const auto shape = g.shape();
  std::uint32_t index = 0;
  for (int i = shape.k - 1; i >= 0; --i)
    index = index * 8 + static_cast<std::uint32_t>(2 * g.rotation(i) + g.reflection(i));
  for (int j = shape.l - 1; j >= 0; --j)
    index = index * 2 + static_cast<std::uint32_t>(g.cyclic(j));
  return index;
}

Element element_at(GroupShape shape, std::uint32_t index) {
  if (index >= shape.order())
    fail_argument("element index " + std::to_string(index) + " out of range");
  Element g(shape);
  for (int j = 0; j < shape.l; ++j) {
    g.set_cyclic(j, static_cast<int>(index & 1U));
    index >>= 1;
  }
  for (int i = 0; i < shape.k; ++i) {
    const auto digit = static_cast<int>(index & 7U);
    g.set_dihedral(i, digit / 2, digit % 2);
    index >>= 3;
  }
  return g;
}

std::size_t GeneratingSet::find(const std::string &name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    fail_argument("no generator named '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

GeneratingSet generating_set(int k, int l) {
  if (k < 0 || l < 0)
    fail_argument("generating set parameters must be non-negative");
  if (3 * k + l < 1)
    fail_argument("generating set requires 3k + l >= 1");
  const GroupShape shape{k, l};
  GeneratingSet gens{shape, {}, {}};
  for (int i = 0; i < k; ++i) {
    const auto idx = std::to_string(i + 1);
    gens.elements.push_back(Element::a(shape, i, 2));
    gens.names.push_back("a" + idx + "^2");
    gens.elements.push_back(Element::b(shape, i));
    gens.names.push_back("b" + idx);
    gens.elements.push_back(Element::a(shape, i) * Element::b(shape, i));
    gens.names.push_back("a" + idx + "b" + idx);
  }
  for (int j = 0; j < l; ++j) {
    gens.elements.push_back(Element::c(shape, j));
    gens.names.push_back("c" + std::to_string(j + 1));
  }
  return gens;
}

CompactGraph cayley_graph(const GeneratingSet &gens) {
  const auto shape = gens.shape;
  const std::size_t order = shape.order();
  for (const auto &s : gens.elements) {
    if (!(s.shape() == shape))
      fail_argument("generator shape mismatch");
    if (!is_involution(s))
      fail_argument("Cayley generators must be involutions, got " + s.to_string());
  }
  std::vector<std::vector<Vertex>> rows(order);
  std::vector<std::string> labels(order);
  for (std::uint32_t v = 0; v < order; ++v) {
    const Element g = element_at(shape, v);
    labels[v] = g.to_string();
    auto &row = rows[v];
    row.reserve(gens.size());
    for (const auto &s : gens.elements)
      row.push_back(index_of(s * g));
  }
  return CompactGraph::from_rows(std::move(rows), std::move(labels));
}

CosetDecomposition coset_decomposition(const GeneratingSet &gens, std::size_t removed) {
  if (removed >= gens.size())
    fail_argument("generator index out of range");
  const auto shape = gens.shape;
  const std::size_t order = shape.order();

  // Closure of {e} under left multiplication by the remaining generators.
  VertexSet subgroup(order);
  std::vector<Element> stack{Element::identity(shape)};
  subgroup.set(0);
  while (!stack.empty()) {
    const Element g = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (s == removed)
        continue;
      const Element h = gens.elements[s] * g;
      const auto idx = index_of(h);
      if (!subgroup.test(idx)) {
        subgroup.set(idx);
        stack.push_back(h);
      }
    }
  }
  if (subgroup.count() * 2 != order)
    throw Error(ErrorCode::not_index_two,
                "<S - {" + gens.names[removed] + "}> has order " + std::to_string(subgroup.count()) +
                    ", not " + std::to_string(order / 2));

  std::vector<Vertex> translation(order);
  const Element &s = gens.elements[removed];
  for (std::uint32_t v = 0; v < order; ++v)
    translation[v] = index_of(element_at(shape, v) * s);
  return {removed, std::move(subgroup), std::move(translation)};
}

} // namespace hlnet::group
