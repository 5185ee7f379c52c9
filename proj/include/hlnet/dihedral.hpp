#pragma once

// Arithmetic in G_{k,l} = H_1 x ... x H_k x Z_2^l, where every H_i is the
// dihedral group <a_i, b_i | a_i^4 = b_i^2 = 1, b_i^-1 a_i b_i = a_i^-1> of
// order 8, and Cayley graphs over it.
//
// Elements are kept in normal form a_i^x b_i^y per dihedral factor
// (x in Z_4, y in Z_2) plus one bit per cyclic factor c_j.
//
// Element <-> vertex index (mixed radix, least significant first):
//   bits 0..l-1            cyclic exponents z_1..z_l
//   then per factor i=1..k one base-8 digit 2*x_i + y_i
// so G_{0,l} indices coincide with the usual l-bit hypercube labels.

#include "hlnet/compact_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hlnet::group {

struct GroupShape {
  int k = 0;
  int l = 0;

  std::size_t order() const;
  int generator_count() const { return 3 * k + l; }
  bool operator==(const GroupShape &) const = default;
};

class Element {
public:
  explicit Element(GroupShape shape);

  GroupShape shape() const noexcept { return shape_; }

  /// Factor indices are zero-based here; names in strings are one-based.
  int rotation(int i) const { return rot_.at(static_cast<std::size_t>(i)); }
  int reflection(int i) const { return ref_.at(static_cast<std::size_t>(i)); }
  int cyclic(int j) const { return cyc_.at(static_cast<std::size_t>(j)); }

  void set_dihedral(int i, int x, int y);
  void set_cyclic(int j, int z);

  bool is_identity() const;
  bool operator==(const Element &) const = default;

  /// Normal-form word such as "a1^2b1c2"; "e" for the identity.
  std::string to_string() const;

  static Element identity(GroupShape shape) { return Element(shape); }
  static Element a(GroupShape shape, int i, int power = 1);
  static Element b(GroupShape shape, int i);
  static Element c(GroupShape shape, int j);

private:
  GroupShape shape_;
  std::vector<std::uint8_t> rot_;
  std::vector<std::uint8_t> ref_;
  std::vector<std::uint8_t> cyc_;
};

/// Per dihedral factor (x1,y1)(x2,y2) = (x1 + (-1)^y1 x2 mod 4, y1 + y2 mod 2);
/// cyclic bits add mod 2. Throws invalid_argument on a shape mismatch.
Element multiply(const Element &g, const Element &h);
Element operator*(const Element &g, const Element &h);
Element inverse(const Element &g);
bool is_involution(const Element &g);

std::uint32_t index_of(const Element &g);
Element element_at(GroupShape shape, std::uint32_t index);

struct GeneratingSet {
  GroupShape shape;
  std::vector<Element> elements;
  std::vector<std::string> names;

  std::size_t size() const { return elements.size(); }
  /// Position of the generator with the given name; throws if absent.
  std::size_t find(const std::string &name) const;
};

/// (a_1^2, b_1, a_1b_1, ..., a_k^2, b_k, a_kb_k, c_1, ..., c_l).
GeneratingSet generating_set(int k, int l);

/// Cay(G_{k,l}, S) with edges {g, s*g} (left multiplication); vertex i is
/// element_at(shape, i) and carries its normal-form label.
CompactGraph cayley_graph(const GeneratingSet &gens);

struct CosetDecomposition {
  std::size_t removed = 0;               ///< index of the dropped generator s
  VertexSet subgroup;                    ///< M = <S - {s}>
  std::vector<Vertex> right_translation; ///< u -> u*s for every vertex u
};

/// Splits G_{k,l} into M = <S - {s}> and M*s. Throws Error(not_index_two)
/// when M is not a subgroup of index 2 (e.g. when s = a_i^2).
CosetDecomposition coset_decomposition(const GeneratingSet &gens, std::size_t removed);

} // namespace hlnet::group
