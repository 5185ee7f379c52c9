#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hlnet {

using Vertex = std::uint32_t;

/// Upper bound on graph order supported by the library (2^20 vertices).
inline constexpr std::size_t max_order = std::size_t{1} << 20;

/**
 * Fixed-capacity bitset over the vertex indices of one graph.
 *
 * Binary set operations require equal capacities and throw
 * hlnet::Error(invalid_argument) otherwise.
 */
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity);

  static VertexSet of(std::size_t capacity, std::span<const Vertex> members);
  static VertexSet full(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool test(Vertex v) const;
  void set(Vertex v);
  void reset(Vertex v);

  VertexSet &operator|=(const VertexSet &other);
  VertexSet &operator&=(const VertexSet &other);
  VertexSet &operator-=(const VertexSet &other);

  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  bool operator==(const VertexSet &other) const = default;

  bool intersects(const VertexSet &other) const;
  bool is_subset_of(const VertexSet &other) const;
  VertexSet complement() const;

  std::optional<Vertex> first() const;
  std::vector<Vertex> members() const;

  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
  void require_same_capacity(const VertexSet &other) const;
  void require_in_range(Vertex v) const;

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending member lists.
bool lex_less(const VertexSet &a, const VertexSet &b);

} // namespace hlnet
