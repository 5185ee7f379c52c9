#include "hlnet/vertex_set.hpp"

#include "hlnet/error.hpp"

#include <algorithm>
#include <string>

namespace hlnet {

namespace {

constexpr std::size_t words_for(std::size_t capacity) { return (capacity + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t capacity) : capacity_(capacity), words_(words_for(capacity), 0) {
  if (capacity > max_order)
    fail_argument("vertex set capacity " + std::to_string(capacity) + " exceeds 2^20");
}

VertexSet VertexSet::of(std::size_t capacity, std::span<const Vertex> members) {
  VertexSet s(capacity);
  for (Vertex v : members)
    s.set(v);
  return s;
}

VertexSet VertexSet::full(std::size_t capacity) {
  VertexSet s(capacity);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (const std::size_t tail = capacity % 64; tail != 0)
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::require_in_range(Vertex v) const {
  if (v >= capacity_)
    fail_argument("vertex " + std::to_string(v) + " outside set capacity " +
                  std::to_string(capacity_));
}

void VertexSet::require_same_capacity(const VertexSet &other) const {
  if (other.capacity_ != capacity_)
    fail_argument("vertex set capacity mismatch (" + std::to_string(capacity_) + " vs " +
                  std::to_string(other.capacity_) + ")");
}

bool VertexSet::test(Vertex v) const {
  require_in_range(v);
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::set(Vertex v) {
  require_in_range(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::reset(Vertex v) {
  require_in_range(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet &VertexSet::operator|=(const VertexSet &other) {
  require_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) {
  require_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other) {
  require_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet &other) const {
  require_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0)
      return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet &other) const {
  require_same_capacity(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0)
      return false;
  return true;
}

VertexSet VertexSet::complement() const { return full(capacity_) - *this; }

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return std::nullopt;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool lex_less(const VertexSet &a, const VertexSet &b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

} // namespace hlnet
