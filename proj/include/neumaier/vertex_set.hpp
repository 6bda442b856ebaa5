#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#ifndef NEUMAIER_MAX_VERTICES
#define NEUMAIER_MAX_VERTICES 512
#endif

namespace neumaier {

inline constexpr std::size_t kMaxVertices = NEUMAIER_MAX_VERTICES;
static_assert(kMaxVertices > 0 && kMaxVertices % 64 == 0,
              "NEUMAIER_MAX_VERTICES must be a positive multiple of 64");

// Fixed-capacity bitset over vertex ids [0, kMaxVertices).
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  static VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  template <class Range>
  static VertexSet of(const Range& vertices) {
    VertexSet s;
    for (auto v : vertices) s.insert(static_cast<std::size_t>(v));
    return s;
  }

  bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Lowest member, or kMaxVertices when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kMaxVertices;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  friend std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < kWords; ++w)
      c += static_cast<std::size_t>(std::popcount(a.words_[w] & b.words_[w]));
    return c;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace neumaier
