#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace openpack {

using Vertex = std::uint32_t;

/// Dense bit set over the vertex range [0, universe) of a host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet from_indices(std::size_t universe, std::span<const Vertex> members);
  static VertexSet full(std::size_t universe);
  static VertexSet from_words(std::size_t universe, std::span<const std::uint64_t> words);

  static constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  /// Lowest member, or universe() when empty.
  Vertex first() const noexcept;
  /// Lowest member strictly greater than v, or universe() when none.
  Vertex next(Vertex v) const noexcept;

  std::vector<Vertex> to_vector() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace openpack
