#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dtdom {

using Vertex = int;

/// A subset of the vertex range 0..universe-1 of some host graph.
///
/// Stored as a packed bitset. Graphs of order at most 64 can move to and from
/// a single machine word with `from_mask` / `mask`, which is what the solvers
/// and the enumerator use internally.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet from_members(int universe, std::span<const Vertex> members);
  static VertexSet from_members(int universe, std::initializer_list<Vertex> members);
  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const noexcept;
  bool empty() const noexcept;
  /// Smallest member, or -1 when empty.
  Vertex first() const noexcept;
  std::vector<Vertex> members() const;

  /// Only valid for universe <= 64.
  std::uint64_t mask() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_vertex(Vertex v) const;
  void check_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sorted 0-based comma list, e.g. "0,1,5".
std::string to_string(const VertexSet& s);

}  // namespace dtdom
