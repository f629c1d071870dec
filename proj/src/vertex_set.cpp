#include "dtdom/vertex_set.hpp"

#include <algorithm>

#include "dtdom/errors.hpp"

namespace dtdom {

namespace {
std::size_t word_count(int universe) { return static_cast<std::size_t>((universe + 63) / 64); }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw InputError("vertex set universe must be non-negative");
  words_.assign(word_count(universe), 0);
}

VertexSet VertexSet::from_members(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_members(int universe, std::initializer_list<Vertex> members) {
  return from_members(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw InputError("from_mask requires a universe of at most 64 vertices");
  VertexSet s(universe);
  if (universe < 64 && (mask >> universe) != 0) throw InputError("mask has bits outside the universe");
  if (universe > 0) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::check_vertex(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " outside range 0.." + std::to_string(universe_ - 1));
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw InputError("vertex sets belong to graphs of different order");
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check_vertex(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check_vertex(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw InputError("mask() requires a universe of at most 64 vertices");
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::string to_string(const VertexSet& s) {
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

}  // namespace dtdom
