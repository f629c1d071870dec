#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dtdom/vertex_set.hpp"

namespace dtdom {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on the vertices 0..n-1.
///
/// Adjacency is a packed bit matrix. Construction validates that the
/// relation is symmetric and loop-free, so every Graph value satisfies
/// those invariants.
class Graph {
 public:
  /// The empty graph (order 0).
  Graph() = default;

  /// Duplicate edges collapse. Throws InputError on loops or bad endpoints.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges);
  /// Adjacency rows as machine words (n <= 64); validated like from_edge_list.
  static Graph from_masks(int n, std::span<const std::uint64_t> rows);

  int order() const noexcept { return n_; }
  int size() const noexcept;

  bool adjacent(Vertex u, Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  VertexSet closed_neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // descending
  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Row of the adjacency matrix as a word; requires order() <= 64.
  std::uint64_t mask(Vertex v) const;
  bool fits_word() const noexcept { return n_ <= 64; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, int stride, std::vector<std::uint64_t> words)
      : n_(n), stride_(stride), words_(std::move(words)) {}
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// All-pairs hop distances.
class DistanceTable {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  DistanceTable() = default;
  DistanceTable(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {}

  int order() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kInfinity; }
  /// Vertices at distance exactly d from v.
  VertexSet at_distance(Vertex v, int d) const;

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

DistanceTable bfs_distances(const Graph& g);
/// Single-source hop distances; DistanceTable::kInfinity when unreachable.
std::vector<int> bfs_from(const Graph& g, Vertex source);

/// Empty and single-vertex graphs count as connected.
bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);
bool is_tree(const Graph& g);

/// An induced K_{1,3}: `center` adjacent to the pairwise non-adjacent `leaves`.
struct Claw {
  Vertex center;
  std::array<Vertex, 3> leaves;
};
std::optional<Claw> find_claw(const Graph& g);
bool is_claw_free(const Graph& g);

VertexSet leaves(const Graph& g);
VertexSet support_vertices(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Result of deleting or keeping a vertex subset: the dense relabeled graph
/// plus both directions of the vertex map (-1 marks a dropped vertex).
struct Subgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;

  VertexSet lift(const VertexSet& s, int host_order) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph remove_vertices(const Graph& g, const VertexSet& drop);

Graph with_edge(const Graph& g, Vertex u, Vertex v);
/// perm[v] is the new label of v.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace dtdom
