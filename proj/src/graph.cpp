#include "dtdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "dtdom/errors.hpp"

namespace dtdom {

namespace {

int stride_for(int n) { return (n + 63) / 64; }

bool test_bit(const std::vector<std::uint64_t>& words, int stride, Vertex u, Vertex v) {
  return (words[static_cast<std::size_t>(u) * stride + v / 64] >> (v % 64)) & 1U;
}

void set_bit(std::vector<std::uint64_t>& words, int stride, Vertex u, Vertex v) {
  words[static_cast<std::size_t>(u) * stride + v / 64] |= std::uint64_t{1} << (v % 64);
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("graph order must be non-negative");
  const int stride = stride_for(n);
  std::vector<std::uint64_t> words(static_cast<std::size_t>(n) * stride, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
    set_bit(words, stride, u, v);
    set_bit(words, stride, v, u);
  }
  return Graph(n, stride, std::move(words));
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_masks(int n, std::span<const std::uint64_t> rows) {
  if (n < 0 || n > 64) throw InputError("from_masks requires 0 <= n <= 64");
  if (rows.size() != static_cast<std::size_t>(n)) throw InputError("from_masks: row count differs from order");
  const std::uint64_t range = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~range) != 0) throw InputError("adjacency row has bits outside the vertex range");
    if ((rows[v] >> v) & 1U) throw InputError("loop edge at vertex " + std::to_string(v));
    std::uint64_t bits = rows[v];
    while (bits != 0) {
      const int u = std::countr_zero(bits);
      bits &= bits - 1;
      if (((rows[u] >> v) & 1U) == 0) throw InputError("adjacency rows are not symmetric");
    }
  }
  return Graph(n, n == 0 ? 0 : 1, std::vector<std::uint64_t>(rows.begin(), rows.end()));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " outside range 0.." + std::to_string(n_ - 1));
}

int Graph::size() const noexcept {
  int twice = 0;
  for (auto w : words_) twice += std::popcount(w);
  return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return test_bit(words_, stride_, u, v);
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  VertexSet s(n_);
  const std::size_t base = static_cast<std::size_t>(v) * stride_;
  for (int w = 0; w < stride_; ++w) {
    std::uint64_t bits = words_[base + w];
    while (bits != 0) {
      s.insert(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return s;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  const std::size_t base = static_cast<std::size_t>(v) * stride_;
  for (int w = 0; w < stride_; ++w) d += std::popcount(words_[base + w]);
  return d;
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) seq.push_back(degree(v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (test_bit(words_, stride_, u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::mask(Vertex v) const {
  if (n_ > 64) throw InputError("mask() requires a graph of order at most 64");
  check_vertex(v);
  return words_[static_cast<std::size_t>(v)];
}

VertexSet DistanceTable::at_distance(Vertex v, int d) const {
  VertexSet s(n_);
  for (Vertex u = 0; u < n_; ++u) {
    if (at(v, u) == d) s.insert(u);
  }
  return s;
}

std::vector<int> bfs_from(const Graph& g, Vertex source) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), DistanceTable::kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[w] == DistanceTable::kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

DistanceTable bfs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, DistanceTable::kInfinity);
  if (g.fits_word()) {
    // Frontier expansion on words: one pass per BFS layer.
    for (Vertex s = 0; s < n; ++s) {
      std::uint64_t seen = std::uint64_t{1} << s;
      std::uint64_t frontier = seen;
      int layer = 0;
      while (frontier != 0) {
        std::uint64_t bits = frontier;
        std::uint64_t next = 0;
        while (bits != 0) {
          const int u = std::countr_zero(bits);
          bits &= bits - 1;
          dist[static_cast<std::size_t>(s) * n + u] = layer;
          next |= g.mask(u);
        }
        frontier = next & ~seen;
        seen |= next;
        ++layer;
      }
    }
  } else {
    for (Vertex s = 0; s < n; ++s) {
      auto row = bfs_from(g, s);
      std::copy(row.begin(), row.end(), dist.begin() + static_cast<std::ptrdiff_t>(s) * n);
    }
  }
  return DistanceTable(n, std::move(dist));
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp(n);
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.insert(u);
      g.neighbors(u).for_each([&](Vertex w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

std::optional<Claw> find_claw(const Graph& g) {
  const int n = g.order();
  for (Vertex c = 0; c < n; ++c) {
    const auto nb = g.neighbors(c).members();
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return Claw{c, {nb[i], nb[j], nb[k]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

VertexSet leaves(const Graph& g) {
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) s.insert(v);
  }
  return s;
}

VertexSet support_vertices(const Graph& g) {
  VertexSet s(g.order());
  leaves(g).for_each([&](Vertex leaf) { s |= g.neighbors(leaf); });
  return s;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

VertexSet Subgraph::lift(const VertexSet& s, int host_order) const {
  VertexSet out(host_order);
  s.for_each([&](Vertex v) { out.insert(new_to_old.at(static_cast<std::size_t>(v))); });
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) throw InputError("vertex set does not belong to this graph");
  Subgraph sub;
  sub.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  keep.for_each([&](Vertex v) {
    sub.old_to_new[v] = static_cast<Vertex>(sub.new_to_old.size());
    sub.new_to_old.push_back(v);
  });
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (sub.old_to_new[u] >= 0 && sub.old_to_new[v] >= 0) edges.emplace_back(sub.old_to_new[u], sub.old_to_new[v]);
  }
  sub.graph = Graph::from_edge_list(static_cast<int>(sub.new_to_old.size()), edges);
  return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& drop) {
  if (drop.universe() != g.order()) throw InputError("vertex set does not belong to this graph");
  return induced_subgraph(g, VertexSet::full(g.order()) - drop);
}

Graph with_edge(const Graph& g, Vertex u, Vertex v) {
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return Graph::from_edge_list(g.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw InputError("permutation length differs from order");
  std::vector<bool> hit(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw InputError("relabel: not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace dtdom
