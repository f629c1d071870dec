#include "dtdom/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <set>
#include <string>

#include "dtdom/errors.hpp"
#include "dtdom/graph_io.hpp"
#include "dtdom/isomorphism.hpp"

namespace dtdom {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

bool is_clique(const std::vector<Mask>& rows, Mask s) {
  Mask rest = s;
  while (rest != 0) {
    const int a = std::countr_zero(rest);
    rest &= rest - 1;
    if ((s & ~rows[a] & ~bit(a)) != 0) return false;
  }
  return true;
}

bool connected_without(const std::vector<Mask>& rows, int n, int removed) {
  const Mask all = (n == 64 ? ~Mask{0} : bit(n) - 1) & ~bit(removed);
  if (all == 0) return true;
  Mask seen = bit(std::countr_zero(all));
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    while (frontier != 0) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= rows[u];
    }
    next &= all & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

// Cheap vertex invariant: degree, neighbor-degree sum, triangles.
std::uint64_t vertex_invariant(const std::vector<Mask>& rows, int u) {
  std::uint64_t nsum = 0;
  std::uint64_t tri = 0;
  Mask nb = rows[u];
  while (nb != 0) {
    const int w = std::countr_zero(nb);
    nb &= nb - 1;
    nsum += static_cast<std::uint64_t>(std::popcount(rows[w]));
    tri += static_cast<std::uint64_t>(std::popcount(rows[w] & rows[u]));
  }
  return (static_cast<std::uint64_t>(std::popcount(rows[u])) << 40) | (nsum << 20) | tri;
}

Mask image(const std::vector<Vertex>& perm, Mask s) {
  Mask out = 0;
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    out |= bit(perm[v]);
  }
  return out;
}

// True when `s` is the smallest mask in its orbit under the group generated by `gens`.
bool is_orbit_minimum(const std::vector<std::vector<Vertex>>& gens, Mask s) {
  if (gens.empty()) return true;
  std::vector<Mask> stack{s};
  std::set<Mask> seen{s};
  while (!stack.empty()) {
    const Mask cur = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const Mask img = image(g, cur);
      if (img < s) return false;
      if (seen.insert(img).second) stack.push_back(img);
    }
  }
  return true;
}

// Canonical deletion: the new vertex v must share an automorphism orbit with
// the highest-canonical-label vertex among the non-cut vertices of maximal invariant.
bool is_canonical_child(const std::vector<Mask>& rows, int n, int v) {
  std::vector<std::uint64_t> inv(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) inv[u] = vertex_invariant(rows, u);
  std::vector<int> ties;
  for (int u = 0; u < n; ++u) {
    if (u == v || inv[u] < inv[v]) continue;
    if (!connected_without(rows, n, u)) continue;
    if (inv[u] > inv[v]) return false;
    ties.push_back(u);
  }
  if (ties.empty()) return true;
  const Graph child = Graph::from_masks(n, rows);
  const auto lab = canonical_labeling(child);
  int m = v;
  for (int u : ties) {
    if (lab.label[u] > lab.label[m]) m = u;
  }
  if (m == v) return true;
  const auto orbit = lab.orbits();
  return orbit[m] == orbit[v];
}

void for_each_child(const Graph& parent, GraphClass cls, const std::function<void(const Graph&)>& fn) {
  const int k = parent.order();
  if (k >= 64) throw InputError("enumeration supports orders up to 64");
  std::vector<Mask> rows(static_cast<std::size_t>(k) + 1, 0);
  for (int u = 0; u < k; ++u) rows[u] = parent.mask(u);
  const auto gens = canonical_labeling(parent).generators;
  const bool clawfree = cls == GraphClass::ConnectedClawFree;

  auto emit = [&](Mask nbhd) {
    if (clawfree) {
      Mask rest = nbhd;
      while (rest != 0) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (!is_clique(rows, rows[u] & ~nbhd)) return;
      }
    }
    if (!is_orbit_minimum(gens, nbhd)) return;
    std::vector<Mask> child = rows;
    child[k] = nbhd;
    Mask rest = nbhd;
    while (rest != 0) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      child[u] |= bit(k);
    }
    if (!is_canonical_child(child, k + 1, k)) return;
    fn(Graph::from_masks(k + 1, child));
  };

  // Subsets in a fixed order; for claw-free children the neighborhood must
  // not contain an independent triple, which is closed under supersets.
  std::function<void(int, Mask)> walk = [&](int u, Mask nbhd) {
    if (u == k) {
      if (nbhd != 0) emit(nbhd);
      return;
    }
    walk(u + 1, nbhd);
    if (clawfree) {
      const Mask away = nbhd & ~rows[u];
      if (!is_clique(rows, away)) return;
    }
    walk(u + 1, nbhd | bit(u));
  };
  walk(0, 0);
}

void descend(const Graph& g, int target, GraphClass cls, const std::function<void(const Graph&)>& fn) {
  if (g.order() == target) {
    fn(g);
    return;
  }
  for_each_child(g, cls, [&](const Graph& child) { descend(child, target, cls, fn); });
}

// Level sequences of rooted trees, following the constant-time free-tree
// successor of Wright, Richmond, Odlyzko and McKay.
using Layout = std::vector<int>;

std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> start = std::nullopt) {
  std::size_t p = 0;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

std::optional<Layout> next_tree(const Layout& candidate) {
  const auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;
  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (next && candidate[p] > 2) {
    const auto [new_left, new_rest] = split_tree(*next);
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<Edge> edges;
  std::vector<int> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(stack.back(), static_cast<int>(i));
    }
    stack.push_back(static_cast<int>(i));
  }
  return Graph::from_edge_list(static_cast<int>(layout.size()), edges);
}

void check_spec(const EnumSpec& spec) {
  if (spec.n < 1) throw InputError("enumeration order must be >= 1");
  if (!spec.corpus && spec.n > builtin_limit(spec.cls)) {
    throw InputError("builtin " + std::string(graph_class_name(spec.cls)) + " enumeration is limited to n <= " +
                     std::to_string(builtin_limit(spec.cls)) + "; supply a graph6 corpus for larger orders");
  }
}

std::vector<Graph> corpus_graphs(const EnumSpec& spec) {
  std::ifstream in(*spec.corpus);
  if (!in) throw IoError("cannot open corpus " + spec.corpus->string());
  std::vector<Graph> out;
  std::set<CanonicalForm> seen;
  for_each_graph6(in, [&](const Graph& g, int lineno) {
    if (g.order() != spec.n || !belongs_to(g, spec.cls)) return;
    if (!g.fits_word()) throw IoError("corpus graph too large for canonical labeling", lineno);
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  });
  return out;
}

}  // namespace

GraphClass parse_graph_class(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "all") return GraphClass::AllConnected;
  if (n == "clawfree" || n == "claw-free") return GraphClass::ConnectedClawFree;
  if (n == "trees" || n == "tree") return GraphClass::Trees;
  throw InputError("unknown graph class '" + std::string(name) + "' (expected all, clawfree or trees)");
}

std::string_view graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::AllConnected:
      return "all";
    case GraphClass::ConnectedClawFree:
      return "clawfree";
    case GraphClass::Trees:
      return "trees";
  }
  return "?";
}

int builtin_limit(GraphClass c) {
  switch (c) {
    case GraphClass::AllConnected:
      return 8;
    case GraphClass::ConnectedClawFree:
      return 12;
    case GraphClass::Trees:
      return 16;
  }
  return 0;
}

bool belongs_to(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::AllConnected:
      return is_connected(g);
    case GraphClass::ConnectedClawFree:
      return is_connected(g) && is_claw_free(g);
    case GraphClass::Trees:
      return is_tree(g);
  }
  return false;
}

std::vector<Graph> free_trees(int n) {
  if (n < 1) throw InputError("tree order must be >= 1");
  if (n <= 3) return {Graph::from_edge_list(n, n == 1 ? std::vector<Edge>{} : n == 2 ? std::vector<Edge>{{0, 1}} : std::vector<Edge>{{0, 1}, {1, 2}})};
  Layout layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  std::vector<Graph> out;
  std::optional<Layout> cur = layout;
  while (cur) {
    cur = next_tree(*cur);
    if (!cur) break;
    out.push_back(layout_to_graph(*cur));
    cur = next_rooted_tree(*cur);
  }
  return out;
}

EnumPlan plan_enumeration(const EnumSpec& spec) {
  check_spec(spec);
  EnumPlan plan{spec, {}};
  if (spec.corpus) {
    plan.roots = corpus_graphs(spec);
  } else if (spec.cls == GraphClass::Trees) {
    plan.roots = free_trees(spec.n);
  } else {
    // Grow level by level until there are enough independent subtrees.
    std::vector<Graph> level{Graph::from_edge_list(1, {})};
    while (level.front().order() < spec.n && level.size() < 256) {
      std::vector<Graph> next;
      for (const auto& g : level) for_each_child(g, spec.cls, [&](const Graph& c) { next.push_back(c); });
      level = std::move(next);
      if (level.empty()) break;
    }
    plan.roots = std::move(level);
  }
  return plan;
}

void expand_root(const EnumPlan& plan, const Graph& root, const std::function<void(const Graph&)>& fn) {
  if (root.order() == plan.spec.n) {
    fn(root);
    return;
  }
  descend(root, plan.spec.n, plan.spec.cls, fn);
}

void enumerate(const EnumSpec& spec, const std::function<void(const Graph&)>& fn) {
  const auto plan = plan_enumeration(spec);
  for (const auto& root : plan.roots) expand_root(plan, root, fn);
}

std::vector<Graph> enumerate_all(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace dtdom
