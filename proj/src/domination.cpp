#include "dtdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "dtdom/errors.hpp"

namespace dtdom {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

void check_host(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("vertex set does not belong to this graph");
}

// Coverage relation as masks: u is satisfied when full[u] meets S or at least
// two members of S lie in half[u].
struct Coverage {
  int n = 0;
  std::vector<Mask> full;
  std::vector<Mask> half;
  std::vector<Mask> full_by;  // vertices fully covered by c
  std::vector<Mask> half_by;

  Coverage(const Graph& g, DominationKind kind) : n(g.order()) {
    full.resize(static_cast<std::size_t>(n));
    half.assign(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u) {
      full[u] = g.mask(u) | (kind == DominationKind::Domination ? bit(u) : 0);
    }
    if (kind == DominationKind::DisjunctiveTotalDomination) {
      for (Vertex u = 0; u < n; ++u) {
        Mask reach = 0;
        Mask nb = g.mask(u);
        while (nb != 0) {
          reach |= g.mask(std::countr_zero(nb));
          nb &= nb - 1;
        }
        half[u] = reach & ~g.mask(u) & ~bit(u);
      }
    }
    // Both relations are symmetric.
    full_by = full;
    half_by = half;
  }

  Mask uncovered(Mask s, Mask* one_half) const {
    Mask out = 0;
    Mask partial = 0;
    for (Vertex u = 0; u < n; ++u) {
      if ((full[u] & s) != 0) continue;
      const int h = std::popcount(half[u] & s);
      if (h >= 2) continue;
      out |= bit(u);
      if (h == 1) partial |= bit(u);
    }
    if (one_half != nullptr) *one_half = partial;
    return out;
  }
};

class Solver {
 public:
  Solver(const Graph& g, DominationKind kind) : cov_(g, kind), all_(g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1) {}

  int lower_bound(Mask s, Mask forbidden) const {
    Mask partial = 0;
    const Mask open = cov_.uncovered(s, &partial);
    if (open == 0) return 0;
    // Demand 2 for untouched vertices, 1 for half-covered ones; a neighbor
    // supplies 2 units, a vertex at distance two supplies 1.
    const Mask fresh = open & ~partial;
    const int demand = 2 * std::popcount(fresh) + std::popcount(partial);
    int best = 0;
    Mask pool = all_ & ~s & ~forbidden;
    while (pool != 0) {
      const Vertex c = std::countr_zero(pool);
      pool &= pool - 1;
      best = std::max(best, supply(c, fresh, partial));
    }
    if (best == 0) return cov_.n + 1;
    return (demand + best - 1) / best;
  }

  bool search(Mask s, Mask forbidden, int budget, Mask& out) {
    ++explored;
    Mask partial = 0;
    const Mask open = cov_.uncovered(s, &partial);
    if (open == 0) {
      out = s;
      return true;
    }
    if (budget == 0 || lower_bound(s, forbidden) > budget) return false;

    // Branch on the open vertex with the fewest admissible coverers.
    Vertex pick = -1;
    int fewest = cov_.n + 1;
    Mask bits = open;
    while (bits != 0) {
      const Vertex u = std::countr_zero(bits);
      bits &= bits - 1;
      const int c = std::popcount((cov_.full[u] | cov_.half[u]) & ~s & ~forbidden);
      if (c < fewest) {
        fewest = c;
        pick = u;
        if (c == 0) return false;
      }
    }
    const Mask fresh = open & ~partial;
    std::vector<std::pair<int, Vertex>> order;
    Mask cands = (cov_.full[pick] | cov_.half[pick]) & ~s & ~forbidden;
    while (cands != 0) {
      const Vertex c = std::countr_zero(cands);
      cands &= cands - 1;
      order.emplace_back(-supply(c, fresh, partial), c);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [score, c] : order) {
      if (search(s | bit(c), forbidden, budget - 1, out)) return true;
      forbidden |= bit(c);
    }
    return false;
  }

  std::uint64_t explored = 0;

 private:
  int supply(Vertex c, Mask fresh, Mask partial) const {
    return 2 * std::popcount(cov_.full_by[c] & fresh) + std::popcount(cov_.full_by[c] & partial) +
           std::popcount(cov_.half_by[c] & (fresh | partial));
  }

  Coverage cov_;
  Mask all_;
};

void check_solvable(const Graph& g, DominationKind kind) {
  if (!g.fits_word()) throw InputError("exact solver supports graphs of order at most 64");
  if (kind != DominationKind::Domination) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        throw DomainError("vertex " + std::to_string(v) + " is isolated; " + std::string(kind_name(kind)) +
                          " requires every vertex to have a neighbor");
      }
    }
  }
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void check_formula_domain(int n) {
  if (n < 3) throw InputError("formula requires n >= 3, got " + std::to_string(n));
}

bool is_leaf(const Graph& g, Vertex v) { return g.degree(v) == 1; }

// Returns the unique non-leaf neighbor of a qualifying support vertex.
Vertex check_support_hypothesis(const Graph& g, const VertexSet& s, Vertex v) {
  check_host(g, s);
  if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  if (!is_dtd_set(g, s)) throw InputError("input set is not a DTD-set");
  bool has_leaf = false;
  Vertex other = -1;
  int others = 0;
  g.neighbors(v).for_each([&](Vertex u) {
    if (is_leaf(g, u)) {
      has_leaf = true;
    } else {
      other = u;
      ++others;
    }
  });
  if (!has_leaf) throw InputError("vertex " + std::to_string(v) + " is not a support vertex");
  if (others != 1) {
    throw InputError("support vertex " + std::to_string(v) + " must have exactly one non-leaf neighbor");
  }
  return other;
}

Vertex lowest_leaf_in(const Graph& g, const VertexSet& s, Vertex v) {
  Vertex found = -1;
  g.neighbors(v).for_each([&](Vertex u) {
    if (found < 0 && is_leaf(g, u) && s.contains(u)) found = u;
  });
  return found;
}

}  // namespace

DominationKind parse_kind(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "dom") return DominationKind::Domination;
  if (n == "tdom") return DominationKind::TotalDomination;
  if (n == "dtd") return DominationKind::DisjunctiveTotalDomination;
  throw InputError("unknown domination kind '" + std::string(name) + "' (expected dom, tdom or dtd)");
}

std::string_view kind_name(DominationKind kind) {
  switch (kind) {
    case DominationKind::Domination:
      return "dom";
    case DominationKind::TotalDomination:
      return "tdom";
    case DominationKind::DisjunctiveTotalDomination:
      return "dtd";
  }
  return "?";
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  return uncovered(g, s, DominationKind::Domination).empty();
}

bool is_total_dominating_set(const Graph& g, const VertexSet& s) {
  return uncovered(g, s, DominationKind::TotalDomination).empty();
}

bool is_dtd_set(const Graph& g, const VertexSet& s, const DistanceTable& dist) {
  check_host(g, s);
  const auto members = s.members();
  for (Vertex u = 0; u < g.order(); ++u) {
    int at_two = 0;
    bool ok = false;
    for (Vertex m : members) {
      const int d = dist.at(u, m);
      if (d == 1) {
        ok = true;
        break;
      }
      if (d == 2 && ++at_two >= 2) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_dtd_set(const Graph& g, const VertexSet& s) { return dtd_uncovered(g, s).empty(); }

VertexSet dtd_uncovered(const Graph& g, const VertexSet& s) {
  return uncovered(g, s, DominationKind::DisjunctiveTotalDomination);
}

VertexSet uncovered(const Graph& g, const VertexSet& s, DominationKind kind) {
  check_host(g, s);
  VertexSet out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet nb = g.neighbors(u);
    if (nb.intersects(s)) continue;
    if (kind == DominationKind::Domination && s.contains(u)) continue;
    if (kind == DominationKind::DisjunctiveTotalDomination) {
      VertexSet two(g.order());
      nb.for_each([&](Vertex w) { two |= g.neighbors(w); });
      two -= g.closed_neighbors(u);
      if ((two & s).size() >= 2) continue;
    }
    out.insert(u);
  }
  return out;
}

bool satisfies(const Graph& g, const VertexSet& s, DominationKind kind) { return uncovered(g, s, kind).empty(); }

SolveResult exact_number(const Graph& g, DominationKind kind) {
  check_solvable(g, kind);
  SolveResult r{kind, 0, VertexSet(g.order()), 0};
  if (g.order() == 0) return r;
  Solver solver(g, kind);
  Mask found = 0;
  for (int k = std::max(1, solver.lower_bound(0, 0)); k <= g.order(); ++k) {
    if (solver.search(0, 0, k, found)) {
      r.value = std::popcount(found);
      r.witness = VertexSet::from_mask(g.order(), found);
      r.explored = solver.explored;
      return r;
    }
  }
  throw InvariantError("exact solver found no qualifying set");
}

std::optional<VertexSet> find_set_within(const Graph& g, DominationKind kind, int budget) {
  check_solvable(g, kind);
  if (budget < 0) return std::nullopt;
  Solver solver(g, kind);
  Mask found = 0;
  if (!solver.search(0, 0, budget, found)) return std::nullopt;
  return VertexSet::from_mask(g.order(), found);
}

int dtd_cycle_formula(int n) {
  check_formula_domain(n);
  return n % 5 == 0 ? 2 * n / 5 : ceil_div(2 * (n + 1), 5);
}

int dtd_path_formula(int n) {
  check_formula_domain(n);
  const int base = ceil_div(2 * (n + 1), 5);
  return n % 5 == 1 ? base + 1 : base;
}

int gt_cycle_formula(int n) {
  check_formula_domain(n);
  return n / 2 + ceil_div(n, 4) - n / 4;
}

VertexSet cycle_witness(int n) {
  check_formula_domain(n);
  VertexSet s(n);
  for (int i = 0; i < n / 5; ++i) {
    s.insert(5 * i);
    s.insert(5 * i + 1);
  }
  const int r = n % 5;
  if (r == 1) {
    s.insert(n - 1);
  } else if (r != 0) {
    s.insert(((n - 5) % n + n) % n);
    s.insert(((n - 4) % n + n) % n);
  }
  return s;
}

VertexSet path_witness(int n) {
  check_formula_domain(n);
  VertexSet s(n);
  for (int i = 0; i < n / 5; ++i) {
    s.insert(5 * i + 1);
    s.insert(5 * i + 2);
  }
  s.insert(n - 2);
  if (n % 5 != 0) s.insert(n - 3);
  return s;
}

VertexSet support_exchange(const Graph& g, const VertexSet& s, Vertex v) {
  check_support_hypothesis(g, s, v);
  if (s.contains(v)) return s;
  const Vertex leaf = lowest_leaf_in(g, s, v);
  if (leaf < 0) throw InvariantError("DTD-set misses every leaf of an unselected support vertex");
  VertexSet out = s;
  out.erase(leaf);
  out.insert(v);
  if (!is_dtd_set(g, out)) throw InvariantError("support exchange produced an invalid set");
  return out;
}

VertexSet support_exchange_pair(const Graph& g, const VertexSet& s, Vertex v) {
  const Vertex w = check_support_hypothesis(g, s, v);
  if (g.degree(w) != 2) {
    throw InputError("non-leaf neighbor " + std::to_string(w) + " of " + std::to_string(v) + " must have degree 2");
  }
  VertexSet out = support_exchange(g, s, v);
  if (out.contains(w)) return out;
  const Vertex leaf = lowest_leaf_in(g, out, v);
  if (leaf < 0) throw InvariantError("no leaf of the support vertex available to exchange");
  out.erase(leaf);
  out.insert(w);
  if (!is_dtd_set(g, out)) throw InvariantError("support exchange produced an invalid set");
  return out;
}

}  // namespace dtdom
