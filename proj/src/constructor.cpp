#include "dtdom/constructor.hpp"

#include <algorithm>
#include <optional>

#include "dtdom/domination.hpp"
#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "dtdom/isomorphism.hpp"

namespace dtdom {

namespace {

constexpr auto kDtd = DominationKind::DisjunctiveTotalDomination;

// Fragments up to this order are solved exactly rather than decomposed again.
constexpr int kSmallOrder = 11;

// The proof path could not be followed; construct_dtd_clawfree falls back.
struct ProofGap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_path_graph(const Graph& f) {
  return is_tree(f) && f.max_degree() <= 2;
}

FragmentKind classify_fragment(const Graph& f) {
  switch (f.order()) {
    case 1:
      return FragmentKind::P1;
    case 2:
      return FragmentKind::P2;
    case 3:
      return f.size() == 3 ? FragmentKind::C3 : FragmentKind::P3;
    case 5:
      return is_path_graph(f) ? FragmentKind::P5 : FragmentKind::NonExceptional;
    case 6:
      return is_path_graph(f) ? FragmentKind::P6 : FragmentKind::NonExceptional;
    case 10:
      return is_isomorphic(f, generate(FamilyId::g(3))) ? FragmentKind::G3 : FragmentKind::NonExceptional;
    default:
      return FragmentKind::NonExceptional;
  }
}

bool exceptional(FragmentKind k) { return k != FragmentKind::P1 && k != FragmentKind::NonExceptional; }

// Vertices of a path fragment in order, starting from its lower-id end.
std::vector<Vertex> path_order(const Graph& g, const VertexSet& part) {
  std::vector<Vertex> ends;
  part.for_each([&](Vertex v) {
    if ((g.neighbors(v) & part).size() <= 1) ends.push_back(v);
  });
  std::vector<Vertex> order{ends.front()};
  Vertex prev = -1;
  while (static_cast<int>(order.size()) < part.size()) {
    const Vertex cur = order.back();
    Vertex next = -1;
    (g.neighbors(cur) & part).for_each([&](Vertex w) {
      if (w != prev && next < 0) next = w;
    });
    prev = cur;
    order.push_back(next);
  }
  return order;
}

void attach_path(const Graph& g, FragmentRecord& fr) {
  auto p = path_order(g, fr.vertices);
  const Vertex xf = fr.chosen;
  auto adj = [&](std::size_t i) { return g.adjacent(xf, p[i]); };
  const std::size_t k = p.size();
  if (fr.kind == FragmentKind::P2) {
    if (adj(0) && adj(1)) {
      fr.attachment = Attachment::Step4_1;
    } else {
      if (!adj(0)) std::reverse(p.begin(), p.end());
      fr.attachment = Attachment::Step4_2;
    }
  } else if (fr.kind == FragmentKind::P3) {
    if (adj(1)) {
      fr.attachment = Attachment::Step5_1;
    } else if (adj(0) != adj(2)) {
      if (!adj(0)) std::reverse(p.begin(), p.end());
      fr.attachment = Attachment::Step5_2;
    } else {
      fr.attachment = Attachment::Unsupported;
    }
  } else if (fr.kind == FragmentKind::P5) {
    if (adj(0) || adj(k - 1)) {
      if (!adj(0)) std::reverse(p.begin(), p.end());
      fr.attachment = Attachment::Step7_1;
    } else if (adj(2) && (adj(1) || adj(3))) {
      if (!adj(1)) std::reverse(p.begin(), p.end());
      fr.attachment = Attachment::Step7_2;
    } else {
      fr.attachment = Attachment::Unsupported;
    }
  } else {  // P6
    if (adj(0) || adj(k - 1)) {
      if (!adj(0)) std::reverse(p.begin(), p.end());
      fr.attachment = Attachment::Step8_1;
    } else if (adj(1) || adj(k - 2)) {
      if (!adj(1)) std::reverse(p.begin(), p.end());
      fr.attachment = adj(2) ? Attachment::Step8_2 : Attachment::Unsupported;
    } else if (adj(2) && adj(3)) {
      fr.attachment = Attachment::Step8_3;
    } else {
      fr.attachment = Attachment::Unsupported;
    }
  }
  fr.layout = std::move(p);
}

// Maps the G(3) numbering (center 0, branches 1-2-3, 4-5-6, 7-8-9, edge 1-4)
// onto the fragment, as layout u1,u2,u3, v1,v2,v3, w, w1,w2,w3.
std::vector<Vertex> g3_layout(const Graph& g, const VertexSet& part) {
  const Subgraph sub = induced_subgraph(g, part);
  const auto iso = find_isomorphism(generate(FamilyId::g(3)), sub.graph);
  if (!iso) throw InvariantError("fragment is not G_3");
  std::vector<Vertex> out;
  for (int v : {1, 2, 3, 4, 5, 6, 0, 7, 8, 9}) out.push_back(sub.new_to_old[(*iso)[v]]);
  return out;
}

void swap_uv(std::vector<Vertex>& l) { std::swap_ranges(l.begin(), l.begin() + 3, l.begin() + 3); }

void attach_g3(const Graph& g, FragmentRecord& fr) {
  auto l = g3_layout(g, fr.vertices);
  const Vertex xf = fr.chosen;
  auto adj = [&](std::size_t i) { return g.adjacent(xf, l[i]); };
  enum { u1, u2, u3, v1, v2, v3, w, w1, w2, w3 };
  if (adj(w3)) {
    fr.attachment = Attachment::Step9_1;
  } else if (adj(u3) || adj(v3)) {
    if (!adj(u3)) swap_uv(l);
    fr.attachment = Attachment::Step9_2;
  } else if (adj(w2)) {
    fr.attachment = Attachment::Step9_3;
  } else if (adj(u2) || adj(v2)) {
    if (!adj(u2)) swap_uv(l);
    fr.attachment = Attachment::Step9_4;
  } else if (!adj(w)) {
    fr.attachment = Attachment::Unsupported;
  } else if (adj(w1)) {
    fr.attachment = Attachment::Step9_5_1;
  } else {
    fr.attachment = adj(u1) && adj(v1) ? Attachment::Step9_5_2 : Attachment::Unsupported;
  }
  fr.layout = std::move(l);
}

void attach(const Graph& g, FragmentRecord& fr) {
  switch (fr.kind) {
    case FragmentKind::P2:
    case FragmentKind::P3:
    case FragmentKind::P5:
    case FragmentKind::P6:
      attach_path(g, fr);
      break;
    case FragmentKind::C3:
      fr.layout = fr.vertices.members();
      fr.attachment = Attachment::Step6;
      break;
    case FragmentKind::G3:
      attach_g3(g, fr);
      break;
    default:
      fr.layout = fr.vertices.members();
      fr.attachment = Attachment::None;
  }
}

void require_claw_free(const Graph& g) {
  if (auto c = find_claw(g)) {
    throw InputError("graph is not claw-free: claw centered at " + std::to_string(c->center) + " with leaves " +
                     std::to_string(c->leaves[0]) + "," + std::to_string(c->leaves[1]) + "," +
                     std::to_string(c->leaves[2]));
  }
}

Decomposition build_decomposition(const Graph& g, Vertex x, Vertex y, std::vector<Vertex> tail) {
  const int n = g.order();
  Decomposition dec;
  dec.x = x;
  dec.y = y;
  dec.tail = std::move(tail);
  dec.X = g.closed_neighbors(x);
  dec.X.erase(y);
  dec.X.for_each([&](Vertex a) {
    dec.X.for_each([&](Vertex b) {
      if (a < b && !g.adjacent(a, b)) throw InvariantError("X is not a clique");
    });
  });
  VertexSet removed = dec.X;
  for (Vertex t : dec.tail) removed.insert(t);
  const Subgraph rest = remove_vertices(g, removed);
  VertexSet used(n);
  for (const auto& comp : components(rest.graph)) {
    FragmentRecord fr;
    fr.vertices = rest.lift(comp, n);
    const Subgraph sub = induced_subgraph(g, fr.vertices);
    fr.kind = classify_fragment(sub.graph);
    dec.X.for_each([&](Vertex a) {
      if (fr.chosen < 0 && g.neighbors(a).intersects(fr.vertices)) fr.chosen = a;
    });
    if (fr.chosen < 0) throw InvariantError("fragment not attached to X");
    dec.X.for_each([&](Vertex a) {
      if (!g.neighbors(a).intersects(fr.vertices)) return;
      if (used.contains(a)) throw InvariantError("a vertex of X touches two fragments");
      used.insert(a);
    });
    attach(g, fr);
    dec.fragments.push_back(std::move(fr));
  }
  dec.X1 = dec.X;
  dec.Y = VertexSet(n);
  for (const auto& fr : dec.fragments) {
    if (exceptional(fr.kind)) dec.X1.erase(fr.chosen);
    if (fr.kind == FragmentKind::P1) dec.Y |= fr.vertices;
  }
  dec.Y |= dec.X1;
  for (Vertex t : dec.tail) dec.Y.insert(t);
  dec.Y.insert(x);
  return dec;
}

// Selection of Steps 3-9 for one fragment.
void select_fragment(const Graph& g, const FragmentRecord& fr, const FragmentSolver& solve, VertexSet& s) {
  const auto& l = fr.layout;
  const Vertex xf = fr.chosen;
  auto add = [&](std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) s.insert(v);
  };
  auto first_neighbor_in_fragment = [&] { return (g.neighbors(xf) & fr.vertices).first(); };
  switch (fr.attachment) {
    case Attachment::None:
      if (fr.kind == FragmentKind::NonExceptional) {
        const Subgraph sub = induced_subgraph(g, fr.vertices);
        s |= sub.lift(solve(sub.graph), g.order());
      }
      return;
    case Attachment::Step4_1:
      add({xf});
      return;
    case Attachment::Step4_2:
      add({l[0]});
      return;
    case Attachment::Step5_1:
    case Attachment::Step6:
      add({xf, first_neighbor_in_fragment()});
      return;
    case Attachment::Step5_2:
      add({l[0], l[1]});
      return;
    case Attachment::Step7_1:
    case Attachment::Step7_2:
      add({xf, l[2], l[3]});
      return;
    case Attachment::Step8_1:
      add({xf, l[3], l[4]});
      return;
    case Attachment::Step8_2:
      add({l[1], l[3], l[4]});
      return;
    case Attachment::Step8_3:
      add({xf, l[1], l[3], l[4]});
      return;
    default:
      break;
  }
  // G3: D = {x_F, u1, u2, v1, v2, w1, w2} with the per-case edits.
  enum { u1, u2, u3, v1, v2, v3, w, w1, w2, w3 };
  switch (fr.attachment) {
    case Attachment::Step9_1:
      add({xf, l[u1], l[u2], l[v1], l[v2], l[w3]});
      return;
    case Attachment::Step9_2:
      add({xf, l[u3], l[v1], l[v2], l[w1], l[w2]});
      return;
    case Attachment::Step9_3:
      add({xf, l[u1], l[u2], l[v1], l[v2], l[w1]});
      return;
    case Attachment::Step9_4:
      add({xf, l[u1], l[v1], l[v2], l[w1], l[w2]});
      return;
    case Attachment::Step9_5_1:
      add({xf, l[u2], l[v1], l[v2], l[w2], l[w]});
      return;
    case Attachment::Step9_5_2:
      add({xf, l[u2], l[v2], l[w1], l[w2], l[w]});
      return;
    default:
      throw InvariantError("fragment " + to_string(fr.vertices) + " (" + std::string(fragment_kind_name(fr.kind)) +
                           ") matches no selection rule");
  }
}

VertexSet run_selection(const Graph& g, const Decomposition& dec, const FragmentSolver& solve, bool variant_b) {
  VertexSet s(g.order());
  s.insert(dec.x);
  if (variant_b) {
    s.insert(dec.y);
  } else if (dec.Y.size() >= 4) {
    VertexSet others = dec.X1;
    others.erase(dec.x);
    if (others.empty()) throw InvariantError("|Y| >= 4 but X_1 has no vertex besides x");
    s.insert(others.first());
  }
  for (const auto& fr : dec.fragments) {
    select_fragment(g, fr, solve, s);
    if (variant_b && fr.kind == FragmentKind::P1) s.insert(fr.chosen);
  }
  return s;
}

const FragmentRecord* first_of(const Decomposition& dec, FragmentKind kind) {
  for (const auto& fr : dec.fragments) {
    if (fr.kind == kind) return &fr;
  }
  return nullptr;
}

int count_of(const Decomposition& dec, FragmentKind kind) {
  return static_cast<int>(std::count_if(dec.fragments.begin(), dec.fragments.end(),
                                        [&](const FragmentRecord& f) { return f.kind == kind; }));
}

VertexSet with(VertexSet s, std::initializer_list<Vertex> add, std::initializer_list<Vertex> drop = {}) {
  for (Vertex v : drop) s.erase(v);
  for (Vertex v : add) s.insert(v);
  return s;
}

class ProofBuilder {
 public:
  explicit ProofBuilder(int depth_limit) : limit_(depth_limit) {}

  // DTD-set of size at most 4n/7 for a connected claw-free graph outside E.
  VertexSet build(const Graph& g, int depth) {
    if (depth > limit_) throw InvariantError("recursion depth limit exceeded");
    if (depth > 0 && (g.order() <= kSmallOrder || g.min_degree() >= 2)) return exact_fragment_solver(g);
    const VertexSet lv = leaves(g);
    const Vertex y0 = lv.first();
    if (auto s = phase_a(g, y0, depth)) return *s;
    Vertex y1 = -1;
    lv.for_each([&](Vertex leaf) {
      if (y1 < 0 && g.degree(g.neighbors(leaf).first()) >= 3) y1 = leaf;
    });
    if (y1 >= 0) {
      if (auto s = phase_a(g, y1, depth)) return *s;
      throw ProofGap("support of degree >= 3 did not resolve the leaf case");
    }
    return phase_b(g, y0, depth);
  }

 private:
  FragmentSolver recurse(int depth) {
    return [this, depth](const Graph& f) { return build(f, depth + 1); };
  }

  // Algorithm A plus the leaf-case repairs; nullopt when no repair applies.
  std::optional<VertexSet> phase_a(const Graph& g, Vertex y, int depth) {
    const Decomposition dec = decompose(g, y);
    VertexSet s = algorithm_a(g, dec, recurse(depth));
    if ((s & dec.X).size() >= 2) return s;  // two vertices of X chosen
    if (const auto* p6 = first_of(dec, FragmentKind::P6)) return with(s, {p6->chosen});  // P6 fragment
    const FragmentRecord* p2 = first_of(dec, FragmentKind::P2);
    const bool all_exceptional = std::none_of(dec.fragments.begin(), dec.fragments.end(), [](const FragmentRecord& f) {
      return f.kind == FragmentKind::NonExceptional;
    });
    if (all_exceptional) return p2 == nullptr ? s : with(s, {p2->chosen});  // exceptional fragments only
    if (p2 != nullptr) return with(s, {p2->chosen});                         // some P2 fragment
    const int k3 = count_of(dec, FragmentKind::P3);
    if (k3 >= 2) return s;  // two or more P3 fragments
    if (k3 == 1) return p3_repair(g, dec, *first_of(dec, FragmentKind::P3), depth);
    return std::nullopt;
  }

  VertexSet p3_repair(const Graph& g, const Decomposition& dec, const FragmentRecord& p3, int depth) {
    // z1 z2 z3 z4: x_F followed by the P3 from the leaf it touches.
    if (p3.attachment != Attachment::Step5_2) throw ProofGap("P3 fragment not attached at a leaf");
    const Vertex z2 = p3.layout[0];
    const Vertex z3 = p3.layout[1];
    VertexSet drop = p3.vertices;
    drop.insert(p3.chosen);
    const Subgraph star = remove_vertices(g, drop);
    const Graph g3 = generate(FamilyId::g(3));
    if (auto iso = find_isomorphism(g3, star.graph)) {
      // G(3) numbering: d=0, a=1,2,3, b=4,5,6, c=7,8,9 with a1~b1.
      std::vector<Vertex> at(10);
      for (int v = 0; v < 10; ++v) at[v] = star.new_to_old[(*iso)[v]];
      if (dec.y == at[6]) {
        for (int i = 1; i <= 3; ++i) std::swap(at[i], at[i + 3]);
      }
      VertexSet out(g.order());
      if (dec.y == at[3]) {
        for (int v : {2, 4, 5, 7, 8}) out.insert(at[v]);
      } else if (dec.y == at[9]) {
        for (int v : {1, 2, 5, 8, 0}) out.insert(at[v]);
      } else {
        throw ProofGap("leaf of G* is not a branch end");
      }
      return with(out, {z2, z3});
    }
    return with(star.lift(build(star.graph, depth + 1), g.order()), {z2, z3});
  }

  // Algorithm B rooted at the tail z y x, with the |Y| >= 4 and |S ∩ X| = 2 repairs.
  VertexSet phase_b(const Graph& g, Vertex z, int depth) {
    const Decomposition dec = decompose_tail(g, z);
    const VertexSet s = algorithm_b(g, dec, recurse(depth));
    const Vertex x = dec.x;
    if (dec.Y.size() >= 4) {
      if (is_dtd_set(g, s)) return s;
      for (const auto& fr : dec.fragments) {
        if (fr.attachment != Attachment::Step4_2) continue;
        const Vertex y1 = fr.layout[0];
        const Vertex z1 = fr.layout[1];
        if (g.degree(z1) > 1) {
          VertexSet others = g.neighbors(z1) & dec.X;
          others.erase(fr.chosen);
          if (others.empty()) throw ProofGap("non-leaf end of a P2 fragment has no second X neighbor");
          return with(s, {fr.chosen, others.first()}, {y1});
        }
        VertexSet pool = dec.X1;
        pool.erase(x);
        if (pool.empty()) throw ProofGap("X_1 has no vertex besides x");
        return with(s, {pool.first()});
      }
      throw ProofGap("|Y| >= 4 but no P2 fragment is attached at one vertex");
    }
    const int in_x = (s & dec.X).size();
    if (in_x >= 3) return with(s, {}, {x});
    if (in_x == 2) return x_pair_repair(dec, s);
    if (count_of(dec, FragmentKind::P2) == 0) return s;
    VertexSet pool = dec.X;
    pool.erase(x);
    if (pool.empty()) throw ProofGap("X has no vertex besides x");
    return with(s, {pool.first()});
  }

  static VertexSet x_pair_repair(const Decomposition& dec, const VertexSet& s) {
    VertexSet other = s & dec.X;
    other.erase(dec.x);
    const Vertex xf = other.first();
    for (const auto& fr : dec.fragments) {
      if (fr.chosen != xf || fr.kind != FragmentKind::G3 || dec.X.size() != 2) continue;
      const auto& l = fr.layout;
      enum { u1, u2, u3, v1, v2, v3, w, w1, w2, w3 };
      if (fr.attachment == Attachment::Step9_1) return with(s, {l[w1]}, {xf, l[w3]});
      if (fr.attachment == Attachment::Step9_2) return with(s, {l[u1], l[w]}, {l[u3], l[v1], xf});
    }
    return s;
  }

  int limit_;
};

std::string subscripted(const FamilyId& id) {
  const std::string s = id.to_string();  // e.g. "P(6)"
  const auto open = s.find('(');
  return s.substr(0, open) + "_" + s.substr(open + 1, s.size() - open - 2);
}

}  // namespace

std::string_view fragment_kind_name(FragmentKind k) {
  switch (k) {
    case FragmentKind::P1:
      return "P1";
    case FragmentKind::P2:
      return "P2";
    case FragmentKind::P3:
      return "P3";
    case FragmentKind::P5:
      return "P5";
    case FragmentKind::P6:
      return "P6";
    case FragmentKind::C3:
      return "C3";
    case FragmentKind::G3:
      return "G3";
    case FragmentKind::NonExceptional:
      return "non-exceptional";
  }
  return "?";
}

std::string_view attachment_name(Attachment a) {
  static constexpr std::string_view names[] = {"none", "4.1", "4.2", "5.1", "5.2", "6",     "7.1",   "7.2", "8.1",
                                               "8.2",  "8.3", "9.1", "9.2", "9.3", "9.4", "9.5.1", "9.5.2", "unsupported"};
  return names[static_cast<int>(a)];
}

Decomposition decompose(const Graph& g, Vertex y) {
  if (y < 0 || y >= g.order()) throw InputError("vertex " + std::to_string(y) + " out of range");
  if (g.degree(y) != 1) throw InputError("vertex " + std::to_string(y) + " is not a leaf");
  require_claw_free(g);
  return build_decomposition(g, g.neighbors(y).first(), y, {y});
}

Decomposition decompose_tail(const Graph& g, Vertex z) {
  if (z < 0 || z >= g.order()) throw InputError("vertex " + std::to_string(z) + " out of range");
  if (g.degree(z) != 1) throw InputError("vertex " + std::to_string(z) + " is not a leaf");
  const Vertex y = g.neighbors(z).first();
  if (g.degree(y) != 2) throw InputError("neighbor " + std::to_string(y) + " of leaf " + std::to_string(z) + " must have degree 2");
  require_claw_free(g);
  VertexSet rest = g.neighbors(y);
  rest.erase(z);
  return build_decomposition(g, rest.first(), y, {z, y});
}

VertexSet exact_fragment_solver(const Graph& f) { return exact_number(f, kDtd).witness; }

VertexSet algorithm_a(const Graph& g, const Decomposition& dec, const FragmentSolver& solve) {
  return run_selection(g, dec, solve, false);
}

VertexSet algorithm_b(const Graph& g, const Decomposition& dec, const FragmentSolver& solve) {
  return run_selection(g, dec, solve, true);
}

Construction construct_dtd_clawfree(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("graph must have at least 2 vertices");
  if (!is_connected(g)) throw InputError("graph is not connected");
  require_claw_free(g);
  if (auto e = exceptional_member(g)) throw DomainError("graph is " + subscripted(*e) + " ∈ E");
  if (g.min_degree() >= 2) return {exact_number(g, kDtd).witness, "exact-mindeg2"};
  try {
    ProofBuilder builder(std::max(1, n / 3));
    VertexSet s = builder.build(g, 0);
    if (is_dtd_set(g, s) && 7 * s.size() <= 4 * n) return {std::move(s), "proof-path"};
  } catch (const ProofGap&) {
  } catch (const InvariantError&) {
  }
  return {exact_number(g, kDtd).witness, n <= kSmallOrder ? "exact-small" : "fallback-exact"};
}

VertexSet greedy_dtd(const Graph& g) {
  const int n = g.order();
  if (has_isolated_vertex(g)) throw DomainError("greedy_dtd requires a graph without isolated vertices");
  const DistanceTable dist = bfs_distances(g);
  VertexSet s(n);
  std::vector<int> at_two(static_cast<std::size_t>(n), 0);
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  int open = n;
  while (open > 0) {
    Vertex best = -1;
    std::pair<int, int> best_score{-1, -1};
    for (Vertex c = 0; c < n; ++c) {
      if (s.contains(c)) continue;
      int gain = 0;
      int progress = 0;
      for (Vertex u = 0; u < n; ++u) {
        if (covered[u]) continue;
        const int d = dist.at(c, u);
        if (d == 1 || (d == 2 && at_two[u] == 1)) {
          ++gain;
        } else if (d == 2) {
          ++progress;
        }
      }
      if (std::pair{gain, progress} > best_score) {
        best_score = {gain, progress};
        best = c;
      }
    }
    s.insert(best);
    for (Vertex u = 0; u < n; ++u) {
      const int d = dist.at(best, u);
      if (d == 2) ++at_two[u];
      if (!covered[u] && (d == 1 || (d == 2 && at_two[u] >= 2))) {
        covered[u] = true;
        --open;
      }
    }
  }
  return s;
}

}  // namespace dtdom
