#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dtdom/graph.hpp"

namespace dtdom {

enum class FragmentKind { P1, P2, P3, P5, P6, C3, G3, NonExceptional };

/// Which selection rule of Algorithm A applies to a fragment.
enum class Attachment {
  None,  // P1 and non-exceptional fragments
  Step4_1,
  Step4_2,
  Step5_1,
  Step5_2,
  Step6,
  Step7_1,
  Step7_2,
  Step8_1,
  Step8_2,
  Step8_3,
  Step9_1,
  Step9_2,
  Step9_3,
  Step9_4,
  Step9_5_1,
  Step9_5_2,
  Unsupported,  // no rule matches; only possible when preconditions fail
};

std::string_view fragment_kind_name(FragmentKind k);
std::string_view attachment_name(Attachment a);

struct FragmentRecord {
  VertexSet vertices;
  FragmentKind kind = FragmentKind::NonExceptional;
  Vertex chosen = -1;  // x_F: lowest-numbered vertex of X adjacent to the fragment
  Attachment attachment = Attachment::None;
  /// Oriented vertex order used by the selection rule:
  ///   paths: v1..vk with v1 on the attachment side the rule names;
  ///   C3 and P3: [end, center, end] (P3) or the triangle in id order;
  ///   G3: u1,u2,u3, v1,v2,v3, w, w1,w2,w3.
  std::vector<Vertex> layout;
};

/// Leaf-rooted clique decomposition. With a single tail vertex y (a leaf)
/// x is its neighbor; with tail {z, y} the leaf is z, y its degree-2
/// neighbor and x the other neighbor of y. Either way X = N[x] \ {y}, and
/// the fragments are the components of G - X - tail.
struct Decomposition {
  Vertex x = -1;
  Vertex y = -1;
  std::vector<Vertex> tail;
  VertexSet X;
  std::vector<FragmentRecord> fragments;
  VertexSet X1;  // X minus the chosen vertices of exceptional fragments
  VertexSet Y;   // P1-fragment vertices, X1 and the tail, plus x
};

Decomposition decompose(const Graph& g, Vertex y);
/// Tail variant: z is a leaf whose neighbor has degree 2.
Decomposition decompose_tail(const Graph& g, Vertex z);

using FragmentSolver = std::function<VertexSet(const Graph&)>;
/// Exact γt^d-set of a fragment.
VertexSet exact_fragment_solver(const Graph& f);

/// Steps 1-9, applied literally. The result need not be a DTD-set.
VertexSet algorithm_a(const Graph& g, const Decomposition& dec, const FragmentSolver& solve = exact_fragment_solver);
/// Steps 1-2 add both x and y; Step 10 adds x_F for every P1 fragment.
VertexSet algorithm_b(const Graph& g, const Decomposition& dec, const FragmentSolver& solve = exact_fragment_solver);

struct Construction {
  VertexSet set;
  std::string method;  // exact-small | exact-mindeg2 | proof-path | fallback-exact
};

/// DTD-set of size at most 4n/7 for a connected claw-free graph outside E.
/// Throws InputError (not connected / claw-free, n < 2) or DomainError
/// naming the exceptional member.
Construction construct_dtd_clawfree(const Graph& g);

/// Greedy maximum-new-coverage DTD-set; DomainError on an isolated vertex.
VertexSet greedy_dtd(const Graph& g);

}  // namespace dtdom
