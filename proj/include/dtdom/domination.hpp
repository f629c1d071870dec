#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dtdom/graph.hpp"

namespace dtdom {

enum class DominationKind { Domination, TotalDomination, DisjunctiveTotalDomination };

/// "dom" | "tdom" | "dtd" (case-insensitive).
DominationKind parse_kind(std::string_view name);
std::string_view kind_name(DominationKind kind);

struct SolveResult {
  DominationKind kind;
  int value = 0;
  VertexSet witness;
  std::uint64_t explored = 0;  // search nodes visited, summed over all budgets
};

bool is_dominating_set(const Graph& g, const VertexSet& s);
bool is_total_dominating_set(const Graph& g, const VertexSet& s);
/// Every vertex has a neighbor in s or at least two members of s at distance 2.
bool is_dtd_set(const Graph& g, const VertexSet& s, const DistanceTable& dist);
bool is_dtd_set(const Graph& g, const VertexSet& s);
VertexSet dtd_uncovered(const Graph& g, const VertexSet& s);

/// Vertices violating the condition for `kind`; empty iff s qualifies.
VertexSet uncovered(const Graph& g, const VertexSet& s, DominationKind kind);
bool satisfies(const Graph& g, const VertexSet& s, DominationKind kind);

/// Exact minimum by ascending budget with branch-and-bound. Requires
/// order() <= 64. Total variants throw DomainError on an isolated vertex.
SolveResult exact_number(const Graph& g, DominationKind kind);
/// A qualifying set of size at most `budget`, if one exists.
std::optional<VertexSet> find_set_within(const Graph& g, DominationKind kind, int budget);

int dtd_cycle_formula(int n);
int dtd_path_formula(int n);
int gt_cycle_formula(int n);

/// Pairs {5i, 5i+1} plus a residue-dependent tail; a minimum DTD-set of C_n.
VertexSet cycle_witness(int n);
/// Pairs {5i+1, 5i+2} plus a tail; a minimum DTD-set of P_n.
VertexSet path_witness(int n);

/// Leaf/support exchange: given a minimum DTD-set s and a support vertex v
/// with exactly one non-leaf neighbor, returns a same-size DTD-set holding v.
VertexSet support_exchange(const Graph& g, const VertexSet& s, Vertex v);
/// As above, and additionally holding v's non-leaf neighbor, which must
/// have degree 2.
VertexSet support_exchange_pair(const Graph& g, const VertexSet& s, Vertex v);

}  // namespace dtdom
