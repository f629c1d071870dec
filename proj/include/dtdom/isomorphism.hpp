#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtdom/graph.hpp"

namespace dtdom {

/// Isomorphism-invariant certificate: equal iff the (optionally vertex-colored)
/// graphs are isomorphic. Totally ordered so it can key sorted containers.
struct CanonicalForm {
  int n = 0;
  std::vector<int> colors;          // sorted color multiset; empty when uncolored
  std::vector<std::uint64_t> rows;  // adjacency rows under the canonical labeling

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

/// Output of the refinement search. `label[v]` is v's canonical position;
/// `generators` generate the (color-preserving) automorphism group.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> label;
  std::vector<std::vector<Vertex>> generators;

  /// Smallest vertex of each vertex's automorphism orbit.
  std::vector<Vertex> orbits() const;
};

/// Individualization-refinement with automorphism pruning. Requires
/// order() <= 64. `colors`, when given, has one entry per vertex and is
/// preserved by every isomorphism.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});
CanonicalForm canonical_form(const Graph& g);
/// g relabeled into its canonical numbering.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);
/// A bijection f with u~v in `from` iff f[u]~f[v] in `to`.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& from, const Graph& to);

}  // namespace dtdom
