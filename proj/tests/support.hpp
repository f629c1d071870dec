#pragma once

#include <vector>

#include "dtdom/graph.hpp"
#include "oracles.hpp"

inline oracle::Matrix to_matrix(const dtdom::Graph& g) {
  oracle::Matrix a(g.order(), std::vector<int>(g.order(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline dtdom::VertexSet to_set(int n, const std::vector<int>& members) {
  return dtdom::VertexSet::from_members(n, std::span<const int>(members));
}
