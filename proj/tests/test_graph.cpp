#include <doctest.h>

#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "dtdom/graph.hpp"
#include "support.hpp"

using namespace dtdom;

TEST_CASE("vertex set basics") {
  auto s = VertexSet::from_members(70, {5, 1, 66});
  CHECK(s.size() == 3);
  CHECK(s.first() == 1);
  CHECK(to_string(s) == "1,5,66");
  s.erase(1);
  CHECK_FALSE(s.contains(1));
  CHECK_THROWS_AS(s.insert(70), InputError);
  CHECK_THROWS_AS(s |= VertexSet(3), InputError);
  CHECK(VertexSet(4).first() == -1);
  CHECK(VertexSet::from_mask(5, 0b10110).members() == std::vector<Vertex>{1, 2, 4});
  CHECK_THROWS_AS(VertexSet::from_mask(3, 0b1000), InputError);
  const auto a = VertexSet::from_members(6, {0, 1, 2});
  const auto b = VertexSet::from_members(6, {2, 3});
  CHECK((a | b).size() == 4);
  CHECK(to_string(a & b) == "2");
  CHECK(to_string(a - b) == "0,1");
}

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InputError);
  const std::vector<std::uint64_t> asym{0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_masks(2, asym), InputError);
  const auto g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("degrees and neighborhoods") {
  const Graph g = generate(FamilyId::star(3));
  CHECK(g.degree(0) == 3);
  CHECK(g.min_degree() == 1);
  CHECK(g.max_degree() == 3);
  CHECK(g.degree_sequence() == std::vector<int>{3, 1, 1, 1});
  CHECK(to_string(g.closed_neighbors(1)) == "0,1");
  CHECK(to_string(leaves(g)) == "1,2,3");
  CHECK(to_string(support_vertices(g)) == "0");
}

TEST_CASE("distances agree with Floyd-Warshall") {
  for (const auto& id : {FamilyId::cycle(9), FamilyId::h(2), FamilyId::l(13), FamilyId::t(3)}) {
    const Graph g = generate(id);
    const auto d = bfs_distances(g);
    const auto ref = oracle::distances(to_matrix(g));
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) CHECK(d.at(u, v) == ref[u][v]);
    }
  }
  const auto g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(bfs_distances(g).reachable(0, 3));
  CHECK(components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("trees and claws") {
  CHECK(is_tree(generate(FamilyId::t(3))));
  CHECK_FALSE(is_tree(generate(FamilyId::cycle(4))));
  const auto claw = find_claw(generate(FamilyId::star(3)));
  REQUIRE(claw);
  CHECK(claw->center == 0);
  for (const auto& id : {FamilyId::h(2), FamilyId::l(13), FamilyId::l(14), FamilyId::g(3), FamilyId::cycle(7)}) {
    const Graph g = generate(id);
    CHECK(is_claw_free(g) == !oracle::has_claw(to_matrix(g)));
  }
  CHECK(oracle::has_claw(to_matrix(generate(FamilyId::t(3)))));
  CHECK_FALSE(is_claw_free(generate(FamilyId::t(3))));
}

TEST_CASE("induced subgraphs") {
  // C5 minus a vertex is P4.
  const Graph c5 = generate(FamilyId::cycle(5));
  const auto sub = remove_vertices(c5, VertexSet::from_members(5, {2}));
  CHECK(sub.graph.order() == 4);
  CHECK(sub.graph.size() == 3);
  CHECK(sub.old_to_new[2] == -1);
  CHECK(sub.new_to_old == std::vector<Vertex>{0, 1, 3, 4});
  CHECK(to_string(sub.lift(VertexSet::from_members(4, {2, 3}), 5)) == "3,4");
  const auto kept = induced_subgraph(c5, VertexSet::from_members(5, {0, 1, 2}));
  CHECK(kept.graph.size() == 2);
}

TEST_CASE("relabel and add edges") {
  const Graph p = generate(FamilyId::path(3));
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph q = relabel(p, perm);
  CHECK(q.adjacent(2, 0));
  CHECK(q.adjacent(0, 1));
  CHECK_FALSE(q.adjacent(2, 1));
  CHECK(with_edge(p, 0, 2).size() == 3);
}
