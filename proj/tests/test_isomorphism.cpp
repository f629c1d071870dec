#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dtdom/enumerate.hpp"
#include "dtdom/families.hpp"
#include "dtdom/isomorphism.hpp"
#include "support.hpp"

using namespace dtdom;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> e;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, e);
}

Graph shuffled(std::mt19937_64& rng, const Graph& g) {
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST_CASE("canonical form agrees with brute-force certificates") {
  std::mt19937_64 rng(11);
  std::map<std::string, CanonicalForm> by_cert;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const Graph g = random_graph(rng, n, 0.45);
    const auto cert = std::to_string(n) + ":" + oracle::brute_certificate(to_matrix(g));
    const auto form = canonical_form(g);
    auto [it, fresh] = by_cert.emplace(cert, form);
    if (!fresh) CHECK(it->second == form);
    CHECK(canonical_form(shuffled(rng, g)) == form);
  }
  std::set<CanonicalForm> distinct;
  for (const auto& [c, f] : by_cert) distinct.insert(f);
  CHECK(distinct.size() == by_cert.size());
}

TEST_CASE("isomorphisms found are genuine") {
  std::mt19937_64 rng(5);
  for (const auto& id : {FamilyId::h(3), FamilyId::l(14), FamilyId::g(4), FamilyId::cycle(12), FamilyId::c10_double_prime()}) {
    const Graph g = generate(id);
    const Graph h = shuffled(rng, g);
    const auto f = find_isomorphism(g, h);
    REQUIRE(f);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == h.adjacent((*f)[u], (*f)[v]));
    }
  }
  CHECK_FALSE(is_isomorphic(generate(FamilyId::t(3)), generate(FamilyId::f(3))));
  CHECK_FALSE(find_isomorphism(generate(FamilyId::path(4)), generate(FamilyId::star(3))));
}

TEST_CASE("automorphism generators and orbits") {
  const auto lab = canonical_labeling(generate(FamilyId::cycle(6)));
  for (const auto& gen : lab.generators) {
    const Graph c = generate(FamilyId::cycle(6));
    CHECK(relabel(c, gen) == c);
  }
  for (Vertex o : lab.orbits()) CHECK(o == 0);
  const auto star = canonical_labeling(generate(FamilyId::star(4)));
  const auto orb = star.orbits();
  CHECK(orb[0] == 0);
  for (int v = 1; v <= 4; ++v) CHECK(orb[v] == 1);
}

TEST_CASE("vertex colors restrict isomorphisms") {
  const Graph p = generate(FamilyId::path(3));
  const std::vector<int> end_colored{1, 0, 0};
  const std::vector<int> other_end{0, 0, 1};
  const std::vector<int> middle{0, 1, 0};
  CHECK(canonical_labeling(p, end_colored).form == canonical_labeling(p, other_end).form);
  CHECK_FALSE(canonical_labeling(p, end_colored).form == canonical_labeling(p, middle).form);
}

TEST_CASE("canonical graph is a fixed point") {
  const Graph g = generate(FamilyId::l(13));
  const Graph c = canonical_graph(g);
  CHECK(canonical_graph(c) == c);
  CHECK(is_isomorphic(c, g));
}
