#include <doctest.h>

#include <random>

#include "dtdom/domination.hpp"
#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "support.hpp"

using namespace dtdom;

namespace {

constexpr auto kDom = DominationKind::Domination;
constexpr auto kTotal = DominationKind::TotalDomination;
constexpr auto kDtd = DominationKind::DisjunctiveTotalDomination;

oracle::Kind to_oracle(DominationKind k) {
  switch (k) {
    case DominationKind::Domination:
      return oracle::Kind::Dom;
    case DominationKind::TotalDomination:
      return oracle::Kind::Total;
    default:
      return oracle::Kind::Dtd;
  }
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, e);
}

}  // namespace

TEST_CASE("predicates agree with the oracle on every subset") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const Graph g = random_connected(rng, n, 0.25);
    const auto a = to_matrix(g);
    const auto d = oracle::distances(a);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto s = VertexSet::from_mask(n, m);
      for (auto kind : {kDom, kTotal, kDtd}) {
        CHECK(satisfies(g, s, kind) == oracle::qualifies(a, d, s.members(), to_oracle(kind)));
      }
    }
  }
}

TEST_CASE("exact numbers agree with the oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 11)(rng);
    const Graph g = random_connected(rng, n, std::uniform_real_distribution<double>(0.0, 0.4)(rng));
    for (auto kind : {kDom, kTotal, kDtd}) {
      const auto r = exact_number(g, kind);
      CHECK(r.value == oracle::minimum(to_matrix(g), to_oracle(kind)).first);
      CHECK(r.witness.size() == r.value);
      CHECK(satisfies(g, r.witness, kind));
    }
  }
}

TEST_CASE("small reference values") {
  // K2: both endpoints; C7: four vertices.
  CHECK(exact_number(generate(FamilyId::path(2)), kDtd).value == 2);
  const auto c7 = exact_number(generate(FamilyId::cycle(7)), kDtd);
  CHECK(c7.value == 4);
  CHECK(exact_number(generate(FamilyId::complete(5)), kTotal).value == 2);
  CHECK(exact_number(generate(FamilyId::star(5)), kDom).value == 1);
}

TEST_CASE("uncovered vertices of a partial set") {
  const Graph p5 = generate(FamilyId::path(5));
  const auto s = VertexSet::from_members(5, {0, 1});
  CHECK(to_string(dtd_uncovered(p5, s)) == "3,4");
  CHECK(to_string(uncovered(p5, s, kTotal)) == "3,4");
  CHECK(to_string(uncovered(p5, s, kDom)) == "3,4");
  CHECK(find_set_within(p5, kDtd, 2) == std::nullopt);
  CHECK(find_set_within(p5, kDtd, 4).has_value());
}

TEST_CASE("total variants reject isolated vertices") {
  const auto g = Graph::from_edge_list(3, {{0, 1}});
  CHECK_THROWS_AS(exact_number(g, kDtd), DomainError);
  CHECK_THROWS_AS(exact_number(g, kTotal), DomainError);
  CHECK(exact_number(g, kDom).value == 2);
  try {
    exact_number(g, kDtd);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
  }
}

TEST_CASE("formulas and witnesses") {
  CHECK(dtd_cycle_formula(5) == 2);
  CHECK(dtd_cycle_formula(7) == 4);
  CHECK(dtd_cycle_formula(15) == 6);
  CHECK(gt_cycle_formula(15) == 8);
  CHECK(dtd_path_formula(6) == 4);
  CHECK(dtd_path_formula(11) == 6);
  CHECK_THROWS_AS(dtd_cycle_formula(2), InputError);
  CHECK_THROWS_AS(dtd_path_formula(1), InputError);
  for (int n = 3; n <= 30; ++n) {
    CHECK(cycle_witness(n).size() == dtd_cycle_formula(n));
    CHECK(is_dtd_set(generate(FamilyId::cycle(n)), cycle_witness(n)));
    CHECK(path_witness(n).size() == dtd_path_formula(n));
    CHECK(is_dtd_set(generate(FamilyId::path(n)), path_witness(n)));
  }
}

TEST_CASE("support vertex exchange") {
  const Graph p4 = generate(FamilyId::path(4));
  const auto s = VertexSet::from_members(4, {1, 2});
  CHECK(support_exchange(p4, s, 1) == s);
  CHECK_THROWS_AS(support_exchange(p4, VertexSet::from_members(4, {0, 1}), 1), InputError);
  CHECK_THROWS_AS(support_exchange(p4, s, 0), InputError);
}

TEST_CASE("support exchange over every minimum DTD-set of T(3)") {
  const Graph t = generate(FamilyId::t(3));
  const auto a = to_matrix(t);
  const auto d = oracle::distances(a);
  int minimum_sets = 0;
  oracle::any_subset(t.order(), 6, [&](const std::vector<int>& m) {
    if (!oracle::qualifies(a, d, m, oracle::Kind::Dtd)) return false;
    ++minimum_sets;
    const auto s = to_set(t.order(), m);
    for (Vertex v : {2, 5, 8}) {
      const auto out = support_exchange(t, s, v);
      CHECK(out.contains(v));
      CHECK(out.size() == 6);
      CHECK(oracle::qualifies(a, d, out.members(), oracle::Kind::Dtd));
      const auto pair = support_exchange_pair(t, s, v);
      CHECK(pair.contains(v));
      CHECK(pair.contains(v - 1));
      CHECK(pair.size() == 6);
      CHECK(oracle::qualifies(a, d, pair.members(), oracle::Kind::Dtd));
    }
    return false;
  });
  CHECK(minimum_sets > 1);
  CHECK_THROWS_AS(support_exchange(t, to_set(10, {1, 2, 4, 5, 7, 8}), 0), InputError);
}

TEST_CASE("dtd never exceeds total domination") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected(rng, std::uniform_int_distribution<int>(2, 12)(rng), 0.2);
    CHECK(exact_number(g, kDtd).value <= exact_number(g, kTotal).value);
  }
}
