// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero on any FAIL.

#include <chrono>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dtdom/constructor.hpp"
#include "dtdom/domination.hpp"
#include "dtdom/enumerate.hpp"
#include "dtdom/families.hpp"
#include "dtdom/graph_io.hpp"
#include "dtdom/isomorphism.hpp"
#include "dtdom/verify.hpp"
#include "support.hpp"

using namespace dtdom;

namespace {

constexpr auto kDom = DominationKind::Domination;
constexpr auto kTotal = DominationKind::TotalDomination;
constexpr auto kDtd = DominationKind::DisjunctiveTotalDomination;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& what) {
    if (pass) note << "first failure: " << what << "; ";
    pass = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

int jobs() { return 1; }

void report_into(Outcome& o, const VerificationReport& r) {
  o.expect(r.passed(), r.theorem + " has " + std::to_string(r.violations.size()) + " violation(s)" +
                           (r.violations.empty() ? "" : ", e.g. " + r.violations[0].graph6 + " " + r.violations[0].detail));
  o.note << r.theorem << " checked " << r.checked << "; ";
}

void criterion1(Outcome& o) {
  const auto r = check_order7_census({jobs(), std::nullopt, std::nullopt});
  report_into(o, r);
  o.expect(r.find_count("connected") == 853, "connected count");
  o.expect(r.find_count("gamma_t_eq_4") == 20, "gamma_t = 4 count");
  o.expect(r.find_count("gamma_t_eq_4_clawfree") == 12, "claw-free count");
  o.expect(r.find_count("gamma_t_eq_4_clawfree_dtd_eq_4") == 6, "dtd = 4 count");
  std::vector<std::string> fams;
  for (const auto& e : r.equality_cases) fams.push_back(e.family);
  std::sort(fams.begin(), fams.end());
  o.expect(fams == std::vector<std::string>{"L(1)", "L(10)", "L(2)", "L(3)", "L(5)", "L(6)"}, "equality set is not S1");
  // Oracle cross-check of the six S1 members.
  for (int i : {1, 2, 3, 5, 6, 10}) {
    const auto a = to_matrix(generate(FamilyId::l(i)));
    o.expect(oracle::minimum(a, oracle::Kind::Total).first == 4, "oracle gamma_t of L(" + std::to_string(i) + ")");
    o.expect(oracle::minimum(a, oracle::Kind::Dtd).first == 4, "oracle gamma_t^d of L(" + std::to_string(i) + ")");
  }
}

void criterion2(Outcome& o) {
  for (int n = 3; n <= 15; ++n) {
    const Graph p = generate(FamilyId::path(n));
    const Graph c = generate(FamilyId::cycle(n));
    const int dp = exact_number(p, kDtd).value;
    const int dc = exact_number(c, kDtd).value;
    const int tc = exact_number(c, kTotal).value;
    const std::string tag = " n=" + std::to_string(n);
    o.expect(dp == dtd_path_formula(n), "path formula" + tag);
    o.expect(dc == dtd_cycle_formula(n), "cycle formula" + tag);
    o.expect(tc == gt_cycle_formula(n), "gamma_t cycle formula" + tag);
    o.expect(oracle::minimum(to_matrix(p), oracle::Kind::Dtd).first == dp, "oracle path" + tag);
    o.expect(oracle::minimum(to_matrix(c), oracle::Kind::Dtd).first == dc, "oracle cycle" + tag);
    o.expect(oracle::minimum(to_matrix(c), oracle::Kind::Total).first == tc, "oracle gamma_t cycle" + tag);
    o.expect(is_dtd_set(p, path_witness(n)) && path_witness(n).size() == dp, "path witness" + tag);
    o.expect(is_dtd_set(c, cycle_witness(n)) && cycle_witness(n).size() == dc, "cycle witness" + tag);
  }
  o.note << "3<=n<=15; ";
}

void criterion3(Outcome& o) {
  const auto r = check_tree_theorem({jobs(), 12, std::nullopt});
  report_into(o, r);
  // Pinned equality sets per order: n=4 {T(1), Star(3)}, n=7 {T(2), F(2), TStar}, n=10 {T(3), F(3)}.
  std::map<int, std::vector<std::string>> by_order;
  for (const auto& e : r.equality_cases) by_order[parse_graph6(e.graph6).order()].push_back(e.family);
  for (auto& [n, v] : by_order) std::sort(v.begin(), v.end());
  o.expect(by_order[4] == std::vector<std::string>{"Star(3)", "T(1)"}, "equality set n=4");
  o.expect(by_order[7] == std::vector<std::string>{"F(2)", "T(2)", "TStar"}, "equality set n=7");
  o.expect(by_order[10] == std::vector<std::string>{"F(3)", "T(3)"}, "equality set n=10");
  o.expect(by_order.size() == 3, "equality cases at orders other than 4, 7, 10");
  o.expect(r.find_count("trees_n12") == 551, "551 trees at n=12");
  // Oracle cross-check on every tree of order <= 9.
  for (int n = 4; n <= 9; ++n) {
    for (const auto& t : free_trees(n)) {
      o.expect(oracle::minimum(to_matrix(t), oracle::Kind::Dtd).first == exact_number(t, kDtd).value,
               "oracle tree " + to_graph6(t));
    }
  }
}

void criterion4(Outcome& o) {
  const auto r = check_graph_theorem({jobs(), std::nullopt, std::nullopt});
  report_into(o, r);
  o.expect(r.find_count("graphs_n8") == 11117, "11117 connected graphs at n=8");
  o.expect(r.find_count("equality_n8") == 0, "equality at n=8");
  std::vector<std::string> fams;
  for (const auto& e : r.equality_cases) fams.push_back(e.family);
  std::sort(fams.begin(), fams.end());
  o.expect(fams == std::vector<std::string>{"F(3)", "G(3)", "T(3)"}, "order-10 equality set");
  for (const auto& e : r.equality_cases) {
    o.expect(oracle::minimum(to_matrix(parse_graph6(e.graph6)), oracle::Kind::Dtd).first == 6, "oracle " + e.graph6);
  }
}

void criterion5(Outcome& o) {
  const auto r = check_clawfree_theorem({jobs(), 8, std::nullopt});
  report_into(o, r);
  for (const auto& e : r.equality_cases) o.expect(e.family != "unclassified", "unclassified " + e.graph6);
  std::int64_t exceptional = 0;
  for (int n = 2; n <= 8; ++n) exceptional += r.find_count("exceptional_n" + std::to_string(n)).value_or(0);
  // P2, P3, C3, P5, P6; G3 has order 10.
  o.expect(exceptional == 5, "five members of E up to order 8");
  o.expect(r.equality_cases.size() == 6, "six equality cases at n=7");
}

void criterion6(Outcome& o) {
  std::vector<std::pair<FamilyId, int>> cases;
  for (int k = 1; k <= 4; ++k) cases.emplace_back(FamilyId::t(k), 2 * k);
  for (int k = 2; k <= 4; ++k) cases.emplace_back(FamilyId::f(k), 2 * k);
  for (int k = 2; k <= 4; ++k) cases.emplace_back(FamilyId::g(k), 2 * k);
  cases.emplace_back(FamilyId::t_star(), 4);
  for (int t = 1; t <= 3; ++t) cases.emplace_back(FamilyId::h(t), 4 * t);
  cases.emplace_back(FamilyId::l(13), 8);
  cases.emplace_back(FamilyId::l(14), 8);
  for (const auto& [id, want] : cases) {
    const Graph g = generate(id);
    const auto res = exact_number(g, kDtd);
    o.expect(res.value == want, id.to_string() + " exact value " + std::to_string(res.value));
    o.expect(is_dtd_set(g, res.witness), id.to_string() + " witness");
    o.expect(dtd_reference_value(id) == want, id.to_string() + " reference value");
    // Oracle: a set of size `want` exists and none of size want-1.
    const auto a = to_matrix(g);
    o.expect(oracle::exists_of_size(a, oracle::Kind::Dtd, want), id.to_string() + " oracle upper");
    o.expect(!oracle::exists_of_size(a, oracle::Kind::Dtd, want - 1), id.to_string() + " oracle lower");
  }
  o.note << cases.size() << " family members; ";
}

// Random connected claw-free base, grown one vertex at a time, then pendant
// paths of length 1 or 2 hung on simplicial vertices.
Graph corona_augmented(std::mt19937_64& rng, int max_n) {
  while (true) {
    const int base = std::uniform_int_distribution<int>(2, 8)(rng);
    std::vector<std::uint64_t> rows(1, 0);
    while (static_cast<int>(rows.size()) < base) {
      const int m = static_cast<int>(rows.size());
      const std::uint64_t nbrs = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << m) - 1)(rng);
      std::vector<std::uint64_t> next = rows;
      next.push_back(nbrs);
      for (int v = 0; v < m; ++v) {
        if ((nbrs >> v) & 1) next[v] |= std::uint64_t{1} << m;
      }
      const Graph h = Graph::from_masks(m + 1, next);
      if (is_claw_free(h)) rows = next;
    }
    std::vector<Edge> edges = Graph::from_masks(base, rows).edges();
    int n = base;
    for (int v = 0; v < base && n < max_n; ++v) {
      const Graph cur = Graph::from_edge_list(n, edges);
      const VertexSet nb = cur.neighbors(v);
      bool simplicial = true;
      nb.for_each([&](Vertex a) {
        nb.for_each([&](Vertex b) {
          if (a < b && !cur.adjacent(a, b)) simplicial = false;
        });
      });
      if (!simplicial || std::bernoulli_distribution(0.3)(rng)) continue;
      const int len = std::min(std::uniform_int_distribution<int>(1, 2)(rng), max_n - n);
      Vertex prev = v;
      for (int i = 0; i < len; ++i) {
        edges.emplace_back(prev, n);
        prev = n++;
      }
    }
    const Graph g = Graph::from_edge_list(n, edges);
    if (leaves(g).empty() || !is_claw_free(g) || exceptional_member(g)) continue;
    return g;
  }
}

void check_construction(Outcome& o, const Graph& g, std::int64_t& count, std::map<std::string, std::int64_t>& methods) {
  const auto c = construct_dtd_clawfree(g);
  ++count;
  ++methods[c.method];
  const auto a = to_matrix(g);
  o.expect(oracle::qualifies(a, oracle::distances(a), c.set.members(), oracle::Kind::Dtd),
           "construct set invalid on " + to_graph6(g));
  o.expect(7 * c.set.size() <= 4 * g.order(), "construct set too large on " + to_graph6(g));
  o.expect(c.set.size() >= exact_number(g, kDtd).value, "construct set below the minimum on " + to_graph6(g));
}

void check_extremal(Outcome& o, const FamilyId& id, std::int64_t& count, std::map<std::string, std::int64_t>& methods) {
  const Graph g = generate(id);
  check_construction(o, g, count, methods);
  o.expect(7 * construct_dtd_clawfree(g).set.size() == 4 * g.order(), id.to_string() + " not at 4n/7");
}

void criterion7(Outcome& o) {
  std::int64_t count = 0;
  std::map<std::string, std::int64_t> methods;
  for (int n = 2; n <= 12; ++n) {
    struct Row {
      bool skip = false;
      bool ok = false;
      std::string method;
      std::string g6;
    };
    enumerate_map(
        EnumSpec{n, GraphClass::ConnectedClawFree, std::nullopt}, jobs(),
        [](const Graph& g) {
          Row row;
          if (exceptional_member(g)) {
            row.skip = true;
            return row;
          }
          const auto c = construct_dtd_clawfree(g);
          const auto a = to_matrix(g);
          row.ok = oracle::qualifies(a, oracle::distances(a), c.set.members(), oracle::Kind::Dtd) &&
                   7 * c.set.size() <= 4 * g.order();
          row.method = c.method;
          if (!row.ok) row.g6 = to_graph6(g);
          return row;
        },
        [&](Row&& row) {
          if (row.skip) return;
          ++count;
          ++methods[row.method];
          o.expect(row.ok, "construct failed on " + row.g6);
        });
  }
  for (int t = 1; t <= 4; ++t) {
    const auto c = construct_dtd_clawfree(generate(FamilyId::h(t)));
    o.expect(c.method == "proof-path", "H(" + std::to_string(t) + ") method " + c.method);
    check_extremal(o, FamilyId::h(t), count, methods);
  }
  check_extremal(o, FamilyId::l(13), count, methods);
  check_extremal(o, FamilyId::l(14), count, methods);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) check_construction(o, corona_augmented(rng, 15), count, methods);
  o.note << count << " graphs;";
  for (const auto& [m, k] : methods) o.note << ' ' << m << '=' << k;
  o.note << "; ";
}

void criterion8(Outcome& o) {
  const Graph c15 = generate(FamilyId::cycle(15));
  const int g15 = exact_number(c15, kDom).value;
  o.expect(g15 == 5, "gamma(C15)");
  o.expect(dtd_cycle_formula(15) == 6, "gamma_t^d(C15) formula");
  o.expect(exact_number(c15, kDtd).value == 6, "gamma_t^d(C15) exact");
  o.expect(oracle::minimum(to_matrix(c15), oracle::Kind::Dom).first == 5, "oracle gamma(C15)");
  for (int k = 1; k <= 4; ++k) {
    const Graph g = generate(FamilyId::relate_gadget(k));
    const std::string tag = "RelateGadget(" + std::to_string(k) + ")";
    o.expect(exact_number(g, kDom).value == k + 2, tag + " gamma");
    o.expect(exact_number(g, kDtd).value == 2, tag + " gamma_t^d");
    const auto a = to_matrix(g);
    o.expect(oracle::minimum(a, oracle::Kind::Dom).first == k + 2, tag + " oracle gamma");
    o.expect(oracle::minimum(a, oracle::Kind::Dtd).first == 2, tag + " oracle gamma_t^d");
  }
}

void criterion9(Outcome& o) {
  report_into(o, check_dtd_le_gt({jobs(), 8, std::nullopt}));
  report_into(o, check_spanning_monotonicity(1000, 20240917, {jobs(), 9, std::nullopt}));
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "CRITERION " << id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << o.note.str() << ms << " ms" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
