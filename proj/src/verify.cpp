#include "dtdom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dtdom/domination.hpp"
#include "dtdom/enumerate.hpp"
#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "dtdom/graph_io.hpp"
#include "dtdom/isomorphism.hpp"

namespace dtdom {

namespace {

constexpr auto kDtd = DominationKind::DisjunctiveTotalDomination;
constexpr auto kTotal = DominationKind::TotalDomination;

int dtd(const Graph& g) { return exact_number(g, kDtd).value; }

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string range_text(int lo, int hi) {
  return lo == hi ? "n=" + std::to_string(lo) : std::to_string(lo) + "<=n<=" + std::to_string(hi);
}

std::string source_text(const CheckOptions& opt) {
  return opt.corpus ? "corpus " + opt.corpus->filename().string() : "builtin";
}

// Enumerates one order and maps `work` over it in parallel, in enumeration order.
template <class Work, class Sink>
void each_graph(int n, GraphClass cls, const CheckOptions& opt, Work work, Sink sink) {
  enumerate_map(EnumSpec{n, cls, opt.corpus}, opt.jobs, work, sink);
}

int bounded_max(const CheckOptions& opt, int fallback, int lo, int hi, std::string_view what) {
  const int m = opt.max_n.value_or(fallback);
  if (m < lo || m > hi) {
    throw InputError(std::string(what) + ": --max-n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return m;
}

std::string first_matching(const Graph& g, const std::vector<FamilyId>& ids) {
  for (const auto& id : ids) {
    const Graph h = generate(id);
    if (is_isomorphic(g, h)) return id.to_string();
  }
  return "unclassified";
}

std::optional<FamilyId> if_valid(FamilyKind kind, int a, int min_a) {
  if (a < min_a) return std::nullopt;
  return FamilyId{kind, a, 0, {}};
}

// T(k), F(k), G(k) of order n, when they exist.
std::vector<FamilyId> tfg_of_order(int n, bool with_g) {
  std::vector<FamilyId> out;
  if (n % 3 != 1) return out;
  const int k = (n - 1) / 3;
  for (auto id : {if_valid(FamilyKind::T, k, 1), if_valid(FamilyKind::F, k, 2)}) {
    if (id) out.push_back(*id);
  }
  if (with_g && k >= 2) out.push_back(FamilyId::g(k));
  return out;
}

std::string clawfree_equality_family(const Graph& g) {
  const int n = g.order();
  std::vector<FamilyId> ids;
  if (n % 7 == 0) ids.push_back(FamilyId::h(n / 7));
  if (n == 7 || n == 14) {
    for (const auto& id : class_members(FamilyClass::CalS)) ids.push_back(id);
  }
  return first_matching(g, ids);
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (extra(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph::from_edge_list(n, edges), perm);
}

}  // namespace

void VerificationReport::count(const std::string& name, std::int64_t value) {
  for (auto& [k, v] : counts) {
    if (k == name) {
      v = value;
      return;
    }
  }
  counts.emplace_back(name, value);
}

std::optional<std::int64_t> VerificationReport::find_count(std::string_view name) const {
  for (const auto& [k, v] : counts) {
    if (k == name) return v;
  }
  return std::nullopt;
}

VerificationReport check_order7_census(const CheckOptions& opt) {
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "census7";
  r.universe = "connected graphs, n=7 (" + source_text(opt) + ")";
  struct Row {
    std::string g6;
    int gt = 0;
    bool clawfree = false;
    int dtd = 0;
    int l_index = 0;
  };
  std::vector<Row> rows;
  each_graph(
      7, GraphClass::AllConnected, opt,
      [](const Graph& g) {
        Row row{to_graph6(g), exact_number(g, kTotal).value, false, 0, 0};
        if (row.gt == 4) {
          row.clawfree = is_claw_free(g);
          row.dtd = dtd(g);
          for (int i = 1; i <= 12 && row.clawfree; ++i) {
            if (is_isomorphic(g, generate(FamilyId::l(i)))) {
              row.l_index = i;
              break;
            }
          }
        }
        return row;
      },
      [&](Row&& row) { rows.push_back(std::move(row)); });
  r.checked = rows.size();
  std::int64_t gt4 = 0;
  std::int64_t gt4_cf = 0;
  std::int64_t gt4_cf_dtd4 = 0;
  std::set<int> l_matched;
  std::set<int> s1_matched;
  for (const auto& row : rows) {
    if (row.gt != 4) continue;
    ++gt4;
    if (!row.clawfree) continue;
    ++gt4_cf;
    if (row.l_index == 0) r.violations.push_back({row.g6, "claw-free with gamma_t=4 but matches no L_i"});
    if (l_matched.count(row.l_index) != 0) r.violations.push_back({row.g6, "second graph matching L" + std::to_string(row.l_index)});
    l_matched.insert(row.l_index);
    if (row.dtd == 4) {
      ++gt4_cf_dtd4;
      s1_matched.insert(row.l_index);
      r.equality_cases.push_back({row.g6, row.l_index > 0 ? FamilyId::l(row.l_index).to_string() : "unclassified"});
    }
    if (row.dtd > 4) r.violations.push_back({row.g6, "gamma_t^d exceeds 4"});
  }
  r.count("connected", static_cast<std::int64_t>(rows.size()));
  r.count("gamma_t_eq_4", gt4);
  r.count("gamma_t_eq_4_clawfree", gt4_cf);
  r.count("gamma_t_eq_4_clawfree_dtd_eq_4", gt4_cf_dtd4);
  auto expect = [&](const char* name, std::int64_t got, std::int64_t want) {
    if (got != want) {
      r.violations.push_back({"", std::string(name) + " = " + std::to_string(got) + ", expected " + std::to_string(want)});
    }
  };
  expect("connected", static_cast<std::int64_t>(rows.size()), 853);
  expect("gamma_t_eq_4", gt4, 20);
  expect("gamma_t_eq_4_clawfree", gt4_cf, 12);
  expect("gamma_t_eq_4_clawfree_dtd_eq_4", gt4_cf_dtd4, 6);
  const std::set<int> all_l{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  const std::set<int> s1{1, 2, 3, 5, 6, 10};
  if (l_matched != all_l) r.violations.push_back({"", "claw-free graphs do not match L1..L12 one-to-one"});
  if (s1_matched != s1) r.violations.push_back({"", "gamma_t^d = 4 graphs are not exactly S1"});
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_tree_theorem(const CheckOptions& opt) {
  Stopwatch clock;
  const int max_n = bounded_max(opt, 12, 4, 16, "tree");
  VerificationReport r;
  r.theorem = "tree";
  r.universe = "trees except P5, P6, " + range_text(4, max_n) + " (" + source_text(opt) + ")";
  const Graph p5 = generate(FamilyId::path(5));
  const Graph p6 = generate(FamilyId::path(6));
  std::int64_t cor_checked = 0;
  for (int n = 4; n <= max_n; ++n) {
    std::vector<FamilyId> expected = tfg_of_order(n, false);
    if (n == 4) expected.push_back(FamilyId::star(3));
    if (n == 7) expected.push_back(FamilyId::t_star());
    struct Row {
      std::string g6;
      bool skipped = false;
      int value = 0;
      std::string family;
    };
    std::int64_t trees = 0;
    std::int64_t equal = 0;
    std::set<std::string> seen_families;
    each_graph(
        n, GraphClass::Trees, opt,
        [&](const Graph& t) {
          Row row{to_graph6(t), false, 0, {}};
          if (is_isomorphic(t, p5) || is_isomorphic(t, p6)) {
            row.skipped = true;
            return row;
          }
          row.value = dtd(t);
          if (3 * row.value == 2 * (n - 1)) row.family = first_matching(t, expected);
          return row;
        },
        [&](Row&& row) {
          if (row.skipped) return;
          ++trees;
          ++r.checked;
          if (3 * row.value > 2 * (n - 1)) {
            r.violations.push_back({row.g6, "gamma_t^d = " + std::to_string(row.value) + " exceeds 2(n-1)/3"});
          } else if (3 * row.value == 2 * (n - 1)) {
            ++equal;
            r.equality_cases.push_back({row.g6, row.family});
            if (row.family == "unclassified") r.violations.push_back({row.g6, "equality tree outside T, F, K_{1,3}, T*"});
            if (!seen_families.insert(row.family).second) r.violations.push_back({row.g6, "duplicate equality family " + row.family});
            if (n >= 8) ++cor_checked;
          }
        });
    for (const auto& id : expected) {
      if (seen_families.count(id.to_string()) == 0) {
        r.violations.push_back({to_graph6(generate(id)), id.to_string() + " is not an equality case at n=" + std::to_string(n)});
      }
    }
    r.count("trees_n" + std::to_string(n), trees);
    r.count("equality_n" + std::to_string(n), equal);
  }
  r.count("equality_n_ge_8", cor_checked);
  r.elapsed_ms = clock.ms();
  return r;
}

std::vector<Graph> equality_closure(int n) {
  if (n < 8 || n > 16 || n % 3 != 1) throw InputError("equality closure needs n = 3k+1 with 8 <= n <= 16");
  const int target = 2 * (n - 1) / 3;
  std::set<CanonicalForm> seen;
  std::vector<Graph> frontier;
  for (const auto& t : free_trees(n)) {
    if (dtd(t) == target && seen.insert(canonical_form(t)).second) frontier.push_back(t);
  }
  std::vector<Graph> found = frontier;
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const auto& g : frontier) {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          Graph h = with_edge(g, u, v);
          if (dtd(h) < target) continue;
          if (seen.insert(canonical_form(h)).second) next.push_back(h);
        }
      }
    }
    found.insert(found.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return found;
}

VerificationReport check_graph_theorem(const CheckOptions& opt) {
  Stopwatch clock;
  VerificationReport r;
  r.theorem = "graph";
  std::vector<int> orders;
  if (opt.corpus) {
    std::set<int> present;
    std::ifstream in(*opt.corpus);
    if (!in) throw IoError("cannot open corpus " + opt.corpus->string());
    for_each_graph6(in, [&](const Graph& g, int) {
      if (g.order() >= 8) present.insert(g.order());
    });
    orders.assign(present.begin(), present.end());
    r.universe = "connected graphs, orders >= 8 in " + source_text(opt);
  } else {
    orders = {8};
    r.universe = "connected graphs, n=8 (builtin); equality closure n=10";
  }
  for (int n : orders) {
    const auto expected = tfg_of_order(n, true);
    struct Row {
      std::string g6;
      int value = 0;
      std::string family;
    };
    std::int64_t graphs = 0;
    std::int64_t equal = 0;
    each_graph(
        n, GraphClass::AllConnected, opt,
        [&](const Graph& g) {
          Row row{to_graph6(g), dtd(g), {}};
          if (3 * row.value == 2 * (n - 1)) row.family = first_matching(g, expected);
          return row;
        },
        [&](Row&& row) {
          ++graphs;
          ++r.checked;
          if (3 * row.value > 2 * (n - 1)) {
            r.violations.push_back({row.g6, "gamma_t^d = " + std::to_string(row.value) + " exceeds 2(n-1)/3"});
          } else if (3 * row.value == 2 * (n - 1)) {
            ++equal;
            r.equality_cases.push_back({row.g6, row.family});
            if (row.family == "unclassified") r.violations.push_back({row.g6, "equality graph outside T, F, G"});
          }
        });
    r.count("graphs_n" + std::to_string(n), graphs);
    r.count("equality_n" + std::to_string(n), equal);
  }
  if (!opt.corpus) {
    const auto closure = equality_closure(10);
    const auto expected = tfg_of_order(10, true);
    std::set<std::string> families;
    for (const auto& g : closure) {
      const std::string fam = first_matching(g, expected);
      r.equality_cases.push_back({to_graph6(g), fam});
      if (fam == "unclassified") r.violations.push_back({to_graph6(g), "equality graph outside T, F, G"});
      families.insert(fam);
    }
    r.count("closure_equality_n10", static_cast<std::int64_t>(closure.size()));
    if (closure.size() != 3 || families.size() != 3) {
      r.violations.push_back({"", "order-10 equality set is not exactly {T(3), F(3), G(3)}"});
    }
  }
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_clawfree_theorem(const CheckOptions& opt) {
  Stopwatch clock;
  const int max_n = bounded_max(opt, 8, 2, opt.corpus ? 64 : builtin_limit(GraphClass::ConnectedClawFree), "clawfree");
  VerificationReport r;
  r.theorem = "clawfree";
  r.universe = "connected claw-free graphs, " + range_text(2, max_n) + " (" + source_text(opt) + ")";
  for (int n = 2; n <= max_n; ++n) {
    struct Row {
      std::string g6;
      std::string exceptional;
      int value = 0;
      std::string family;
    };
    std::int64_t graphs = 0;
    std::int64_t equal = 0;
    std::int64_t exc = 0;
    each_graph(
        n, GraphClass::ConnectedClawFree, opt,
        [&](const Graph& g) {
          Row row{to_graph6(g), {}, 0, {}};
          if (auto e = exceptional_member(g)) {
            row.exceptional = e->to_string();
            return row;
          }
          row.value = dtd(g);
          if (7 * row.value == 4 * n) row.family = clawfree_equality_family(g);
          return row;
        },
        [&](Row&& row) {
          ++graphs;
          ++r.checked;
          if (!row.exceptional.empty()) {
            ++exc;
            return;
          }
          if (7 * row.value > 4 * n) {
            r.violations.push_back({row.g6, "gamma_t^d = " + std::to_string(row.value) + " exceeds 4n/7"});
          } else if (7 * row.value == 4 * n) {
            ++equal;
            r.equality_cases.push_back({row.g6, row.family});
            if (row.family == "unclassified") r.violations.push_back({row.g6, "equality graph outside H and S"});
          }
        });
    r.count("graphs_n" + std::to_string(n), graphs);
    r.count("exceptional_n" + std::to_string(n), exc);
    r.count("equality_n" + std::to_string(n), equal);
  }
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_mindeg2_bound(const CheckOptions& opt) {
  Stopwatch clock;
  const int max_n = bounded_max(opt, 8, 3, opt.corpus ? 64 : builtin_limit(GraphClass::ConnectedClawFree), "mindeg2");
  VerificationReport r;
  r.theorem = "mindeg2";
  r.universe = "connected claw-free graphs with min degree >= 2, " + range_text(3, max_n) + " (" + source_text(opt) + ")";
  const Graph c3 = generate(FamilyId::cycle(3));
  const Graph c7 = generate(FamilyId::cycle(7));
  std::int64_t strict = 0;
  for (int n = 3; n <= max_n; ++n) {
    struct Row {
      std::string g6;
      bool relevant = false;
      int value = 0;
      std::string named;
    };
    each_graph(
        n, GraphClass::ConnectedClawFree, opt,
        [&](const Graph& g) {
          Row row{{}, g.min_degree() >= 2, 0, {}};
          if (!row.relevant) return row;
          row.g6 = to_graph6(g);
          row.value = dtd(g);
          if (is_isomorphic(g, c3)) row.named = "C(3)";
          if (is_isomorphic(g, c7)) row.named = "C(7)";
          return row;
        },
        [&](Row&& row) {
          if (!row.relevant) return;
          ++r.checked;
          if (7 * row.value < 4 * n) {
            ++strict;
          } else if (!row.named.empty()) {
            r.equality_cases.push_back({row.g6, row.named});
          } else {
            r.violations.push_back({row.g6, "gamma_t^d = " + std::to_string(row.value) + " is not below 4n/7"});
          }
        });
  }
  r.count("strict", strict);
  r.count("named_exceptions", static_cast<std::int64_t>(r.equality_cases.size()));
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_dtd_le_gt(const CheckOptions& opt) {
  Stopwatch clock;
  const int max_n = bounded_max(opt, 8, 2, opt.corpus ? 64 : builtin_limit(GraphClass::AllConnected), "dtd-le-gt");
  VerificationReport r;
  r.theorem = "dtd-le-gt";
  r.universe = "connected graphs, " + range_text(2, max_n) + " (" + source_text(opt) + ")";
  std::int64_t equal = 0;
  std::int64_t strict = 0;
  for (int n = 2; n <= max_n; ++n) {
    struct Row {
      std::string g6;
      int dtd_value = 0;
      int gt_value = 0;
    };
    each_graph(
        n, GraphClass::AllConnected, opt,
        [](const Graph& g) { return Row{to_graph6(g), dtd(g), exact_number(g, kTotal).value}; },
        [&](Row&& row) {
          ++r.checked;
          if (row.dtd_value > row.gt_value) {
            r.violations.push_back({row.g6, "gamma_t^d = " + std::to_string(row.dtd_value) + " > gamma_t = " +
                                                std::to_string(row.gt_value)});
          } else if (row.dtd_value == row.gt_value) {
            ++equal;
          } else {
            ++strict;
          }
        });
  }
  r.count("equal", equal);
  r.count("strict", strict);
  r.count("c15_dtd_formula", dtd_cycle_formula(15));
  r.count("c15_gt_formula", gt_cycle_formula(15));
  if (dtd_cycle_formula(15) >= gt_cycle_formula(15)) r.violations.push_back({"", "C15 formulas show no gap"});
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_spanning_monotonicity(int pairs, std::uint64_t seed, const CheckOptions& opt) {
  Stopwatch clock;
  const int max_n = bounded_max(opt, 9, 4, 20, "spanning");
  VerificationReport r;
  r.theorem = "spanning";
  r.universe = std::to_string(pairs) + " random (G, G+e) pairs, " + range_text(4, max_n) + ", seed " + std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Graph, Edge>> cases;
  while (static_cast<int>(cases.size()) < pairs) {
    const int n = std::uniform_int_distribution<int>(4, max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    Graph g = random_connected(rng, n, p);
    std::vector<Edge> non_edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);
      }
    }
    if (non_edges.empty()) continue;
    const Edge e = non_edges[std::uniform_int_distribution<std::size_t>(0, non_edges.size() - 1)(rng)];
    cases.emplace_back(std::move(g), e);
  }
  const auto results = parallel_map(cases, opt.jobs, [](const std::pair<Graph, Edge>& c) {
    return std::pair{dtd(c.first), dtd(with_edge(c.first, c.second.first, c.second.second))};
  });
  std::int64_t dropped = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    ++r.checked;
    const auto [before, after] = results[i];
    if (after > before) {
      r.violations.push_back({to_graph6(cases[i].first), "adding edge " + std::to_string(cases[i].second.first) + "-" +
                                                             std::to_string(cases[i].second.second) + " raised gamma_t^d"});
    } else if (after < before) {
      ++dropped;
    }
  }
  r.count("pairs", pairs);
  r.count("strict_decrease", dropped);
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport run_check(std::string_view theorem, const CheckOptions& opt) {
  if (theorem == "census7") return check_order7_census(opt);
  if (theorem == "tree") return check_tree_theorem(opt);
  if (theorem == "graph") return check_graph_theorem(opt);
  if (theorem == "clawfree") return check_clawfree_theorem(opt);
  if (theorem == "mindeg2") return check_mindeg2_bound(opt);
  if (theorem == "dtd-le-gt") return check_dtd_le_gt(opt);
  if (theorem == "spanning") return check_spanning_monotonicity(1000, 20240917, opt);
  throw InputError("unknown theorem '" + std::string(theorem) +
                   "' (expected census7, tree, graph, clawfree, mindeg2, dtd-le-gt or spanning)");
}

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["universe"] = r.universe;
    j["checked"] = r.checked;
    j["status"] = r.passed() ? "pass" : "fail";
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) j["violations"].push_back({{"graph6", v.graph6}, {"detail", v.detail}});
    j["equality_cases"] = nlohmann::ordered_json::array();
    for (const auto& e : r.equality_cases) j["equality_cases"].push_back({{"graph6", e.graph6}, {"family", e.family}});
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counts) j["counts"][k] = v;
    j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "theorem: " << r.theorem << '\n'
      << "universe: " << r.universe << '\n'
      << "checked: " << r.checked << '\n'
      << "status: " << (r.passed() ? "pass" : "fail") << '\n';
  out << "violations: " << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "  " << (v.graph6.empty() ? "-" : v.graph6) << "  " << v.detail << '\n';
  out << "equality_cases: " << r.equality_cases.size() << '\n';
  for (const auto& e : r.equality_cases) out << "  " << e.graph6 << "  " << e.family << '\n';
  out << "counts:\n";
  for (const auto& [k, v] : r.counts) out << "  " << k << ": " << v << '\n';
  out << "elapsed_ms: " << static_cast<std::int64_t>(r.elapsed_ms) << '\n';
  return out.str();
}

}  // namespace dtdom
