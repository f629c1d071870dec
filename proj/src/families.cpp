#include "dtdom/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "dtdom/errors.hpp"
#include "dtdom/isomorphism.hpp"

namespace dtdom {

namespace {

// Seven-vertex members of L drawn only in the figure, numbered in drawing order.
const std::array<std::vector<Edge>, 12> kFigureTables = {{
    {},
    {},
    {},
    {{0, 3}, {0, 5}, {0, 6}, {1, 4}, {1, 6}, {2, 5}, {5, 6}},  // L4
    {},
    {},
    {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {4, 6}},  // L7
    {{0, 3}, {0, 4}, {0, 6}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {4, 6}},  // L8
    {{0, 3}, {0, 4}, {0, 6}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {4, 6}},  // L9
    {},
    {{0, 3}, {0, 4}, {0, 6}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {3, 6}},  // L11
    {{0, 3}, {0, 4}, {0, 6}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}},  // L12
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void add_path(std::vector<Edge>& edges, int first, int last) {
  for (int v = first; v < last; ++v) edges.emplace_back(v, v + 1);
}

std::vector<Edge> t_edges(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(0, 1 + 3 * i);
    add_path(e, 1 + 3 * i, 3 + 3 * i);
  }
  return e;
}

Graph generate_l(int i) {
  require(i >= 1 && i <= 14, "L(i) requires 1 <= i <= 14, got " + std::to_string(i));
  std::vector<Edge> e;
  switch (i) {
    case 1:
      add_path(e, 0, 6);
      return Graph::from_edge_list(7, e);
    case 2:
      return Graph::from_edge_list(7, {{0, 1}, {0, 4}, {1, 4}, {1, 2}, {2, 3}, {4, 5}, {5, 6}});
    case 3:
      add_path(e, 0, 5);
      e.insert(e.end(), {{6, 3}, {6, 4}});
      return Graph::from_edge_list(7, e);
    case 5:
      add_path(e, 0, 6);
      e.emplace_back(4, 6);
      return Graph::from_edge_list(7, e);
    case 6:
      add_path(e, 0, 6);
      e.insert(e.end(), {{3, 6}, {4, 6}});
      return Graph::from_edge_list(7, e);
    case 10:
      add_path(e, 0, 6);
      e.emplace_back(6, 0);
      return Graph::from_edge_list(7, e);
    case 13:
      add_path(e, 0, 6);
      add_path(e, 7, 12);
      e.insert(e.end(), {{13, 2}, {13, 3}, {13, 9}, {13, 10}});
      return Graph::from_edge_list(14, e);
    case 14: {
      add_path(e, 0, 6);
      add_path(e, 7, 13);
      const std::array<int, 4> q{2, 3, 9, 10};
      for (std::size_t a = 0; a < q.size(); ++a) {
        for (std::size_t b = a + 1; b < q.size(); ++b) e.emplace_back(q[a], q[b]);
      }
      return Graph::from_edge_list(14, e);
    }
    default:
      return Graph::from_edge_list(7, kFigureTables[static_cast<std::size_t>(i - 1)]);
  }
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

int parse_int(std::string_view tok, std::string_view whole) {
  int v = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) {
    throw InputError("family '" + std::string(whole) + "': bad integer argument '" + std::string(tok) + "'");
  }
  return v;
}

// Splits "a,b(c,d),e" at top-level commas.
std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

FamilyId parse_lowered(std::string_view s, std::string_view whole) {
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("unknown family '" + std::string(whole) + "'" + (why.empty() ? "" : ": " + why));
  };
  std::string_view name = s;
  std::vector<std::string_view> args;
  if (auto open = s.find('('); open != std::string_view::npos) {
    if (s.back() != ')') throw fail("missing ')'");
    name = s.substr(0, open);
    const auto inner = s.substr(open + 1, s.size() - open - 2);
    if (inner.empty()) throw fail("empty argument list");
    args = split_args(inner);
  }
  auto ints = [&](std::size_t count) {
    if (args.size() != count) throw fail("expected " + std::to_string(count) + " argument(s)");
    std::vector<int> v;
    for (auto a : args) v.push_back(parse_int(a, whole));
    return v;
  };
  auto one = [&] { return ints(1)[0]; };

  if (name == "p" || name == "path") return FamilyId::path(one());
  if (name == "c" || name == "cycle") return FamilyId::cycle(one());
  if (name == "k" || name == "complete") return FamilyId::complete(one());
  if (name == "star") return FamilyId::star(one());
  if (name == "doublestar" || name == "s") {
    const auto v = ints(2);
    return FamilyId::double_star(v[0], v[1]);
  }
  if (name == "corona") {
    if (args.size() != 2) throw fail("expected 2 arguments");
    return FamilyId::corona(parse_lowered(args[0], whole), parse_int(args[1], whole));
  }
  if (name == "t") return FamilyId::t(one());
  if (name == "f") return FamilyId::f(one());
  if (name == "g") return FamilyId::g(one());
  if (name == "h") return FamilyId::h(one());
  if (name == "l") return FamilyId::l(one());
  if (name == "relate" || name == "relategadget") return FamilyId::relate_gadget(one());
  if (!args.empty()) throw fail("");
  if (name == "tstar" || name == "t*") return FamilyId::t_star();
  if (name == "c10'" || name == "c10prime") return FamilyId::c10_prime();
  if (name == "c10''" || name == "c10doubleprime") return FamilyId::c10_double_prime();
  throw fail("");
}

const std::array<FamilyId, 6>& exceptional_list() {
  static const std::array<FamilyId, 6> list = {FamilyId::path(2), FamilyId::path(3), FamilyId::path(5),
                                               FamilyId::path(6), FamilyId::cycle(3), FamilyId::g(3)};
  return list;
}

bool matches(const Graph& g, const FamilyId& id) {
  const Graph h = generate(id);
  return is_isomorphic(g, h);
}

std::optional<FamilyId> first_match(const Graph& g, const std::vector<FamilyId>& ids) {
  for (const auto& id : ids) {
    if (matches(g, id)) return id;
  }
  return std::nullopt;
}

// Parameterized id whose order equals g's order, if the parameter is in range.
std::optional<FamilyId> sized(FamilyKind kind, int n) {
  switch (kind) {
    case FamilyKind::T:
      if (n >= 4 && n % 3 == 1) return FamilyId::t((n - 1) / 3);
      break;
    case FamilyKind::F:
      if (n >= 7 && n % 3 == 1) return FamilyId::f((n - 1) / 3);
      break;
    case FamilyKind::G:
      if (n >= 7 && n % 3 == 1) return FamilyId::g((n - 1) / 3);
      break;
    case FamilyKind::H:
      if (n >= 7 && n % 7 == 0) return FamilyId::h(n / 7);
      break;
    case FamilyKind::RelateGadget:
      if (n >= 8 && n % 2 == 0) return FamilyId::relate_gadget((n - 6) / 2);
      break;
    default:
      break;
  }
  return std::nullopt;
}

bool matches_sized(const Graph& g, FamilyKind kind) {
  const auto id = sized(kind, g.order());
  return id && matches(g, *id);
}

}  // namespace

FamilyId FamilyId::parse(std::string_view text) {
  const auto s = lower(text);
  if (s.empty()) throw InputError("empty family name");
  return parse_lowered(s, text);
}

std::string FamilyId::to_string() const {
  auto with = [](const char* name, int v) { return std::string(name) + "(" + std::to_string(v) + ")"; };
  switch (kind) {
    case FamilyKind::Path:
      return with("P", a);
    case FamilyKind::Cycle:
      return with("C", a);
    case FamilyKind::Complete:
      return with("K", a);
    case FamilyKind::Star:
      return with("Star", a);
    case FamilyKind::DoubleStar:
      return "DoubleStar(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case FamilyKind::Corona:
      return "Corona(" + (base.empty() ? std::string("?") : base.front().to_string()) + "," + std::to_string(a) + ")";
    case FamilyKind::T:
      return with("T", a);
    case FamilyKind::F:
      return with("F", a);
    case FamilyKind::G:
      return with("G", a);
    case FamilyKind::TStar:
      return "TStar";
    case FamilyKind::H:
      return with("H", a);
    case FamilyKind::L:
      return with("L", a);
    case FamilyKind::C10Prime:
      return "C10'";
    case FamilyKind::C10DoublePrime:
      return "C10''";
    case FamilyKind::RelateGadget:
      return with("RelateGadget", a);
  }
  return "?";
}

std::string_view class_name(FamilyClass c) {
  switch (c) {
    case FamilyClass::CalT:
      return "T";
    case FamilyClass::CalF:
      return "F";
    case FamilyClass::CalG:
      return "G";
    case FamilyClass::CalH:
      return "H";
    case FamilyClass::CalE:
      return "E";
    case FamilyClass::CalS:
      return "S";
    case FamilyClass::CalS1:
      return "S1";
    case FamilyClass::CalL:
      return "L";
  }
  return "?";
}

Graph generate(const FamilyId& id) {
  const int a = id.a;
  const std::string name = id.to_string();
  std::vector<Edge> e;
  switch (id.kind) {
    case FamilyKind::Path:
      require(a >= 1, name + ": path order must be >= 1");
      add_path(e, 0, a - 1);
      return Graph::from_edge_list(a, e);
    case FamilyKind::Cycle:
      require(a >= 3, name + ": cycle order must be >= 3");
      add_path(e, 0, a - 1);
      e.emplace_back(a - 1, 0);
      return Graph::from_edge_list(a, e);
    case FamilyKind::Complete:
      require(a >= 1, name + ": order must be >= 1");
      for (int u = 0; u < a; ++u) {
        for (int v = u + 1; v < a; ++v) e.emplace_back(u, v);
      }
      return Graph::from_edge_list(a, e);
    case FamilyKind::Star:
      require(a >= 1, name + ": needs at least one leaf");
      for (int v = 1; v <= a; ++v) e.emplace_back(0, v);
      return Graph::from_edge_list(a + 1, e);
    case FamilyKind::DoubleStar:
      require(a >= 1 && id.b >= 1, name + ": r and s must be >= 1");
      e.emplace_back(0, 1);
      for (int v = 2; v < a + 2; ++v) e.emplace_back(0, v);
      for (int v = a + 2; v < a + id.b + 2; ++v) e.emplace_back(1, v);
      return Graph::from_edge_list(a + id.b + 2, e);
    case FamilyKind::Corona: {
      require(a >= 1, name + ": path length must be >= 1");
      require(id.base.size() == 1, "Corona needs a host family");
      const Graph h = generate(id.base.front());
      const int n = h.order();
      e = h.edges();
      for (int v = 0; v < n; ++v) {
        const int first = n + v * a;
        e.emplace_back(v, first);
        add_path(e, first, first + a - 1);
      }
      return Graph::from_edge_list(n * (a + 1), e);
    }
    case FamilyKind::T:
      require(a >= 1, name + ": k must be >= 1");
      return Graph::from_edge_list(3 * a + 1, t_edges(a));
    case FamilyKind::F: {
      require(a >= 2, name + ": k must be >= 2");
      e = t_edges(a);
      const int u = 1 + 3 * (a - 1);
      std::erase(e, Edge{0, u});
      e.emplace_back(u, 1);
      return Graph::from_edge_list(3 * a + 1, e);
    }
    case FamilyKind::G:
      require(a >= 2, name + ": k must be >= 2");
      e = t_edges(a);
      e.emplace_back(1, 4);
      return Graph::from_edge_list(3 * a + 1, e);
    case FamilyKind::TStar:
      return Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}});
    case FamilyKind::H:
      require(a >= 1, name + ": t must be >= 1");
      for (int i = 0; i < a; ++i) {
        const int c = 7 * i;
        add_path(e, c + 1, c + 6);
        e.emplace_back(c, c + 3);
        e.emplace_back(c, c + 4);
        for (int j = i + 1; j < a; ++j) e.emplace_back(c, 7 * j);
      }
      return Graph::from_edge_list(7 * a, e);
    case FamilyKind::L:
      return generate_l(a);
    case FamilyKind::C10Prime:
    case FamilyKind::C10DoublePrime:
      add_path(e, 0, 9);
      e.emplace_back(9, 0);
      e.emplace_back(0, 5);
      if (id.kind == FamilyKind::C10DoublePrime) e.emplace_back(1, 6);
      return Graph::from_edge_list(10, e);
    case FamilyKind::RelateGadget:
      require(a >= 1, name + ": k must be >= 1");
      e.emplace_back(0, 1);
      for (int i = 0; i < a + 2; ++i) {
        e.emplace_back(0, 2 + i);
        e.emplace_back(1, 2 + i);
        e.emplace_back(2 + i, a + 4 + i);
      }
      return Graph::from_edge_list(2 * (a + 2) + 2, e);
  }
  throw InputError("unsupported family");
}

std::vector<FamilyId> class_members(FamilyClass c) {
  std::vector<FamilyId> out;
  switch (c) {
    case FamilyClass::CalE:
      out.assign(exceptional_list().begin(), exceptional_list().end());
      break;
    case FamilyClass::CalS1:
      for (int i : {1, 2, 3, 5, 6, 10}) out.push_back(FamilyId::l(i));
      break;
    case FamilyClass::CalS:
      for (int i : {1, 2, 3, 5, 6, 10, 13, 14}) out.push_back(FamilyId::l(i));
      break;
    case FamilyClass::CalL:
      for (int i = 1; i <= 12; ++i) out.push_back(FamilyId::l(i));
      break;
    default:
      throw InputError("class " + std::string(class_name(c)) + " is infinite");
  }
  return out;
}

bool in_class(const Graph& g, FamilyClass c) {
  switch (c) {
    case FamilyClass::CalT:
      return matches_sized(g, FamilyKind::T);
    case FamilyClass::CalF:
      return matches_sized(g, FamilyKind::F);
    case FamilyClass::CalG:
      return matches_sized(g, FamilyKind::G);
    case FamilyClass::CalH:
      return matches_sized(g, FamilyKind::H);
    default:
      break;
  }
  const int n = g.order();
  if (c != FamilyClass::CalE && n != 7 && n != 14) return false;
  for (const auto& id : class_members(c)) {
    if (matches(g, id)) return true;
  }
  return false;
}

std::optional<FamilyId> exceptional_member(const Graph& g) {
  if (g.order() > 10) return std::nullopt;
  return first_match(g, {exceptional_list().begin(), exceptional_list().end()});
}

std::optional<FamilyId> classify(const Graph& g) {
  const int n = g.order();
  if (!g.fits_word()) return std::nullopt;
  if (auto e = exceptional_member(g)) return e;
  if (n == 7 || n == 14) {
    std::vector<FamilyId> ls;
    for (int i = 1; i <= 14; ++i) ls.push_back(FamilyId::l(i));
    if (auto m = first_match(g, ls)) return m;
  }
  if (n == 10) {
    if (auto m = first_match(g, {FamilyId::c10_prime(), FamilyId::c10_double_prime()})) return m;
  }
  if (n == 7 && matches(g, FamilyId::t_star())) return FamilyId::t_star();
  for (auto kind : {FamilyKind::T, FamilyKind::F, FamilyKind::G, FamilyKind::H, FamilyKind::RelateGadget}) {
    const auto id = sized(kind, n);
    if (id && matches(g, *id)) return id;
  }
  if (n >= 1 && matches(g, FamilyId::path(n))) return FamilyId::path(n);
  if (n >= 3 && matches(g, FamilyId::cycle(n))) return FamilyId::cycle(n);
  if (n >= 2 && matches(g, FamilyId::star(n - 1))) return FamilyId::star(n - 1);
  if (n >= 1 && matches(g, FamilyId::complete(n))) return FamilyId::complete(n);
  if (n >= 4 && is_tree(g)) {
    // A double star is a tree whose non-leaves are exactly two adjacent vertices.
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) > 1) inner.push_back(v);
    }
    if (inner.size() == 2 && g.adjacent(inner[0], inner[1])) {
      const int r = g.degree(inner[0]) - 1;
      const int s = g.degree(inner[1]) - 1;
      return FamilyId::double_star(std::min(r, s), std::max(r, s));
    }
  }
  return std::nullopt;
}

std::optional<int> dtd_reference_value(const FamilyId& id) {
  switch (id.kind) {
    case FamilyKind::T:
      if (id.a >= 1) return 2 * id.a;
      break;
    case FamilyKind::F:
    case FamilyKind::G:
      if (id.a >= 2) return 2 * id.a;
      break;
    case FamilyKind::TStar:
      return 4;
    case FamilyKind::H:
      if (id.a >= 1) return 4 * id.a;
      break;
    case FamilyKind::L:
      if (id.a == 13 || id.a == 14) return 8;
      if (id.a == 1 || id.a == 2 || id.a == 3 || id.a == 5 || id.a == 6 || id.a == 10) return 4;
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace dtdom
