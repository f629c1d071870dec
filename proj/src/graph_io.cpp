#include "dtdom/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dtdom/errors.hpp"

namespace dtdom {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Content of the next non-blank, non-comment line, or false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!strip(line).empty()) return true;
  }
  return false;
}

bool parse_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  std::string rest;
  if (!(ss >> a >> b)) return false;
  return !(ss >> rest);
}

constexpr long long kMaxOrder = 68719476735LL;

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  const auto n = lower(name);
  if (n == "edgelist" || n == "edge-list") return GraphFormat::EdgeList;
  if (n == "graph6" || n == "g6") return GraphFormat::Graph6;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) { return f == GraphFormat::EdgeList ? "edgelist" : "graph6"; }

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw IoError("empty edge list: missing 'n m' header", lineno);
  long long n = 0;
  long long m = 0;
  if (!parse_ints(line, n, m) || n < 0 || m < 0) throw IoError("expected header 'n m'", lineno);
  if (n > 100000) throw IoError("vertex count " + std::to_string(n) + " is too large", lineno);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno)) {
      throw IoError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), lineno);
    }
    long long u = 0;
    long long v = 0;
    if (!parse_ints(line, u, v)) throw IoError("expected edge 'u v'", lineno);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw IoError("edge endpoint outside 0.." + std::to_string(n - 1), lineno);
    }
    if (u == v) throw IoError("loop edge at vertex " + std::to_string(u), lineno);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, lineno)) throw IoError("unexpected content after the last edge", lineno);
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph parse_graph6(std::string_view text) {
  text = strip(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("graph6: invalid character");
  }
  std::size_t pos = 0;
  auto take = [&](int count) {
    if (pos + count > text.size()) throw InputError("graph6: truncated order field");
    long long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (text[pos++] - 63);
    return v;
  };
  long long n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000 || n > kMaxOrder) throw InputError("graph6: order too large");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) throw InputError("graph6: adjacency field has wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (need > 0) {
    const int pad = static_cast<int>(need * 6 - bits);
    const int last = text.back() - 63;
    if ((last & ((1 << pad) - 1)) != 0) throw InputError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

void for_each_graph6(std::istream& in, const std::function<void(const Graph&, int)>& fn) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const InputError& e) {
      throw IoError(e.what(), lineno);
    }
    fn(g, lineno);
  }
  if (in.bad()) throw IoError("read error", lineno);
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graphs(in, GraphFormat::Graph6);
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return {read_edge_list(in)};
  std::vector<Graph> out;
  for_each_graph6(in, [&](const Graph& g, int) { out.push_back(g); });
  return out;
}

std::vector<Graph> read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  auto in = open_input(path);
  return read_graphs(in, format);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::EdgeList) {
    write_edge_list(out, g);
  } else {
    out << to_graph6(g) << '\n';
  }
}

}  // namespace dtdom
