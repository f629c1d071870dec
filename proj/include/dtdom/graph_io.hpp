#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dtdom/graph.hpp"

namespace dtdom {

enum class GraphFormat { EdgeList, Graph6 };

/// "edgelist" or "graph6" (case-insensitive); InputError otherwise.
GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat f);

/// Edge-list text: a header line "n m", then m lines "u v" (0-based).
/// Blank lines and '#' comments are skipped. Throws IoError with a line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// One graph6 string, without the trailing newline. An optional ">>graph6<<"
/// prefix is accepted. Throws InputError on malformed input.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Streams a graph6 corpus (one graph per line). The callback receives the
/// graph and its 1-based line number; blank lines are skipped.
void for_each_graph6(std::istream& in, const std::function<void(const Graph&, int)>& fn);
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

/// Reads all graphs of a file. Edge-list files hold exactly one graph.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);
std::vector<Graph> read_graph_file(const std::filesystem::path& path, GraphFormat format);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

}  // namespace dtdom
