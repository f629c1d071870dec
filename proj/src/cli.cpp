#include "dtdom/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dtdom/constructor.hpp"
#include "dtdom/domination.hpp"
#include "dtdom/enumerate.hpp"
#include "dtdom/errors.hpp"
#include "dtdom/families.hpp"
#include "dtdom/graph_io.hpp"
#include "dtdom/verify.hpp"

namespace dtdom {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// An edge-list header is two integers; a graph6 line never contains a space.
GraphFormat sniff_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line.rfind(">>graph6<<", start) == start) return GraphFormat::Graph6;
    return line.find_first_of(" \t", start) == std::string::npos ? GraphFormat::Graph6 : GraphFormat::EdgeList;
  }
  return GraphFormat::EdgeList;
}

std::vector<Graph> load(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  const GraphFormat f = format.empty() ? sniff_format(text) : parse_format(format);
  std::istringstream in(text);
  auto graphs = read_graphs(in, f);
  if (graphs.empty()) throw InputError("'" + path + "' contains no graph");
  return graphs;
}

Graph load_one(const std::string& path, const std::string& format) {
  auto graphs = load(path, format);
  if (graphs.size() != 1) {
    throw InputError("'" + path + "' holds " + std::to_string(graphs.size()) + " graphs; expected exactly one");
  }
  return std::move(graphs.front());
}

// Writes to `out`, or to the named file when given.
class Sink {
 public:
  Sink(std::ostream& out, const std::string& path) : out_(&out) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ostream* out_;
  std::ofstream file_;
};

VertexSet parse_set_list(const std::string& text, int n) {
  VertexSet s(n);
  std::string_view rest = text;
  if (rest.find_first_not_of(" \t") == std::string_view::npos) return s;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    const std::string_view trimmed = b == std::string_view::npos ? std::string_view{} : tok.substr(b, e - b + 1);
    int v = -1;
    const auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), v);
    if (trimmed.empty() || ec != std::errc() || ptr != trimmed.data() + trimmed.size()) {
      throw InputError("malformed set list: bad token '" + std::string(trimmed) + "'");
    }
    if (v < 0 || v >= n) {
      throw InputError("malformed set list: vertex " + std::string(trimmed) + " outside 0.." + std::to_string(n - 1));
    }
    s.insert(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return s;
}

void print_solution(std::ostream& out, DominationKind kind, const SolveResult& r) {
  out << "kind: " << kind_name(kind) << '\n'
      << "value: " << r.value << '\n'
      << "witness: " << to_string(r.witness) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjunctive total domination toolkit"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string in_path;
  std::string format;
  std::string kind_text;
  std::string out_path;
  int jobs = 1;

  auto* compute = app.add_subcommand("compute", "Exact domination number and a witness set");
  compute->add_option("--kind", kind_text, "dom | tdom | dtd")->required();
  compute->add_option("--in", in_path, "Input graph file ('-' for stdin)")->required();
  compute->add_option("--format", format, "edgelist | graph6 (detected when omitted)");

  std::string set_text;
  auto* check = app.add_subcommand("check-set", "Validate a candidate set");
  check->add_option("--kind", kind_text, "dom | tdom | dtd")->required();
  check->add_option("--in", in_path, "Input graph file ('-' for stdin)")->required();
  check->add_option("--format", format, "edgelist | graph6 (detected when omitted)");
  check->add_option("--set", set_text, "Comma-separated 0-based vertices")->required();

  std::string family_text;
  auto* gen = app.add_subcommand("generate", "Build a named family graph");
  gen->add_option("--family", family_text, "Family id, e.g. T(4), H(3), L(13), C10'")->required();
  gen->add_option("--out", out_path, "Output file (stdout when omitted)");
  gen->add_option("--format", format, "edgelist | graph6 (default edgelist)");

  auto* construct = app.add_subcommand("construct", "DTD-set within 4n/7 for a connected claw-free graph");
  construct->add_option("--in", in_path, "Input graph file ('-' for stdin)")->required();
  construct->add_option("--format", format, "edgelist | graph6 (detected when omitted)");

  std::string theorem;
  std::optional<int> max_n;
  std::string corpus;
  std::string report_format = "json";
  auto* verify = app.add_subcommand("verify", "Check a theorem over an enumerated universe");
  verify->add_option("--theorem", theorem, "census7 | tree | graph | clawfree | mindeg2 | dtd-le-gt | spanning")
      ->required();
  verify->add_option("--max-n", max_n, "Largest order checked");
  verify->add_option("--corpus", corpus, "graph6 corpus replacing the builtin generator");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report_format, "json | text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "Report file (stdout when omitted)");

  int order = 0;
  std::string class_text;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream non-isomorphic graphs as graph6");
  enumerate_cmd->add_option("--n", order, "Order")->required();
  enumerate_cmd->add_option("--class", class_text, "all | clawfree | trees")->required();
  enumerate_cmd->add_option("--corpus", corpus, "graph6 corpus to filter instead of generating");
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");

  std::string format_in;
  std::string format_out;
  auto* convert = app.add_subcommand("convert", "Translate between edge-list and graph6");
  convert->add_option("--in", in_path, "Input graph file ('-' for stdin)")->required();
  convert->add_option("--format-in", format_in, "edgelist | graph6 (detected when omitted)");
  convert->add_option("--format-out", format_out, "edgelist | graph6")->required();
  convert->add_option("--out", out_path, "Output file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*compute) {
      const auto kind = parse_kind(kind_text);
      const auto graphs = load(in_path, format);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs.size() > 1) out << (i ? "\n" : "") << "graph: " << to_graph6(graphs[i]) << '\n';
        print_solution(out, kind, exact_number(graphs[i], kind));
      }
      return kExitOk;
    }
    if (*check) {
      const auto kind = parse_kind(kind_text);
      const Graph g = load_one(in_path, format);
      const VertexSet s = parse_set_list(set_text, g.order());
      const VertexSet missed = uncovered(g, s, kind);
      out << "kind: " << kind_name(kind) << '\n' << "set: " << to_string(s) << '\n';
      if (missed.size() == 0) {
        out << "valid\n";
        return kExitOk;
      }
      out << "invalid\n" << "uncovered: " << to_string(missed) << '\n';
      return kExitFailure;
    }
    if (*gen) {
      const Graph g = generate(FamilyId::parse(family_text));
      const GraphFormat f = format.empty() ? GraphFormat::EdgeList : parse_format(format);
      Sink sink(out, out_path);
      write_graph(sink.stream(), g, f);
      return kExitOk;
    }
    if (*construct) {
      const Graph g = load_one(in_path, format);
      const Construction c = construct_dtd_clawfree(g);
      out << "method: " << c.method << '\n'
          << "size: " << c.set.size() << '\n'
          << "bound: 4n/7 = " << 4 * g.order() << "/7\n"
          << "witness: " << to_string(c.set) << '\n';
      return kExitOk;
    }
    if (*verify) {
      CheckOptions opt;
      opt.jobs = jobs;
      opt.max_n = max_n;
      if (!corpus.empty()) opt.corpus = corpus;
      const auto report = run_check(theorem, opt);
      Sink sink(out, out_path);
      sink.stream() << emit_report(report, report_format == "text" ? ReportFormat::Text : ReportFormat::Json);
      if (!report.passed()) {
        err << "verification failed: " << report.violations.size() << " violation(s)\n";
        return kExitFailure;
      }
      return kExitOk;
    }
    if (*enumerate_cmd) {
      EnumSpec spec{order, parse_graph_class(class_text), std::nullopt};
      if (!corpus.empty()) spec.corpus = corpus;
      Sink sink(out, out_path);
      enumerate_map(
          spec, jobs, [](const Graph& g) { return to_graph6(g); },
          [&](std::string&& line) { sink.stream() << line << '\n'; });
      return kExitOk;
    }
    if (*convert) {
      const auto graphs = load(in_path, format_in);
      const GraphFormat f = parse_format(format_out);
      if (f == GraphFormat::EdgeList && graphs.size() != 1) {
        throw InputError("edge-list output holds one graph; input has " + std::to_string(graphs.size()));
      }
      Sink sink(out, out_path);
      for (const auto& g : graphs) write_graph(sink.stream(), g, f);
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace dtdom
