#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtdom/graph.hpp"

namespace dtdom {

struct Violation {
  std::string graph6;
  std::string detail;
};

struct EqualityCase {
  std::string graph6;
  std::string family;  // matched family id, or "unclassified"
};

/// Outcome of one theorem check over an enumerated universe. Passes iff
/// `violations` is empty.
struct VerificationReport {
  std::string theorem;
  std::string universe;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<EqualityCase> equality_cases;
  std::vector<std::pair<std::string, std::int64_t>> counts;  // insertion-ordered
  double elapsed_ms = 0;

  bool passed() const { return violations.empty(); }
  void count(const std::string& name, std::int64_t value);
  std::optional<std::int64_t> find_count(std::string_view name) const;
};

struct CheckOptions {
  int jobs = 1;
  std::optional<int> max_n;
  std::optional<std::filesystem::path> corpus;
};

/// Order-7 census: 853 connected graphs, 20 with γt = 4, 12 of them
/// claw-free (exactly L1..L12), 6 of those with γt^d = 4 (exactly S1).
VerificationReport check_order7_census(const CheckOptions& opt = {});
/// Trees 4 <= n <= max_n (default 12, at most 16), excluding P5 and P6.
VerificationReport check_tree_theorem(const CheckOptions& opt = {});
/// Connected graphs of order 8 (or every order >= 8 present in the corpus),
/// plus the spanning-supergraph closure of the equality trees at order 10.
VerificationReport check_graph_theorem(const CheckOptions& opt = {});
/// Connected claw-free graphs 2 <= n <= max_n (default 8, builtin up to 12).
VerificationReport check_clawfree_theorem(const CheckOptions& opt = {});
/// Connected claw-free graphs with minimum degree >= 2, n <= max_n (default 8).
VerificationReport check_mindeg2_bound(const CheckOptions& opt = {});
/// γt^d <= γt over all connected graphs 2 <= n <= max_n (default 8).
VerificationReport check_dtd_le_gt(const CheckOptions& opt = {});
/// γt^d(G + e) <= γt^d(G) on `pairs` random connected graphs of order
/// 4..max_n (default 9) with a random non-edge e. Deterministic in `seed`.
VerificationReport check_spanning_monotonicity(int pairs, std::uint64_t seed, const CheckOptions& opt = {});

/// Every connected graph of order n = 3k+1 with γt^d = 2(n-1)/3, found by
/// adding edges to the equality trees; complete because γt^d never rises
/// when edges are added and every equality graph has an equality spanning tree.
std::vector<Graph> equality_closure(int n);

/// Dispatch by name: census7 | tree | graph | clawfree | mindeg2 | dtd-le-gt | spanning.
VerificationReport run_check(std::string_view theorem, const CheckOptions& opt = {});

enum class ReportFormat { Json, Text };
/// Deterministic serialization with stable key order.
std::string emit_report(const VerificationReport& r, ReportFormat format);

}  // namespace dtdom
