#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "dtdom/graph.hpp"
#include "dtdom/parallel.hpp"

namespace dtdom {

enum class GraphClass { AllConnected, ConnectedClawFree, Trees };

/// "all" | "clawfree" | "trees"
GraphClass parse_graph_class(std::string_view name);
std::string_view graph_class_name(GraphClass c);
/// Largest order the builtin generator accepts for the class.
int builtin_limit(GraphClass c);
bool belongs_to(const Graph& g, GraphClass c);

struct EnumSpec {
  int n = 0;
  GraphClass cls = GraphClass::AllConnected;
  /// When set, graphs come from this graph6 file (filtered to the order and
  /// class, one representative per isomorphism class) instead of the generator.
  std::optional<std::filesystem::path> corpus;
};

/// Free trees of order n from canonical level sequences.
std::vector<Graph> free_trees(int n);

/// Work split for parallel consumers: `roots` are expanded independently and
/// the concatenation of expand(root) over roots, in order, is the enumeration.
struct EnumPlan {
  EnumSpec spec;
  std::vector<Graph> roots;
};
EnumPlan plan_enumeration(const EnumSpec& spec);
void expand_root(const EnumPlan& plan, const Graph& root, const std::function<void(const Graph&)>& fn);

/// One representative per isomorphism class, in a deterministic order.
/// Throws InputError beyond builtin limits and IoError for corpus problems.
void enumerate(const EnumSpec& spec, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_all(const EnumSpec& spec);

/// Maps `work` over the enumeration on `jobs` threads and feeds the results
/// to `sink` in enumeration order, independent of `jobs`.
template <class Work, class Sink>
void enumerate_map(const EnumSpec& spec, int jobs, Work work, Sink sink) {
  const EnumPlan plan = plan_enumeration(spec);
  using R = decltype(work(std::declval<const Graph&>()));
  constexpr std::size_t kChunk = 64;
  for (std::size_t start = 0; start < plan.roots.size(); start += kChunk) {
    const std::vector<Graph> chunk(plan.roots.begin() + static_cast<std::ptrdiff_t>(start),
                                   plan.roots.begin() + static_cast<std::ptrdiff_t>(std::min(start + kChunk, plan.roots.size())));
    auto results = parallel_map(chunk, jobs, [&](const Graph& root) {
      std::vector<R> out;
      expand_root(plan, root, [&](const Graph& g) { out.push_back(work(g)); });
      return out;
    });
    for (auto& batch : results) {
      for (auto& r : batch) sink(std::move(r));
    }
  }
}

}  // namespace dtdom
