#include "dtdom/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "dtdom/errors.hpp"

namespace dtdom {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<Mask>;

class Refiner {
 public:
  Refiner(const Graph& g, std::span<const int> colors) : n_(g.order()), adj_(static_cast<std::size_t>(n_)) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.mask(v);
    std::map<int, Mask> by_color;
    for (Vertex v = 0; v < n_; ++v) by_color[colors.empty() ? 0 : colors[v]] |= Mask{1} << v;
    Cells cells;
    for (const auto& [c, m] : by_color) cells.push_back(m);
    search(std::move(cells));
  }

  std::vector<Mask> best_cert;
  std::vector<Vertex> best_label;
  std::vector<std::vector<Vertex>> generators;

 private:
  void refine(Cells& cells) const {
    std::vector<std::pair<int, Vertex>> counts;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        const Mask splitter = cells[si];
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
          Mask cell = cells[ci];
          if (std::popcount(cell) == 1) continue;
          counts.clear();
          while (cell != 0) {
            const Vertex v = std::countr_zero(cell);
            cell &= cell - 1;
            counts.emplace_back(std::popcount(adj_[v] & splitter), v);
          }
          const bool uniform = std::all_of(counts.begin(), counts.end(),
                                           [&](const auto& p) { return p.first == counts.front().first; });
          if (uniform) continue;
          std::sort(counts.begin(), counts.end());
          Cells fragments;
          int current = -1;
          for (const auto& [c, v] : counts) {
            if (c != current) {
              fragments.push_back(0);
              current = c;
            }
            fragments.back() |= Mask{1} << v;
          }
          cells[ci] = fragments[0];
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci) + 1, fragments.begin() + 1, fragments.end());
          changed = true;
          break;
        }
      }
    }
  }

  bool same_orbit(Vertex a, Vertex b) const {
    // Union-find over the generators that fix the current prefix pointwise.
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gen : generators) {
      const bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex p) { return gen[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) parent[find(v)] = find(gen[v]);
    }
    return find(a) == find(b);
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> label(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) label[std::countr_zero(cells[i])] = static_cast<Vertex>(i);
    std::vector<Mask> cert(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      Mask row = adj_[std::countr_zero(cells[i])];
      while (row != 0) {
        cert[i] |= Mask{1} << label[std::countr_zero(row)];
        row &= row - 1;
      }
    }
    if (first_label_.empty()) {
      first_cert_ = best_cert = cert;
      first_label_ = best_label = label;
      return;
    }
    if (cert == first_cert_) record_automorphism(first_label_, label);
    if (cert > best_cert) {
      best_cert = std::move(cert);
      best_label = std::move(label);
    } else if (cert == best_cert) {
      record_automorphism(best_label, label);
    }
  }

  void record_automorphism(const std::vector<Vertex>& reference, const std::vector<Vertex>& label) {
    std::vector<Vertex> at(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) at[reference[v]] = v;
    std::vector<Vertex> perm(static_cast<std::size_t>(n_));
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      perm[v] = at[label[v]];
      identity = identity && perm[v] == v;
    }
    if (!identity) generators.push_back(std::move(perm));
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    int target_size = n_ + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int size = std::popcount(cells[i]);
      if (size > 1 && size < target_size) {
        target = i;
        target_size = size;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> tried;
    Mask members = cells[target];
    while (members != 0) {
      const Vertex v = std::countr_zero(members);
      members &= members - 1;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return same_orbit(u, v); })) continue;
      tried.push_back(v);
      Cells child = cells;
      child[target] = Mask{1} << v;
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells[target] & ~(Mask{1} << v));
      prefix_.push_back(v);
      search(std::move(child));
      prefix_.pop_back();
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Vertex> prefix_;
  std::vector<Mask> first_cert_;
  std::vector<Vertex> first_label_;
};

}  // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.n) * 0x9E3779B97F4A7C15ULL;
  for (auto r : f.rows) h = (h ^ r) * 0x100000001B3ULL + (h >> 29);
  for (auto c : f.colors) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001B3ULL;
  return h;
}

std::vector<Vertex> CanonicalLabeling::orbits() const {
  const int n = static_cast<int>(label.size());
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : generators) {
    for (Vertex v = 0; v < n; ++v) {
      const Vertex a = find(v);
      const Vertex b = find(gen[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Vertex> out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) out[v] = find(v);
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (!g.fits_word()) throw InputError("canonical labeling supports graphs of order at most 64");
  if (!colors.empty() && colors.size() != static_cast<std::size_t>(g.order())) {
    throw InputError("color vector length differs from graph order");
  }
  CanonicalLabeling out;
  out.form.n = g.order();
  if (!colors.empty()) {
    out.form.colors.assign(colors.begin(), colors.end());
    std::sort(out.form.colors.begin(), out.form.colors.end());
  }
  if (g.order() == 0) return out;
  Refiner r(g, colors);
  out.form.rows = std::move(r.best_cert);
  out.label = std::move(r.best_label);
  out.generators = std::move(r.generators);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const auto lab = canonical_labeling(g);
  return relabel(g, lab.label);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& from, const Graph& to) {
  if (from.order() != to.order() || from.size() != to.size()) return std::nullopt;
  const auto a = canonical_labeling(from);
  const auto b = canonical_labeling(to);
  if (a.form != b.form) return std::nullopt;
  std::vector<Vertex> at(b.label.size());
  for (std::size_t v = 0; v < b.label.size(); ++v) at[b.label[v]] = static_cast<Vertex>(v);
  std::vector<Vertex> f(a.label.size());
  for (std::size_t v = 0; v < a.label.size(); ++v) f[v] = at[a.label[v]];
  return f;
}

}  // namespace dtdom
