#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtdom/graph.hpp"

namespace dtdom {

/// Vertex numberings produced by `generate` (all 0-based):
///   Path(n)         path 0-1-...-(n-1)
///   Cycle(n)        cycle 0-1-...-(n-1)-0
///   Complete(n)     K_n
///   Star(n)         K_{1,n}: center 0, leaves 1..n
///   DoubleStar(r,s) centers 0 and 1; leaves 2..r+1 on 0, r+2..r+s+1 on 1
///   Corona(H,k)     H on 0..h-1; the path hung at v is h+v*k, ..., h+v*k+k-1
///   T(k)            center 0; branch i is 0-(1+3i)-(2+3i)-(3+3i)
///   F(k)            T(k) with 0-(3k-2) replaced by (3k-2)-1
///   G(k)            T(k) plus the edge 1-4
///   TStar           center 0, leaves 1 and 2, path 0-3-4-5-6
///   H(t)            clique on 0,7,...,7(t-1); copy i is the path 7i+1..7i+6
///                   with 7i joined to 7i+3 and 7i+4
///   L(1)            path 0..6              L(10)  cycle 0..6
///   L(2)            v=0, a1..a3=1..3, b1..b3=4..6, a1~b1
///   L(3)            path a1..a6=0..5, v=6 joined to 3 and 4
///   L(5)            path 0..6 plus 4-6     L(6)   path 0..6 plus 3-6, 4-6
///   L(13)           paths a1..a7=0..6 and b1..b6=7..12, v=13 joined to 2,3,9,10
///   L(14)           paths a1..a7=0..6 and b1..b7=7..13, clique on 2,3,9,10
///   L(4,7,8,9,11,12) fixed seven-vertex tables (see families.cpp)
///   C10Prime        cycle 0..9 plus 0-5;  C10DoublePrime adds 1-6 as well
///   RelateGadget(k) adjacent hubs 0,1; 2..k+3 joined to both hubs; leaf
///                   k+4+i hangs on 2+i
enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  Star,
  DoubleStar,
  Corona,
  T,
  F,
  G,
  TStar,
  H,
  L,
  C10Prime,
  C10DoublePrime,
  RelateGadget,
};

struct FamilyId {
  FamilyKind kind = FamilyKind::Path;
  int a = 0;
  int b = 0;
  std::vector<FamilyId> base;  // Corona's host graph; otherwise empty

  static FamilyId path(int n) { return {FamilyKind::Path, n, 0, {}}; }
  static FamilyId cycle(int n) { return {FamilyKind::Cycle, n, 0, {}}; }
  static FamilyId complete(int n) { return {FamilyKind::Complete, n, 0, {}}; }
  static FamilyId star(int n) { return {FamilyKind::Star, n, 0, {}}; }
  static FamilyId double_star(int r, int s) { return {FamilyKind::DoubleStar, r, s, {}}; }
  static FamilyId corona(const FamilyId& h, int k) { return {FamilyKind::Corona, k, 0, {h}}; }
  static FamilyId t(int k) { return {FamilyKind::T, k, 0, {}}; }
  static FamilyId f(int k) { return {FamilyKind::F, k, 0, {}}; }
  static FamilyId g(int k) { return {FamilyKind::G, k, 0, {}}; }
  static FamilyId t_star() { return {FamilyKind::TStar, 0, 0, {}}; }
  static FamilyId h(int t) { return {FamilyKind::H, t, 0, {}}; }
  static FamilyId l(int i) { return {FamilyKind::L, i, 0, {}}; }
  static FamilyId c10_prime() { return {FamilyKind::C10Prime, 0, 0, {}}; }
  static FamilyId c10_double_prime() { return {FamilyKind::C10DoublePrime, 0, 0, {}}; }
  static FamilyId relate_gadget(int k) { return {FamilyKind::RelateGadget, k, 0, {}}; }

  /// Case-insensitive: NAME or NAME(args), e.g. "T(4)", "C10'", "Corona(K(3),2)".
  static FamilyId parse(std::string_view text);
  /// Canonical spelling, e.g. "T(4)", "TStar", "C10'"; parse(to_string()) round-trips.
  std::string to_string() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

enum class FamilyClass { CalT, CalF, CalG, CalH, CalE, CalS, CalS1, CalL };

std::string_view class_name(FamilyClass c);

/// Throws InputError when a parameter is out of range.
Graph generate(const FamilyId& id);

bool in_class(const Graph& g, FamilyClass c);
/// Members of the finite classes (CalE, CalS, CalS1, CalL).
std::vector<FamilyId> class_members(FamilyClass c);
/// First matching id in priority order: exceptional list, L(1..14), C10',
/// C10'', TStar, then T, F, G, H, RelateGadget, then path, cycle, star,
/// complete, double star.
std::optional<FamilyId> classify(const Graph& g);
/// The member of E isomorphic to g, if any.
std::optional<FamilyId> exceptional_member(const Graph& g);

/// Asserted γt^d for T/F/G (2k), TStar (4), H(t) (4t), L(i) in S1 (4),
/// L(13) and L(14) (8); nullopt otherwise.
std::optional<int> dtd_reference_value(const FamilyId& id);

}  // namespace dtdom
