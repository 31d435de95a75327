#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "polytsg/group.hpp"
#include "polytsg/perm.hpp"

namespace polytsg {

// K_{n,n} vertex labeling: V = 0..n-1, W = n..2n-1. Adjacency is implicit.

enum class Part : std::uint8_t { V, W };

inline Part part_of(Point vertex, std::size_t n) {
  return vertex < n ? Part::V : Part::W;
}
inline bool adjacent(Point a, Point b, std::size_t n) {
  return part_of(a, n) != part_of(b, n);
}

enum class PartBehavior : std::uint8_t { preserves, swaps };

/// An automorphism of K_{n,n}: a permutation of the 2n vertices that maps V
/// onto V or onto W.
struct BipartiteAut {
  std::size_t n = 0;
  Perm perm;
  PartBehavior behavior = PartBehavior::preserves;
};

/// Throws Error(degree_mismatch) if p does not have degree 2n and
/// Error(mixed_parts) if p sends V to a set meeting both parts.
BipartiteAut validate_automorphism(const Perm& p, std::size_t n);

/// (a ∘ b); part behavior composes like a sign.
BipartiteAut compose(const BipartiteAut& a, const BipartiteAut& b);

/// Cycle lengths of an automorphism split by where the cycles live. Fixed
/// vertices appear as 1-cycles. Swapping automorphisms have only cross
/// cycles, preserving ones have none.
struct CycleProfile {
  std::size_t n = 0;
  std::uint64_t order = 1;
  PartBehavior behavior = PartBehavior::preserves;
  std::vector<std::size_t> v_cycles;      // ascending
  std::vector<std::size_t> w_cycles;      // ascending
  std::vector<std::size_t> cross_cycles;  // ascending

  std::size_t total() const;
  friend auto operator<=>(const CycleProfile&, const CycleProfile&) = default;
};

CycleProfile cycle_profile(const BipartiteAut& a);

/// Some automorphism with exactly this profile (consecutive labels per cycle).
BipartiteAut canonical_automorphism(const CycleProfile& profile);

/// The fixed subgraph of a set of automorphisms is K_{a,b}.
struct FixedSubgraphShape {
  std::size_t a = 0;  // common fixed V-vertices
  std::size_t b = 0;  // common fixed W-vertices
  friend bool operator==(const FixedSubgraphShape&, const FixedSubgraphShape&) = default;
};

/// Common fixed vertices of a nonempty set of automorphisms of one graph.
/// Throws Error(invalid_argument) on an empty set or mismatched n.
std::vector<Point> common_fixed_vertices(std::span<const BipartiteAut> auts);
FixedSubgraphShape fixed_shape(std::span<const BipartiteAut> auts);
FixedSubgraphShape shape_of(std::span<const Point> vertices, std::size_t n);

bool embeds_in_circle(FixedSubgraphShape s);
bool embeds_in_proper_subset_of_circle(FixedSubgraphShape s);

/// Aut(K_{n,n}) = (S_n x S_n) ⋊ C2 as a permutation group on 2n points.
/// Only sensible for small n (order 2(n!)^2).
FiniteGroup automorphism_group(std::size_t n);

}  // namespace polytsg
