#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polytsg/assignment.hpp"
#include "polytsg/bipartite.hpp"

namespace polytsg {

/// Outcome of one edge-embedding condition. `vacuous` means nothing was
/// there to check.
struct ConditionOutcome {
  int id = 0;
  bool passed = true;
  bool vacuous = true;
  std::string witness;
};

/// An arc along an axis joining two adjacent fixed vertices. `interior`
/// holds the model points strictly inside it.
struct ArcRecord {
  std::size_t axis = 0;
  std::array<Point, 2> ends{};  // vertex ids, ascending
  std::vector<Point> interior;  // model points, ascending
};

struct EdgeEmbeddingReport {
  ConditionOutcome axes;  // id 0: the axis model itself is consistent
  std::array<ConditionOutcome, 5> conditions;
  std::vector<ArcRecord> arcs;

  bool passed() const;
  /// First failing check, or nullptr.
  const ConditionOutcome* first_failure() const;
};

/// Checks the axis model and conditions 1-5:
///  1. two nontrivial elements fixing a common adjacent pair fix the same
///     vertices and share an axis;
///  2. on each axis the fixed vertices alternate between V and W, giving
///     arcs whose interiors on different axes are disjoint;
///  3. every element maps the chosen arcs onto chosen arcs;
///  4. an element interchanging an adjacent pair fixes a subgraph that sits
///     in a proper subset of a circle;
///  5. such an element has an axis shared with no other element.
EdgeEmbeddingReport check_edge_embedding_hypotheses(const VertexAssignment& a, const AxisModel& axes);

/// Throws Error(hypothesis_violation) naming the first failing condition.
void require_edge_embedding(const EdgeEmbeddingReport& r);

/// Vertices forced to be fixed by anything that fixes edge (v, w) and each
/// edge orbit setwise: whenever x is forced and {x, y} is the only edge of
/// its orbit at x, y is forced too.
struct ForcedFixation {
  std::array<Point, 2> edge{};
  std::vector<Point> vertices;  // ascending
  FixedSubgraphShape shape;
};

/// Throws Error(invalid_argument) unless v and w are adjacent vertices.
ForcedFixation forced_fix_closure(const VertexAssignment& a, Point v, Point w);

struct SubgroupWitness {
  int condition = 1;  // 1: forced subgraph not in a circle; 2: psi overlaps partially
  ForcedFixation forced;
  std::optional<ElementId> psi;
};

/// Searches edge orbits for an edge whose forced set cannot lie in a circle
/// (condition 1), falling back to one whose forced set shares an adjacent
/// pair with fix(psi) without lying inside it (condition 2). Throws
/// Error(no_witness_found) when neither exists.
SubgroupWitness check_subgroup_theorem(const VertexAssignment& a);

/// An edge fixed by no nontrivial element. With a polyhedron, edges between
/// incident special points are preferred. Throws Error(no_such_edge).
std::array<Point, 2> subgroup_corollary_witness(const VertexAssignment& a,
                                                const Polyhedron* poly = nullptr);

/// Everything that certifies a construction.
struct ConstructionReport {
  FixedCountTable fixed_counts;
  EdgeEmbeddingReport edge_embedding;
  std::optional<SubgroupWitness> subgroup;
  std::string subgroup_error;
  std::optional<EdgeEmbeddingReport> parent_edge_embedding;  // restrictions only
  std::optional<std::array<Point, 2>> corollary_edge;        // vertex ids of the parent
  bool automorphisms_realizable = true;
  std::string realizability_witness;

  bool passed() const;
};

ConstructionReport verify_construction(const Construction& c);

}  // namespace polytsg
