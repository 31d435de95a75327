#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polytsg/bipartite.hpp"
#include "polytsg/group.hpp"
#include "polytsg/necessity.hpp"
#include "polytsg/polyhedra.hpp"

namespace polytsg {

/// What a point of the model is. `inner_corner`/`outer_corner` are the two
/// concentric corner blocks that orientation-reversing tetrahedral symmetries
/// exchange.
enum class PointKind : std::uint8_t { center, corner, edge, face, inner_corner, outer_corner, free };

struct UniversePoint {
  PointKind kind = PointKind::center;
  std::size_t copy = 0;   // nested-copy radius rank; free-orbit number for free points
  std::size_t index = 0;  // index within its class; group element for free points
  std::string label;
};

/// A labeled set of model points; `part` is empty for points that are in the
/// model (they sit on axes) but carry no vertex.
struct Block {
  std::string name;
  std::optional<Part> part;
  std::vector<Point> points;
};

/// A group acting on model points, with a subset of the points placed as the
/// vertices of K_{n,n}. Vertex ids list V points in model order, then W.
class VertexAssignment {
public:
  /// Throws Error(invalid_argument) if the blocks do not partition the
  /// points or the parts are unbalanced, and Error(mixed_parts) if some
  /// element does not act as an automorphism of K_{n,n}.
  VertexAssignment(GroupAction universe, std::vector<UniversePoint> points,
                   std::vector<Block> blocks);

  std::size_t n() const noexcept { return n_; }
  const FiniteGroup& group() const noexcept { return universe_.group(); }
  const GroupPtr& group_ptr() const noexcept { return universe_.group_ptr(); }
  const GroupAction& universe() const noexcept { return universe_; }
  const std::vector<UniversePoint>& points() const noexcept { return points_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  std::optional<Part> part_of_point(Point p) const { return point_part_[p]; }
  std::optional<Point> vertex_of(Point p) const;
  Point point_of(Point vertex) const { return vertex_point_[vertex]; }
  /// "v3" / "w5" with the model label, e.g. "v3 (sigma.face2)".
  std::string vertex_label(Point vertex) const;

  const BipartiteAut& induced(ElementId g) const { return induced_[g]; }
  std::vector<Point> fixed_vertices(ElementId g) const;

  /// The same placement acted on by a subgroup of group().
  VertexAssignment restrict_to(GroupPtr subgroup) const;

private:
  GroupAction universe_;
  std::vector<UniversePoint> points_;
  std::vector<Block> blocks_;
  std::size_t n_ = 0;
  std::vector<std::optional<Part>> point_part_;
  std::vector<std::optional<Point>> point_vertex_;
  std::vector<Point> vertex_point_;
  std::vector<BipartiteAut> induced_;
};

/// The fixed circle of a rotation, as the model points on it in circular
/// order.
struct Axis {
  std::vector<Point> sequence;
};

/// True when b is a rotation or reflection of the cyclic sequence a.
bool same_circular_order(std::span<const Point> a, std::span<const Point> b);

class AxisModel {
public:
  AxisModel() = default;
  /// `per_element[g]` lists the points on the fixed circle of g in circular
  /// order, or is empty when g fixes no circle. Elements with the same point
  /// set share one axis.
  AxisModel(const GroupAction& universe, const std::vector<std::vector<Point>>& per_element);

  const std::vector<Axis>& axes() const noexcept { return axes_; }
  std::optional<std::size_t> axis_of(ElementId g) const { return axis_of_.at(g); }

private:
  std::vector<Axis> axes_;
  std::vector<std::optional<std::size_t>> axis_of_;
};

/// A fixed-count claim from a construction's description.
struct StatedCount {
  std::uint64_t order = 1;
  bool outside_subgroup = false;
  std::size_t v = 0;
  std::size_t w = 0;
};

/// Which geometric model a construction uses.
enum class ModelKind : std::uint8_t {
  tetrahedron_rotations,  // A4 on a solid tetrahedron
  tetrahedron_skeleton,   // S4 on the 1-skeleton of a tetrahedron
  cube_rotations,         // S4 on a solid cube
  dodecahedron_rotations  // A5 on a solid dodecahedron
};

struct Construction {
  GroupKind group = GroupKind::A4;
  std::size_t n = 0;
  ModelKind model = ModelKind::cube_rotations;
  std::string recipe;                  // e.g. "cube, n = 24m + 8"
  std::string id;                      // e.g. "cube-24m+8"
  std::size_t free_orbits = 0;         // m, regular orbits per part beyond the recipe
  VertexAssignment assignment;
  AxisModel axes;
  std::vector<StatedCount> stated;
  std::shared_ptr<const Construction> parent;  // the S4 construction an A4 one restricts
};

/// The vertex placement for (group, n). Throws Error(not_realizable) when
/// necessity_verdict rejects the pair.
Construction build_assignment(GroupKind group, std::size_t n);

/// The S4 tetrahedral-skeleton placement for n = 12m or 12m + 4 (n >= 4),
/// also reachable through build_assignment for those residues.
Construction build_tetrahedral_s4(std::size_t n);

/// Per conjugacy class of the acting group: fixed vertices in V and W.
struct FixedCountRow {
  std::uint64_t order = 1;
  bool outside_subgroup = false;  // outside the squares subgroup (S4 only)
  std::size_t class_size = 0;
  ElementId representative = 0;
  bool swaps = false;
  std::size_t fix_v = 0;
  std::size_t fix_w = 0;
  std::optional<StatedCount> stated;
};

struct FixedCountTable {
  std::vector<FixedCountRow> rows;
  bool fixed_vertex_property = true;       // conjugates fix equally many
  std::optional<std::size_t> profile_row;  // index into the A4 or A5 table
  std::vector<std::string> discrepancies;  // computed vs stated counts

  bool passed() const { return fixed_vertex_property && profile_row.has_value(); }
};

FixedCountTable verify_fixed_counts(const Construction& c);

}  // namespace polytsg
