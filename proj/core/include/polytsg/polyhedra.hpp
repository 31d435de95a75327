#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polytsg/group.hpp"

namespace polytsg {

enum class PolyhedronKind : std::uint8_t { tetrahedron, cube, dodecahedron };

std::string_view polyhedron_name(PolyhedronKind k);

/// The three point classes of a polyhedron.
enum class PointClass : std::uint8_t { corner, edge, face };

std::string_view point_class_name(PointClass c);

/// Combinatorial polyhedron: corners 0..c-1, faces as corner cycles
/// (counterclockwise seen from outside), edges as sorted corner pairs in
/// lexicographic order.
struct Polyhedron {
  PolyhedronKind kind{};
  std::size_t corner_count = 0;
  std::vector<std::array<Point, 2>> edges;
  std::vector<std::vector<Point>> faces;

  std::size_t class_size(PointClass c) const;
  /// Index of the edge {a, b}; throws Error(no_such_edge).
  std::size_t edge_index(Point a, Point b) const;
  /// Corner/edge/face incidence between two point-class members.
  bool incident(PointClass a, std::size_t i, PointClass b, std::size_t j) const;
};

const Polyhedron& polyhedron(PolyhedronKind k);

/// A rotation group acting on corners, with the induced actions on edges
/// and faces computed from incidence.
struct PolyhedralModel {
  const Polyhedron* poly = nullptr;
  GroupPtr group;  // permutations of the corners
  Perm face_rotation;
  Perm vertex_rotation;
  GroupAction corners;
  GroupAction edges;
  GroupAction faces;

  const GroupAction& action(PointClass c) const;
};

/// Rotation group generated by a rotation about face 0 and one about the
/// first corner of face 0. Orders 12, 24, 60.
PolyhedralModel build_polyhedral_model(PolyhedronKind k);

/// Actions on edges and faces induced from a corner action of any group,
/// including groups with orientation-reversing elements.
GroupAction induced_action(const Polyhedron& poly, GroupPtr group, PointClass c);

/// Number of points of class `c` fixed by each element of a conjugacy class,
/// one row per class of the model's rotation group.
struct ClassFixRow {
  std::uint64_t element_order = 1;
  std::size_t class_size = 0;
  std::array<std::size_t, 3> fixed{};  // by PointClass
};

std::vector<ClassFixRow> incidence_fixed_counts(const PolyhedralModel& m);

/// The same table from coset actions G/C on cyclic point stabilizers, found
/// purely from element orders: corners and faces of the tetrahedron <-> C3,
/// its edges <-> C2; cube corners <-> C3, edges <-> an involution that is not
/// a square, faces <-> C4; dodecahedron corners <-> C3, edges <-> C2,
/// faces <-> C5.
std::vector<ClassFixRow> coset_fixed_counts(const PolyhedralModel& m);

}  // namespace polytsg
