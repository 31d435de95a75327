#include "polytsg/polyhedra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "polytsg/error.hpp"

namespace polytsg {

std::string_view polyhedron_name(PolyhedronKind k) {
  switch (k) {
    case PolyhedronKind::tetrahedron: return "tetrahedron";
    case PolyhedronKind::cube: return "cube";
    case PolyhedronKind::dodecahedron: return "dodecahedron";
  }
  return "?";
}

std::string_view point_class_name(PointClass c) {
  switch (c) {
    case PointClass::corner: return "corner";
    case PointClass::edge: return "edge";
    case PointClass::face: return "face";
  }
  return "?";
}

std::size_t Polyhedron::class_size(PointClass c) const {
  switch (c) {
    case PointClass::corner: return corner_count;
    case PointClass::edge: return edges.size();
    case PointClass::face: return faces.size();
  }
  return 0;
}

std::size_t Polyhedron::edge_index(Point a, Point b) const {
  const std::array<Point, 2> key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key)
    throw Error(Errc::no_such_edge, "corners " + std::to_string(a) + " and " +
                                        std::to_string(b) + " do not span an edge");
  return static_cast<std::size_t>(it - edges.begin());
}

namespace {

bool face_has(const std::vector<Point>& face, Point c) {
  return std::find(face.begin(), face.end(), c) != face.end();
}

}  // namespace

bool Polyhedron::incident(PointClass a, std::size_t i, PointClass b, std::size_t j) const {
  if (a > b) return incident(b, j, a, i);
  if (a == b) return false;
  if (a == PointClass::corner && b == PointClass::edge)
    return edges[j][0] == i || edges[j][1] == i;
  if (a == PointClass::corner && b == PointClass::face)
    return face_has(faces[j], static_cast<Point>(i));
  // edge / face
  return face_has(faces[j], edges[i][0]) && face_has(faces[j], edges[i][1]);
}

namespace {

Polyhedron make(PolyhedronKind kind, std::size_t corners, std::vector<std::vector<Point>> faces) {
  Polyhedron p;
  p.kind = kind;
  p.corner_count = corners;
  p.faces = std::move(faces);
  for (const auto& f : p.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Point a = f[i], b = f[(i + 1) % f.size()];
      p.edges.push_back({std::min(a, b), std::max(a, b)});
    }
  std::sort(p.edges.begin(), p.edges.end());
  p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
  return p;
}

// Face lists from the convex hulls of
//   tetrahedron: (1,1,1) (1,-1,-1) (-1,1,-1) (-1,-1,1)
//   cube: corner i = (-1)^(1+bit2, 1+bit1, 1+bit0) of i
//   dodecahedron: the 8 cube corners (+-1,+-1,+-1), then for each sign pair
//     (a,b): (0, a/phi, b phi), (a/phi, b phi, 0), (a phi, 0, b/phi)
// each face listed counterclockwise seen from outside.
const Polyhedron kTetrahedron = make(PolyhedronKind::tetrahedron, 4,
                                     {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});

const Polyhedron kCube = make(PolyhedronKind::cube, 8,
                              {{0, 1, 3, 2},
                               {0, 2, 6, 4},
                               {0, 4, 5, 1},
                               {1, 5, 7, 3},
                               {2, 3, 7, 6},
                               {4, 6, 7, 5}});

const Polyhedron kDodecahedron = make(PolyhedronKind::dodecahedron, 20,
                                      {{0, 8, 14, 2, 10},
                                       {0, 9, 15, 4, 8},
                                       {0, 10, 13, 1, 9},
                                       {1, 11, 5, 15, 9},
                                       {1, 13, 3, 17, 11},
                                       {2, 12, 3, 13, 10},
                                       {2, 14, 6, 18, 12},
                                       {3, 12, 18, 7, 17},
                                       {4, 15, 5, 19, 16},
                                       {4, 16, 6, 14, 8},
                                       {5, 11, 17, 7, 19},
                                       {6, 16, 19, 7, 18}});

// Directed edge (face, position): runs from faces[f][i] to faces[f][i+1].
struct Dart {
  std::size_t face;
  std::size_t pos;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

class DartMap {
public:
  explicit DartMap(const Polyhedron& p) : p_(p) {
    for (std::size_t f = 0; f < p.faces.size(); ++f)
      for (std::size_t i = 0; i < p.faces[f].size(); ++i) by_ends_[{tail({f, i}), head({f, i})}] = {f, i};
  }
  Point tail(Dart d) const { return p_.faces[d.face][d.pos]; }
  Point head(Dart d) const { return p_.faces[d.face][(d.pos + 1) % p_.faces[d.face].size()]; }
  Dart next(Dart d) const { return {d.face, (d.pos + 1) % p_.faces[d.face].size()}; }
  Dart prev(Dart d) const {
    const std::size_t len = p_.faces[d.face].size();
    return {d.face, (d.pos + len - 1) % len};
  }
  Dart opposite(Dart d) const { return by_ends_.at({head(d), tail(d)}); }

  // The orientation-preserving map automorphism sending `from` to `to`,
  // as a permutation of the corners.
  Perm rotation(Dart from, Dart to) const {
    std::map<Dart, Dart> image{{from, to}};
    std::deque<Dart> queue{from};
    while (!queue.empty()) {
      Dart d = queue.front();
      queue.pop_front();
      const Dart e = image.at(d);
      for (auto [a, b] : {std::pair{next(d), next(e)}, std::pair{opposite(d), opposite(e)}}) {
        auto [it, inserted] = image.emplace(a, b);
        if (inserted) queue.push_back(a);
        else if (it->second != b)
          throw Error(Errc::invalid_argument, "dart map is not a map automorphism");
      }
    }
    std::vector<Point> corners(p_.corner_count);
    for (const auto& [d, e] : image) corners[tail(d)] = tail(e);
    return Perm(std::move(corners));
  }

private:
  const Polyhedron& p_;
  std::map<std::pair<Point, Point>, Dart> by_ends_;
};

}  // namespace

const Polyhedron& polyhedron(PolyhedronKind k) {
  switch (k) {
    case PolyhedronKind::tetrahedron: return kTetrahedron;
    case PolyhedronKind::cube: return kCube;
    case PolyhedronKind::dodecahedron: return kDodecahedron;
  }
  throw Error(Errc::invalid_argument, "unknown polyhedron");
}

const GroupAction& PolyhedralModel::action(PointClass c) const {
  switch (c) {
    case PointClass::corner: return corners;
    case PointClass::edge: return edges;
    case PointClass::face: return faces;
  }
  return corners;
}

GroupAction induced_action(const Polyhedron& poly, GroupPtr group, PointClass c) {
  const auto& elems = group->elements();
  std::vector<std::string> labels;
  std::vector<Perm> images;
  images.reserve(elems.size());

  switch (c) {
    case PointClass::corner: {
      for (std::size_t i = 0; i < poly.corner_count; ++i) labels.push_back("corner" + std::to_string(i));
      images = elems;
      break;
    }
    case PointClass::edge: {
      for (std::size_t i = 0; i < poly.edges.size(); ++i) labels.push_back("edge" + std::to_string(i));
      for (const auto& g : elems) {
        std::vector<Point> img(poly.edges.size());
        for (std::size_t i = 0; i < poly.edges.size(); ++i)
          img[i] = static_cast<Point>(poly.edge_index(g(poly.edges[i][0]), g(poly.edges[i][1])));
        images.emplace_back(std::move(img));
      }
      break;
    }
    case PointClass::face: {
      std::map<std::vector<Point>, Point> by_corners;
      for (std::size_t f = 0; f < poly.faces.size(); ++f) {
        auto key = poly.faces[f];
        std::sort(key.begin(), key.end());
        by_corners[key] = static_cast<Point>(f);
        labels.push_back("face" + std::to_string(f));
      }
      for (const auto& g : elems) {
        std::vector<Point> img(poly.faces.size());
        for (std::size_t f = 0; f < poly.faces.size(); ++f) {
          std::vector<Point> key;
          for (Point x : poly.faces[f]) key.push_back(g(x));
          std::sort(key.begin(), key.end());
          auto it = by_corners.find(key);
          if (it == by_corners.end())
            throw Error(Errc::invalid_argument, "corner permutation does not preserve faces");
          img[f] = it->second;
        }
        images.emplace_back(std::move(img));
      }
      break;
    }
  }
  return GroupAction(std::move(group), std::move(labels), std::move(images));
}

PolyhedralModel build_polyhedral_model(PolyhedronKind k) {
  const Polyhedron& p = polyhedron(k);
  const DartMap darts(p);
  const Dart d0{0, 0};
  // Turning face 0 one step about its center, and turning about the tail of
  // d0 (the next dart out of that corner, counterclockwise from outside).
  Perm face_rot = darts.rotation(d0, darts.next(d0));
  Perm vertex_rot = darts.rotation(d0, darts.opposite(darts.prev(d0)));

  auto group = share(FiniteGroup::generate(p.corner_count, {face_rot, vertex_rot}));
  return PolyhedralModel{&p,
                         group,
                         std::move(face_rot),
                         std::move(vertex_rot),
                         induced_action(p, group, PointClass::corner),
                         induced_action(p, group, PointClass::edge),
                         induced_action(p, group, PointClass::face)};
}

std::vector<ClassFixRow> incidence_fixed_counts(const PolyhedralModel& m) {
  std::vector<ClassFixRow> rows;
  for (const auto& cls : conjugacy_classes(*m.group)) {
    ClassFixRow row{cls.element_order, cls.size(), {}};
    for (PointClass c : {PointClass::corner, PointClass::edge, PointClass::face})
      row.fixed[static_cast<std::size_t>(c)] = fixed_points(cls.representative(), m.action(c)).size();
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::optional<ElementId> first_of_order(const FiniteGroup& g, std::uint64_t order,
                                        bool require_non_square = false) {
  std::vector<bool> is_square(g.order(), false);
  for (ElementId x = 0; x < g.order(); ++x) is_square[g.multiply(x, x)] = true;
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order && !(require_non_square && is_square[x])) return x;
  return std::nullopt;
}

FiniteGroup cyclic(const FiniteGroup& g, std::uint64_t order, bool require_non_square = false) {
  auto x = first_of_order(g, order, require_non_square);
  if (!x) throw Error(Errc::invalid_argument, "no element of order " + std::to_string(order));
  const ElementId gen[] = {*x};
  return g.subgroup(gen);
}

}  // namespace

std::vector<ClassFixRow> coset_fixed_counts(const PolyhedralModel& m) {
  const FiniteGroup& g = *m.group;
  std::array<FiniteGroup, 3> stabs{g, g, g};
  switch (m.poly->kind) {
    case PolyhedronKind::tetrahedron:
      stabs = {cyclic(g, 3), cyclic(g, 2), cyclic(g, 3)};
      break;
    case PolyhedronKind::cube:
      stabs = {cyclic(g, 3), cyclic(g, 2, true), cyclic(g, 4)};
      break;
    case PolyhedronKind::dodecahedron:
      stabs = {cyclic(g, 3), cyclic(g, 2), cyclic(g, 5)};
      break;
  }
  std::vector<GroupAction> actions;
  for (const auto& h : stabs) actions.push_back(coset_action(m.group, h));

  std::vector<ClassFixRow> rows;
  for (const auto& cls : conjugacy_classes(g)) {
    ClassFixRow row{cls.element_order, cls.size(), {}};
    for (std::size_t c = 0; c < 3; ++c) row.fixed[c] = fixed_points(cls.representative(), actions[c]).size();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace polytsg
