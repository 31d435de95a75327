#include "polytsg/assignment.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polytsg/error.hpp"

namespace polytsg {

// ---- VertexAssignment ------------------------------------------------------

VertexAssignment::VertexAssignment(GroupAction universe, std::vector<UniversePoint> points,
                                   std::vector<Block> blocks)
    : universe_(std::move(universe)), points_(std::move(points)), blocks_(std::move(blocks)) {
  const std::size_t deg = universe_.degree();
  if (points_.size() != deg) throw Error(Errc::invalid_argument, "point list does not match the action degree");

  point_part_.assign(deg, std::nullopt);
  std::vector<int> seen(deg, 0);
  for (const auto& b : blocks_) {
    for (Point p : b.points) {
      if (p >= deg || seen[p]++) throw Error(Errc::invalid_argument, "blocks do not partition the points");
      point_part_[p] = b.part;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(Errc::invalid_argument, "blocks do not partition the points");

  std::vector<Point> vs, ws;
  for (Point p = 0; p < deg; ++p) {
    if (!point_part_[p]) continue;
    (*point_part_[p] == Part::V ? vs : ws).push_back(p);
  }
  if (vs.empty() || vs.size() != ws.size())
    throw Error(Errc::invalid_argument, "parts are empty or unbalanced");
  n_ = vs.size();

  point_vertex_.assign(deg, std::nullopt);
  vertex_point_ = vs;
  vertex_point_.insert(vertex_point_.end(), ws.begin(), ws.end());
  for (std::size_t x = 0; x < vertex_point_.size(); ++x) point_vertex_[vertex_point_[x]] = static_cast<Point>(x);

  induced_.reserve(group().order());
  for (ElementId g = 0; g < group().order(); ++g) {
    const Perm& img = universe_.image(g);
    std::vector<Point> on_vertices(2 * n_);
    for (std::size_t x = 0; x < 2 * n_; ++x) {
      auto y = point_vertex_[img(vertex_point_[x])];
      if (!y) throw Error(Errc::invalid_argument, "vertex set is not invariant under the group");
      on_vertices[x] = *y;
    }
    induced_.push_back(validate_automorphism(Perm(std::move(on_vertices)), n_));
  }
}

std::optional<Point> VertexAssignment::vertex_of(Point p) const { return point_vertex_.at(p); }

std::string VertexAssignment::vertex_label(Point vertex) const {
  std::string s = vertex < n_ ? "v" + std::to_string(vertex + 1) : "w" + std::to_string(vertex - n_ + 1);
  return s + " (" + points_[vertex_point_.at(vertex)].label + ")";
}

std::vector<Point> VertexAssignment::fixed_vertices(ElementId g) const {
  return induced_.at(g).perm.fixed_points();
}

VertexAssignment VertexAssignment::restrict_to(GroupPtr subgroup) const {
  std::vector<Perm> images;
  images.reserve(subgroup->order());
  for (const auto& e : subgroup->elements()) images.push_back(universe_.image(group().index_of(e)));
  return VertexAssignment(GroupAction(std::move(subgroup), universe_.labels(), std::move(images)),
                          points_, blocks_);
}

// ---- AxisModel -------------------------------------------------------------

bool same_circular_order(std::span<const Point> a, std::span<const Point> b) {
  const std::size_t k = a.size();
  if (k != b.size()) return false;
  if (k == 0) return true;
  for (std::size_t shift = 0; shift < k; ++shift) {
    bool fwd = true, back = true;
    for (std::size_t i = 0; i < k && (fwd || back); ++i) {
      if (a[i] != b[(shift + i) % k]) fwd = false;
      if (a[i] != b[(shift + k - i) % k]) back = false;
    }
    if (fwd || back) return true;
  }
  return false;
}

AxisModel::AxisModel(const GroupAction& universe, const std::vector<std::vector<Point>>& per_element) {
  if (per_element.size() != universe.group().order())
    throw Error(Errc::invalid_argument, "one axis entry per group element expected");
  std::map<std::vector<Point>, std::size_t> by_set;
  axis_of_.assign(per_element.size(), std::nullopt);
  for (ElementId g = 0; g < per_element.size(); ++g) {
    const auto& seq = per_element[g];
    if (seq.empty()) continue;
    auto key = seq;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      throw Error(Errc::invalid_argument, "axis lists a point twice");
    auto [it, inserted] = by_set.try_emplace(key, axes_.size());
    if (inserted) {
      axes_.push_back(Axis{seq});
    } else if (!same_circular_order(axes_[it->second].sequence, seq)) {
      throw Error(Errc::invalid_argument, "two orderings of the same axis");
    }
    axis_of_[g] = it->second;
  }
}

// ---- model universes -------------------------------------------------------

namespace {

struct Slot {
  PointClass cls;
  std::size_t rank;
  std::optional<Part> part;
};

struct Recipe {
  ModelKind model;
  std::string name;
  std::string id;
  std::optional<Part> centers;
  std::vector<Slot> slots;
  bool swapped_corners = false;  // skeleton model, n = 12m + 4
  std::size_t m = 0;
  std::size_t extra_v = 0;
  std::size_t extra_w = 0;
  std::vector<StatedCount> stated;
};

PointKind kind_of(PointClass c) {
  switch (c) {
    case PointClass::corner: return PointKind::corner;
    case PointClass::edge: return PointKind::edge;
    case PointClass::face: return PointKind::face;
  }
  return PointKind::corner;
}

/// A group acting on a polyhedron's corners together with everything needed
/// to lay out model points: induced class actions, names of nested copies.
struct Model {
  ModelKind kind;
  const Polyhedron* poly;
  GroupPtr group;
  std::vector<GroupAction> classes;  // by PointClass
  std::vector<std::string> copy_names;
  std::size_t base_rank;
  std::string center_name;
  std::vector<bool> odd;  // exchanges the two centers
};

std::vector<bool> parity(const FiniteGroup& g) {
  std::vector<bool> odd;
  for (const auto& e : g.elements()) {
    std::size_t transpositions = 0;
    for (const auto& c : e.cycles()) transpositions += c.size() - 1;
    odd.push_back(transpositions % 2 == 1);
  }
  return odd;
}

Model make_model(ModelKind kind) {
  Model m{kind, nullptr, nullptr, {}, {}, 0, "", {}};
  PolyhedronKind pk = PolyhedronKind::tetrahedron;
  switch (kind) {
    case ModelKind::tetrahedron_rotations:
    case ModelKind::tetrahedron_skeleton:
      m.copy_names = {"tau"};
      m.center_name = "t";
      break;
    case ModelKind::cube_rotations:
      pk = PolyhedronKind::cube;
      m.copy_names = {"sigma1", "sigma", "sigma2"};
      m.base_rank = 1;
      m.center_name = "s";
      break;
    case ModelKind::dodecahedron_rotations:
      pk = PolyhedronKind::dodecahedron;
      m.copy_names = {"Delta1", "Delta2", "Delta3", "Delta4"};
      m.center_name = "d";
      break;
  }
  m.poly = &polyhedron(pk);
  if (kind == ModelKind::tetrahedron_skeleton) {
    m.group = share(FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}),
                                              Perm::from_cycles(4, {{0, 1}})}));
    m.odd = parity(*m.group);
  } else {
    m.group = build_polyhedral_model(pk).group;
    m.odd.assign(m.group->order(), false);
  }
  for (PointClass c : {PointClass::corner, PointClass::edge, PointClass::face})
    m.classes.push_back(induced_action(*m.poly, m.group, c));
  return m;
}

/// Lays out points block by block and builds every element's image.
class UniverseBuilder {
public:
  explicit UniverseBuilder(const Model& m) : m_(m), maps_(m.group->order()) {}

  void add_centers(std::optional<Part> part) {
    Point base = next();
    push({PointKind::center, 0, 0, m_.center_name}, {PointKind::center, 1, 0, m_.center_name + "'"});
    blocks_.push_back({"centers", part, {base, base + 1}});
    for (ElementId g = 0; g < maps_.size(); ++g) {
      maps_[g].push_back(m_.odd[g] ? base + 1 : base);
      maps_[g].push_back(m_.odd[g] ? base : base + 1);
    }
  }

  void add_class(PointClass c, std::size_t rank, std::optional<Part> part) {
    const auto& act = m_.classes[static_cast<std::size_t>(c)];
    const std::string prefix = m_.copy_names.at(rank) + ".";
    Point base = next();
    Block b{prefix + std::string(point_class_name(c)) + "s", part, {}};
    for (std::size_t i = 0; i < act.degree(); ++i) {
      points_.push_back({kind_of(c), rank, i, prefix + act.labels()[i]});
      b.points.push_back(base + static_cast<Point>(i));
    }
    blocks_.push_back(std::move(b));
    for (ElementId g = 0; g < maps_.size(); ++g)
      for (std::size_t i = 0; i < act.degree(); ++i) maps_[g].push_back(base + act.image(g)(static_cast<Point>(i)));
    class_base_[{c, rank}] = base;
  }

  // Two corner blocks, exchanged by the odd elements.
  void add_swapped_corners(Part inner_part) {
    const auto& act = m_.classes[0];
    const std::size_t k = act.degree();
    Point inner = next();
    Point outer = inner + static_cast<Point>(k);
    Block bi{"tau1.corners", inner_part, {}}, bo{"tau2.corners", inner_part == Part::V ? Part::W : Part::V, {}};
    for (std::size_t i = 0; i < k; ++i) {
      points_.push_back({PointKind::inner_corner, 0, i, "tau1.corner" + std::to_string(i)});
      bi.points.push_back(inner + static_cast<Point>(i));
    }
    for (std::size_t i = 0; i < k; ++i) {
      points_.push_back({PointKind::outer_corner, 0, i, "tau2.corner" + std::to_string(i)});
      bo.points.push_back(outer + static_cast<Point>(i));
    }
    blocks_.push_back(std::move(bi));
    blocks_.push_back(std::move(bo));
    for (ElementId g = 0; g < maps_.size(); ++g) {
      const Perm& p = act.image(g);
      for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < k; ++i) {
          bool to_outer = (side == 1) != m_.odd[g];
          maps_[g].push_back((to_outer ? outer : inner) + p(static_cast<Point>(i)));
        }
    }
    swapped_ = inner;
  }

  // A regular orbit, all in one part, or split even/odd when `part` is empty
  // (skeleton model: even elements in V).
  void add_free_orbit(std::optional<Part> part) {
    const FiniteGroup& g = *m_.group;
    const std::size_t id = free_count_++;
    const std::string name = "free" + std::to_string(id);
    Point base = next();
    for (std::size_t x = 0; x < g.order(); ++x)
      points_.push_back({PointKind::free, id, x, name + ".g" + std::to_string(x)});
    if (part) {
      Block b{name, part, {}};
      for (std::size_t x = 0; x < g.order(); ++x) b.points.push_back(base + static_cast<Point>(x));
      blocks_.push_back(std::move(b));
    } else {
      Block even{name + ".even", Part::V, {}}, odd{name + ".odd", Part::W, {}};
      for (std::size_t x = 0; x < g.order(); ++x) (m_.odd[x] ? odd : even).points.push_back(base + static_cast<Point>(x));
      blocks_.push_back(std::move(even));
      blocks_.push_back(std::move(odd));
    }
    for (ElementId e = 0; e < maps_.size(); ++e)
      for (std::size_t x = 0; x < g.order(); ++x) maps_[e].push_back(base + static_cast<Point>(g.multiply(e, x)));
  }

  std::optional<Point> class_point(PointClass c, std::size_t rank, std::size_t i) const {
    auto it = class_base_.find({c, rank});
    if (it == class_base_.end()) return std::nullopt;
    return it->second + static_cast<Point>(i);
  }
  std::optional<Point> swapped_corner(bool outer, std::size_t i) const {
    if (!swapped_) return std::nullopt;
    return *swapped_ + static_cast<Point>((outer ? m_.poly->corner_count : 0) + i);
  }
  Point center(int which) const { return static_cast<Point>(which); }

  VertexAssignment finish() {
    std::vector<std::string> labels;
    for (const auto& p : points_) labels.push_back(p.label);
    std::vector<Perm> images;
    images.reserve(maps_.size());
    for (auto& mp : maps_) images.emplace_back(std::move(mp));
    GroupAction action(m_.group, std::move(labels), std::move(images));
    return VertexAssignment(std::move(action), std::move(points_), std::move(blocks_));
  }

private:
  Point next() const { return static_cast<Point>(points_.size()); }
  void push(UniversePoint a, UniversePoint b) {
    points_.push_back(std::move(a));
    points_.push_back(std::move(b));
  }

  const Model& m_;
  std::vector<UniversePoint> points_;
  std::vector<Block> blocks_;
  std::vector<std::vector<Point>> maps_;
  std::map<std::pair<PointClass, std::size_t>, Point> class_base_;
  std::optional<Point> swapped_;
  std::size_t free_count_ = 0;
};

// ---- axes ------------------------------------------------------------------

// Rotation models: the axis of g runs from one center out through the nested
// copies of its first fixed surface point, through the other center, and back
// in through the copies of the antipodal point.
std::vector<std::vector<Point>> rotation_axes(const Model& m, const UniverseBuilder& u) {
  std::vector<std::vector<Point>> out(m.group->order());
  for (ElementId g = 1; g < m.group->order(); ++g) {
    std::vector<std::pair<PointClass, std::size_t>> fixed;
    for (PointClass c : {PointClass::corner, PointClass::edge, PointClass::face})
      for (Point i : fixed_points(g, m.classes[static_cast<std::size_t>(c)])) fixed.emplace_back(c, i);
    if (fixed.size() != 2) throw Error(Errc::invalid_argument, "rotation without two fixed surface points");
    auto copies = [&](std::pair<PointClass, std::size_t> p, bool ascending) {
      std::vector<Point> pts;
      for (std::size_t r = 0; r < m.copy_names.size(); ++r)
        if (auto q = u.class_point(p.first, r, p.second)) pts.push_back(*q);
      if (!ascending) std::reverse(pts.begin(), pts.end());
      return pts;
    };
    auto& seq = out[g];
    seq.push_back(u.center(0));
    for (Point q : copies(fixed[0], true)) seq.push_back(q);
    seq.push_back(u.center(1));
    for (Point q : copies(fixed[1], false)) seq.push_back(q);
  }
  return out;
}

std::size_t opposite_face(const Polyhedron& tetra, Point corner) {
  for (std::size_t f = 0; f < tetra.faces.size(); ++f)
    if (std::find(tetra.faces[f].begin(), tetra.faces[f].end(), corner) == tetra.faces[f].end()) return f;
  throw Error(Errc::invalid_argument, "no opposite face");
}

// Skeleton model. A 3-cycle fixing corner k: the line through both centers,
// corner k and the face opposite it. An even involution (ij)(kl): both
// centers and the midpoints of edges ij and kl. A transposition (ij): the
// circle through corners k, l, the faces opposite them and the midpoints of
// ij and kl. 4-cycles fix nothing.
std::vector<std::vector<Point>> skeleton_axes(const Model& m, const UniverseBuilder& u) {
  const Polyhedron& t = *m.poly;
  auto corner = [&](std::size_t i) { return *u.class_point(PointClass::corner, 0, i); };
  auto edge = [&](Point a, Point b) { return *u.class_point(PointClass::edge, 0, t.edge_index(std::min(a, b), std::max(a, b))); };
  auto face_opp = [&](Point k) { return *u.class_point(PointClass::face, 0, opposite_face(t, k)); };

  std::vector<std::vector<Point>> out(m.group->order());
  for (ElementId g = 1; g < m.group->order(); ++g) {
    const Perm& p = m.group->element(g);
    auto cycles = p.cycles();
    auto fixed = p.fixed_points();
    auto& seq = out[g];
    if (p.order() == 3) {
      Point k = fixed.at(0);
      seq.push_back(u.center(0));
      if (auto q = u.swapped_corner(false, k)) seq.push_back(*q);
      seq.push_back(corner(k));
      if (auto q = u.swapped_corner(true, k)) seq.push_back(*q);
      seq.push_back(u.center(1));
      seq.push_back(face_opp(k));
    } else if (p.order() == 2 && cycles.size() == 2) {
      seq = {u.center(0), edge(cycles[0][0], cycles[0][1]), u.center(1), edge(cycles[1][0], cycles[1][1])};
    } else if (p.order() == 2) {
      Point i = cycles[0][0], j = cycles[0][1], k = fixed.at(0), l = fixed.at(1);
      seq = {corner(k), edge(k, l), corner(l), face_opp(k), edge(i, j), face_opp(l)};
    }
  }
  return out;
}

// ---- recipes ---------------------------------------------------------------

constexpr auto C = PointClass::corner;
constexpr auto E = PointClass::edge;
constexpr auto F = PointClass::face;
constexpr std::optional<Part> V = Part::V;
constexpr std::optional<Part> W = Part::W;
constexpr std::optional<Part> none = std::nullopt;

Recipe cube_recipe(std::size_t n) {
  // sigma1 (rank 0) < sigma (rank 1, the base copy) < sigma2 (rank 2)
  Recipe r{ModelKind::cube_rotations, "", "", V, {}, false, 0, 0, 0, {}};
  std::size_t base = 0;
  switch (n % 24) {
    case 2:
      base = 26;
      r.slots = {{C, 1, W}, {E, 1, W}, {F, 1, W}};
      r.extra_v = 1;
      r.stated = {{3, false, 2, 2}, {4, false, 2, 2}, {2, false, 2, 2}, {2, true, 2, 2}};
      break;
    case 6:
      base = 30;
      r.slots = {{C, 1, none}, {E, 1, V}, {F, 1, W}, {C, 0, V}, {C, 2, V}};
      r.extra_w = 1;
      r.stated = {{3, false, 6, 0}, {4, false, 2, 2}, {2, false, 2, 2}, {2, true, 4, 0}};
      break;
    case 8:
      base = 8;
      r.slots = {{C, 1, W}, {E, 1, none}, {F, 1, V}};
      r.stated = {{3, false, 2, 2}, {4, false, 4, 0}, {2, false, 4, 0}, {2, true, 2, 0}};
      break;
    case 14:
      base = 14;
      r.slots = {{C, 1, W}, {E, 1, V}, {F, 1, W}};
      r.stated = {{3, false, 2, 2}, {4, false, 2, 2}, {2, false, 2, 2}, {2, true, 4, 0}};
      break;
    case 18:
      base = 18;
      r.slots = {{C, 1, none}, {E, 1, W}, {F, 1, W}, {C, 0, V}, {C, 2, V}};
      r.stated = {{3, false, 6, 0}, {4, false, 2, 2}, {2, false, 2, 2}, {2, true, 2, 2}};
      break;
    case 20:
      base = 20;
      r.slots = {{C, 1, W}, {E, 1, W}, {F, 1, V}, {F, 0, V}, {F, 2, V}};
      r.stated = {{3, false, 2, 2}, {4, false, 8, 0}, {2, false, 8, 0}, {2, true, 2, 2}};
      break;
    default:
      throw Error(Errc::not_realizable, "no cube placement for this residue");
  }
  if (n < base) throw Error(Errc::not_realizable, "n below the smallest cube placement for its residue");
  r.m = (n - base) / 24;
  r.name = "cube, n = 24m + " + std::to_string(base);
  r.id = "cube-24m+" + std::to_string(base);
  return r;
}

Recipe dodecahedron_recipe(std::size_t n) {
  // Delta1 (rank 0) is the base copy; Delta2..Delta4 are nested outside it.
  Recipe r{ModelKind::dodecahedron_rotations, "", "", V, {}, false, 0, 0, 0, {}};
  std::size_t base = 0;
  const std::vector<Slot> four_faces{{F, 0, V}, {F, 1, V}, {F, 2, V}, {F, 3, V}};
  switch (n % 60) {
    case 0:
      r.centers = none;
      r.slots = {{C, 0, none}, {E, 0, none}, {F, 0, none}};
      break;
    case 2:
      base = 62;
      r.slots = {{C, 0, W}, {E, 0, W}, {F, 0, W}};
      r.extra_v = 1;
      r.stated = {{5, false, 2, 2}, {3, false, 2, 2}, {2, false, 2, 2}};
      break;
    case 12:
      base = 72;
      r.slots = {{C, 0, V}, {E, 0, V}, {F, 0, W}, {C, 1, V}};
      r.extra_w = 1;
      r.stated = {{5, false, 2, 2}, {3, false, 4, 0}, {2, false, 4, 0}};
      break;
    case 20:
      base = 80;
      r.slots = {{C, 0, W}, {E, 0, V}};
      r.slots.insert(r.slots.end(), four_faces.begin(), four_faces.end());
      r.extra_w = 1;
      r.stated = {{5, false, 10, 0}, {3, false, 2, 2}, {2, false, 4, 0}};
      break;
    case 30:
      base = 90;
      r.slots = {{C, 0, V}, {E, 0, W}, {C, 1, V}};
      r.slots.insert(r.slots.end(), four_faces.begin(), four_faces.end());
      r.extra_w = 1;
      r.stated = {{5, false, 10, 0}, {3, false, 6, 0}, {2, false, 2, 2}};
      break;
    case 32:
      base = 32;
      r.slots = {{C, 0, W}, {E, 0, V}, {F, 0, W}};
      r.stated = {{5, false, 2, 2}, {3, false, 2, 2}, {2, false, 4, 0}};
      break;
    case 42:
      base = 42;
      r.slots = {{C, 0, V}, {E, 0, W}, {F, 0, W}, {C, 1, V}};
      r.stated = {{5, false, 2, 2}, {3, false, 6, 0}, {2, false, 2, 2}};
      break;
    case 50:
      base = 50;
      r.slots = {{C, 0, W}, {E, 0, W}};
      r.slots.insert(r.slots.end(), four_faces.begin(), four_faces.end());
      r.stated = {{5, false, 10, 0}, {3, false, 2, 2}, {2, false, 2, 2}};
      break;
    default:
      throw Error(Errc::not_realizable, "no dodecahedral placement for this residue");
  }
  if (n < base) throw Error(Errc::not_realizable, "n below the smallest dodecahedral placement for its residue");
  r.m = (n - base) / 60;
  const std::string plus = base ? " + " + std::to_string(base) : "";
  r.name = "dodecahedron, n = 60m" + plus;
  r.id = "dodecahedron-60m" + (base ? "+" + std::to_string(base) : "");
  return r;
}

Recipe skeleton_recipe(std::size_t n) {
  Recipe r{ModelKind::tetrahedron_skeleton, "", "", none, {{C, 0, none}, {E, 0, none}, {F, 0, none}}, false, 0, 0, 0, {}};
  if (n % 12 == 0 && n > 0) {
    r.m = n / 12;
    r.name = "tetrahedral skeleton, n = 12m";
    r.id = "skeleton-12m";
    r.stated = {{3, false, 0, 0}, {2, false, 0, 0}, {2, true, 0, 0}, {4, true, 0, 0}};
  } else if (n % 12 == 4) {
    r.m = (n - 4) / 12;
    r.swapped_corners = true;
    r.name = "tetrahedral skeleton, n = 12m + 4";
    r.id = "skeleton-12m+4";
    r.stated = {{3, false, 1, 1}, {2, false, 0, 0}, {2, true, 0, 0}, {4, true, 0, 0}};
  } else {
    throw Error(Errc::not_realizable, "no skeleton placement for this residue");
  }
  return r;
}

Recipe tetrahedron_recipe() {
  return {ModelKind::tetrahedron_rotations, "tetrahedron, n = 6", "tetrahedron-6", V,
          {{C, 0, V}, {E, 0, W}, {F, 0, none}}, false, 0, 0, 0,
          {{3, false, 3, 0}, {2, false, 2, 2}}};
}

Construction realize(GroupKind group, std::size_t n, const Recipe& r) {
  Model model = make_model(r.model);
  UniverseBuilder u(model);
  u.add_centers(r.centers);
  for (const auto& s : r.slots) u.add_class(s.cls, s.rank, s.part);
  if (r.swapped_corners) u.add_swapped_corners(Part::V);
  if (r.model == ModelKind::tetrahedron_skeleton) {
    for (std::size_t i = 0; i < r.m; ++i) u.add_free_orbit(std::nullopt);
  } else {
    for (std::size_t i = 0; i < r.m + r.extra_v; ++i) u.add_free_orbit(Part::V);
    for (std::size_t i = 0; i < r.m + r.extra_w; ++i) u.add_free_orbit(Part::W);
  }
  auto sequences = r.model == ModelKind::tetrahedron_skeleton ? skeleton_axes(model, u) : rotation_axes(model, u);
  VertexAssignment a = u.finish();
  if (a.n() != n) throw Error(Errc::invalid_argument, "placement has the wrong part size");
  AxisModel axes(a.universe(), sequences);
  return Construction{group, n, r.model, r.name, r.id, r.m, std::move(a), std::move(axes), r.stated, nullptr};
}

Construction restrict_to_squares(const Construction& parent, GroupKind group) {
  auto owner = std::make_shared<const Construction>(parent);
  GroupPtr sub = share(squares_subgroup(owner->assignment.group()));
  VertexAssignment a = owner->assignment.restrict_to(sub);
  std::vector<std::vector<Point>> seq(sub->order());
  for (ElementId g = 0; g < sub->order(); ++g) {
    auto axis = owner->axes.axis_of(owner->assignment.group().index_of(sub->element(g)));
    if (axis) seq[g] = owner->axes.axes()[*axis].sequence;
  }
  AxisModel axes(a.universe(), seq);
  std::vector<StatedCount> stated;
  for (const auto& s : owner->stated)
    if (!s.outside_subgroup) stated.push_back(s);
  return Construction{group, owner->n, owner->model, owner->recipe + ", rotation subgroup",
                      owner->id + "/A4",
                      owner->free_orbits, std::move(a), std::move(axes), std::move(stated), owner};
}

Construction build_s4(std::size_t n) {
  if (n % 12 == 0 || n % 12 == 4) return build_tetrahedral_s4(n);
  return realize(GroupKind::S4, n, cube_recipe(n));
}

}  // namespace

Construction build_tetrahedral_s4(std::size_t n) {
  return realize(GroupKind::S4, n, skeleton_recipe(n));
}

Construction build_assignment(GroupKind group, std::size_t n) {
  auto verdict = necessity_verdict(n, group);
  if (!verdict.allowed) {
    std::ostringstream os;
    os << "no " << group_name(group) << " placement for n = " << n;
    throw Error(Errc::not_realizable, os.str());
  }
  switch (group) {
    case GroupKind::A4:
      if (n == 6) return realize(group, n, tetrahedron_recipe());
      return restrict_to_squares(build_s4(n), GroupKind::A4);
    case GroupKind::S4:
      return build_s4(n);
    case GroupKind::A5:
      return realize(group, n, dodecahedron_recipe(n));
  }
  throw Error(Errc::invalid_argument, "unknown group");
}

// ---- fixed counts ----------------------------------------------------------

FixedCountTable verify_fixed_counts(const Construction& c) {
  const VertexAssignment& a = c.assignment;
  const FiniteGroup& g = a.group();
  const std::size_t n = a.n();
  std::optional<FiniteGroup> squares;
  if (g.order() == 24) squares = squares_subgroup(g);

  auto counts = [&](ElementId e) {
    std::pair<std::size_t, std::size_t> fw{0, 0};
    for (Point x : a.fixed_vertices(e)) (x < n ? fw.first : fw.second)++;
    return fw;
  };

  FixedCountTable t;
  for (const auto& cls : conjugacy_classes(g)) {
    FixedCountRow row;
    row.order = cls.element_order;
    row.class_size = cls.size();
    row.representative = cls.representative();
    row.outside_subgroup = squares && !squares->contains(g.element(row.representative));
    row.swaps = a.induced(row.representative).behavior == PartBehavior::swaps;
    std::tie(row.fix_v, row.fix_w) = counts(row.representative);
    for (ElementId e : cls.members)
      if (counts(e) != std::pair{row.fix_v, row.fix_w}) t.fixed_vertex_property = false;
    for (const auto& s : c.stated) {
      if (s.order != row.order || s.outside_subgroup != row.outside_subgroup) continue;
      row.stated = s;
      if (s.v != row.fix_v || s.w != row.fix_w) {
        std::ostringstream os;
        os << "order " << row.order << (row.outside_subgroup ? " (outside A4)" : "") << ": stated ("
           << s.v << ", " << s.w << "), computed (" << row.fix_v << ", " << row.fix_w << ")";
        t.discrepancies.push_back(os.str());
      }
    }
    t.rows.push_back(row);
  }

  // Same-order classes must agree before a profile row can describe them.
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> by_order;
  for (const auto& row : t.rows) {
    if (row.order == 1 || row.outside_subgroup || row.swaps) continue;
    auto [it, inserted] = by_order.try_emplace(row.order, row.fix_v, row.fix_w);
    if (!inserted && it->second != std::pair{row.fix_v, row.fix_w}) t.fixed_vertex_property = false;
  }

  const GroupKind table = c.group == GroupKind::A5 ? GroupKind::A5 : GroupKind::A4;
  const auto rows = enumerate_profiles(table);
  for (std::size_t i = 0; i < rows.size() && !t.profile_row; ++i) {
    if (rows[i].residue != n % group_order(table)) continue;
    bool ok = true;
    for (const auto& [order, fw] : by_order) {
      const ProfileEntry* e = rows[i].profile.find(order);
      if (!e || !e->v.admits(fw.first) || !e->w.admits(fw.second)) ok = false;
    }
    if (ok) t.profile_row = i;
  }
  return t;
}

}  // namespace polytsg
