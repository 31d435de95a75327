#include "polytsg/hypotheses.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polytsg/error.hpp"
#include "polytsg/realizability.hpp"

namespace polytsg {

namespace {

std::string element_name(const FiniteGroup& g, ElementId e) {
  return "g" + std::to_string(e) + " " + to_string(g.element(e));
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void fail(ConditionOutcome& c, std::string witness) {
  if (!c.passed) return;  // keep the first witness
  c.passed = false;
  c.witness = std::move(witness);
}

// Elements that swap some V vertex with some W vertex.
bool interchanges_adjacent_pair(const BipartiteAut& a) {
  if (a.behavior != PartBehavior::swaps) return false;
  for (Point x = 0; x < a.n; ++x)
    if (a.perm(a.perm(x)) == x) return true;
  return false;
}

using ArcKey = std::pair<std::array<Point, 2>, std::vector<Point>>;

void check_axes(const VertexAssignment& a, const AxisModel& ax, ConditionOutcome& out) {
  const FiniteGroup& g = a.group();
  const GroupAction& u = a.universe();
  out.vacuous = ax.axes().empty();

  std::map<std::vector<Point>, std::size_t> by_set;
  for (std::size_t i = 0; i < ax.axes().size(); ++i) by_set[sorted(ax.axes()[i].sequence)] = i;

  for (ElementId e = 1; e < g.order(); ++e) {
    auto fixed = fixed_points(e, u);
    auto axis = ax.axis_of(e);
    std::vector<Point> on_axis = axis ? sorted(ax.axes()[*axis].sequence) : std::vector<Point>{};
    if (fixed != on_axis) {
      fail(out, element_name(g, e) + " fixes " + std::to_string(fixed.size()) +
                    " model points but its axis lists " + std::to_string(on_axis.size()));
      return;
    }
  }
  for (ElementId e = 0; e < g.order(); ++e) {
    for (std::size_t i = 0; i < ax.axes().size(); ++i) {
      std::vector<Point> img;
      for (Point p : ax.axes()[i].sequence) img.push_back(u.image(e)(p));
      auto it = by_set.find(sorted(img));
      if (it == by_set.end() || !same_circular_order(ax.axes()[it->second].sequence, img)) {
        fail(out, element_name(g, e) + " does not map axis " + std::to_string(i) + " onto an axis");
        return;
      }
    }
  }
  for (std::size_t i = 0; i < ax.axes().size(); ++i)
    for (std::size_t j = i + 1; j < ax.axes().size(); ++j) {
      auto a1 = sorted(ax.axes()[i].sequence), a2 = sorted(ax.axes()[j].sequence);
      std::vector<Point> common;
      std::set_intersection(a1.begin(), a1.end(), a2.begin(), a2.end(), std::back_inserter(common));
      if (common.size() != 0 && common.size() != 2) {
        fail(out, "axes " + std::to_string(i) + " and " + std::to_string(j) + " meet in " +
                      std::to_string(common.size()) + " points");
        return;
      }
    }
}

void check_condition1(const VertexAssignment& a, const AxisModel& ax, ConditionOutcome& out) {
  const FiniteGroup& g = a.group();
  const std::size_t n = a.n();
  std::vector<std::vector<Point>> fixed(g.order());
  std::vector<ElementId> both;  // nontrivial elements fixing vertices of both parts
  for (ElementId e = 1; e < g.order(); ++e) {
    fixed[e] = a.fixed_vertices(e);
    const auto& f = fixed[e];
    if (!f.empty() && f.front() < n && f.back() >= n) both.push_back(e);
  }
  for (std::size_t i = 0; i < both.size(); ++i)
    for (std::size_t j = i + 1; j < both.size(); ++j) {
      const auto& f1 = fixed[both[i]];
      const auto& f2 = fixed[both[j]];
      std::vector<Point> common;
      std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(common));
      if (common.empty() || common.front() >= n || common.back() < n) continue;
      out.vacuous = false;
      auto x1 = ax.axis_of(both[i]), x2 = ax.axis_of(both[j]);
      if (f1 != f2 || !x1 || x1 != x2) {
        fail(out, element_name(g, both[i]) + " and " + element_name(g, both[j]) + " both fix " +
                      a.vertex_label(common.front()) + " and " + a.vertex_label(common.back()) +
                      " but not the same fixed set");
        return;
      }
    }
}

// Condition 2 and the arcs it yields.
std::vector<ArcRecord> check_condition2(const VertexAssignment& a, const AxisModel& ax, ConditionOutcome& out) {
  std::vector<ArcRecord> arcs;
  for (std::size_t i = 0; i < ax.axes().size(); ++i) {
    const auto& seq = ax.axes()[i].sequence;
    std::vector<std::size_t> pos;  // positions of vertices along the circle
    bool has_v = false, has_w = false;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      auto part = a.part_of_point(seq[k]);
      if (!part) continue;
      pos.push_back(k);
      (*part == Part::V ? has_v : has_w) = true;
    }
    if (!has_v || !has_w) continue;
    out.vacuous = false;

    const std::size_t k = pos.size();
    std::vector<ArcRecord> here;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t p = pos[j], q = pos[(j + 1) % k];
      if (a.part_of_point(seq[p]) == a.part_of_point(seq[q])) {
        std::string labels;
        for (Point x : seq) labels += (labels.empty() ? "" : " ") + a.points()[x].label;
        fail(out, "axis " + std::to_string(i) + " does not alternate: [" + labels + "]");
        return arcs;
      }
      ArcRecord arc{i, {*a.vertex_of(seq[p]), *a.vertex_of(seq[q])}, {}};
      for (std::size_t t = (p + 1) % seq.size(); t != q; t = (t + 1) % seq.size()) arc.interior.push_back(seq[t]);
      std::sort(arc.ends.begin(), arc.ends.end());
      std::sort(arc.interior.begin(), arc.interior.end());
      here.push_back(std::move(arc));
    }
    if (k == 2) {
      // One adjacent pair: a single arc suffices; take the shorter side.
      std::size_t keep = here[1].interior.size() < here[0].interior.size() ? 1 : 0;
      here = {here[keep]};
    }
    arcs.insert(arcs.end(), here.begin(), here.end());
  }

  std::map<Point, std::size_t> owner;  // interior point -> axis
  for (const auto& arc : arcs)
    for (Point p : arc.interior) {
      auto [it, inserted] = owner.try_emplace(p, arc.axis);
      if (!inserted && it->second != arc.axis) {
        fail(out, "arcs on axes " + std::to_string(it->second) + " and " + std::to_string(arc.axis) +
                      " both pass through " + a.points()[p].label);
        return arcs;
      }
    }
  return arcs;
}

void check_condition3(const VertexAssignment& a, const std::vector<ArcRecord>& arcs, ConditionOutcome& out) {
  out.vacuous = arcs.empty();
  std::set<ArcKey> keys;
  for (const auto& arc : arcs) keys.insert({arc.ends, arc.interior});
  const FiniteGroup& g = a.group();
  for (ElementId e = 1; e < g.order(); ++e) {
    const Perm& on_vertices = a.induced(e).perm;
    const Perm& on_points = a.universe().image(e);
    for (const auto& arc : arcs) {
      ArcKey img{{on_vertices(arc.ends[0]), on_vertices(arc.ends[1])}, {}};
      std::sort(img.first.begin(), img.first.end());
      for (Point p : arc.interior) img.second.push_back(on_points(p));
      std::sort(img.second.begin(), img.second.end());
      if (!keys.count(img)) {
        fail(out, element_name(g, e) + " sends the arc " + a.vertex_label(arc.ends[0]) + " - " +
                      a.vertex_label(arc.ends[1]) + " off the chosen arcs");
        return;
      }
    }
  }
}

void check_conditions45(const VertexAssignment& a, const AxisModel& ax, ConditionOutcome& c4,
                        ConditionOutcome& c5) {
  const FiniteGroup& g = a.group();
  for (ElementId e = 1; e < g.order(); ++e) {
    const BipartiteAut& aut = a.induced(e);
    if (!interchanges_adjacent_pair(aut)) continue;
    c5.vacuous = false;
    std::array<BipartiteAut, 1> one{aut};
    auto shape = fixed_shape(one);
    if (shape.a + shape.b > 0) c4.vacuous = false;
    if (!embeds_in_proper_subset_of_circle(shape))
      fail(c4, element_name(g, e) + " fixes a (" + std::to_string(shape.a) + "," + std::to_string(shape.b) +
                   ") subgraph");
    auto axis = ax.axis_of(e);
    if (!axis) {
      fail(c5, element_name(g, e) + " interchanges adjacent vertices but has no axis");
      continue;
    }
    for (ElementId h = 1; h < g.order(); ++h)
      if (h != e && ax.axis_of(h) == axis) {
        fail(c5, element_name(g, e) + " shares its axis with " + element_name(g, h));
        break;
      }
  }
}

}  // namespace

bool EdgeEmbeddingReport::passed() const { return first_failure() == nullptr; }

const ConditionOutcome* EdgeEmbeddingReport::first_failure() const {
  if (!axes.passed) return &axes;
  for (const auto& c : conditions)
    if (!c.passed) return &c;
  return nullptr;
}

EdgeEmbeddingReport check_edge_embedding_hypotheses(const VertexAssignment& a, const AxisModel& axes) {
  EdgeEmbeddingReport r;
  for (int i = 0; i < 5; ++i) r.conditions[i].id = i + 1;
  check_axes(a, axes, r.axes);
  check_condition1(a, axes, r.conditions[0]);
  r.arcs = check_condition2(a, axes, r.conditions[1]);
  check_condition3(a, r.arcs, r.conditions[2]);
  check_conditions45(a, axes, r.conditions[3], r.conditions[4]);
  return r;
}

void require_edge_embedding(const EdgeEmbeddingReport& r) {
  if (const auto* c = r.first_failure()) {
    std::string what = c->id == 0 ? "axis model" : "condition " + std::to_string(c->id);
    throw Error(Errc::hypothesis_violation, what + ": " + c->witness);
  }
}

// ---- forced fixation -------------------------------------------------------

namespace {

// For a vertex x: the vertices y of the other part such that {x, y} is the
// only edge of its orbit at x.
std::vector<Point> forced_partners(const VertexAssignment& a, Point x) {
  const FiniteGroup& g = a.group();
  const std::size_t n = a.n();
  std::vector<ElementId> stab;
  std::vector<char> bad(2 * n, 0);
  for (ElementId e = 0; e < g.order(); ++e) {
    const Perm& p = a.induced(e).perm;
    if (p(x) == x) {
      stab.push_back(e);
    }
    // g(y) = x with g(x) != y puts a second orbit edge at x.
    Point y = a.induced(g.inverse(e)).perm(x);
    if (y != x && p(x) != y) bad[y] = 1;
  }
  std::vector<Point> out;
  const Point lo = x < n ? static_cast<Point>(n) : 0;
  for (Point y = lo; y < lo + n; ++y) {
    if (bad[y]) continue;
    bool fixed = std::all_of(stab.begin(), stab.end(), [&](ElementId e) { return a.induced(e).perm(y) == y; });
    if (fixed) out.push_back(y);
  }
  return out;
}

}  // namespace

ForcedFixation forced_fix_closure(const VertexAssignment& a, Point v, Point w) {
  const std::size_t n = a.n();
  if (v >= 2 * n || w >= 2 * n || !adjacent(v, w, n))
    throw Error(Errc::invalid_argument, "forced fixation needs an edge");
  std::vector<char> in(2 * n, 0);
  std::vector<Point> queue{v, w};
  in[v] = in[w] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Point y : forced_partners(a, queue[i]))
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
  ForcedFixation f{{std::min(v, w), std::max(v, w)}, sorted(queue), {}};
  f.shape = shape_of(f.vertices, n);
  return f;
}

namespace {

// One representative (v, w) per edge orbit, v in V, in lexicographic order.
std::vector<std::array<Point, 2>> edge_orbit_representatives(const VertexAssignment& a) {
  const std::size_t n = a.n();
  const FiniteGroup& g = a.group();
  std::vector<char> seen(n * n, 0);
  std::vector<std::array<Point, 2>> reps;
  for (Point v = 0; v < n; ++v)
    for (Point w = static_cast<Point>(n); w < 2 * n; ++w) {
      if (seen[v * n + (w - n)]) continue;
      reps.push_back({v, w});
      for (ElementId e = 0; e < g.order(); ++e) {
        const Perm& p = a.induced(e).perm;
        Point x = p(v), y = p(w);
        if (x > y) std::swap(x, y);
        seen[x * n + (y - n)] = 1;
      }
    }
  return reps;
}

}  // namespace

SubgroupWitness check_subgroup_theorem(const VertexAssignment& a) {
  const FiniteGroup& g = a.group();
  const std::size_t n = a.n();
  std::optional<SubgroupWitness> fallback;
  for (const auto& e : edge_orbit_representatives(a)) {
    ForcedFixation f = forced_fix_closure(a, e[0], e[1]);
    if (!embeds_in_circle(f.shape)) return {1, std::move(f), std::nullopt};
    if (fallback) continue;
    for (ElementId psi = 1; psi < g.order(); ++psi) {
      auto fix = a.fixed_vertices(psi);
      std::vector<Point> common;
      std::set_intersection(f.vertices.begin(), f.vertices.end(), fix.begin(), fix.end(),
                            std::back_inserter(common));
      bool adjacent_pair = !common.empty() && common.front() < n && common.back() >= n;
      if (adjacent_pair && common.size() < f.vertices.size()) {
        fallback = SubgroupWitness{2, f, psi};
        break;
      }
    }
  }
  if (fallback) return *fallback;
  throw Error(Errc::no_witness_found, "no edge discharges either subgroup condition");
}

std::array<Point, 2> subgroup_corollary_witness(const VertexAssignment& a, const Polyhedron* poly) {
  const FiniteGroup& g = a.group();
  const std::size_t n = a.n();
  auto special_class = [](const UniversePoint& p) -> std::optional<PointClass> {
    switch (p.kind) {
      case PointKind::corner:
      case PointKind::inner_corner:
      case PointKind::outer_corner: return PointClass::corner;
      case PointKind::edge: return PointClass::edge;
      case PointKind::face: return PointClass::face;
      default: return std::nullopt;
    }
  };
  // 0: incident special points, 1: special points, 2: anything
  auto rank = [&](Point v, Point w) {
    const auto& p = a.points()[a.point_of(v)];
    const auto& q = a.points()[a.point_of(w)];
    auto cp = special_class(p), cq = special_class(q);
    bool special = p.kind != PointKind::free && q.kind != PointKind::free;
    if (poly && cp && cq && *cp != *cq && poly->incident(*cp, p.index, *cq, q.index)) return 0;
    return special ? 1 : 2;
  };
  std::optional<std::array<Point, 2>> best;
  int best_rank = 3;
  for (Point v = 0; v < n && best_rank > 0; ++v)
    for (Point w = static_cast<Point>(n); w < 2 * n && best_rank > 0; ++w) {
      int r = rank(v, w);
      if (r >= best_rank) continue;
      bool trivial = true;
      for (ElementId e = 1; e < g.order() && trivial; ++e) {
        const Perm& p = a.induced(e).perm;
        if (p(v) == v && p(w) == w) trivial = false;
      }
      if (trivial) {
        best = {v, w};
        best_rank = r;
      }
    }
  if (!best) throw Error(Errc::no_such_edge, "every edge is fixed by a nontrivial element");
  return *best;
}

// ---- whole construction ----------------------------------------------------

bool ConstructionReport::passed() const {
  bool parent_ok = !parent_edge_embedding || parent_edge_embedding->passed();
  return fixed_counts.passed() && edge_embedding.passed() && subgroup.has_value() && parent_ok &&
         automorphisms_realizable;
}

namespace {

const Polyhedron& model_polyhedron(ModelKind k) {
  switch (k) {
    case ModelKind::cube_rotations: return polyhedron(PolyhedronKind::cube);
    case ModelKind::dodecahedron_rotations: return polyhedron(PolyhedronKind::dodecahedron);
    default: return polyhedron(PolyhedronKind::tetrahedron);
  }
}

}  // namespace

ConstructionReport verify_construction(const Construction& c) {
  ConstructionReport r;
  r.fixed_counts = verify_fixed_counts(c);
  r.edge_embedding = check_edge_embedding_hypotheses(c.assignment, c.axes);

  // A restriction inherits its certificate from the parent: the parent's
  // embedding has the full group as symmetry group, and an edge with trivial
  // stabilizer lets any subgroup be realized.
  const Construction& top = c.parent ? *c.parent : c;
  if (c.parent) r.parent_edge_embedding = check_edge_embedding_hypotheses(top.assignment, top.axes);
  try {
    r.subgroup = check_subgroup_theorem(top.assignment);
    if (c.parent) r.corollary_edge = subgroup_corollary_witness(top.assignment, &model_polyhedron(top.model));
  } catch (const Error& e) {
    r.subgroup.reset();
    r.subgroup_error = e.what();
  }

  const auto& a = c.assignment;
  std::set<CycleProfile> seen;
  for (ElementId e = 0; e < a.group().order() && r.automorphisms_realizable; ++e) {
    CycleProfile p = cycle_profile(a.induced(e));
    if (!seen.insert(p).second) continue;
    if (!check_realizable(p).realizable) {
      r.automorphisms_realizable = false;
      r.realizability_witness = "element g" + std::to_string(e) + " " + to_string(a.group().element(e));
    }
  }
  return r;
}

}  // namespace polytsg
