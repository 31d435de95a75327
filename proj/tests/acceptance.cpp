// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polytsg/assignment.hpp"
#include "polytsg/classify.hpp"
#include "polytsg/hypotheses.hpp"
#include "polytsg/necessity.hpp"
#include "polytsg/polyhedra.hpp"
#include "polytsg/realizability.hpp"

using namespace polytsg;

namespace {

constexpr GroupKind kGroups[] = {GroupKind::A4, GroupKind::S4, GroupKind::A5};
constexpr PolyhedronKind kSolids[] = {PolyhedronKind::tetrahedron, PolyhedronKind::cube,
                                      PolyhedronKind::dodecahedron};

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 = untimed
  std::function<Outcome()> run;
};

const std::vector<Construction>& corpus() {
  static const std::vector<Construction> all = [] {
    std::vector<Construction> out;
    for (auto g : kGroups)
      for (std::size_t n = 0; n <= 200; ++n)
        if (theorem_predicate(n, g)) out.push_back(build_assignment(g, n));
    return out;
  }();
  return all;
}

std::string name(const Construction& c) {
  return std::string(group_name(c.group)) + " n=" + std::to_string(c.n) + " (" + c.id + ")";
}

// Each expected row is the V-counts by increasing order, then the residue.
Outcome table_rows(GroupKind g, const std::vector<std::string>& expected) {
  Outcome o;
  auto rows = enumerate_profiles(g);
  std::vector<std::string> got;
  for (const auto& r : rows) {
    std::string s;
    for (const auto& e : r.profile.entries) s += to_string(e.v) + " ";
    got.push_back(s + std::to_string(r.residue));
  }
  if (got != expected) o.fail("rows differ from the expected table");
  for (const auto& r : rows) {
    auto b = burnside_residues(g, r.profile);
    if (b.size() != 1 || b.front() != r.residue) o.fail("burnside_residues disagrees on a row");
  }
  return o;
}

bool closed_form(std::size_t n, GroupKind g) {
  static const std::set<std::size_t> a4{0, 2, 4, 6, 8};
  static const std::set<std::size_t> a5{0, 2, 12, 20, 30, 32, 42, 50};
  switch (g) {
    case GroupKind::A4: return a4.count(n % 12) && n >= 4;
    case GroupKind::S4: return a4.count(n % 12) && n >= 4 && n != 6;
    case GroupKind::A5: return a5.count(n % 60) && n > 30;
  }
  return false;
}

oracle::Images images(const Perm& p) { return {p.images().begin(), p.images().end()}; }

// Direct union-find count vs Burnside average for one action.
void check_burnside(const GroupAction& a, const std::string& what, Outcome& o) {
  std::vector<oracle::Images> perms;
  std::uint64_t fixed = 0;
  for (ElementId g = 0; g < a.group().order(); ++g) {
    perms.push_back(images(a.image(g)));
    for (Point x = 0; x < a.degree(); ++x) fixed += a.image(g)(x) == x;
  }
  std::size_t direct = oracle::orbit_count(a.degree(), perms);
  auto lib = orbit_count(a);
  if (fixed % a.group().order() != 0 || fixed / a.group().order() != direct || !lib.agrees() ||
      lib.direct != direct)
    o.fail(what + ": orbit count " + std::to_string(direct) + " vs fixed-point sum " + std::to_string(fixed));
}

Outcome criterion_burnside() {
  Outcome o;
  for (auto k : kSolids) {
    auto m = build_polyhedral_model(k);
    for (auto c : {PointClass::corner, PointClass::edge, PointClass::face})
      check_burnside(m.action(c), std::string(polyhedron_name(k)) + " " + std::string(point_class_name(c)), o);
    check_burnside(regular_action(m.group), "regular", o);
    for (const auto& cls : conjugacy_classes(*m.group)) {
      std::vector<ElementId> gen{cls.representative()};
      check_burnside(coset_action(m.group, m.group->subgroup(gen)), "coset", o);
    }
  }
  for (const auto& c : corpus()) {
    check_burnside(c.assignment.universe(), name(c) + " model points", o);
    std::vector<Perm> induced;
    for (ElementId g = 0; g < c.assignment.group().order(); ++g) induced.push_back(c.assignment.induced(g).perm);
    std::vector<std::string> labels(2 * c.n);
    check_burnside(GroupAction(c.assignment.group_ptr(), labels, induced), name(c) + " vertices", o);
  }
  // The 30 edge midpoints of the dodecahedron.
  auto d = build_polyhedral_model(PolyhedronKind::dodecahedron);
  std::uint64_t by_order[6] = {};
  for (ElementId g = 0; g < d.group->order(); ++g)
    by_order[d.group->element_order(g)] += fixed_points(g, d.edges).size();
  auto avg = orbit_count(d.edges).burnside_average();
  if (by_order[1] != 30 || by_order[2] != 15 * 2 || by_order[3] != 0 || by_order[5] != 0 || avg != Rational(1))
    o.fail("(30 + 15(2) + 20(0) + 24(0))/60 = 1 not reproduced");
  return o;
}

Outcome criterion_s4_six() {
  Outcome o;
  if (to_string(s4_burnside_orbits(6, {2, 3, 2, std::nullopt})) != "2 + m2v/4") o.fail("case n4v = 2");
  if (to_string(s4_burnside_orbits(6, {2, 3, 0, std::nullopt})) != "3/2 + m2v/4") o.fail("case n4v = 0");
  auto d = derive_s4_n6_exclusion();
  if (d.cases.size() != 2) o.fail("expected two cases");
  for (const auto& c : d.cases) {
    for (std::size_t m = 0; m <= d.n; ++m) {
      bool integral = c.orbits.at(static_cast<long long>(m)).denominator() == 1;
      bool listed = std::find(c.integral_m2.begin(), c.integral_m2.end(), m) != c.integral_m2.end();
      if (m >= c.m2_min && integral != listed) o.fail("integral m2v list is wrong");
    }
    if (!c.closed()) o.fail("an integral m2v survives");
  }
  if (!d.contradiction()) o.fail("no contradiction derived");
  if (necessity_verdict(6, GroupKind::S4).allowed) o.fail("(6, S4) allowed");
  return o;
}

Outcome criterion_a5_small() {
  Outcome o;
  if (partition_feasible(10, kA5NonCentralOrbitSizes)) o.fail("10 accepted");
  if (partition_feasible(18, kA5NonCentralOrbitSizes)) o.fail("18 accepted");
  for (std::size_t n : {2, 12, 20, 30})
    if (decide(n, GroupKind::A5).realizable) o.fail("A5 n=" + std::to_string(n) + " accepted");
  return o;
}

Outcome criterion_two_oracles() {
  Outcome o;
  for (auto k : kSolids) {
    auto m = build_polyhedral_model(k);
    auto inc = incidence_fixed_counts(m);
    auto cos = coset_fixed_counts(m);
    if (inc.size() != cos.size()) {
      o.fail(std::string(polyhedron_name(k)) + ": class counts differ");
      continue;
    }
    for (std::size_t i = 0; i < inc.size(); ++i)
      if (inc[i].element_order != cos[i].element_order || inc[i].class_size != cos[i].class_size ||
          inc[i].fixed != cos[i].fixed)
        o.fail(std::string(polyhedron_name(k)) + ": class " + std::to_string(i) + " differs");
  }
  return o;
}

Outcome criterion_properties() {
  Outcome o;
  std::mt19937 rng(11);
  for (const auto& c : corpus()) {
    const auto& a = c.assignment;
    const auto& g = a.group();
    const std::size_t n = a.n();
    std::vector<oracle::Images> perms;
    for (ElementId x = 0; x < g.order(); ++x) perms.push_back(images(a.induced(x).perm));
    // Conjugates fix equally many vertices.
    for (ElementId x = 0; x < g.order(); ++x)
      for (ElementId h = 0; h < g.order(); ++h)
        if (a.fixed_vertices(g.conjugate(x, h)).size() != a.fixed_vertices(h).size())
          o.fail(name(c) + ": conjugates fix different counts");
    if (c.group != GroupKind::S4)
      for (ElementId x = 0; x < g.order(); ++x)
        if (a.induced(x).behavior != PartBehavior::preserves) o.fail(name(c) + ": element swaps parts");
    for (std::size_t s : oracle::orbit_sizes(2 * n, perms))
      if (g.order() % s != 0) o.fail(name(c) + ": orbit size does not divide |G|");
    // Relabeling within parts leaves realizability unchanged.
    std::vector<Point> vs(n), ws(n);
    std::iota(vs.begin(), vs.end(), 0u);
    std::iota(ws.begin(), ws.end(), static_cast<Point>(n));
    std::shuffle(vs.begin(), vs.end(), rng);
    std::shuffle(ws.begin(), ws.end(), rng);
    std::vector<Point> img(vs);
    img.insert(img.end(), ws.begin(), ws.end());
    Perm s(img);
    for (ElementId x = 0; x < g.order(); ++x) {
      auto before = check_realizable(a.induced(x));
      auto after = check_realizable(validate_automorphism(s * a.induced(x).perm * s.inverse(), n));
      if (before.realizable != after.realizable || before.cases != after.cases)
        o.fail(name(c) + ": realizability changed under relabeling");
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "A4 necessity table: 5 rows, residues {2,6,4,8,0} mod 12", 1.0,
       [] { return table_rows(GroupKind::A4, {"2 2 2", "2 3k 6", "4l 1 4", "4l 2 8", "4l 3k 0"}); }},
      {2, "A5 necessity table: 8 rows, residues {2,50,42,30,32,20,12,0} mod 60", 1.0,
       [] {
         return table_rows(GroupKind::A5, {"2 2 2 2", "2 2 5m 50", "2 3k 2 42", "2 3k 5m 30", "4l 2 2 32",
                                           "4l 2 5m 20", "4l 3k 2 12", "4l 3k 5m 0"});
       }},
      {3, "decide(n, G) equals the closed-form predicate for n <= 500", 60.0,
       [] {
         Outcome o;
         for (auto g : kGroups)
           for (std::size_t n = 0; n <= 500; ++n)
             if (decide(n, g).realizable != closed_form(n, g))
               o.fail(std::string(group_name(g)) + " n=" + std::to_string(n));
         return o;
       }},
      {4, "every allowed n <= 200 builds and verifies (fixed counts, 5 conditions, subgroup witness)", 60.0,
       [] {
         Outcome o;
         for (auto g : kGroups)
           for (std::size_t n = 0; n <= 200; ++n) {
             if (!theorem_predicate(n, g)) continue;
             auto c = build_assignment(g, n);
             auto fixed = verify_fixed_counts(c);
             auto ee = check_edge_embedding_hypotheses(c.assignment, c.axes);
             if (!fixed.passed()) o.fail(name(c) + ": fixed counts");
             if (!ee.passed()) o.fail(name(c) + ": edge embedding condition " + std::to_string(ee.first_failure()->id));
             try {
               check_subgroup_theorem(c.parent ? c.parent->assignment : c.assignment);
             } catch (const std::exception& e) {
               o.fail(name(c) + ": " + e.what());
             }
           }
         return o;
       }},
      {5, "every induced automorphism (n <= 200) passes check_realizable", 0.0,
       [] {
         Outcome o;
         for (const auto& c : corpus())
           for (ElementId g = 0; g < c.assignment.group().order(); ++g)
             if (!check_realizable(c.assignment.induced(g)).realizable)
               o.fail(name(c) + ": element " + std::to_string(g));
         return o;
       }},
      {6, "Burnside average equals direct orbit count on every action; (30+15(2))/60 = 1", 0.0,
       criterion_burnside},
      {7, "S4 n=6: 2 + m2v/4 and 3/2 + m2v/4, contradiction derived", 0.0, criterion_s4_six},
      {8, "A5: 10 and 18 infeasible over {12,20,30,60}; n in {2,12,20,30} rejected", 0.0, criterion_a5_small},
      {9, "incidence and coset-action fixed-count tables agree for all three solids", 0.0,
       criterion_two_oracles},
      {10, "property suite over the construction corpus", 0.0, criterion_properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) o.fail("took longer than the time limit");
    std::printf("[%s] %2d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
