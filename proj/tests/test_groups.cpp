#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "polytsg/error.hpp"
#include "polytsg/group.hpp"
#include "polytsg/polyhedra.hpp"

using namespace polytsg;

namespace {

oracle::Images images(const Perm& p) { return {p.images().begin(), p.images().end()}; }

std::set<oracle::Images> element_set(const FiniteGroup& g) {
  std::set<oracle::Images> s;
  for (const auto& e : g.elements()) s.insert(images(e));
  return s;
}

FiniteGroup a4() {
  return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{0, 1}, {2, 3}})});
}
FiniteGroup s4() {
  return FiniteGroup::generate(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})});
}
FiniteGroup a5() {
  return FiniteGroup::generate(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})});
}

std::multiset<std::size_t> class_sizes(const FiniteGroup& g) {
  std::multiset<std::size_t> s;
  for (const auto& c : conjugacy_classes(g)) s.insert(c.size());
  return s;
}

void expect_burnside(const GroupAction& a) {
  auto c = orbit_count(a);
  EXPECT_TRUE(c.integral());
  EXPECT_TRUE(c.agrees());
  std::vector<oracle::Images> perms;
  for (ElementId g = 0; g < a.group().order(); ++g) perms.push_back(images(a.image(g)));
  EXPECT_EQ(c.direct, oracle::orbit_count(a.degree(), perms));
}

}  // namespace

TEST(Perm, OrderIsLcmOfCycleLengths) {
  EXPECT_EQ(Perm::identity(5).order(), 1u);
  EXPECT_EQ(Perm::from_cycles(5, {{0, 1, 2}}).order(), 3u);
  EXPECT_EQ(Perm::from_cycles(5, {{0, 1}, {2, 3, 4}}).order(), 6u);
}

TEST(Perm, RejectsNonBijections) {
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), Error);
  EXPECT_THROW(Perm::from_cycles(3, {{0, 1}, {1, 2}}), Error);
}

TEST(Perm, CompositionAppliesRightFactorFirst) {
  Perm p = Perm::from_cycles(3, {{0, 1}});
  Perm q = Perm::from_cycles(3, {{1, 2}});
  EXPECT_EQ((p * q)(0), 1u);
  EXPECT_EQ((p * q)(1), 2u);
  EXPECT_EQ((p * q)(2), 0u);
  EXPECT_EQ((p * q)(1), p(q(1)));
  EXPECT_EQ((p * q)(2), p(q(2)));
}

TEST(Perm, CyclesAreInNormalForm) {
  Perm p = Perm::from_cycles(6, {{4, 2}, {5, 1, 3}});
  std::vector<std::vector<Point>> expected{{1, 3, 5}, {2, 4}};
  EXPECT_EQ(p.cycles(), expected);
}

TEST(FiniteGroup, EmptyGeneratorsGiveTrivialGroup) {
  auto g = FiniteGroup::generate(4, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(class_sizes(g), (std::multiset<std::size_t>{1}));
}

TEST(FiniteGroup, ClosureMatchesBreadthFirstOracle) {
  for (const auto& g : {a4(), s4(), a5()}) {
    std::vector<oracle::Images> gens;
    for (const auto& p : g.generators()) gens.push_back(images(p));
    EXPECT_EQ(element_set(g), oracle::closure(g.degree(), gens));
  }
  EXPECT_EQ(a4().order(), 12u);
  EXPECT_EQ(s4().order(), 24u);
  EXPECT_EQ(a5().order(), 60u);
}

TEST(FiniteGroup, ElementsAreSortedWithIdentityFirst) {
  auto g = s4();
  EXPECT_TRUE(g.element(FiniteGroup::identity()).is_identity());
  EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
}

TEST(FiniteGroup, GeneratorDegreeMismatchThrows) {
  try {
    FiniteGroup::generate(4, {Perm::from_cycles(3, {{0, 1}})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degree_mismatch);
  }
}

TEST(FiniteGroup, TableAgreesWithComposition) {
  auto g = a5();
  for (ElementId a = 0; a < g.order(); a += 7)
    for (ElementId b = 0; b < g.order(); ++b) {
      EXPECT_EQ(g.element(g.multiply(a, b)), g.element(a) * g.element(b));
      EXPECT_EQ(g.multiply(a, g.inverse(a)), FiniteGroup::identity());
    }
}

TEST(FiniteGroup, ElementOrdersDivideGroupOrder) {
  for (const auto& g : {a4(), s4(), a5()})
    for (ElementId e = 0; e < g.order(); ++e) {
      EXPECT_EQ(g.order() % g.element_order(e), 0u);
      EXPECT_EQ(g.element_order(e), oracle::order(images(g.element(e))));
    }
}

TEST(ConjugacyClasses, SizesMatchBruteForce) {
  EXPECT_EQ(class_sizes(a5()), (std::multiset<std::size_t>{1, 15, 20, 12, 12}));
  EXPECT_EQ(class_sizes(s4()), (std::multiset<std::size_t>{1, 6, 3, 8, 6}));
  for (const auto& g : {a4(), s4(), a5()}) EXPECT_EQ(class_sizes(g), oracle::class_sizes(element_set(g)));
}

TEST(ConjugacyClasses, MembersShareOrder) {
  auto g = a5();
  for (const auto& c : conjugacy_classes(g))
    for (ElementId e : c.members) EXPECT_EQ(g.element_order(e), c.element_order);
}

TEST(SquaresSubgroup, OfS4IsA4) {
  auto sq = squares_subgroup(s4());
  EXPECT_EQ(sq.order(), 12u);
  EXPECT_EQ(element_set(sq), element_set(a4()));
}

TEST(CosetAction, WholeGroupGivesOnePoint) {
  auto g = share(a5());
  auto act = coset_action(g, *g);
  EXPECT_EQ(act.degree(), 1u);
  for (ElementId e = 0; e < g->order(); ++e) EXPECT_EQ(fixed_points(e, act).size(), 1u);
}

TEST(CosetAction, A5OnCyclicSubgroups) {
  auto g = share(a5());
  for (std::uint64_t k : {5u, 3u}) {
    ElementId gen = 0;
    while (g->element_order(gen) != k) ++gen;
    std::vector<ElementId> span{gen};
    auto act = coset_action(g, g->subgroup(span));
    EXPECT_EQ(act.degree(), 60u / k);
    EXPECT_TRUE(act.is_homomorphism());
    auto h = g->subgroup(span);
    for (ElementId e = 0; e < g->order(); ++e) {
      // gxH = xH iff x^-1 g x lies in H; each fixed coset is counted |H| times.
      std::size_t hits = 0;
      for (ElementId x = 0; x < g->order(); ++x)
        hits += h.contains(g->element(g->conjugate(g->inverse(x), e)));
      EXPECT_EQ(fixed_points(e, act).size(), hits / k);
      if (g->element_order(e) == k) EXPECT_EQ(fixed_points(e, act).size(), 2u);
    }
    expect_burnside(act);
  }
}

TEST(CosetAction, RejectsNonSubgroup) {
  auto g = share(a4());
  auto other = s4();
  try {
    coset_action(g, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_subgroup);
  }
}

TEST(FixedPoints, IdentityAndFreeOrbit) {
  auto g = share(s4());
  auto reg = regular_action(g);
  EXPECT_EQ(fixed_points(FiniteGroup::identity(), reg).size(), 24u);
  for (ElementId e = 1; e < g->order(); ++e) EXPECT_TRUE(fixed_points(e, reg).empty());
}

TEST(FixedPoints, DodecahedralInvolutionFixesTwoEdges) {
  auto m = build_polyhedral_model(PolyhedronKind::dodecahedron);
  for (ElementId e = 0; e < m.group->order(); ++e)
    if (m.group->element_order(e) == 2) EXPECT_EQ(fixed_points(e, m.edges).size(), 2u);
}

TEST(OrbitCount, RegularActionIsTransitive) {
  auto reg = regular_action(share(s4()));
  EXPECT_EQ(orbit_count(reg).direct, 1u);
  expect_burnside(reg);
}

TEST(OrbitCount, ThirtyPointsUnderA5) {
  // Edge midpoints: involutions fix 2, elements of order 3 and 5 fix none,
  // so (30 + 15*2 + 20*0 + 24*0) / 60 = 1.
  auto m = build_polyhedral_model(PolyhedronKind::dodecahedron);
  std::map<std::uint64_t, std::uint64_t> sum;
  for (ElementId e = 0; e < m.group->order(); ++e)
    sum[m.group->element_order(e)] += fixed_points(e, m.edges).size();
  EXPECT_EQ(sum[1], 30u);
  EXPECT_EQ(sum[2], 15u * 2);
  EXPECT_EQ(sum[3], 0u);
  EXPECT_EQ(sum[5], 0u);
  auto c = orbit_count(m.edges);
  EXPECT_EQ(c.fixed_point_sum, 60u);
  EXPECT_EQ(c.burnside_average(), Rational(1));
  EXPECT_EQ(c.direct, 1u);
}

TEST(OrbitCount, FaceCentersFormOneOrbit) {
  auto m = build_polyhedral_model(PolyhedronKind::dodecahedron);
  EXPECT_EQ(orbit_count(m.faces).direct, 1u);
  expect_burnside(m.faces);
}

TEST(GroupAction, HomomorphismAndInverses) {
  auto m = build_polyhedral_model(PolyhedronKind::cube);
  for (const GroupAction* a : {&m.corners, &m.edges, &m.faces}) {
    EXPECT_TRUE(a->is_homomorphism());
    for (ElementId g = 0; g < m.group->order(); ++g)
      EXPECT_TRUE((a->image(g) * a->image(m.group->inverse(g))).is_identity());
  }
}

TEST(GroupAction, ConjugatesFixEquallyMany) {
  auto m = build_polyhedral_model(PolyhedronKind::dodecahedron);
  const auto& g = *m.group;
  for (const GroupAction* a : {&m.corners, &m.edges, &m.faces})
    for (ElementId x = 0; x < g.order(); x += 5)
      for (ElementId h = 0; h < g.order(); ++h)
        EXPECT_EQ(fixed_points(g.conjugate(x, h), *a).size(), fixed_points(h, *a).size());
}

TEST(GroupAction, OrbitSizesDivideGroupOrder) {
  auto m = build_polyhedral_model(PolyhedronKind::dodecahedron);
  for (const GroupAction* a : {&m.corners, &m.edges, &m.faces})
    for (const auto& orb : orbits(*a)) EXPECT_EQ(60u % orb.size(), 0u);
}
