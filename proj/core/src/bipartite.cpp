#include "polytsg/bipartite.hpp"

#include <algorithm>
#include <numeric>

#include "polytsg/error.hpp"

namespace polytsg {

BipartiteAut validate_automorphism(const Perm& p, std::size_t n) {
  if (p.degree() != 2 * n)
    throw Error(Errc::degree_mismatch, "expected a permutation of " +
                                           std::to_string(2 * n) + " vertices");
  if (n == 0) return {n, p, PartBehavior::preserves};

  const Part first = part_of(p(0), n);
  for (Point v = 1; v < n; ++v) {
    if (part_of(p(v), n) != first)
      throw Error(Errc::mixed_parts,
                  "V is sent to a set meeting both parts (v" + std::to_string(v + 1) +
                      " and v1 land in different parts)");
  }
  return {n, p, first == Part::V ? PartBehavior::preserves : PartBehavior::swaps};
}

BipartiteAut compose(const BipartiteAut& a, const BipartiteAut& b) {
  if (a.n != b.n) throw Error(Errc::degree_mismatch, "automorphisms of different graphs");
  const bool swaps = (a.behavior == PartBehavior::swaps) != (b.behavior == PartBehavior::swaps);
  return {a.n, a.perm * b.perm, swaps ? PartBehavior::swaps : PartBehavior::preserves};
}

std::size_t CycleProfile::total() const {
  auto sum = [](const std::vector<std::size_t>& xs) {
    return std::accumulate(xs.begin(), xs.end(), std::size_t{0});
  };
  return sum(v_cycles) + sum(w_cycles) + sum(cross_cycles);
}

CycleProfile cycle_profile(const BipartiteAut& a) {
  CycleProfile prof;
  prof.n = a.n;
  prof.order = a.perm.order();
  prof.behavior = a.behavior;
  for (const auto& c : a.perm.cycles(true)) {
    const bool has_v = std::any_of(c.begin(), c.end(), [&](Point x) { return x < a.n; });
    const bool has_w = std::any_of(c.begin(), c.end(), [&](Point x) { return x >= a.n; });
    if (has_v && has_w) prof.cross_cycles.push_back(c.size());
    else if (has_v) prof.v_cycles.push_back(c.size());
    else prof.w_cycles.push_back(c.size());
  }
  std::sort(prof.v_cycles.begin(), prof.v_cycles.end());
  std::sort(prof.w_cycles.begin(), prof.w_cycles.end());
  std::sort(prof.cross_cycles.begin(), prof.cross_cycles.end());
  return prof;
}

BipartiteAut canonical_automorphism(const CycleProfile& profile) {
  const std::size_t n = profile.n;
  if (profile.total() != 2 * n)
    throw Error(Errc::invalid_argument, "cycle lengths do not total 2n");
  std::vector<std::vector<Point>> cycles;
  Point next_v = 0;
  Point next_w = static_cast<Point>(n);
  auto take = [&](Point& cursor, Point limit) {
    if (cursor >= limit) throw Error(Errc::invalid_argument, "part overflow in profile");
    return cursor++;
  };
  for (std::size_t len : profile.v_cycles) {
    std::vector<Point> c;
    for (std::size_t i = 0; i < len; ++i) c.push_back(take(next_v, static_cast<Point>(n)));
    cycles.push_back(std::move(c));
  }
  for (std::size_t len : profile.w_cycles) {
    std::vector<Point> c;
    for (std::size_t i = 0; i < len; ++i) c.push_back(take(next_w, static_cast<Point>(2 * n)));
    cycles.push_back(std::move(c));
  }
  for (std::size_t len : profile.cross_cycles) {
    if (len % 2 != 0) throw Error(Errc::invalid_argument, "cross cycles have even length");
    std::vector<Point> c;
    for (std::size_t i = 0; i < len / 2; ++i) {
      c.push_back(take(next_v, static_cast<Point>(n)));
      c.push_back(take(next_w, static_cast<Point>(2 * n)));
    }
    cycles.push_back(std::move(c));
  }
  return validate_automorphism(Perm::from_cycles(2 * n, cycles), n);
}

std::vector<Point> common_fixed_vertices(std::span<const BipartiteAut> auts) {
  if (auts.empty()) throw Error(Errc::invalid_argument, "fixed_shape of an empty set");
  const std::size_t n = auts.front().n;
  std::vector<Point> out;
  for (Point x = 0; x < 2 * n; ++x) {
    bool fixed = true;
    for (const auto& a : auts) {
      if (a.n != n) throw Error(Errc::degree_mismatch, "automorphisms of different graphs");
      if (a.perm(x) != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(x);
  }
  return out;
}

FixedSubgraphShape shape_of(std::span<const Point> vertices, std::size_t n) {
  FixedSubgraphShape s;
  for (Point x : vertices) (part_of(x, n) == Part::V ? s.a : s.b) += 1;
  return s;
}

FixedSubgraphShape fixed_shape(std::span<const BipartiteAut> auts) {
  auto fixed = common_fixed_vertices(auts);
  return shape_of(fixed, auts.front().n);
}

bool embeds_in_circle(FixedSubgraphShape s) {
  return s.a == 0 || s.b == 0 || (s.a <= 2 && s.b <= 2);
}

bool embeds_in_proper_subset_of_circle(FixedSubgraphShape s) {
  return embeds_in_circle(s) && !(s.a == 2 && s.b == 2);
}

FiniteGroup automorphism_group(std::size_t n) {
  const std::size_t d = 2 * n;
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> cyc_v(n), cyc_w(n);
    std::iota(cyc_v.begin(), cyc_v.end(), Point{0});
    std::iota(cyc_w.begin(), cyc_w.end(), static_cast<Point>(n));
    gens.push_back(Perm::from_cycles(d, {cyc_v}));
    gens.push_back(Perm::from_cycles(d, {{0, 1}}));
    gens.push_back(Perm::from_cycles(d, {cyc_w}));
    gens.push_back(Perm::from_cycles(d, {{static_cast<Point>(n), static_cast<Point>(n + 1)}}));
  }
  if (n >= 1) {
    std::vector<std::vector<Point>> swap;
    for (Point i = 0; i < n; ++i) swap.push_back({i, static_cast<Point>(i + n)});
    gens.push_back(Perm::from_cycles(d, swap));
  }
  return FiniteGroup::generate(d, std::move(gens));
}

}  // namespace polytsg
