#include "polytsg/necessity.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polytsg/error.hpp"

namespace polytsg {

std::string_view group_name(GroupKind g) {
  switch (g) {
    case GroupKind::A4: return "A4";
    case GroupKind::S4: return "S4";
    case GroupKind::A5: return "A5";
  }
  return "?";
}

GroupKind parse_group_kind(std::string_view text) {
  std::string up(text);
  for (char& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (up == "A4") return GroupKind::A4;
  if (up == "S4") return GroupKind::S4;
  if (up == "A5") return GroupKind::A5;
  throw Error(Errc::invalid_argument, "unknown group '" + std::string(text) + "' (expected A4, S4 or A5)");
}

std::size_t group_order(GroupKind g) {
  switch (g) {
    case GroupKind::A4: return 12;
    case GroupKind::S4: return 24;
    case GroupKind::A5: return 60;
  }
  return 1;
}

std::string to_string(const FixedCount& c) {
  if (c.kind == FixedCount::Kind::exact) return std::to_string(c.value);
  switch (c.value) {
    case 3: return "3k";
    case 4: return "4l";
    default: return std::to_string(c.value) + "m";
  }
}

const ProfileEntry* FixedProfile::find(std::uint64_t order, bool outside_subgroup) const {
  for (const auto& e : entries)
    if (e.order == order && e.outside_subgroup == outside_subgroup) return &e;
  return nullptr;
}

std::size_t class_weight(GroupKind g, const ProfileEntry& e) {
  switch (g) {
    case GroupKind::A4:
      if (e.order == 2) return 3;
      if (e.order == 3) return 8;
      break;
    case GroupKind::S4:
      if (e.order == 2) return e.outside_subgroup ? 6 : 3;
      if (e.order == 3) return 8;
      if (e.order == 4) return 6;
      break;
    case GroupKind::A5:
      if (e.order == 2) return 15;
      if (e.order == 3) return 20;
      if (e.order == 5) return 24;
      break;
  }
  throw Error(Errc::invalid_argument, "group " + std::string(group_name(g)) +
                                          " has no element class of order " +
                                          std::to_string(e.order));
}

std::vector<std::size_t> burnside_residues(GroupKind g, const FixedProfile& p) {
  const std::size_t order = group_order(g);
  // All values of Σ weight·n_o^v mod |G| over the multiplier choices.
  std::set<std::size_t> sums{0};
  for (const auto& e : p.entries) {
    const std::size_t w = class_weight(g, e);
    std::set<std::size_t> terms;
    if (e.v.kind == FixedCount::Kind::exact) {
      terms.insert(w * e.v.value % order);
    } else {
      for (std::size_t t = 0; t < order; ++t) terms.insert(w * e.v.value * t % order);
    }
    std::set<std::size_t> next;
    for (std::size_t s : sums)
      for (std::size_t t : terms) next.insert((s + t) % order);
    sums = std::move(next);
  }
  if (sums.size() != 1) return {};
  return {(order - *sums.begin()) % order};
}

namespace {

struct Option {
  FixedCount v;
  FixedCount w;
};

// Cycle-structure options for the V/W fixed counts of elements of prime
// order o: one fixed vertex in each part, two in each part, or a multiple of
// `base` in V and none in W.
std::vector<Option> menu(std::size_t base) {
  return {{FixedCount::exact(1), FixedCount::exact(1)},
          {FixedCount::exact(2), FixedCount::exact(2)},
          {FixedCount::multiple_of(base), FixedCount::exact(0)}};
}

std::vector<std::uint64_t> profile_orders(GroupKind g) {
  if (g == GroupKind::A5) return {2, 3, 5};
  return {2, 3};
}

GroupKind table_group(GroupKind g) { return g == GroupKind::A5 ? GroupKind::A5 : GroupKind::A4; }

std::vector<ProfileRow> candidates(GroupKind g, std::size_t involution_base) {
  const auto orders = profile_orders(g);
  std::vector<std::vector<Option>> menus;
  for (auto o : orders) menus.push_back(menu(o == 2 ? involution_base : o));

  std::vector<ProfileRow> rows;
  std::vector<std::size_t> idx(orders.size(), 0);
  while (true) {
    FixedProfile p;
    for (std::size_t i = 0; i < orders.size(); ++i)
      p.entries.push_back({orders[i], false, menus[i][idx[i]].v, menus[i][idx[i]].w});
    auto res = burnside_residues(g, p);
    rows.push_back({std::move(p), res.empty() ? group_order(g) : res.front()});

    std::size_t i = orders.size();
    while (i > 0 && ++idx[i - 1] == menus[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return rows;
}

bool is_exact(const FixedCount& c, std::size_t value) {
  return c.kind == FixedCount::Kind::exact && c.value == value;
}

}  // namespace

std::vector<ProfileRow> candidate_profiles(GroupKind g) {
  if (g == GroupKind::S4) throw Error(Errc::invalid_argument, "S4 uses the A4 profile rows");
  // A4 starts from "2m fixed in V, none in W" for involutions; the A5 menu
  // already carries the sharper 4l.
  return candidates(g, g == GroupKind::A4 ? 2 : 4);
}

std::vector<ProfileRow> enumerate_profiles(GroupKind g) {
  if (g == GroupKind::S4) throw Error(Errc::invalid_argument, "S4 uses the A4 profile rows");

  std::vector<ProfileRow> out;
  for (auto row : candidate_profiles(g)) {
    const auto& e2 = *row.profile.find(2);
    const auto& e3 = *row.profile.find(3);
    // An involution never fixes exactly one vertex of V.
    if (is_exact(e2.v, 1)) continue;
    // With involutions fixing two vertices in each part, order-3 elements
    // cannot fix exactly one.
    if (is_exact(e2.v, 2) && is_exact(e2.w, 2) && is_exact(e3.v, 1)) continue;
    // For A5 no element fixes exactly one vertex of V.
    if (g == GroupKind::A5 &&
        std::any_of(row.profile.entries.begin(), row.profile.entries.end(),
                    [](const ProfileEntry& e) { return is_exact(e.v, 1); }))
      continue;
    // Involutions fixing nothing in W fix a multiple of 4 in V.
    for (auto& e : row.profile.entries)
      if (e.order == 2 && e.v.kind == FixedCount::Kind::multiple_of) e.v = FixedCount::multiple_of(4);
    auto res = burnside_residues(g, row.profile);
    if (res.empty()) throw Error(Errc::invalid_argument, "profile row without a residue");
    row.residue = res.front();
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::size_t> allowed_residues(GroupKind g) {
  std::vector<std::size_t> out;
  for (const auto& row : enumerate_profiles(table_group(g))) out.push_back(row.residue);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const LinearForm& f) {
  // Boost.Rational's mixed rational/int comparisons recurse under C++20
  // rewritten operators, so compare against a rational zero.
  const Rational zero(0);
  auto frac = [](const Rational& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  };
  std::string out;
  if (f.constant != zero || f.m2_coefficient == zero) out = frac(f.constant);
  if (f.m2_coefficient != zero) {
    const bool negative = f.m2_coefficient < zero;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const Rational a = negative ? -f.m2_coefficient : f.m2_coefficient;
    if (a.numerator() != 1) out += std::to_string(a.numerator()) + "*";
    out += "m2v";
    if (a.denominator() != 1) out += "/" + std::to_string(a.denominator());
  }
  return out;
}

LinearForm s4_burnside_orbits(std::size_t n, const S4Counts& c) {
  auto ll = [](std::size_t x) { return static_cast<long long>(x); };
  long long sum = ll(n) + 3 * ll(c.n2v) + 8 * ll(c.n3v) + 6 * ll(c.n4v);
  LinearForm f;
  if (c.m2v) {
    sum += 6 * ll(*c.m2v);
    f.m2_coefficient = Rational(0);
  } else {
    f.m2_coefficient = Rational(6, 24);
  }
  f.constant = Rational(sum, 24);
  return f;
}

bool partition_feasible(std::size_t count, const std::vector<std::size_t>& sizes) {
  std::vector<bool> reach(count + 1, false);
  reach[0] = true;
  for (std::size_t x = 1; x <= count; ++x)
    for (std::size_t s : sizes)
      if (s > 0 && s <= x && reach[x - s]) {
        reach[x] = true;
        break;
      }
  return reach[count];
}

bool S4SixDerivation::contradiction() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(), [](const S4SixCase& c) { return c.closed(); });
}

S4SixDerivation derive_s4_n6_exclusion() {
  S4SixDerivation d;
  // H-fixed vertices v, v' lie on every order-3 axis; two axes share at most
  // those two points, so no axis holds all of V: 1 <= k and 3k < n.
  d.k = 0;
  for (std::size_t k = 1; 3 * k < d.n; ++k) d.k = k;
  const std::size_t n3v = 3 * d.k;

  // Elements of order 4 either fix two vertices in each part, or none.
  for (std::size_t n4v : {std::size_t{2}, std::size_t{0}}) {
    S4SixCase c;
    c.n4v = n4v;
    c.orbits = s4_burnside_orbits(d.n, {d.n2v, n3v, n4v, std::nullopt});
    // With n4v = 2 the order-4 elements fix v and v', so all of S4 does and
    // every involution outside A4 fixes at least those two.
    c.m2_min = n4v == 2 ? 2 : 0;
    for (std::size_t m2 = c.m2_min; m2 <= d.n; ++m2)
      if (c.orbits.at(static_cast<long long>(m2)).denominator() == 1) c.integral_m2.push_back(m2);

    for (std::size_t m2 : c.integral_m2) {
      if (n4v == 2) {
        // Six distinct involution axes through v, v' need disjoint sets of
        // further fixed V-vertices.
        if (6 * (m2 - 2) > d.n - 2)
          c.eliminated.emplace_back(
              m2, "six involutions outside A4 each fix " + std::to_string(m2 - 2) +
                      " V-vertices besides the two fixed by all of S4, needing " +
                      std::to_string(6 * (m2 - 2)) + " > " + std::to_string(d.n - 2) +
                      "; two of them would share an axis");
      } else if (m2 == d.n) {
        c.eliminated.emplace_back(
            m2, "the involution axis would contain all of V and meet each order-3 axis in " +
                    std::to_string(n3v) + " > 2 points");
      } else if (m2 >= 2 && 2 + m2 > n3v) {
        // psi misses v and v' (psi*g has order 4 and fixes nothing), so its
        // fixed V-vertices sit on a single order-3 axis.
        c.eliminated.emplace_back(
            m2, "the involution's fixed V-vertices lie on one order-3 axis, giving it " +
                    std::to_string(2 + m2) + " > " + std::to_string(n3v) + " V-vertices");
      }
    }
    d.cases.push_back(std::move(c));
  }
  return d;
}

namespace {

std::string join_residues(const std::vector<std::size_t>& rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += i + 1 == rs.size() ? " or " : ", ";
    out += std::to_string(rs[i]);
  }
  return out;
}

std::string a5_small_reason(std::size_t n) {
  const std::size_t aut_order = 2 * 2 * 2;  // |Aut(K_{2,2})| = 2 (2!)^2
  switch (n) {
    case 2:
      return "Aut(K_{2,2}) has order " + std::to_string(aut_order) + ", not divisible by 60";
    case 12:
    case 20: {
      const bool ok = partition_feasible(n - 2, kA5NonCentralOrbitSizes);
      return "two vertices of V are fixed by all of A5; the remaining " + std::to_string(n - 2) +
             (ok ? " can" : " cannot") + " be split into orbits of size 12, 20, 30 or 60";
    }
    case 30: {
      const bool ok = partition_feasible(n - 2, kA5NonCentralOrbitSizes);
      const Rational w_orbits(30 + 15 * 2, 60);
      return std::string("with order-5 rotations the remaining 28 V-vertices") +
             (ok ? " can" : " cannot") +
             " be split into orbits of size 12, 20, 30 or 60; without them the 4-simplex "
             "action puts W into at least two orbits, but the Burnside count on W is " +
             std::to_string(w_orbits.numerator()) +
             (w_orbits.denominator() == 1 ? "" : "/" + std::to_string(w_orbits.denominator()));
    }
    default:
      return "n = " + std::to_string(n) + " does not exceed 30";
  }
}

}  // namespace

NecessityVerdict necessity_verdict(std::size_t n, GroupKind g) {
  NecessityVerdict v;
  v.n = n;
  v.group = g;
  const GroupKind tg = table_group(g);
  const std::size_t modulus = group_order(tg);
  v.residue = n % modulus;

  for (const auto& row : enumerate_profiles(tg))
    if (row.residue == v.residue) {
      v.witness_profile = row.profile;
      break;
    }

  if (!v.witness_profile)
    v.rules.push_back({"burnside-residue",
                       "n mod " + std::to_string(modulus) + " must be " +
                           join_residues(allowed_residues(tg)) +
                           " for the orbit count on V to be an integer"});
  if (n < 4)
    v.rules.push_back({"min-part-size", "Aut(K_{n,n}) has no subgroup isomorphic to " +
                                            std::string(group_name(g)) + " when n < 4"});
  if (g == GroupKind::S4 && n == 6) {
    const auto d = derive_s4_n6_exclusion();
    std::string why = "S4 cannot act on K_{6,6} this way: orbit count on V is " +
                      to_string(d.cases[0].orbits) + " (n4v = 2) or " +
                      to_string(d.cases[1].orbits) + " (n4v = 0)";
    why += d.contradiction() ? "; every integral m2v is ruled out" : "; derivation incomplete";
    v.rules.push_back({"s4-n-ne-6", why});
  }
  if (g == GroupKind::A5 && n <= 30) v.rules.push_back({"a5-n-gt-30", a5_small_reason(n)});

  v.allowed = v.rules.empty();
  return v;
}

bool theorem_predicate(std::size_t n, GroupKind g) {
  switch (g) {
    case GroupKind::A4: {
      const auto r = n % 12;
      return n >= 4 && (r == 0 || r == 2 || r == 4 || r == 6 || r == 8);
    }
    case GroupKind::S4:
      return n != 6 && theorem_predicate(n, GroupKind::A4);
    case GroupKind::A5: {
      const auto r = n % 60;
      return n > 30 && (r == 0 || r == 2 || r == 12 || r == 20 || r == 30 || r == 32 ||
                        r == 42 || r == 50);
    }
  }
  return false;
}

}  // namespace polytsg
