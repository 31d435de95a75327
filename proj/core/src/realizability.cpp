#include "polytsg/realizability.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polytsg/error.hpp"

namespace polytsg {

namespace {

using Counts = std::map<std::size_t, std::size_t>;  // cycle length -> count

Counts count(const std::vector<std::size_t>& lengths) {
  Counts c;
  for (std::size_t len : lengths) ++c[len];
  return c;
}

std::size_t at(const Counts& c, std::size_t len) {
  auto it = c.find(len);
  return it == c.end() ? 0 : it->second;
}

// Every remaining cycle has length r.
bool only_r_cycles(const Counts& c, std::size_t r) {
  return std::all_of(c.begin(), c.end(),
                     [&](const auto& kv) { return kv.second == 0 || kv.first == r; });
}

bool rest_is_r(const Counts& v, const Counts& w, const Counts& cross, std::size_t r) {
  return only_r_cycles(v, r) && only_r_cycles(w, r) && only_r_cycles(cross, r);
}

// Lengths present in a part that are proper divisors of r greater than 1.
std::vector<std::size_t> proper_lengths(const Counts& c, std::size_t r) {
  std::vector<std::size_t> out;
  for (const auto& [len, cnt] : c)
    if (cnt > 0 && len > 1 && len < r && r % len == 0) out.push_back(len);
  return out;
}

void match_preserving(const Counts& v, const Counts& w, std::size_t r, Orientation o,
                      std::vector<CaseMatch>& out) {
  const Counts none;
  auto without = [](Counts c, std::initializer_list<std::size_t> lens) {
    for (std::size_t len : lens) c.erase(len);
    return c;
  };
  auto minus_one = [](Counts c, std::size_t len) {
    if (--c[len] == 0) c.erase(len);
    return c;
  };

  if (rest_is_r(v, w, none, r)) out.push_back({1, o});

  const std::size_t fv = at(v, 1);
  if (fv > 0 && fv % r == 0 && rest_is_r(without(v, {1}), w, none, r))
    out.push_back({2, o, 0, 0, fv / r});

  const std::size_t fw = at(w, 1);
  if ((fv == 1 || fv == 2) && fw == fv && rest_is_r(without(v, {1}), without(w, {1}), none, r))
    out.push_back({3, o});

  const auto vj = proper_lengths(v, r);
  for (std::size_t j : vj)
    if (rest_is_r(without(v, {j}), w, none, r)) out.push_back({4, o, j});

  for (std::size_t a = 0; a < vj.size(); ++a)
    for (std::size_t b = a + 1; b < vj.size(); ++b) {
      const std::size_t j = vj[a], k = vj[b];
      if (std::lcm(j, k) == r && rest_is_r(without(v, {j, k}), w, none, r))
        out.push_back({5, o, j, k});
    }

  for (std::size_t j : vj)
    for (std::size_t k : proper_lengths(w, r))
      if (std::lcm(j, k) == r && rest_is_r(without(v, {j}), without(w, {k}), none, r))
        out.push_back({6, o, j, k});

  if (at(v, 2) == 1 && at(w, 2) == 1) {
    const Counts v2 = minus_one(v, 2), w2 = minus_one(w, 2);
    if (rest_is_r(v2, w2, none, r)) out.push_back({7, o});
    // r/2 odd with r/2 > 1; at r = 2 the "r/2-cycles" would be fixed vertices.
    if (r >= 6 && (r / 2) % 2 == 1 && at(v2, r / 2) > 0 &&
        rest_is_r(without(v2, {r / 2}), w2, none, r))
      out.push_back({8, o, r / 2});
  }
}

void match_swapping(const Counts& cross, std::size_t r, std::vector<CaseMatch>& out) {
  if (only_r_cycles(cross, r)) out.push_back({1, Orientation::as_given});
  if (at(cross, 4) >= 1) {
    Counts rest = cross;
    if (--rest[4] == 0) rest.erase(4);
    if (only_r_cycles(rest, r)) out.push_back({9, Orientation::as_given});
  }
}

}  // namespace

std::string_view case_description(int case_id) {
  switch (case_id) {
    case 1: return "all vertices in r-cycles";
    case 2: return "a positive multiple of r fixed vertices in one part";
    case 3: return "one fixed vertex in each part, or two in each part";
    case 4: return "one part has j-cycles for a proper divisor j of r";
    case 5: return "one part has j-cycles and k-cycles with lcm(j,k) = r";
    case 6: return "j-cycles in one part and k-cycles in the other, lcm(j,k) = r";
    case 7: return "exactly one 2-cycle in each part";
    case 8: return "r/2 odd, one 2-cycle in each part, and r/2-cycles in one part";
    case 9: return "parts interchanged with exactly one 4-cycle";
    default: return "unknown case";
  }
}

RealizabilityResult check_realizable(const CycleProfile& p) {
  if (p.n <= 2)
    throw Error(Errc::part_size_too_small,
                "realizability is characterized only for n > 2, got n = " + std::to_string(p.n));
  const auto r = static_cast<std::size_t>(p.order);

  RealizabilityResult res;
  if (p.behavior == PartBehavior::swaps) {
    match_swapping(count(p.cross_cycles), r, res.matches);
  } else {
    const Counts v = count(p.v_cycles), w = count(p.w_cycles);
    match_preserving(v, w, r, Orientation::as_given, res.matches);
    match_preserving(w, v, r, Orientation::parts_swapped, res.matches);
  }

  for (const auto& m : res.matches) res.cases.push_back(m.case_id);
  std::sort(res.cases.begin(), res.cases.end());
  res.cases.erase(std::unique(res.cases.begin(), res.cases.end()), res.cases.end());
  res.realizable = !res.matches.empty();
  if (res.realizable) res.orientation = res.matches.front().orientation;
  return res;
}

RealizabilityResult check_realizable(const BipartiteAut& a) {
  return check_realizable(cycle_profile(a));
}

namespace {

// Multisets (ascending) of values from `parts` summing to `total`.
void partitions(std::size_t total, const std::vector<std::size_t>& parts, std::size_t from,
                std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (parts[i] > total) break;
    cur.push_back(parts[i]);
    partitions(total - parts[i], parts, i, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> partitions(std::size_t total,
                                                 const std::vector<std::size_t>& parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  partitions(total, parts, 0, cur, out);
  return out;
}

std::size_t lcm_of(const std::vector<std::size_t>& a, std::size_t acc = 1) {
  for (std::size_t x : a) acc = std::lcm(acc, x);
  return acc;
}

}  // namespace

std::vector<CycleProfile> enumerate_realizable_profiles(std::size_t n, std::uint64_t r) {
  if (n < 3 || n > 12 || r < 1 || r > 12)
    throw Error(Errc::invalid_argument, "profile enumeration needs 3 <= n <= 12 and 1 <= r <= 12");

  std::vector<std::size_t> divisors, even_divisors;
  for (std::size_t d = 1; d <= r; ++d)
    if (r % d == 0) {
      divisors.push_back(d);
      if (d % 2 == 0) even_divisors.push_back(d);
    }

  std::vector<CycleProfile> preserving, swapping;
  const auto per_part = partitions(n, divisors);
  for (const auto& v : per_part)
    for (const auto& w : per_part) {
      if (lcm_of(w, lcm_of(v)) != r) continue;
      CycleProfile p{n, r, PartBehavior::preserves, v, w, {}};
      if (check_realizable(canonical_automorphism(p)).realizable) preserving.push_back(p);
    }
  for (const auto& cross : partitions(2 * n, even_divisors)) {
    if (lcm_of(cross) != r) continue;
    CycleProfile p{n, r, PartBehavior::swaps, {}, {}, cross};
    if (check_realizable(canonical_automorphism(p)).realizable) swapping.push_back(p);
  }

  std::sort(preserving.begin(), preserving.end());
  std::sort(swapping.begin(), swapping.end());
  preserving.insert(preserving.end(), swapping.begin(), swapping.end());
  return preserving;
}

}  // namespace polytsg
