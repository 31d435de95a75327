#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "polytsg/cycle_notation.hpp"
#include "polytsg/error.hpp"
#include "polytsg/realizability.hpp"

using namespace polytsg;

namespace {

RealizabilityResult check(std::string_view cycles, std::size_t n) {
  return check_realizable(validate_automorphism(parse_cycles(cycles, n), n));
}

bool has_case(const RealizabilityResult& r, int id) {
  return std::find(r.cases.begin(), r.cases.end(), id) != r.cases.end();
}

oracle::Profile as_tuple(const CycleProfile& p) {
  return {p.behavior == PartBehavior::swaps ? 1 : 0, p.v_cycles, p.w_cycles, p.cross_cycles};
}

// A random permutation of 2n points that keeps each part in place, composed
// with the V<->W exchange when `swap` is set.
Perm relabeling(std::size_t n, bool swap, std::mt19937& rng) {
  std::vector<Point> v(n), w(n);
  std::iota(v.begin(), v.end(), 0u);
  std::iota(w.begin(), w.end(), static_cast<Point>(n));
  std::shuffle(v.begin(), v.end(), rng);
  std::shuffle(w.begin(), w.end(), rng);
  std::vector<Point> img(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = swap ? w[i] : v[i];
    img[n + i] = swap ? v[i] : w[i];
  }
  return Perm(img);
}

}  // namespace

TEST(CheckRealizable, FreeInvolutionIsCaseOne) {
  auto r = check("(v1 v2)(v3 v4)(w1 w2)(w3 w4)", 4);
  EXPECT_TRUE(r.realizable);
  EXPECT_TRUE(has_case(r, 1));
}

TEST(CheckRealizable, FixedMultipleOfOrderIsCaseTwo) {
  auto r = check("(v1 v2 v3)(w1 w2 w3)(w4 w5 w6)", 6);
  EXPECT_TRUE(r.realizable);
  ASSERT_TRUE(has_case(r, 2));
  for (const auto& m : r.matches)
    if (m.case_id == 2) EXPECT_EQ(m.m, 1u);
}

TEST(CheckRealizable, OneFixedInEachPartIsCaseThree) {
  auto r = check("(v2 v3)(w2 w3)", 3);
  EXPECT_TRUE(r.realizable);
  EXPECT_TRUE(has_case(r, 3));
}

TEST(CheckRealizable, TwoCycleLengthsInVIsCaseFive) {
  // Needs 2a + 3b = n with a, b >= 1, so the smallest even example with W
  // in 6-cycles is n = 12.
  auto r = check("(v1 v2)(v3 v4)(v5 v6)(v7 v8 v9)(v10 v11 v12)"
                 "(w1 w2 w3 w4 w5 w6)(w7 w8 w9 w10 w11 w12)",
                 12);
  EXPECT_TRUE(r.realizable);
  ASSERT_TRUE(has_case(r, 5));
  for (const auto& m : r.matches)
    if (m.case_id == 5) EXPECT_EQ(std::lcm(m.j, m.k), 6u);
}

TEST(CheckRealizable, UnevenFixedCountsAreRejected) {
  // Three fixed in V, one in W, otherwise 2-cycles.
  auto r = check("(v4 v5)(w1 w2)(w3 w4)", 5);
  EXPECT_FALSE(r.realizable);
  EXPECT_TRUE(r.cases.empty());
  EXPECT_TRUE(r.matches.empty());
}

TEST(CheckRealizable, SwappingWithOneFourCycleIsCaseNine) {
  auto r = check("(v1 w1 v2 w2 v3 w3 v4 w4)(v5 w5 v6 w6)", 6);
  EXPECT_TRUE(r.realizable);
  EXPECT_EQ(r.cases, (std::vector<int>{9}));
  EXPECT_FALSE(check("(v1 w1)(v2 w2)(v3 w3 v4 w4)", 4).realizable);
}

TEST(CheckRealizable, SwappingFreeIsCaseOne) {
  auto r = check("(v1 w1 v2 w2)(v3 w3 v4 w4)", 4);
  EXPECT_TRUE(r.realizable);
  EXPECT_TRUE(has_case(r, 1));
}

TEST(CheckRealizable, SmallPartsThrow) {
  try {
    check("(v1 v2)", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::part_size_too_small);
  }
}

TEST(CheckRealizable, CaseNineOnlyForSwaps) {
  auto aut = automorphism_group(4);
  for (const auto& p : aut.elements()) {
    auto a = validate_automorphism(p, 4);
    auto r = check_realizable(a);
    EXPECT_EQ(r.realizable, !r.cases.empty());
    for (const auto& m : r.matches) {
      if (a.behavior == PartBehavior::swaps) EXPECT_TRUE(m.case_id == 9 || m.case_id == 1);
      else EXPECT_NE(m.case_id, 9);
    }
  }
}

TEST(CheckRealizable, CaseOneHasOnlyFullCycles) {
  auto aut = automorphism_group(4);
  for (const auto& p : aut.elements()) {
    auto a = validate_automorphism(p, 4);
    auto r = check_realizable(a);
    if (!has_case(r, 1)) continue;
    auto prof = cycle_profile(a);
    for (const auto* cs : {&prof.v_cycles, &prof.w_cycles, &prof.cross_cycles})
      for (auto c : *cs) EXPECT_EQ(c, prof.order);
  }
}

TEST(EnumerateRealizable, Examples) {
  EXPECT_EQ(enumerate_realizable_profiles(3, 1).size(), 1u);
  EXPECT_TRUE(enumerate_realizable_profiles(3, 7).empty());
  auto r2 = enumerate_realizable_profiles(4, 2);
  std::set<oracle::Profile> got;
  for (const auto& p : r2) got.insert(as_tuple(p));
  EXPECT_TRUE(got.count({0, {2, 2}, {2, 2}, {}}));
  EXPECT_TRUE(got.count({0, {1, 1, 2}, {1, 1, 2}, {}}));
}

TEST(EnumerateRealizable, MatchesGenerativeOracle) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::uint64_t r = 1; r <= 12; ++r) {
      std::set<oracle::Profile> got;
      for (const auto& p : enumerate_realizable_profiles(n, r)) {
        EXPECT_EQ(p.total(), 2 * n);
        EXPECT_EQ(p.order, r);
        got.insert(as_tuple(p));
      }
      EXPECT_EQ(got, oracle::realizable_profiles(n, r)) << "n=" << n << " r=" << r;
    }
}

TEST(EnumerateRealizable, CoversEveryRealizableAutomorphism) {
  for (std::size_t n = 3; n <= 4; ++n) {
    std::set<oracle::Profile> listed;
    for (std::uint64_t r = 1; r <= 12; ++r)
      for (const auto& p : enumerate_realizable_profiles(n, r)) listed.insert(as_tuple(p));
    std::set<oracle::Profile> seen;
    auto aut = automorphism_group(n);
    for (const auto& p : aut.elements()) {
      auto a = validate_automorphism(p, n);
      auto prof = as_tuple(cycle_profile(a));
      EXPECT_EQ(check_realizable(a).realizable, listed.count(prof) == 1);
      if (check_realizable(a).realizable) seen.insert(prof);
    }
    EXPECT_EQ(seen, listed) << n;
  }
}

TEST(CheckRealizable, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  for (std::size_t n = 3; n <= 4; ++n) {
    auto aut = automorphism_group(n);
    for (const auto& p : aut.elements()) {
      auto base = check_realizable(validate_automorphism(p, n));
      for (bool swap : {false, true}) {
        Perm s = relabeling(n, swap, rng);
        auto moved = check_realizable(validate_automorphism(s * p * s.inverse(), n));
        EXPECT_EQ(moved.realizable, base.realizable);
        EXPECT_EQ(moved.cases, base.cases);
      }
    }
  }
}

TEST(CaseDescription, EveryCaseIsDescribed) {
  for (int c = 1; c <= 9; ++c) EXPECT_FALSE(case_description(c).empty());
}
