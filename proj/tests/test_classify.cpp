#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "polytsg/classify.hpp"
#include "polytsg/cycle_notation.hpp"
#include "polytsg/error.hpp"
#include "polytsg/report.hpp"

using namespace polytsg;
using nlohmann::json;

namespace {

std::set<std::size_t> realizable_ns(const SweepTable& t) {
  std::set<std::size_t> s;
  for (const auto& r : t.rows)
    if (r.realizable) s.insert(r.n);
  return s;
}

Error parse_error(std::string_view text, std::size_t n) {
  try {
    parse_cycles(text, n);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return Error(Errc::invalid_argument, "");
}

}  // namespace

TEST(Decide, Examples) {
  EXPECT_FALSE(decide(36, GroupKind::A5).realizable);
  auto s4 = decide(4, GroupKind::S4);
  EXPECT_TRUE(s4.realizable);
  ASSERT_TRUE(s4.report.has_value());
  EXPECT_TRUE(s4.report->passed());
  EXPECT_TRUE(decide(90, GroupKind::A5).realizable);
  EXPECT_FALSE(decide(6, GroupKind::S4).realizable);
  EXPECT_TRUE(decide(6, GroupKind::A4).realizable);
}

TEST(Decide, ExcludedVerdictsCarryRules) {
  auto v = decide(12, GroupKind::A5);
  EXPECT_FALSE(v.realizable);
  EXPECT_EQ(v.construction, nullptr);
  ASSERT_FALSE(v.rules.empty());
  EXPECT_EQ(v.rules.front().id, "a5-n-gt-30");
}

TEST(Decide, AgreesWithTheoremUpTo500) {
  for (auto g : {GroupKind::A4, GroupKind::S4, GroupKind::A5})
    for (std::size_t n = 0; n <= 500; ++n) {
      auto v = decide(n, g);
      EXPECT_TRUE(v.agrees_with_theorem()) << group_name(g) << " " << n << " " << v.diagnostic;
      EXPECT_EQ(v.realizable, v.necessity.allowed && v.report && v.report->passed());
    }
}

TEST(Sweep, Examples) {
  EXPECT_EQ(realizable_ns(sweep(GroupKind::A4, 12)), (std::set<std::size_t>{4, 6, 8, 12}));
  EXPECT_EQ(realizable_ns(sweep(GroupKind::S4, 12)), (std::set<std::size_t>{4, 8, 12}));
  EXPECT_TRUE(realizable_ns(sweep(GroupKind::A5, 30)).empty());
}

TEST(Sweep, RowsAndResidueSummaries) {
  auto t = sweep(GroupKind::A4, 50);
  ASSERT_EQ(t.rows.size(), 51u);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    EXPECT_EQ(t.rows[i].n, i);
    EXPECT_EQ(t.rows[i].residue, i % 12);
    EXPECT_FALSE(t.rows[i].rule_ids.empty());
  }
  EXPECT_EQ(t.by_residue.size(), 12u);
  std::size_t rows = 0, yes = 0;
  for (const auto& s : t.by_residue) {
    rows += s.rows;
    yes += s.realizable;
  }
  EXPECT_EQ(rows, 51u);
  EXPECT_EQ(yes, realizable_ns(t).size());
  EXPECT_TRUE(t.agrees_with_theorem());
}

TEST(Sweep, CapIsEnforced) {
  EXPECT_THROW(sweep(GroupKind::A4, 501), Error);
  EXPECT_NO_THROW(sweep(GroupKind::A4, 20, 20));
  EXPECT_THROW(sweep(GroupKind::A4, 21, 20), Error);
}

TEST(Sweep, OutputIsByteStable) {
  auto a = sweep(GroupKind::S4, 120);
  auto b = sweep(GroupKind::S4, 120);
  EXPECT_EQ(sweep_csv(a), sweep_csv(b));
  EXPECT_EQ(sweep_json(a), sweep_json(b));
  EXPECT_EQ(verdict_json(decide(62, GroupKind::A5)), verdict_json(decide(62, GroupKind::A5)));
}

TEST(SweepCsv, HeaderAndRows) {
  auto csv = sweep_csv(sweep(GroupKind::S4, 8));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,group,realizable,residue,rule_ids");
  EXPECT_NE(csv.find("\n6,S4,false,6,s4-n-ne-6\n"), std::string::npos);
  EXPECT_NE(csv.find("\n4,S4,true,4,skeleton-12m+4\n"), std::string::npos);
  EXPECT_NE(csv.find("\n1,S4,false,1,burnside-residue;min-part-size\n"), std::string::npos);
}

TEST(ParseCycles, Examples) {
  auto p = parse_cycles("(v1 v2 v3)", 3);
  EXPECT_EQ(p, Perm::from_cycles(6, {{0, 1, 2}}));
  EXPECT_TRUE(parse_cycles("", 2).is_identity());
  EXPECT_TRUE(parse_cycles("()", 2).is_identity());
  EXPECT_EQ(parse_cycles(" ( w1  v2 ) ", 2), Perm::from_cycles(4, {{2, 1}}));
}

TEST(ParseCycles, Errors) {
  auto dup = parse_error("(v1 w1)(v1 v2)", 2);
  EXPECT_EQ(dup.code(), Errc::duplicate_token);
  EXPECT_EQ(dup.position(), 8u);
  auto unknown = parse_error("(v1 x2)", 2);
  EXPECT_EQ(unknown.code(), Errc::unknown_token);
  EXPECT_EQ(unknown.position(), 4u);
  EXPECT_EQ(parse_error("(v1 v3)", 2).code(), Errc::unknown_token);
  EXPECT_EQ(parse_error("(v0 v1)", 2).code(), Errc::unknown_token);
  auto open = parse_error("(v1 v2", 2);
  EXPECT_EQ(open.code(), Errc::unbalanced_parenthesis);
  EXPECT_EQ(open.position(), 0u);
  EXPECT_EQ(parse_error("v1 v2)", 2).code(), Errc::unbalanced_parenthesis);
  EXPECT_EQ(parse_error("(v1 (v2))", 2).code(), Errc::unbalanced_parenthesis);
  auto stray = parse_error("(v1 v2))", 2);
  EXPECT_EQ(stray.code(), Errc::unbalanced_parenthesis);
  EXPECT_EQ(stray.position(), 7u);
}

TEST(ParseCycles, PrintRoundTrip) {
  for (std::string text : {"()", "(v1 v2 v3)", "(v1 w1 v2 w2)(v3 w3 v4 w4)", "(v2 v3)(w1 w4 w2)"}) {
    std::size_t n = 4;
    EXPECT_EQ(print_cycles(parse_cycles(text, n), n), text);
  }
  auto aut = automorphism_group(3);
  for (const auto& p : aut.elements()) EXPECT_EQ(parse_cycles(print_cycles(p, 3), 3), p);
}

TEST(CheckAutomorphism, Examples) {
  auto one = check_automorphism("(v1 v2 v3)(v4 v5 v6)(w1 w2 w3)(w4 w5 w6)", 6);
  EXPECT_TRUE(one.result.realizable);
  EXPECT_EQ(one.result.cases, (std::vector<int>{1}));
  auto bad = check_automorphism("(v4 v5)(w1 w2)(w3 w4)", 5);
  EXPECT_FALSE(bad.result.realizable);
  EXPECT_EQ(bad.profile.v_cycles, (std::vector<std::size_t>{1, 1, 1, 2}));
  EXPECT_EQ(bad.profile.w_cycles, (std::vector<std::size_t>{1, 2, 2}));
  auto nine = check_automorphism("(v1 w1 v2 w2)(v3 w3 v4 w4)", 4);
  EXPECT_TRUE(nine.result.realizable);
  EXPECT_NE(std::find(nine.result.cases.begin(), nine.result.cases.end(), 9), nine.result.cases.end());
}

TEST(CheckAutomorphism, ErrorsSurface) {
  try {
    check_automorphism("(v1 v2)", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::part_size_too_small);
  }
  try {
    check_automorphism("(v1 w1 v2)", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::mixed_parts);
  }
}

TEST(AutomorphismText, ListsCases) {
  auto text = automorphism_text(check_automorphism("(v1 v2 v3)(v4 v5 v6)(w1 w2 w3)(w4 w5 w6)", 6));
  EXPECT_NE(text.find("realizable: yes"), std::string::npos);
  EXPECT_NE(text.find(std::string(case_description(1))), std::string::npos);
}

TEST(VerdictJson, RealizableSchema) {
  auto j = json::parse(verdict_json(decide(26, GroupKind::S4)));
  for (const char* key : {"n", "group", "realizable", "rules", "profile", "construction"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["n"], 26);
  EXPECT_EQ(j["group"], "S4");
  EXPECT_EQ(j["realizable"], true);
  const auto& c = j["construction"];
  for (const char* key : {"blocks", "fixed_counts", "hypotheses", "witness"}) EXPECT_TRUE(c.contains(key)) << key;
  std::size_t v = 0, w = 0;
  for (const auto& b : c["blocks"]) {
    if (b["part"] == "V") v += b["size"].get<std::size_t>();
    if (b["part"] == "W") w += b["size"].get<std::size_t>();
  }
  EXPECT_EQ(v, 26u);
  EXPECT_EQ(w, 26u);
  EXPECT_EQ(j["rules"][0]["id"], "cube-24m+26");
}

TEST(VerdictJson, ExcludedSchema) {
  auto j = json::parse(verdict_json(decide(6, GroupKind::S4)));
  EXPECT_EQ(j["realizable"], false);
  EXPECT_TRUE(j["construction"].is_null());
  ASSERT_EQ(j["rules"].size(), 1u);
  EXPECT_EQ(j["rules"][0]["id"], "s4-n-ne-6");
  EXPECT_FALSE(j["rules"][0]["citation"].get<std::string>().empty());
}

TEST(SweepJson, ParsesAndMatchesRows) {
  auto t = sweep(GroupKind::A5, 70);
  auto j = json::parse(sweep_json(t));
  ASSERT_TRUE(j.is_object());
  EXPECT_EQ(j["rows"].size(), t.rows.size());
}

TEST(NecessityTableText, MentionsEveryResidue) {
  auto text = necessity_table_text(GroupKind::A5);
  for (const char* r : {"50", "42", "32", "12"}) EXPECT_NE(text.find(r), std::string::npos);
  EXPECT_NE(text.find("a5-n-gt-30"), std::string::npos);
  EXPECT_NE(necessity_table_text(GroupKind::S4).find("s4-n-ne-6"), std::string::npos);
}
