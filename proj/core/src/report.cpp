#include "polytsg/report.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

#include "polytsg/cycle_notation.hpp"

namespace polytsg {

using nlohmann::json;

namespace {

json profile_json(const FixedProfile& p) {
  json entries = json::array();
  for (const auto& e : p.entries)
    entries.push_back({{"order", e.order},
                       {"outside_subgroup", e.outside_subgroup},
                       {"v", to_string(e.v)},
                       {"w", to_string(e.w)}});
  return entries;
}

json labels(const VertexAssignment& a, std::span<const Point> vertices) {
  json out = json::array();
  for (Point x : vertices) out.push_back(a.vertex_label(x));
  return out;
}

std::string part_name(std::optional<Part> p) {
  if (!p) return "none";
  return *p == Part::V ? "V" : "W";
}

json edge_embedding_json(const EdgeEmbeddingReport& r, const VertexAssignment& a) {
  auto outcome = [](const ConditionOutcome& c) {
    return json{{"id", c.id}, {"passed", c.passed}, {"vacuous", c.vacuous}, {"witness", c.witness}};
  };
  json conditions = json::array();
  for (const auto& c : r.conditions) conditions.push_back(outcome(c));
  json arcs = json::array();
  for (const auto& arc : r.arcs) {
    json interior = json::array();
    for (Point p : arc.interior) interior.push_back(a.points()[p].label);
    arcs.push_back({{"axis", arc.axis}, {"ends", labels(a, arc.ends)}, {"interior", interior}});
  }
  return {{"passed", r.passed()}, {"axes", outcome(r.axes)}, {"conditions", conditions}, {"arcs", arcs}};
}

json construction_json(const Construction& c, const ConstructionReport& r) {
  const VertexAssignment& a = c.assignment;
  json blocks = json::array();
  for (const auto& b : a.blocks()) {
    json pts = json::array();
    for (Point p : b.points) pts.push_back(a.points()[p].label);
    blocks.push_back({{"name", b.name}, {"part", part_name(b.part)}, {"size", b.points.size()}, {"points", pts}});
  }

  json rows = json::array();
  for (const auto& row : r.fixed_counts.rows) {
    json stated = nullptr;
    if (row.stated) stated = {{"v", row.stated->v}, {"w", row.stated->w}};
    rows.push_back({{"order", row.order},
                    {"outside_subgroup", row.outside_subgroup},
                    {"class_size", row.class_size},
                    {"representative", to_string(a.group().element(row.representative))},
                    {"swaps_parts", row.swaps},
                    {"v", row.fix_v},
                    {"w", row.fix_w},
                    {"stated", stated}});
  }
  json fixed = {{"passed", r.fixed_counts.passed()},
                {"rows", rows},
                {"fixed_vertex_property", r.fixed_counts.fixed_vertex_property},
                {"profile_row", r.fixed_counts.profile_row ? json(*r.fixed_counts.profile_row) : json(nullptr)},
                {"discrepancies", r.fixed_counts.discrepancies}};

  json hypotheses = {{"edge_embedding", edge_embedding_json(r.edge_embedding, a)},
                     {"automorphisms_realizable", r.automorphisms_realizable},
                     {"realizability_witness", r.realizability_witness}};
  if (r.parent_edge_embedding)
    hypotheses["parent_edge_embedding"] = edge_embedding_json(*r.parent_edge_embedding, c.parent->assignment);

  const VertexAssignment& top = c.parent ? c.parent->assignment : a;
  json witness = {{"applied_to", c.parent ? c.parent->id : c.id}};
  if (r.subgroup) {
    const auto& s = *r.subgroup;
    witness["condition"] = s.condition;
    witness["edge"] = labels(top, s.forced.edge);
    witness["forced"] = labels(top, s.forced.vertices);
    witness["shape"] = {s.forced.shape.a, s.forced.shape.b};
    witness["psi"] = s.psi ? json(to_string(top.group().element(*s.psi))) : json(nullptr);
  } else {
    witness["error"] = r.subgroup_error;
  }
  witness["corollary_edge"] = r.corollary_edge ? labels(top, *r.corollary_edge) : json(nullptr);

  return {{"id", c.id},
          {"recipe", c.recipe},
          {"group_order", a.group().order()},
          {"free_orbits_per_part", c.free_orbits},
          {"blocks", blocks},
          {"fixed_counts", fixed},
          {"hypotheses", hypotheses},
          {"witness", witness}};
}

json rules_json(const std::vector<Rule>& rules) {
  json out = json::array();
  for (const auto& r : rules) out.push_back({{"id", r.id}, {"citation", r.citation}});
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

std::string verdict_json(const Verdict& v) {
  json j = {{"n", v.n},
            {"group", group_name(v.group)},
            {"realizable", v.realizable},
            {"residue", v.necessity.residue},
            {"rules", rules_json(v.rules)},
            {"profile", v.necessity.witness_profile ? profile_json(*v.necessity.witness_profile) : json(nullptr)},
            {"construction", v.construction && v.report ? construction_json(*v.construction, *v.report) : json(nullptr)},
            {"agrees_with_theorem", v.agrees_with_theorem()}};
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  return j.dump(2) + "\n";
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << group_name(v.group) << " n=" << v.n << ": " << (v.realizable ? "realizable" : "not realizable") << "\n";
  for (const auto& r : v.rules) os << "  " << r.id << ": " << r.citation << "\n";
  if (v.report) {
    const auto& r = *v.report;
    os << "  fixed counts: " << (r.fixed_counts.passed() ? "match" : "MISMATCH") << "\n";
    for (const auto& d : r.fixed_counts.discrepancies) os << "    note: " << d << "\n";
    os << "  edge embedding conditions: " << (r.edge_embedding.passed() ? "pass" : "FAIL") << "\n";
    if (r.subgroup)
      os << "  subgroup step: condition " << r.subgroup->condition << ", forced shape ("
         << r.subgroup->forced.shape.a << "," << r.subgroup->forced.shape.b << ")\n";
    os << "  induced automorphisms realizable: " << (r.automorphisms_realizable ? "yes" : "NO") << "\n";
  }
  if (!v.diagnostic.empty()) os << "  diagnostic: " << v.diagnostic << "\n";
  if (!v.agrees_with_theorem()) os << "  MISMATCH with the closed-form answer\n";
  return os.str();
}

std::string sweep_csv(const SweepTable& t) {
  std::ostringstream os;
  os << "n,group,realizable,residue,rule_ids\n";
  for (const auto& r : t.rows)
    os << r.n << ',' << group_name(t.group) << ',' << (r.realizable ? "true" : "false") << ',' << r.residue << ','
       << join(r.rule_ids, ";") << "\n";
  return os.str();
}

std::string sweep_json(const SweepTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"n", r.n}, {"realizable", r.realizable}, {"residue", r.residue}, {"rule_ids", r.rule_ids}});
  json summary = json::array();
  for (const auto& s : t.by_residue)
    summary.push_back({{"residue", s.residue}, {"rows", s.rows}, {"realizable", s.realizable}});
  json j = {{"group", group_name(t.group)}, {"max", t.n_max}, {"rows", rows}, {"by_residue", summary}};
  return j.dump(2) + "\n";
}

std::string automorphism_text(const AutomorphismCheck& c) {
  std::ostringstream os;
  const auto& p = c.profile;
  os << "automorphism " << print_cycles(c.aut.perm, c.aut.n) << " of K_{" << c.aut.n << "," << c.aut.n << "}\n";
  os << "  order " << p.order << ", " << (p.behavior == PartBehavior::swaps ? "swaps" : "preserves") << " parts\n";
  auto lengths = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s.empty() ? std::string("-") : s;
  };
  if (p.behavior == PartBehavior::swaps) {
    os << "  cycle lengths: " << lengths(p.cross_cycles) << "\n";
  } else {
    os << "  V cycle lengths: " << lengths(p.v_cycles) << "\n";
    os << "  W cycle lengths: " << lengths(p.w_cycles) << "\n";
  }
  os << "  realizable: " << (c.result.realizable ? "yes" : "no") << "\n";
  for (const auto& m : c.result.matches) {
    os << "  case " << m.case_id << (m.orientation == Orientation::parts_swapped ? " (parts swapped)" : "") << ": "
       << case_description(m.case_id) << "\n";
  }
  return os.str();
}

std::string necessity_table_text(GroupKind g) {
  const GroupKind table = g == GroupKind::A5 ? GroupKind::A5 : GroupKind::A4;
  const std::size_t modulus = group_order(table);
  std::ostringstream os;
  os << group_name(g) << ": fixed-vertex profiles";
  if (table != g) os << " (from its A4 subgroup)";
  os << "\n";
  std::size_t i = 0;
  for (const auto& row : enumerate_profiles(table)) {
    os << "  " << ++i << ". n = " << row.residue << " mod " << modulus << ":";
    for (const auto& e : row.profile.entries)
      os << "  order " << e.order << " (" << to_string(e.v) << ", " << to_string(e.w) << ")";
    os << "\n";
  }
  std::map<std::string, std::string> rules;
  for (std::size_t n = 0; n <= 2 * modulus; ++n)
    for (const auto& r : necessity_verdict(n, g).rules) rules.emplace(r.id, r.citation);
  os << "rules:\n";
  for (const auto& [id, why] : rules) os << "  " << id << ": " << why << "\n";
  return os.str();
}

}  // namespace polytsg
