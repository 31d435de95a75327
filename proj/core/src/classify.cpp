#include "polytsg/classify.hpp"

#include <map>

#include "polytsg/cycle_notation.hpp"
#include "polytsg/error.hpp"

namespace polytsg {

Verdict decide(std::size_t n, GroupKind group) {
  Verdict v;
  v.n = n;
  v.group = group;
  v.necessity = necessity_verdict(n, group);
  if (!v.necessity.allowed) {
    v.rules = v.necessity.rules;
    return v;
  }
  try {
    v.construction = std::make_shared<const Construction>(build_assignment(group, n));
    v.report = verify_construction(*v.construction);
  } catch (const Error& e) {
    v.diagnostic = std::string(errc_name(e.code())) + ": " + e.what();
    return v;
  }
  v.rules = {{v.construction->id, v.construction->recipe}};
  v.realizable = v.report->passed();
  if (!v.realizable) {
    if (!v.report->fixed_counts.passed()) v.diagnostic = "fixed counts match no profile row";
    else if (const auto* c = v.report->edge_embedding.first_failure()) v.diagnostic = "edge embedding: " + c->witness;
    else if (!v.report->subgroup) v.diagnostic = "subgroup step: " + v.report->subgroup_error;
    else if (!v.report->automorphisms_realizable) v.diagnostic = "unrealizable " + v.report->realizability_witness;
    else v.diagnostic = "parent construction failed the edge embedding conditions";
  }
  return v;
}

bool SweepTable::agrees_with_theorem() const {
  for (const auto& r : rows)
    if (!r.agrees_with_theorem) return false;
  return true;
}

SweepTable sweep(GroupKind group, std::size_t n_max, std::size_t cap) {
  if (n_max > cap)
    throw Error(Errc::invalid_argument,
                "sweep limit " + std::to_string(n_max) + " exceeds the cap " + std::to_string(cap));
  SweepTable t;
  t.group = group;
  t.n_max = n_max;
  std::map<std::size_t, ResidueSummary> summary;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Verdict v = decide(n, group);
    SweepRow row{n, v.realizable, v.necessity.residue, {}, v.agrees_with_theorem()};
    for (const auto& r : v.rules) row.rule_ids.push_back(r.id);
    auto& s = summary[row.residue];
    s.residue = row.residue;
    ++s.rows;
    s.realizable += row.realizable ? 1 : 0;
    t.rows.push_back(std::move(row));
  }
  for (const auto& [r, s] : summary) t.by_residue.push_back(s);
  return t;
}

AutomorphismCheck check_automorphism(std::string_view cycles, std::size_t n) {
  if (n <= 2) throw Error(Errc::part_size_too_small, "the pattern list needs n > 2");
  BipartiteAut a = validate_automorphism(parse_cycles(cycles, n), n);
  CycleProfile p = cycle_profile(a);
  RealizabilityResult r = check_realizable(a);
  return {std::move(a), std::move(p), std::move(r)};
}

}  // namespace polytsg
