#pragma once

#include <string>

#include "polytsg/classify.hpp"

namespace polytsg {

/// {"n", "group", "realizable", "rules", "profile", "construction", ...}
std::string verdict_json(const Verdict& v);
/// One summary line plus the deciding rules or construction checks.
std::string verdict_text(const Verdict& v);

/// Header `n,group,realizable,residue,rule_ids`; rule ids joined by ';'.
std::string sweep_csv(const SweepTable& t);
std::string sweep_json(const SweepTable& t);

std::string automorphism_text(const AutomorphismCheck& c);

/// The fixed-vertex profile rows for the group with their residues, and
/// the rules that exclude further n.
std::string necessity_table_text(GroupKind g);

}  // namespace polytsg
