#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polytsg/assignment.hpp"
#include "polytsg/bipartite.hpp"
#include "polytsg/hypotheses.hpp"
#include "polytsg/necessity.hpp"
#include "polytsg/realizability.hpp"

namespace polytsg {

inline constexpr std::size_t kDefaultSweepCap = 500;

struct Verdict {
  std::size_t n = 0;
  GroupKind group = GroupKind::A4;
  bool realizable = false;
  NecessityVerdict necessity;
  std::shared_ptr<const Construction> construction;
  std::optional<ConstructionReport> report;
  std::vector<Rule> rules;  // the excluding rules, or the construction used
  std::string diagnostic;   // why a pipeline step failed

  bool agrees_with_theorem() const { return realizable == theorem_predicate(n, group); }
};

/// Necessity first; when nothing excludes (n, group), build the
/// construction and verify it. Never throws for a valid group.
Verdict decide(std::size_t n, GroupKind group);

struct SweepRow {
  std::size_t n = 0;
  bool realizable = false;
  std::size_t residue = 0;
  std::vector<std::string> rule_ids;
  bool agrees_with_theorem = true;
};

struct ResidueSummary {
  std::size_t residue = 0;
  std::size_t rows = 0;
  std::size_t realizable = 0;
};

struct SweepTable {
  GroupKind group = GroupKind::A4;
  std::size_t n_max = 0;
  std::vector<SweepRow> rows;              // n = 0..n_max
  std::vector<ResidueSummary> by_residue;  // ascending residue

  bool agrees_with_theorem() const;
};

/// Throws Error(invalid_argument) when n_max exceeds cap.
SweepTable sweep(GroupKind group, std::size_t n_max, std::size_t cap = kDefaultSweepCap);

struct AutomorphismCheck {
  BipartiteAut aut;
  CycleProfile profile;
  RealizabilityResult result;
};

/// parse_cycles, validate_automorphism, check_realizable.
AutomorphismCheck check_automorphism(std::string_view cycles, std::size_t n);

}  // namespace polytsg
