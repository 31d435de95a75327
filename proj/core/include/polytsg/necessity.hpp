#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polytsg/group.hpp"

namespace polytsg {

enum class GroupKind : std::uint8_t { A4, S4, A5 };

std::string_view group_name(GroupKind g);
/// Accepts "A4", "S4", "A5" (case-insensitive). Throws Error(invalid_argument).
GroupKind parse_group_kind(std::string_view text);
std::size_t group_order(GroupKind g);

/// A fixed-vertex count known exactly or only as a multiple of some base.
struct FixedCount {
  enum class Kind : std::uint8_t { exact, multiple_of };
  Kind kind = Kind::exact;
  std::size_t value = 0;  // the constant, or the base of the multiple

  static FixedCount exact(std::size_t c) { return {Kind::exact, c}; }
  static FixedCount multiple_of(std::size_t k) { return {Kind::multiple_of, k}; }

  bool admits(std::size_t count) const {
    return kind == Kind::exact ? count == value : count % value == 0;
  }
  friend bool operator==(const FixedCount&, const FixedCount&) = default;
};

/// "2", or "4l" / "3k" / "5m" / "2m" for multiples.
std::string to_string(const FixedCount& c);

/// Fixed counts for one class of elements: all elements of `order`, or for
/// S4 with `outside_subgroup` set, the involutions outside its A4.
struct ProfileEntry {
  std::uint64_t order = 1;
  bool outside_subgroup = false;
  FixedCount v;
  FixedCount w;
  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

struct FixedProfile {
  std::vector<ProfileEntry> entries;

  const ProfileEntry* find(std::uint64_t order, bool outside_subgroup = false) const;
  friend bool operator==(const FixedProfile&, const FixedProfile&) = default;
};

/// Number of group elements an entry stands for (A5 order 3 -> 20, ...).
std::size_t class_weight(GroupKind g, const ProfileEntry& e);

/// Residues of n mod |G| for which the Burnside sum over V,
/// n + Σ weight·n_o^v, is divisible by |G| for every choice of the multiples.
/// Empty when the residue depends on the multiplier.
std::vector<std::size_t> burnside_residues(GroupKind g, const FixedProfile& p);

struct ProfileRow {
  FixedProfile profile;
  std::size_t residue = 0;
};

/// Every profile the cycle-structure options allow, before the exclusion
/// filters. Rows whose residue is not determined get residue = |G|.
std::vector<ProfileRow> candidate_profiles(GroupKind g);
/// The surviving rows: 5 for A4, 8 for A5. Throws Error(invalid_argument)
/// for S4, which inherits the A4 rows.
std::vector<ProfileRow> enumerate_profiles(GroupKind g);
/// Residues mod 12 (A4, S4) or mod 60 (A5) that some row allows, ascending.
std::vector<std::size_t> allowed_residues(GroupKind g);

/// c + a·m2 with exact rational coefficients.
struct LinearForm {
  Rational constant;
  Rational m2_coefficient;

  Rational at(long long m2) const { return constant + m2_coefficient * Rational(m2); }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};
std::string to_string(const LinearForm& f);

/// Fixed V-vertex counts for S4; m2v unset means keep it symbolic.
struct S4Counts {
  std::size_t n2v = 0;
  std::size_t n3v = 0;
  std::size_t n4v = 0;
  std::optional<std::size_t> m2v;
};

/// (1/24)(n + 3 n2v + 8 n3v + 6 m2v + 6 n4v).
LinearForm s4_burnside_orbits(std::size_t n, const S4Counts& c);

/// True iff `count` is a nonnegative integer combination of `sizes`.
bool partition_feasible(std::size_t count, const std::vector<std::size_t>& sizes);

/// Orbit sizes available to points off the two centers under the
/// dodecahedral A5 action.
inline const std::vector<std::size_t> kA5NonCentralOrbitSizes{12, 20, 30, 60};

/// The case analysis that rules out S4 acting on K_{6,6}.
struct S4SixCase {
  std::size_t n4v = 0;
  LinearForm orbits;
  std::size_t m2_min = 0;
  std::vector<std::size_t> integral_m2;  // m2v in [m2_min, n] giving an integer
  std::vector<std::pair<std::size_t, std::string>> eliminated;  // m2v, reason
  bool closed() const { return eliminated.size() == integral_m2.size(); }
};
struct S4SixDerivation {
  std::size_t n = 6;
  std::size_t n2v = 2;
  std::size_t k = 1;  // order-3 axes carry 3k V-vertices
  std::vector<S4SixCase> cases;
  bool contradiction() const;
};
S4SixDerivation derive_s4_n6_exclusion();

struct Rule {
  std::string id;
  std::string citation;
};

struct NecessityVerdict {
  std::size_t n = 0;
  GroupKind group = GroupKind::A4;
  bool allowed = false;
  std::size_t residue = 0;  // n mod 12 or 60
  std::vector<Rule> rules;  // the rules that excluded (n, group)
  std::optional<FixedProfile> witness_profile;
};

NecessityVerdict necessity_verdict(std::size_t n, GroupKind g);

/// The closed-form answer, for cross-checking.
bool theorem_predicate(std::size_t n, GroupKind g);

}  // namespace polytsg
