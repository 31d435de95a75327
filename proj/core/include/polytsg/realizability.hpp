#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polytsg/bipartite.hpp"

namespace polytsg {

/// Which labeling of the parts a pattern matched under.
enum class Orientation : std::uint8_t { as_given, parts_swapped };

/// One matched exceptional-cycle pattern. `j`/`k` record the cycle lengths
/// the pattern used (0 when not applicable); `m` the fixed-vertex multiple.
struct CaseMatch {
  int case_id = 0;
  Orientation orientation = Orientation::as_given;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t m = 0;
};

struct RealizabilityResult {
  bool realizable = false;
  std::vector<int> cases;          // distinct case ids, ascending
  Orientation orientation = Orientation::as_given;  // of the first match
  std::vector<CaseMatch> matches;  // every (case, orientation, parameters) hit
};

/// Short description of an exceptional-cycle pattern, ids 1..9.
std::string_view case_description(int case_id);

/// Tests the cycle profile against the nine patterns of automorphisms that
/// some orientation-preserving homeomorphism of some embedding induces.
/// Cases are not exclusive; every match is reported. Both part labelings are
/// tried. Throws Error(part_size_too_small) when n <= 2.
RealizabilityResult check_realizable(const BipartiteAut& a);
RealizabilityResult check_realizable(const CycleProfile& p);

/// All cycle profiles on K_{n,n} of order exactly r accepted by
/// check_realizable, part-preserving first, each group in ascending profile
/// order. Requires 3 <= n <= 12 and 1 <= r <= 12.
std::vector<CycleProfile> enumerate_realizable_profiles(std::size_t n, std::uint64_t r);

}  // namespace polytsg
