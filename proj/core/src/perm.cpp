#include "polytsg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polytsg/error.hpp"

namespace polytsg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::not_a_subgroup: return "NotASubgroup";
    case Errc::not_in_group: return "NotInGroup";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::mixed_parts: return "MixedParts";
    case Errc::part_size_too_small: return "PartSizeTooSmall";
    case Errc::not_realizable: return "NotRealizable";
    case Errc::hypothesis_violation: return "HypothesisViolation";
    case Errc::no_witness_found: return "NoWitnessFound";
    case Errc::no_such_edge: return "NoSuchEdge";
    case Errc::duplicate_token: return "DuplicateToken";
    case Errc::unknown_token: return "UnknownToken";
    case Errc::unbalanced_parenthesis: return "UnbalancedParenthesis";
  }
  return "Unknown";
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw Error(Errc::invalid_permutation, "image array is not a bijection");
    seen[y] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x])
        throw Error(Errc::invalid_permutation,
                    "cycle point out of range or repeated");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    q.images_[images_[i]] = static_cast<Point>(i);
  return q;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles(false))
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<Point>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    if (cycle.size() > 1 || include_fixed) out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Point> Perm::fixed_points() const {
  std::vector<Point> out;
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] == x) out.push_back(x);
  return out;
}

Perm operator*(const Perm& lhs, const Perm& rhs) {
  if (lhs.degree() != rhs.degree())
    throw Error(Errc::degree_mismatch, "composing permutations of different degree");
  Perm out;
  out.images_.resize(rhs.images_.size());
  for (std::size_t i = 0; i < rhs.images_.size(); ++i)
    out.images_[i] = lhs.images_[rhs.images_[i]];
  return out;
}

Perm pow(const Perm& p, std::uint64_t exponent) {
  Perm result = Perm::identity(p.degree());
  Perm base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1u;
  }
  return result;
}

std::string to_string(const Perm& p) {
  auto cs = p.cycles(false);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

}  // namespace polytsg
