#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "polytsg/perm.hpp"

namespace polytsg {

using ElementId = std::size_t;
using Rational = boost::rational<long long>;

/// A permutation group stored as its fully enumerated element list.
///
/// Elements are sorted lexicographically by image array, so the identity is
/// always element 0 and iteration order is stable across runs. The full
/// multiplication table is built at construction, so orders are capped at
/// 5000 elements (the largest used here is Aut(K_{4,4}), order 1152).
class FiniteGroup {
public:
  /// Closure of `generators` under composition. Throws Error(degree_mismatch)
  /// if a generator does not have degree `degree`.
  static FiniteGroup generate(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(ElementId id) const { return elements_[id]; }
  static constexpr ElementId identity() noexcept { return 0; }

  std::optional<ElementId> find(const Perm& p) const;
  /// Throws Error(not_in_group).
  ElementId index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p).has_value(); }

  ElementId multiply(ElementId a, ElementId b) const {
    return table_[a * elements_.size() + b];
  }
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  ElementId conjugate(ElementId x, ElementId g) const {
    return multiply(multiply(x, g), inverse(x));
  }
  std::uint64_t element_order(ElementId a) const { return orders_[a]; }

  /// Subgroup generated by the given elements, as a group in its own right.
  FiniteGroup subgroup(std::span<const ElementId> generators) const;
  /// Every element of `other` lies in this group (exhaustive containment).
  bool contains_group(const FiniteGroup& other) const;

private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint64_t> orders_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

struct ConjugacyClass {
  std::uint64_t element_order = 1;
  std::vector<ElementId> members;  // ascending

  ElementId representative() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

/// Classes ordered by their least member, so the identity class comes first.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group);

/// Subgroup generated by all squares; for S4 this is its A4.
FiniteGroup squares_subgroup(const FiniteGroup& group);

/// A left action of a finite group on labeled points: one permutation of the
/// points per group element, indexed by ElementId.
class GroupAction {
public:
  /// Throws Error(invalid_argument) when the image count or degrees disagree.
  GroupAction(GroupPtr group, std::vector<std::string> labels,
              std::vector<Perm> images);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t degree() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Perm& image(ElementId g) const { return images_[g]; }

  /// action(g*h) == action(g)∘action(h) for all pairs, identity acts trivially.
  bool is_homomorphism() const;
  /// Cheaper check over (element, generator) pairs; equivalent when the
  /// group's generators generate it.
  bool is_homomorphism_on_generators() const;

  /// Action on an invariant subset, points relabeled in the given order.
  /// Throws Error(invalid_argument) if the subset is not invariant.
  GroupAction restrict_to(std::span<const Point> points) const;

private:
  GroupPtr group_;
  std::vector<std::string> labels_;
  std::vector<Perm> images_;
};

GroupAction regular_action(GroupPtr group);

/// Action of `group` on the left cosets xH of `subgroup`. Cosets are listed in
/// order of their least element. Throws Error(not_a_subgroup).
GroupAction coset_action(GroupPtr group, const FiniteGroup& subgroup);

std::vector<Point> fixed_points(ElementId g, const GroupAction& action);

std::vector<std::vector<Point>> orbits(const GroupAction& action);

/// Orbit count computed two ways: union-find over the element images and
/// the Burnside average of fixed-point counts.
struct OrbitCount {
  std::size_t direct = 0;
  std::uint64_t fixed_point_sum = 0;
  std::size_t group_order = 1;

  Rational burnside_average() const {
    return Rational(static_cast<long long>(fixed_point_sum),
                    static_cast<long long>(group_order));
  }
  bool integral() const { return fixed_point_sum % group_order == 0; }
  bool agrees() const {
    return integral() && fixed_point_sum / group_order == direct;
  }
};

OrbitCount orbit_count(const GroupAction& action);

}  // namespace polytsg
