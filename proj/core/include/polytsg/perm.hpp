#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polytsg {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image array.
///
/// Composition follows function notation: (p * q)(x) == p(q(x)), so an
/// action built from products is a left action.
class Perm {
public:
  Perm() = default;

  /// Throws Error(invalid_permutation) if `images` is not a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  /// Least t >= 1 with p^t == identity (lcm of the cycle lengths).
  std::uint64_t order() const;

  /// Cycle decomposition in normal form: each cycle starts at its least
  /// point and cycles are sorted by that point. Fixed points are included
  /// as 1-cycles when `include_fixed` is set.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;

  std::vector<Point> fixed_points() const;

  friend Perm operator*(const Perm& lhs, const Perm& rhs);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& lhs, const Perm& rhs) {
    return lhs.images_ <=> rhs.images_;
  }

private:
  std::vector<Point> images_;
};

Perm pow(const Perm& p, std::uint64_t exponent);

/// Zero-based cycle text such as "(0 1 2)(3 4)"; identity prints as "()".
std::string to_string(const Perm& p);

}  // namespace polytsg
