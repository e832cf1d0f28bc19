#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "helly/hsystem.hpp"

namespace helly {

/// A property of point sets that is preserved under taking supersets.
///
/// Built-ins: nonemptiness, volume >= v (box systems only), and containing at
/// least n points of a fixed finite set. AllOf/AnyOf compose them; both
/// compositions of monotone properties are monotone.
class MonotoneProperty {
 public:
  enum class Kind { NonEmpty, VolumeAtLeast, ContainsAtLeast, AllOf, AnyOf };

  static MonotoneProperty non_empty();
  static MonotoneProperty volume_at_least(Rational volume);
  static MonotoneProperty contains_at_least(std::size_t count, std::vector<Vector> points);
  static MonotoneProperty all_of(std::vector<MonotoneProperty> parts);
  static MonotoneProperty any_of(std::vector<MonotoneProperty> parts);

  Kind kind() const noexcept { return kind_; }
  const Rational& volume() const noexcept { return volume_; }
  std::size_t count() const noexcept { return count_; }
  const std::vector<Vector>& points() const noexcept { return points_; }
  const std::vector<MonotoneProperty>& parts() const noexcept { return parts_; }

  friend bool operator==(const MonotoneProperty&, const MonotoneProperty&) = default;

 private:
  explicit MonotoneProperty(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational volume_;
  std::size_t count_ = 0;
  std::vector<Vector> points_;
  std::vector<MonotoneProperty> parts_;
};

/// Decides P on the point set {x : <a_i, x> <= offsets_i}.
bool eval(const MonotoneProperty& property, const HSystem& system, std::span<const Rational> offsets);
bool eval(const MonotoneProperty& property, const HSet& set);

/// Nonemptiness. Box systems use the per-axis check, everything else
/// goes through Fourier-Motzkin elimination.
bool feasible(const HSystem& system, std::span<const Rational> offsets);
bool feasible(const HSet& set);

/// Exact Fourier-Motzkin elimination in the given variable order
/// (a permutation of 0..dim-1). Practical up to roughly dim 4, k 12.
bool fourier_motzkin_feasible(const HSystem& system, std::span<const Rational> offsets,
                              std::span<const std::size_t> elimination_order);

/// Product of max(0, hi_j - lo_j).
Rational box_volume(const Box& box);

std::size_t count_points(const HSet& set, std::span<const Vector> points);

}  // namespace helly
