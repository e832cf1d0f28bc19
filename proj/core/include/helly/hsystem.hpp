#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "helly/rational.hpp"

namespace helly {

using Vector = std::vector<Rational>;

/// A fixed list of halfspace normals a_0..a_{k-1} in R^dim.
///
/// Every H-convex set over the system is {x : <a_i, x> <= b_i for all i}
/// for some offset vector b. Normals need not positively span R^dim.
class HSystem {
 public:
  HSystem(std::size_t dim, std::vector<Vector> normals);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return normals_.size(); }
  const std::vector<Vector>& normals() const noexcept { return normals_; }
  const Vector& normal(std::size_t i) const { return normals_.at(i); }

  /// True iff normals are exactly (+e_1, -e_1, ..., +e_d, -e_d).
  bool is_box_system() const noexcept { return box_; }

  friend bool operator==(const HSystem& a, const HSystem& b) {
    return a.dim_ == b.dim_ && a.normals_ == b.normals_;
  }

 private:
  std::size_t dim_;
  std::vector<Vector> normals_;
  bool box_ = false;
};

using SystemPtr = std::shared_ptr<const HSystem>;

/// Normals (+e_1, -e_1, ..., +e_d, -e_d).
SystemPtr canonical_box_system(std::size_t dim);

SystemPtr make_system(std::size_t dim, std::vector<Vector> normals);

/// Same object, or structurally equal systems.
bool same_system(const SystemPtr& a, const SystemPtr& b);

/// An H-convex set given by its offset vector over a shared system.
class HSet {
 public:
  HSet(SystemPtr system, Vector offsets);

  const SystemPtr& system() const noexcept { return system_; }
  const Vector& offsets() const noexcept { return offsets_; }
  const Rational& offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t size() const noexcept { return offsets_.size(); }

  /// Point membership, closed halfspaces.
  bool contains(std::span<const Rational> point) const;

  friend bool operator==(const HSet& a, const HSet& b) {
    return same_system(a.system_, b.system_) && a.offsets_ == b.offsets_;
  }

 private:
  SystemPtr system_;
  Vector offsets_;
};

/// Axis-parallel box [lo, hi]; lo_j > hi_j encodes an empty box.
struct Box {
  Vector lo;
  Vector hi;

  friend bool operator==(const Box&, const Box&) = default;
};

HSet box_to_hset(const Box& box, const SystemPtr& system);
HSet box_to_hset(const Box& box);
Box hset_to_box(const HSet& set);

/// Componentwise minimum of offsets; throws on an empty list or mixed systems.
HSet intersect(std::span<const HSet> sets);
HSet intersect(const HSet& a, const HSet& b);

/// Compares the i-th translated halfspaces: Less iff H_i(a) is strictly inside H_i(b).
std::strong_ordering compare(const HSet& a, const HSet& b, std::size_t ordering);

/// Componentwise offset order; true implies a is a subset of b.
bool offset_leq(const HSet& a, const HSet& b);
bool offset_leq(std::span<const Rational> a, std::span<const Rational> b);

/// Indexed collection of H-sets over one system, addressed by stable string ids.
///
/// Position in the family is the tie-break key whenever an algorithm needs a
/// strict total order; witnesses always report ids.
class Family {
 public:
  explicit Family(SystemPtr system);

  void add(std::string id, HSet set);
  void add(std::string id, Vector offsets);

  const SystemPtr& system() const noexcept { return system_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const HSet& member(std::size_t i) const { return members_.at(i); }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  const std::vector<HSet>& members() const noexcept { return members_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  bool contains_id(const std::string& id) const { return index_.contains(id); }
  /// Throws Error("unknown member id ...") for dangling references.
  std::size_t index_of(const std::string& id) const;
  const HSet& by_id(const std::string& id) const { return members_[index_of(id)]; }

  /// Members at the given positions, in the given order.
  Family subfamily(std::span<const std::size_t> positions) const;
  Family subfamily_by_ids(std::span<const std::string> ids) const;

  std::vector<std::string> ids_of(std::span<const std::size_t> positions) const;

 private:
  SystemPtr system_;
  std::vector<HSet> members_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

HSet intersect(const Family& family);

/// Color classes over one system. The same member may appear in several classes.
class ColorClasses {
 public:
  explicit ColorClasses(std::vector<Family> classes);

  std::size_t size() const noexcept { return classes_.size(); }
  const Family& operator[](std::size_t c) const { return classes_.at(c); }
  const std::vector<Family>& classes() const noexcept { return classes_; }
  const SystemPtr& system() const { return classes_.front().system(); }

 private:
  std::vector<Family> classes_;
};

/// Positions of the family sorted by (offset_i, position).
std::vector<std::size_t> sorted_by_ordering(const Family& family, std::size_t ordering);

}  // namespace helly
