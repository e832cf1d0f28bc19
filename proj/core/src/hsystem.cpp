#include "helly/hsystem.hpp"

#include <algorithm>
#include <numeric>

#include "helly/error.hpp"

namespace helly {

HSystem::HSystem(std::size_t dim, std::vector<Vector> normals)
    : dim_(dim), normals_(std::move(normals)) {
  if (dim_ == 0) throw Error("system dimension must be positive");
  if (normals_.empty()) throw Error("system needs at least one normal");
  for (const auto& n : normals_) {
    if (n.size() != dim_) throw Error("normal length does not match dimension");
    if (std::all_of(n.begin(), n.end(), [](const Rational& c) { return c.sign() == 0; })) {
      throw Error("normal vectors must be nonzero");
    }
  }
  if (normals_.size() == 2 * dim_) {
    box_ = true;
    for (std::size_t j = 0; j < dim_ && box_; ++j) {
      for (std::size_t c = 0; c < dim_; ++c) {
        Rational expect = (c == j) ? Rational(1) : Rational(0);
        if (normals_[2 * j][c] != expect || normals_[2 * j + 1][c] != -expect) {
          box_ = false;
          break;
        }
      }
    }
  }
}

SystemPtr canonical_box_system(std::size_t dim) {
  if (dim == 0) throw Error("dimension must be positive");
  std::vector<Vector> normals;
  normals.reserve(2 * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vector plus(dim, Rational(0));
    plus[j] = 1;
    Vector minus(dim, Rational(0));
    minus[j] = -1;
    normals.push_back(std::move(plus));
    normals.push_back(std::move(minus));
  }
  return std::make_shared<const HSystem>(dim, std::move(normals));
}

SystemPtr make_system(std::size_t dim, std::vector<Vector> normals) {
  return std::make_shared<const HSystem>(dim, std::move(normals));
}

bool same_system(const SystemPtr& a, const SystemPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

HSet::HSet(SystemPtr system, Vector offsets) : system_(std::move(system)), offsets_(std::move(offsets)) {
  if (!system_) throw Error("H-set without a system");
  if (offsets_.size() != system_->size()) throw Error("offset count does not match system");
}

bool HSet::contains(std::span<const Rational> point) const {
  if (point.size() != system_->dim()) throw Error("point dimension mismatch");
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    const Vector& a = system_->normal(i);
    Rational dot(0);
    for (std::size_t c = 0; c < point.size(); ++c) {
      if (a[c].sign() != 0) dot += a[c] * point[c];
    }
    if (dot > offsets_[i]) return false;
  }
  return true;
}

HSet box_to_hset(const Box& box, const SystemPtr& system) {
  if (!system->is_box_system()) throw Error("not a box system");
  if (box.lo.size() != system->dim() || box.hi.size() != system->dim()) {
    throw Error("box dimension mismatch");
  }
  Vector offsets;
  offsets.reserve(2 * box.lo.size());
  for (std::size_t j = 0; j < box.lo.size(); ++j) {
    offsets.push_back(box.hi[j]);
    offsets.push_back(-box.lo[j]);
  }
  return HSet(system, std::move(offsets));
}

HSet box_to_hset(const Box& box) {
  if (box.lo.size() != box.hi.size()) throw Error("box dimension mismatch");
  return box_to_hset(box, canonical_box_system(box.lo.size()));
}

Box hset_to_box(const HSet& set) {
  if (!set.system()->is_box_system()) throw Error("not a box system");
  Box box;
  const std::size_t dim = set.system()->dim();
  box.lo.reserve(dim);
  box.hi.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    box.hi.push_back(set.offset(2 * j));
    box.lo.push_back(-set.offset(2 * j + 1));
  }
  return box;
}

HSet intersect(std::span<const HSet> sets) {
  if (sets.empty()) throw Error("intersection of an empty list");
  Vector offsets = sets.front().offsets();
  for (const HSet& s : sets.subspan(1)) {
    if (!same_system(s.system(), sets.front().system())) throw Error("mixed systems");
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      if (s.offset(i) < offsets[i]) offsets[i] = s.offset(i);
    }
  }
  return HSet(sets.front().system(), std::move(offsets));
}

HSet intersect(const HSet& a, const HSet& b) {
  const HSet pair[] = {a, b};
  return intersect(std::span<const HSet>(pair));
}

HSet intersect(const Family& family) { return intersect(std::span<const HSet>(family.members())); }

std::strong_ordering compare(const HSet& a, const HSet& b, std::size_t ordering) {
  if (!same_system(a.system(), b.system())) throw Error("mixed systems");
  if (ordering >= a.size()) throw Error("ordering index out of range");
  return a.offset(ordering) <=> b.offset(ordering);
}

bool offset_leq(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error("offset length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

bool offset_leq(const HSet& a, const HSet& b) {
  if (!same_system(a.system(), b.system())) throw Error("mixed systems");
  return offset_leq(std::span<const Rational>(a.offsets()), std::span<const Rational>(b.offsets()));
}

Family::Family(SystemPtr system) : system_(std::move(system)) {
  if (!system_) throw Error("family without a system");
}

void Family::add(std::string id, HSet set) {
  if (!same_system(set.system(), system_)) throw Error("mixed systems");
  if (index_.contains(id)) throw Error("duplicate member id \"" + id + "\"");
  index_.emplace(id, members_.size());
  ids_.push_back(std::move(id));
  members_.push_back(std::move(set));
}

void Family::add(std::string id, Vector offsets) { add(std::move(id), HSet(system_, std::move(offsets))); }

std::size_t Family::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown member id \"" + id + "\"");
  return it->second;
}

Family Family::subfamily(std::span<const std::size_t> positions) const {
  Family out(system_);
  for (std::size_t p : positions) out.add(ids_.at(p), members_.at(p));
  return out;
}

Family Family::subfamily_by_ids(std::span<const std::string> ids) const {
  Family out(system_);
  for (const auto& id : ids) out.add(id, members_[index_of(id)]);
  return out;
}

std::vector<std::string> Family::ids_of(std::span<const std::size_t> positions) const {
  std::vector<std::string> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(ids_.at(p));
  return out;
}

ColorClasses::ColorClasses(std::vector<Family> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw Error("no color classes");
  for (const Family& f : classes_) {
    if (!same_system(f.system(), classes_.front().system())) throw Error("mixed systems");
  }
}

std::vector<std::size_t> sorted_by_ordering(const Family& family, std::size_t ordering) {
  if (ordering >= family.system()->size()) throw Error("ordering index out of range");
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family.member(a).offset(ordering) < family.member(b).offset(ordering);
  });
  return order;
}

}  // namespace helly
