#include "helly/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "helly/error.hpp"

namespace helly {

MonotoneProperty MonotoneProperty::non_empty() { return MonotoneProperty(Kind::NonEmpty); }

MonotoneProperty MonotoneProperty::volume_at_least(Rational volume) {
  if (volume.sign() < 0) throw Error("volume threshold must be nonnegative");
  MonotoneProperty p(Kind::VolumeAtLeast);
  p.volume_ = std::move(volume);
  return p;
}

MonotoneProperty MonotoneProperty::contains_at_least(std::size_t count, std::vector<Vector> points) {
  if (count == 0) throw Error("point count must be positive");
  for (const auto& pt : points) {
    if (pt.size() != points.front().size()) throw Error("points of mixed dimension");
  }
  MonotoneProperty p(Kind::ContainsAtLeast);
  p.count_ = count;
  p.points_ = std::move(points);
  return p;
}

MonotoneProperty MonotoneProperty::all_of(std::vector<MonotoneProperty> parts) {
  MonotoneProperty p(Kind::AllOf);
  p.parts_ = std::move(parts);
  return p;
}

MonotoneProperty MonotoneProperty::any_of(std::vector<MonotoneProperty> parts) {
  MonotoneProperty p(Kind::AnyOf);
  p.parts_ = std::move(parts);
  return p;
}

namespace {

bool box_nonempty(std::span<const Rational> offsets) {
  // hi_j = b_{2j}, lo_j = -b_{2j+1}; nonempty iff b_{2j} + b_{2j+1} >= 0.
  for (std::size_t j = 0; j + 1 < offsets.size(); j += 2) {
    if (offsets[j] < -offsets[j + 1]) return false;
  }
  return true;
}

Rational box_volume_from_offsets(std::span<const Rational> offsets) {
  Rational volume(1);
  for (std::size_t j = 0; j + 1 < offsets.size(); j += 2) {
    Rational side = offsets[j] + offsets[j + 1];
    if (side.sign() <= 0) return Rational(0);
    volume *= side;
  }
  return volume;
}

std::size_t count_points_raw(const HSystem& system, std::span<const Rational> offsets,
                             std::span<const Vector> points, std::size_t stop_at) {
  std::size_t count = 0;
  for (const Vector& pt : points) {
    if (pt.size() != system.dim()) throw Error("point dimension mismatch");
    bool inside = true;
    for (std::size_t i = 0; i < offsets.size() && inside; ++i) {
      const Vector& a = system.normal(i);
      Rational dot(0);
      for (std::size_t c = 0; c < pt.size(); ++c) {
        if (a[c].sign() != 0) dot += a[c] * pt[c];
      }
      inside = dot <= offsets[i];
    }
    if (inside && ++count >= stop_at) return count;
  }
  return count;
}

struct Row {
  Vector coef;
  Rational rhs;
};

// Scales so the first nonzero coefficient is +-1. Returns false for an all-zero row.
bool normalize(Row& row) {
  auto it = std::find_if(row.coef.begin(), row.coef.end(), [](const Rational& c) { return c.sign() != 0; });
  if (it == row.coef.end()) return false;
  Rational scale = it->abs();
  if (scale != Rational(1)) {
    for (auto& c : row.coef) {
      if (c.sign() != 0) c /= scale;
    }
    row.rhs /= scale;
  }
  return true;
}

}  // namespace

bool fourier_motzkin_feasible(const HSystem& system, std::span<const Rational> offsets,
                              std::span<const std::size_t> elimination_order) {
  const std::size_t dim = system.dim();
  if (offsets.size() != system.size()) throw Error("offset count does not match system");
  if (elimination_order.size() != dim) throw Error("elimination order must cover every variable");
  {
    std::vector<std::size_t> sorted(elimination_order.begin(), elimination_order.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < dim; ++i) {
      if (sorted[i] != i) throw Error("elimination order is not a permutation");
    }
  }

  // Parallel rows are merged by keeping the tightest right-hand side.
  std::map<Vector, Rational> rows;
  auto insert = [&](Row row) {
    if (!normalize(row)) return row.rhs.sign() >= 0;
    auto [it, inserted] = rows.try_emplace(std::move(row.coef), row.rhs);
    if (!inserted && row.rhs < it->second) it->second = row.rhs;
    return true;
  };

  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (!insert(Row{system.normal(i), offsets[i]})) return false;
  }

  for (std::size_t var : elimination_order) {
    std::vector<Row> pos, neg;
    std::map<Vector, Rational> next;
    for (auto& [coef, rhs] : rows) {
      int s = coef[var].sign();
      if (s > 0) {
        pos.push_back(Row{coef, rhs});
      } else if (s < 0) {
        neg.push_back(Row{coef, rhs});
      } else {
        next.emplace(coef, rhs);
      }
    }
    rows = std::move(next);
    for (const Row& p : pos) {
      for (const Row& n : neg) {
        Rational sp = p.coef[var];
        Rational sn = -n.coef[var];
        Row combined{Vector(dim), p.rhs / sp + n.rhs / sn};
        for (std::size_t c = 0; c < dim; ++c) {
          if (c == var) continue;
          combined.coef[c] = p.coef[c] / sp + n.coef[c] / sn;
        }
        if (!insert(std::move(combined))) return false;
      }
    }
  }
  return true;
}

bool feasible(const HSystem& system, std::span<const Rational> offsets) {
  if (offsets.size() != system.size()) throw Error("offset count does not match system");
  if (system.is_box_system()) return box_nonempty(offsets);
  std::vector<std::size_t> order(system.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return fourier_motzkin_feasible(system, offsets, order);
}

bool feasible(const HSet& set) { return feasible(*set.system(), set.offsets()); }

bool eval(const MonotoneProperty& property, const HSystem& system, std::span<const Rational> offsets) {
  switch (property.kind()) {
    case MonotoneProperty::Kind::NonEmpty:
      return feasible(system, offsets);
    case MonotoneProperty::Kind::VolumeAtLeast:
      if (!system.is_box_system()) throw Error("volume unsupported");
      if (property.volume().sign() == 0) return true;
      return box_volume_from_offsets(offsets) >= property.volume();
    case MonotoneProperty::Kind::ContainsAtLeast:
      if (!property.points().empty() && property.points().front().size() != system.dim()) {
        throw Error("point dimension mismatch");
      }
      return count_points_raw(system, offsets, property.points(), property.count()) >= property.count();
    case MonotoneProperty::Kind::AllOf:
      return std::all_of(property.parts().begin(), property.parts().end(),
                         [&](const MonotoneProperty& p) { return eval(p, system, offsets); });
    case MonotoneProperty::Kind::AnyOf:
      return std::any_of(property.parts().begin(), property.parts().end(),
                         [&](const MonotoneProperty& p) { return eval(p, system, offsets); });
  }
  return false;
}

bool eval(const MonotoneProperty& property, const HSet& set) {
  return eval(property, *set.system(), set.offsets());
}

Rational box_volume(const Box& box) {
  if (box.lo.size() != box.hi.size()) throw Error("box dimension mismatch");
  Rational volume(1);
  for (std::size_t j = 0; j < box.lo.size(); ++j) {
    Rational side = box.hi[j] - box.lo[j];
    if (side.sign() <= 0) return Rational(0);
    volume *= side;
  }
  return volume;
}

std::size_t count_points(const HSet& set, std::span<const Vector> points) {
  return count_points_raw(*set.system(), set.offsets(), points, points.size() + 1);
}

}  // namespace helly
