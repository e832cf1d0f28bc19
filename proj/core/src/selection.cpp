#include "helly/selection.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "helly/error.hpp"

namespace helly {

StrongHellyWitness strong_helly_witness(const Family& family) {
  if (family.empty()) throw Error("strong Helly witness of an empty family");
  const std::size_t k = family.system()->size();
  StrongHellyWitness w;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < family.size(); ++p) {
      if (family.member(p).offset(i) < family.member(best).offset(i)) best = p;
    }
    w.attained_by.push_back(family.id(best));
    w.intersection.push_back(family.member(best).offset(i));
    if (std::find(picked.begin(), picked.end(), best) == picked.end()) picked.push_back(best);
  }
  w.ids = family.ids_of(picked);
  return w;
}

namespace {

void check_nonempty_classes(const ColorClasses& classes) {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw Error("color class " + std::to_string(c) + " is empty");
  }
}

std::vector<ContainmentEntry> containment_certificate(const ColorClasses& classes,
                                                      const std::vector<std::string>& chosen,
                                                      const std::vector<std::size_t>& permutation,
                                                      const Family& pivot_members) {
  std::vector<ContainmentEntry> entries;
  entries.reserve(pivot_members.size());
  for (std::size_t m = 0; m < pivot_members.size(); ++m) {
    ContainmentEntry entry{pivot_members.id(m), {}};
    for (std::size_t h = 0; h < permutation.size(); ++h) {
      const std::size_t cls = permutation[h];
      const HSet& bounding = classes[cls].by_id(chosen[cls]);
      CoordinateBound b{h, cls, bounding.offset(h), pivot_members.member(m).offset(h)};
      if (b.member_offset < b.bound) throw std::logic_error("containment certificate does not hold");
      entry.bounds.push_back(std::move(b));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

SelectionWitness colorful_select(const ColorClasses& classes) {
  const std::size_t k = classes.system()->size();
  if (classes.size() != k) {
    throw Error("colorful selection needs " + std::to_string(k) + " classes, got " +
                std::to_string(classes.size()));
  }
  check_nonempty_classes(classes);

  SelectionWitness w;
  w.chosen.assign(k, std::string());
  std::vector<bool> consumed(k, false);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best_class = k;
    std::size_t best_pos = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (consumed[c]) continue;
      const Family& f = classes[c];
      for (std::size_t p = 0; p < f.size(); ++p) {
        if (best_class == k || f.member(p).offset(step) < classes[best_class].member(best_pos).offset(step)) {
          best_class = c;
          best_pos = p;
        }
      }
    }
    consumed[best_class] = true;
    w.chosen[best_class] = classes[best_class].id(best_pos);
    w.permutation.push_back(best_class);
  }
  w.pivot_class = w.permutation.back();
  w.certificate = containment_certificate(classes, w.chosen, w.permutation, classes[w.pivot_class]);
  return w;
}

bool precedes(const Family& before, const Family& after, std::size_t ordering) {
  if (before.empty() || after.empty()) return true;
  const Rational* hi = &before.member(0).offset(ordering);
  for (const HSet& s : before.members()) hi = &max(*hi, s.offset(ordering));
  for (const HSet& s : after.members()) {
    if (s.offset(ordering) < *hi) return false;
  }
  return true;
}

bool pairwise_consistent(const ColorClasses& classes) {
  const std::size_t k = classes.system()->size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      for (std::size_t h = 0; h < k; ++h) {
        if (!precedes(classes[i], classes[j], h) && !precedes(classes[j], classes[i], h)) return false;
      }
    }
  }
  return true;
}

SplitResult consistent_split(const Family& first, const Family& second, std::size_t ordering) {
  if (first.empty() || second.empty()) throw Error("consistent split of an empty family");
  if (!same_system(first.system(), second.system())) throw Error("mixed systems");
  if (ordering >= first.system()->size()) throw Error("ordering index out of range");

  struct Item {
    int tag;
    std::size_t pos;
  };
  std::vector<Item> merged;
  merged.reserve(first.size() + second.size());
  for (std::size_t p = 0; p < first.size(); ++p) merged.push_back({0, p});
  for (std::size_t p = 0; p < second.size(); ++p) merged.push_back({1, p});
  auto offset = [&](const Item& it) -> const Rational& {
    return (it.tag == 0 ? first : second).member(it.pos).offset(ordering);
  };
  std::stable_sort(merged.begin(), merged.end(),
                   [&](const Item& a, const Item& b) { return offset(a) < offset(b); });

  const std::size_t m = first.size();
  const std::size_t n = second.size();
  const std::size_t cut = (m + n) / 2;
  std::size_t first_in_prefix = 0;
  for (std::size_t t = 0; t < cut; ++t) first_in_prefix += merged[t].tag == 0 ? 1 : 0;

  // Take `want_first` members of `first` and `want_second` of `second`,
  // from the prefix or the suffix of the merged order.
  auto collect = [&](int tag, bool from_prefix, std::size_t want) {
    std::vector<std::size_t> picked;
    const std::size_t lo = from_prefix ? 0 : cut;
    const std::size_t hi = from_prefix ? cut : merged.size();
    for (std::size_t t = lo; t < hi && picked.size() < want; ++t) {
      if (merged[t].tag == tag) picked.push_back(merged[t].pos);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  };

  const bool first_leads = first_in_prefix >= m / 2;
  auto p1 = collect(0, first_leads, m / 2);
  auto p2 = collect(1, !first_leads, n / 2);
  if (p1.size() != m / 2 || p2.size() != n / 2) throw std::logic_error("consistent split undersized");
  return SplitResult{first.subfamily(p1), second.subfamily(p2),
                     first_leads ? SplitDirection::FirstPrecedes : SplitDirection::SecondPrecedes};
}

std::size_t grid_halvings(std::size_t class_count, std::size_t orderings) {
  return class_count == 0 ? 0 : (class_count - 1) * orderings;
}

ColorClasses consistent_grid(const ColorClasses& classes) {
  const std::size_t k = classes.system()->size();
  const std::size_t halvings = grid_halvings(classes.size(), k);
  if (halvings >= 62) throw Error("grid needs 2^" + std::to_string(halvings) + " members per class");
  const std::size_t required = std::size_t{1} << halvings;

  std::size_t common = SIZE_MAX;
  for (const Family& f : classes.classes()) common = std::min(common, std::bit_floor(f.size()));
  if (common < required) {
    throw Error("classes too small for a consistent grid: need at least " + std::to_string(required) +
                " members per class");
  }

  std::vector<Family> current;
  for (const Family& f : classes.classes()) {
    std::vector<std::size_t> by_id(f.size());
    std::iota(by_id.begin(), by_id.end(), std::size_t{0});
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return f.id(a) < f.id(b); });
    by_id.resize(common);
    std::sort(by_id.begin(), by_id.end());
    current.push_back(f.subfamily(by_id));
  }

  for (std::size_t i = 0; i < current.size(); ++i) {
    for (std::size_t j = i + 1; j < current.size(); ++j) {
      for (std::size_t h = 0; h < k; ++h) {
        SplitResult split = consistent_split(current[i], current[j], h);
        current[i] = std::move(split.first);
        current[j] = std::move(split.second);
      }
    }
  }
  return ColorClasses(std::move(current));
}

WeakColorfulResult weak_colorful_helly(const ColorClasses& classes) {
  const std::size_t halfspaces = classes.system()->size();
  if (halfspaces % 2 == 0) {
    throw Error("weak colorful Helly needs an odd number of halfspaces (2k+1), got " + std::to_string(halfspaces));
  }
  const std::size_t k = (halfspaces - 1) / 2;
  if (classes.size() != k + 1) {
    throw Error("weak colorful Helly needs " + std::to_string(k + 1) + " classes, got " +
                std::to_string(classes.size()));
  }
  const std::size_t exponent = k * (2 * k + 1);
  if (exponent + 1 >= 62) throw Error("weak colorful Helly size bound overflows");
  const std::size_t min_size = std::size_t{1} << (exponent + 1);
  const std::size_t size = classes[0].size();
  for (const Family& f : classes.classes()) {
    if (f.size() != size) throw Error("weak colorful Helly needs classes of equal size");
  }
  if (size < min_size) {
    throw Error("weak colorful Helly needs classes of at least " + std::to_string(min_size) + " members");
  }

  ColorClasses grid = consistent_grid(classes);

  // Minimal block per ordering, chosen by (min offset, max offset, class index).
  std::vector<std::size_t> minimal(halfspaces);
  for (std::size_t h = 0; h < halfspaces; ++h) {
    std::size_t best = 0;
    Rational best_lo, best_hi;
    for (std::size_t c = 0; c < grid.size(); ++c) {
      Rational lo = grid[c].member(0).offset(h);
      Rational hi = lo;
      for (const HSet& s : grid[c].members()) {
        lo = min(lo, s.offset(h));
        hi = max(hi, s.offset(h));
      }
      if (c == 0 || lo < best_lo || (lo == best_lo && hi < best_hi)) {
        best = c;
        best_lo = lo;
        best_hi = hi;
      }
    }
    minimal[h] = best;
    for (std::size_t c = 0; c < grid.size(); ++c) {
      if (c != best && !precedes(grid[best], grid[c], h)) throw std::logic_error("grid is not block ordered");
    }
  }

  // Pigeonhole: 2k+1 orderings over k+1 classes leave a class that is minimal at most once.
  std::vector<std::size_t> hits(grid.size(), 0);
  for (std::size_t c : minimal) ++hits[c];
  const std::size_t pivot = static_cast<std::size_t>(std::min_element(hits.begin(), hits.end()) - hits.begin());
  if (hits[pivot] > 1) throw std::logic_error("pigeonhole failed");

  SelectionWitness w;
  w.pivot_class = pivot;
  w.permutation = minimal;
  w.chosen.resize(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) w.chosen[c] = grid[c].id(0);
  auto own = std::find(minimal.begin(), minimal.end(), pivot);
  if (own != minimal.end()) {
    const std::size_t h0 = static_cast<std::size_t>(own - minimal.begin());
    std::size_t best = 0;
    for (std::size_t p = 1; p < grid[pivot].size(); ++p) {
      if (grid[pivot].member(p).offset(h0) < grid[pivot].member(best).offset(h0)) best = p;
    }
    w.chosen[pivot] = grid[pivot].id(best);
  }
  w.certificate = containment_certificate(grid, w.chosen, w.permutation, grid[pivot]);

  return WeakColorfulResult{std::move(w), grid[pivot], classes[pivot].size(), exponent};
}

mpz_class chain_size_bound(std::size_t orderings, std::size_t target) {
  if (orderings == 0) throw Error("chain bound needs at least one ordering");
  mpz_class base(static_cast<unsigned long>(target == 0 ? 0 : target - 1));
  mpz_class out(base);
  for (std::size_t i = 1; i < orderings; ++i) out *= out;  // squares k-1 times
  return out + 1;
}

namespace {

// Longest subsequence of `values` (indices into it) that is non-decreasing,
// or non-increasing when `descending` is set. Earliest-ending tails win ties.
std::vector<std::size_t> longest_monotone(const std::vector<const Rational*>& values, bool descending) {
  auto before = [&](const Rational& a, const Rational& b) { return descending ? b < a : a < b; };
  std::vector<std::size_t> tails;
  std::vector<std::size_t> parent(values.size(), SIZE_MAX);
  for (std::size_t t = 0; t < values.size(); ++t) {
    auto it = std::upper_bound(tails.begin(), tails.end(), t, [&](std::size_t x, std::size_t tail) {
      return before(*values[x], *values[tail]);
    });
    if (it != tails.begin()) parent[t] = *(it - 1);
    if (it == tails.end()) {
      tails.push_back(t);
    } else {
      *it = t;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t t = tails.empty() ? SIZE_MAX : tails.back(); t != SIZE_MAX; t = parent[t]) out.push_back(t);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<ChainWitness> consistent_chain(const Family& family, std::size_t target) {
  if (target < 2) throw Error("chain target must be at least 2");
  const std::size_t k = family.system()->size();
  if (family.size() < target) return std::nullopt;

  std::vector<std::size_t> order = sorted_by_ordering(family, 0);
  ChainWitness w;
  w.directions.push_back(ChainDirection::Ascending);
  for (std::size_t h = 1; h < k && order.size() >= target; ++h) {
    std::vector<const Rational*> values;
    values.reserve(order.size());
    for (std::size_t p : order) values.push_back(&family.member(p).offset(h));
    auto asc = longest_monotone(values, false);
    auto desc = longest_monotone(values, true);
    const bool ascending = asc.size() >= desc.size();
    const auto& keep = ascending ? asc : desc;
    std::vector<std::size_t> next;
    next.reserve(keep.size());
    for (std::size_t t : keep) next.push_back(order[t]);
    order = std::move(next);
    w.directions.push_back(ascending ? ChainDirection::Ascending : ChainDirection::Descending);
  }
  if (order.size() < target) return std::nullopt;
  order.resize(target);
  // A coordinate that is constant on the kept chain reports Ascending.
  for (std::size_t h = 0; h < k; ++h) {
    const Rational& first = family.member(order.front()).offset(h);
    if (std::all_of(order.begin(), order.end(), [&](std::size_t p) { return family.member(p).offset(h) == first; })) {
      w.directions[h] = ChainDirection::Ascending;
    }
  }
  w.ids = family.ids_of(order);
  return w;
}

bool is_consistent_chain(std::span<const HSet> chain, const ChainWitness& witness) {
  if (chain.empty() || witness.ids.size() != chain.size()) return false;
  const std::size_t k = chain.front().size();
  if (witness.directions.size() != k) return false;
  for (std::size_t h = 0; h < k; ++h) {
    const bool asc = witness.directions[h] == ChainDirection::Ascending;
    for (std::size_t t = 1; t < chain.size(); ++t) {
      const Rational& prev = chain[t - 1].offset(h);
      const Rational& cur = chain[t].offset(h);
      if (asc ? cur < prev : prev < cur) return false;
    }
  }
  return true;
}

HSet chain_intersection(std::span<const HSet> chain, const ChainWitness& witness) {
  if (!is_consistent_chain(chain, witness)) throw Error("not consistently ordered");
  HSet ends = intersect(chain.front(), chain.back());
  if (!(ends == intersect(chain))) throw std::logic_error("chain intersection does not collapse to its ends");
  return ends;
}

HSet chain_intersection(const Family& family, const ChainWitness& witness) {
  std::vector<HSet> chain;
  chain.reserve(witness.ids.size());
  for (const auto& id : witness.ids) chain.push_back(family.by_id(id));
  return chain_intersection(std::span<const HSet>(chain), witness);
}

}  // namespace helly
