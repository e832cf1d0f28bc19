#include "helly/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "helly/error.hpp"

namespace helly {
namespace {

void gate(std::size_t size, std::size_t bound, const char* what) {
  if (size > bound) {
    throw LimitError(std::string(what) + " is limited to " + std::to_string(bound) + ", got " + std::to_string(size));
  }
}

void gate_binomial(std::size_t n, std::size_t r, const Limits& limits) {
  if (binomial(mpz_class(static_cast<unsigned long>(n)), r) > mpz_class(static_cast<unsigned long>(limits.enumeration))) {
    throw LimitError("subset enumeration exceeds the enumeration limit");
  }
}

Vector meet(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = min(a[i], b[i]);
  return out;
}

Vector meet_positions(const Family& family, const std::vector<std::size_t>& positions) {
  Vector out = family.member(positions.front()).offsets();
  for (std::size_t t = 1; t < positions.size(); ++t) out = meet(out, family.member(positions[t]).offsets());
  return out;
}

bool next_comb(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t r = comb.size();
  for (std::size_t i = r; i-- > 0;) {
    if (comb[i] < n - r + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_comb(std::size_t r) {
  std::vector<std::size_t> c(r);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

std::vector<std::size_t> positions_of(const Family& family, const std::vector<std::string>& ids) {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(family.index_of(id));
  return out;
}

bool distinct(const std::vector<std::string>& ids) {
  std::set<std::string> seen(ids.begin(), ids.end());
  return seen.size() == ids.size();
}

bool leq(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> brute_min_witness(const Family& family, const Limits& limits) {
  if (family.empty()) throw Error("minimum witness of an empty family");
  gate(family.size(), limits.brute_family, "brute_min_witness family size");
  const Vector target = intersect(family).offsets();
  const std::size_t n = family.size();
  for (std::size_t s = 1; s <= n; ++s) {
    auto comb = first_comb(s);
    do {
      if (meet_positions(family, comb) == target) return family.ids_of(comb);
    } while (next_comb(comb, n));
  }
  throw std::logic_error("the whole family always witnesses itself");
}

HellyReport verify_monotone_helly(const Family& family, const MonotoneProperty& property,
                                  std::optional<std::size_t> arity, const Limits& limits) {
  if (family.empty()) throw Error("Helly check of an empty family");
  const std::size_t n = family.size();
  const std::size_t a = std::min(arity.value_or(family.system()->size()), n);
  if (a == 0) throw Error("arity must be positive");
  gate_binomial(n, a, limits);
  HellyReport report;
  report.hypothesis = true;
  auto comb = first_comb(a);
  do {
    if (!eval(property, *family.system(), meet_positions(family, comb))) {
      report.hypothesis = false;
      break;
    }
  } while (next_comb(comb, n));
  report.conclusion = eval(property, intersect(family));
  return report;
}

ColorfulReport brute_colorful(const ColorClasses& classes, const MonotoneProperty& property, const Limits& limits) {
  mpz_class product = 1;
  for (const Family& f : classes.classes()) {
    if (f.empty()) throw Error("color classes must be nonempty");
    product *= static_cast<unsigned long>(f.size());
  }
  if (product > mpz_class(static_cast<unsigned long>(limits.colorful_product))) {
    throw LimitError("brute_colorful transversal count " + product.get_str() + " exceeds the limit");
  }
  const HSystem& system = *classes.system();
  ColorfulReport report;
  report.hypothesis = true;
  std::vector<std::size_t> pick(classes.size(), 0);
  while (true) {
    Vector acc = classes[0].member(pick[0]).offsets();
    for (std::size_t c = 1; c < classes.size(); ++c) acc = meet(acc, classes[c].member(pick[c]).offsets());
    if (!eval(property, system, acc)) {
      report.hypothesis = false;
      for (std::size_t c = 0; c < classes.size(); ++c) report.failing_transversal.push_back(classes[c].id(pick[c]));
      break;
    }
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      if (++pick[c] < classes[c].size()) break;
      pick[c] = 0;
    }
    if (c == classes.size()) break;
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (eval(property, intersect(classes[c]))) {
      report.conclusion = true;
      report.intersecting_class = c;
      break;
    }
  }
  return report;
}

std::vector<std::string> brute_best_subfamily(const Family& family, const MonotoneProperty& property,
                                              const Limits& limits) {
  gate(family.size(), limits.brute_family, "brute_best_subfamily family size");
  const std::size_t n = family.size();
  const HSystem& system = *family.system();
  std::vector<std::size_t> best, current;
  auto search = [&](auto&& self, std::size_t i, const Vector& acc) -> void {
    if (current.size() + (n - i) <= best.size()) return;
    if (i == n) {
      best = current;
      return;
    }
    Vector next = current.empty() ? family.member(i).offsets() : meet(acc, family.member(i).offsets());
    if (eval(property, system, next)) {
      current.push_back(i);
      self(self, i + 1, next);
      current.pop_back();
    }
    self(self, i + 1, acc);
  };
  search(search, 0, Vector{});
  return family.ids_of(best);
}

std::optional<PiercingFamily> brute_pierce(const Family& family, const MonotoneProperty& property, std::size_t bound,
                                           const Limits& limits) {
  gate(family.size(), limits.pierce_family, "brute_pierce family size");
  gate(bound, limits.pierce_bound, "brute_pierce pin bound");
  const std::size_t n = family.size();
  const HSystem& system = *family.system();
  if (n == 0) return PiercingFamily{};

  std::vector<Vector> groups;
  std::vector<std::vector<std::size_t>> members;
  std::size_t cap = 0;
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const Vector& o = family.member(i).offsets();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      Vector next = meet(groups[g], o);
      if (!eval(property, system, next)) continue;
      Vector saved = std::exchange(groups[g], std::move(next));
      members[g].push_back(i);
      if (self(self, i + 1)) return true;
      members[g].pop_back();
      groups[g] = std::move(saved);
    }
    if (groups.size() < cap && eval(property, system, o)) {
      groups.push_back(o);
      members.push_back({i});
      if (self(self, i + 1)) return true;
      groups.pop_back();
      members.pop_back();
    }
    return false;
  };

  for (cap = 1; cap <= bound; ++cap) {
    groups.clear();
    members.clear();
    if (!assign(assign, 0)) continue;
    PiercingFamily out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      out.pins.push_back(Pin{family.ids_of(members[g]), HSet(family.system(), groups[g])});
    }
    out.cover.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t g = 0; g < out.pins.size(); ++g) {
        if (leq(out.pins[g].set.offsets(), family.member(i).offsets())) {
          out.cover[i] = g;
          break;
        }
      }
    }
    return out;
  }
  return std::nullopt;
}

TupleCount brute_density(const Family& family, std::size_t r, const MonotoneProperty& property,
                         const Limits& limits) {
  const std::size_t n = family.size();
  if (r == 0 || r > n) throw Error("tuple size must lie in [1, |F|]");
  gate_binomial(n, r, limits);
  TupleCount out;
  const HSystem& system = *family.system();
  std::vector<std::size_t> chosen;
  // Picks indices from the top down: chosen is strictly decreasing.
  auto walk = [&](auto&& self, std::size_t below) -> void {
    if (chosen.size() == r) {
      ++out.total;
      if (eval(property, system, meet_positions(family, chosen))) ++out.intersecting;
      return;
    }
    const std::size_t need = r - chosen.size();
    for (std::size_t i = below; i-- >= need;) {
      chosen.push_back(i);
      self(self, i);
      chosen.pop_back();
      if (i == 0) break;
    }
  };
  walk(walk, n);
  return out;
}

bool brute_product_has_tuple(const Family& family, const MonotoneProperty& property,
                             const std::vector<std::vector<std::string>>& prefixes, const Limits& limits) {
  mpz_class product = 1;
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& ids : prefixes) {
    if (ids.empty()) return false;
    pos.push_back(positions_of(family, ids));
    product *= static_cast<unsigned long>(ids.size());
  }
  if (pos.empty()) return false;
  if (product > mpz_class(static_cast<unsigned long>(limits.enumeration))) {
    throw LimitError("product scan exceeds the enumeration limit");
  }
  std::vector<std::size_t> pick(pos.size(), 0);
  while (true) {
    Vector acc = family.member(pos[0][pick[0]]).offsets();
    for (std::size_t i = 1; i < pos.size(); ++i) acc = meet(acc, family.member(pos[i][pick[i]]).offsets());
    if (eval(property, *family.system(), acc)) return true;
    std::size_t i = 0;
    for (; i < pos.size(); ++i) {
      if (++pick[i] < pos[i].size()) break;
      pick[i] = 0;
    }
    if (i == pos.size()) return false;
  }
}

bool brute_pq_hypothesis(const Family& family, const MonotoneProperty& property, std::size_t p, std::size_t q,
                         const Limits& limits) {
  const std::size_t n = family.size();
  if (q == 0 || p < q) throw Error("need p >= q >= 1");
  gate(n, limits.pq_family, "pq hypothesis family size");
  if (n < p) return true;
  auto outer = first_comb(p);
  do {
    bool found = false;
    auto inner = first_comb(q);
    do {
      std::vector<std::size_t> sub;
      for (std::size_t t : inner) sub.push_back(outer[t]);
      if (eval(property, *family.system(), meet_positions(family, sub))) {
        found = true;
        break;
      }
    } while (next_comb(inner, p));
    if (!found) return false;
  } while (next_comb(outer, n));
  return true;
}

bool verify_certificate(const Family& family, const StrongHellyWitness& witness) {
  if (family.empty()) return false;
  const std::size_t k = family.system()->size();
  const auto pos = positions_of(family, witness.ids);
  const auto attained = positions_of(family, witness.attained_by);
  if (pos.empty() || pos.size() > k || !distinct(witness.ids)) return false;
  if (attained.size() != k || witness.intersection.size() != k) return false;
  const Vector full = intersect(family).offsets();
  if (witness.intersection != full) return false;
  if (meet_positions(family, pos) != full) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (std::find(pos.begin(), pos.end(), attained[i]) == pos.end()) return false;
    if (family.member(attained[i]).offset(i) != full[i]) return false;
  }
  return true;
}

namespace {

bool check_entries(const ColorClasses& classes, const SelectionWitness& witness, const Family& pivot_members) {
  const std::size_t k = classes.system()->size();
  if (witness.permutation.size() != k) return false;
  Vector selection;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Vector& o = classes[c].by_id(witness.chosen[c]).offsets();
    selection = c == 0 ? o : meet(selection, o);
  }
  if (witness.certificate.size() != pivot_members.size()) return false;
  for (std::size_t m = 0; m < pivot_members.size(); ++m) {
    const ContainmentEntry& entry = witness.certificate[m];
    if (entry.member_id != pivot_members.id(m)) return false;
    const HSet& member = pivot_members.member(m);
    if (entry.bounds.size() != k) return false;
    for (std::size_t h = 0; h < k; ++h) {
      const CoordinateBound& b = entry.bounds[h];
      if (b.ordering != h || b.bounding_class != witness.permutation[h]) return false;
      if (b.bounding_class >= classes.size()) return false;
      if (b.bound != classes[b.bounding_class].by_id(witness.chosen[b.bounding_class]).offset(h)) return false;
      if (b.member_offset != member.offset(h)) return false;
      if (b.member_offset < b.bound) return false;
    }
    if (!leq(selection, member.offsets())) return false;
  }
  return true;
}

}  // namespace

bool verify_certificate(const ColorClasses& classes, const SelectionWitness& witness) {
  const std::size_t k = classes.system()->size();
  if (classes.size() != k || witness.chosen.size() != k) return false;
  std::vector<std::size_t> sorted = witness.permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) return false;
  }
  if (sorted.size() != k || witness.pivot_class != witness.permutation.back()) return false;
  return check_entries(classes, witness, classes[witness.pivot_class]);
}

bool verify_certificate(const ColorClasses& classes, const WeakColorfulResult& result) {
  const std::size_t halfspaces = classes.system()->size();
  if (halfspaces % 2 == 0) return false;
  const std::size_t k = (halfspaces - 1) / 2;
  const SelectionWitness& w = result.witness;
  if (classes.size() != k + 1 || w.chosen.size() != k + 1 || w.pivot_class > k) return false;
  if (result.exponent != k * (2 * k + 1)) return false;
  if (std::count(w.permutation.begin(), w.permutation.end(), w.pivot_class) > 1) return false;
  const Family& original = classes[w.pivot_class];
  if (result.original_size != original.size()) return false;
  const Family& pruned = result.pruned_class;
  if (!distinct(pruned.ids()) || pruned.empty()) return false;
  for (std::size_t m = 0; m < pruned.size(); ++m) {
    if (!(original.by_id(pruned.id(m)) == pruned.member(m))) return false;
  }
  mpz_class lhs = mpz_class(static_cast<unsigned long>(pruned.size()));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(result.exponent + 1));
  if (lhs * scale < mpz_class(static_cast<unsigned long>(original.size()))) return false;
  return check_entries(classes, w, pruned);
}

bool verify_certificate(const Family& family, const ChainWitness& witness) {
  const std::size_t k = family.system()->size();
  const auto pos = positions_of(family, witness.ids);
  if (pos.size() < 2 || !distinct(witness.ids) || witness.directions.size() != k) return false;
  std::vector<HSet> chain;
  for (std::size_t p : pos) chain.push_back(family.member(p));
  for (std::size_t h = 0; h < k; ++h) {
    bool constant = true;
    for (std::size_t t = 1; t < chain.size(); ++t) constant = constant && chain[t].offset(h) == chain[0].offset(h);
    if (constant && witness.directions[h] != ChainDirection::Ascending) return false;
    const bool asc = witness.directions[h] == ChainDirection::Ascending;
    for (std::size_t t = 1; t < chain.size(); ++t) {
      const Rational& a = chain[t - 1].offset(h);
      const Rational& b = chain[t].offset(h);
      if (asc ? b < a : a < b) return false;
    }
  }
  return true;
}

bool verify_certificate(const Family& family, const MonotoneProperty& property, const FractionalWitness& w) {
  const std::size_t n = family.size();
  const std::size_t k = family.system()->size();
  if (n == 0 || w.uniformity != k) return false;
  if (w.alpha.sign() <= 0 || w.alpha > Rational(1)) return false;
  const Rational nn(static_cast<long long>(n));
  if (w.prefix_bound != prefix_bound(w.alpha, k, n)) return false;
  if (w.prefix_size == 0 || w.prefix_size > w.prefix_bound) return false;
  if (w.gamma != Rational(static_cast<long long>(w.prefix_size)) / nn) return false;
  if (w.prefixes.size() != k || w.witness_tuple.size() != k) return false;

  std::vector<bool> discarded(n, false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto pos = positions_of(family, w.prefixes[i]);
    if (pos.size() != w.prefix_size || !distinct(w.prefixes[i])) return false;
    std::vector<bool> inside(n, false);
    for (std::size_t p : pos) inside[p] = discarded[p] = true;
    // A prefix under ordering i: nothing outside sits strictly below anything inside.
    Rational top = family.member(pos[0]).offset(i);
    for (std::size_t p : pos) top = max(top, family.member(p).offset(i));
    for (std::size_t p = 0; p < n; ++p) {
      if (!inside[p] && family.member(p).offset(i) < top) return false;
    }
    if (std::find(w.prefixes[i].begin(), w.prefixes[i].end(), w.witness_tuple[i]) == w.prefixes[i].end()) {
      return false;
    }
  }
  const auto tuple = positions_of(family, w.witness_tuple);
  const Vector witness = meet_positions(family, tuple);
  if (witness != w.witness_intersection) return false;
  if (!eval(property, *family.system(), witness)) return false;

  std::vector<std::string> expected;
  for (std::size_t p = 0; p < n; ++p) {
    if (!discarded[p]) expected.push_back(family.id(p));
  }
  if (expected != w.survivors) return false;
  std::vector<std::size_t> surv;
  for (const auto& id : w.survivors) {
    surv.push_back(family.index_of(id));
    if (!leq(witness, family.by_id(id).offsets())) return false;
  }
  if (!surv.empty() && !eval(property, *family.system(), meet_positions(family, surv))) return false;
  if (w.beta_achieved != Rational(static_cast<long long>(w.survivors.size())) / nn) return false;
  return w.beta_bound == beta_bound(w.alpha, k, n);
}

bool verify_certificate(const Family& family, const MonotoneProperty& property, const KPlusOneWitness& w) {
  const std::size_t halfspaces = family.system()->size();
  const std::size_t n = family.size();
  if (halfspaces % 2 == 0 || w.k * 2 + 1 != halfspaces || w.k == 0) return false;
  if (w.t_formula != kplus1_class_size(w.k) || w.t_used == 0) return false;
  const TupleCount edges = brute_density(family, w.k + 1, property);
  if (w.hypergraph_edges != edges.intersecting || w.tuples_total != edges.total) return false;
  if (w.measured_density != edges.density()) return false;
  if (w.copies.empty()) return false;

  std::set<std::string> used;
  for (const MultipartiteCopy& copy : w.copies) {
    if (copy.classes.size() != w.k + 1) return false;
    std::vector<Family> fams;
    for (const auto& cls : copy.classes) {
      if (cls.size() != w.t_used) return false;
      for (const auto& id : cls) {
        if (!used.insert(id).second) return false;
      }
      fams.push_back(family.subfamily_by_ids(cls));
    }
    std::vector<std::size_t> pick(fams.size(), 0);
    while (true) {
      Vector acc = fams[0].member(pick[0]).offsets();
      for (std::size_t c = 1; c < fams.size(); ++c) acc = meet(acc, fams[c].member(pick[c]).offsets());
      if (!eval(property, *family.system(), acc)) return false;
      std::size_t c = 0;
      for (; c < fams.size(); ++c) {
        if (++pick[c] < fams[c].size()) break;
        pick[c] = 0;
      }
      if (c == fams.size()) break;
    }
    if (!verify_certificate(ColorClasses(std::move(fams)), copy.weak)) return false;
  }

  const auto tuples = derived_tuples(family, w.copies, w.k, UINT64_MAX);
  if (w.accumulated_tuples == 0 || w.accumulated_tuples > tuples.size()) return false;
  for (const auto& t : tuples) {
    if (t.size() != halfspaces || !eval(property, *family.system(), meet_positions(family, t))) return false;
  }
  const mpz_class total = binomial(mpz_class(static_cast<unsigned long>(n)), halfspaces);
  if (w.alpha_prime != Rational(mpq_class(mpz_class(static_cast<unsigned long>(w.accumulated_tuples)), total))) {
    return false;
  }
  if (w.fractional.alpha != w.alpha_prime) return false;
  return verify_certificate(family, property, w.fractional);
}

bool verify_certificate(const Family& family, const MonotoneProperty& property, const PairsWitness& w) {
  const std::size_t k = family.system()->size();
  const std::size_t n = family.size();
  if (n < 2) return false;
  if (w.chain_bound != chain_size_bound(k, k) || w.c_k != pairs_threshold(k)) return false;
  if (!(w.alpha > Rational(1) - w.c_k) || w.alpha > Rational(1)) return false;
  if (w.alpha_prime != w.alpha + w.c_k - Rational(1)) return false;
  if (w.pair_density != brute_density(family, 2, property).density()) return false;
  if (n < k) return false;
  const TupleCount ktuples = brute_density(family, k, property);
  if (w.tuples_total != ktuples.total) return false;

  // Recount: sort each k-subset by ordering 0 (ties by position), then no
  // ordering may change direction along it.
  std::uint64_t chains = 0;
  auto comb = first_comb(k);
  do {
    bool pairs = true;
    for (std::size_t a = 0; a < k && pairs; ++a) {
      for (std::size_t b = a + 1; b < k && pairs; ++b) {
        pairs = eval(property, *family.system(), meet(family.member(comb[a]).offsets(), family.member(comb[b]).offsets()));
      }
    }
    if (k == 1) pairs = eval(property, family.member(comb[0]));
    if (!pairs) continue;
    std::vector<std::size_t> order = comb;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto c = family.member(a).offset(0) <=> family.member(b).offset(0);
      return c != 0 ? c < 0 : a < b;
    });
    bool ok = true;
    for (std::size_t h = 1; h < k && ok; ++h) {
      int seen = 0;
      for (std::size_t t = 1; t < order.size(); ++t) {
        const auto c = family.member(order[t]).offset(h) <=> family.member(order[t - 1]).offset(h);
        const int s = c < 0 ? -1 : (c > 0 ? 1 : 0);
        if (s != 0 && seen != 0 && s != seen) ok = false;
        if (s != 0) seen = s;
      }
    }
    if (ok) ++chains;
  } while (next_comb(comb, n));
  if (w.chain_tuples != chains || chains > ktuples.intersecting) return false;
  const bool certified = Rational(static_cast<long long>(chains)) >=
                         w.alpha_prime * Rational(static_cast<long long>(ktuples.total));
  if (w.hypothesis_certified != certified) return false;
  if (w.fractional.alpha != w.alpha_prime) return false;
  return verify_certificate(family, property, w.fractional);
}

bool verify_certificate(const Family& family, const MonotoneProperty& property, const PiercingFamily& pins) {
  const std::size_t n = family.size();
  if (pins.cover.size() != n) return false;
  if (n > 0 && pins.pins.empty()) return false;
  for (const Pin& pin : pins.pins) {
    if (!same_system(pin.set.system(), family.system())) return false;
    if (pin.source.empty() || !distinct(pin.source)) return false;
    if (meet_positions(family, positions_of(family, pin.source)) != pin.set.offsets()) return false;
    if (!eval(property, pin.set)) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    // The cover names the first pin contained in the member.
    std::size_t first = pins.pins.size();
    for (std::size_t g = 0; g < pins.pins.size(); ++g) {
      if (leq(pins.pins[g].set.offsets(), family.member(i).offsets())) {
        first = g;
        break;
      }
    }
    if (first == pins.pins.size() || pins.cover[i] != first) return false;
  }
  return true;
}

bool verify_certificate(const Family& family, const MonotoneProperty& property, std::size_t p, std::size_t q,
                        const HypothesisFailed& failure) {
  const auto pos = positions_of(family, failure.violating);
  if (!distinct(failure.violating)) return false;
  if (failure.reason == HypothesisFailed::Reason::MemberFailsProperty) {
    return pos.size() == 1 && !eval(property, family.member(pos[0]));
  }
  if (pos.size() != p || q == 0 || q > p) return false;
  auto inner = first_comb(q);
  do {
    std::vector<std::size_t> sub;
    for (std::size_t t : inner) sub.push_back(pos[t]);
    if (eval(property, *family.system(), meet_positions(family, sub))) return false;
  } while (next_comb(inner, p));
  return true;
}

}  // namespace helly
