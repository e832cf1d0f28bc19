#include "helly/fractional.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "helly/error.hpp"
#include "tuple_scan.hpp"

namespace helly {
namespace {

std::uint64_t checked_binomial(std::size_t n, std::size_t r, const Limits& limits) {
  mpz_class total = binomial(mpz_class(static_cast<unsigned long>(n)), r);
  if (total > mpz_class(static_cast<unsigned long>(limits.enumeration))) {
    throw LimitError("enumerating C(" + std::to_string(n) + ", " + std::to_string(r) + ") = " + total.get_str() +
                     " subsets exceeds the enumeration limit");
  }
  return total.get_ui();
}

void check_alpha(const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha > Rational(1)) throw Error("alpha must lie in (0, 1]");
}

}  // namespace

Rational TupleCount::density() const {
  if (total == 0) return Rational(0);
  return Rational(static_cast<long long>(intersecting)) / Rational(static_cast<long long>(total));
}

TupleCount count_intersecting(const Family& family, std::size_t r, const MonotoneProperty& property,
                              const Limits& limits) {
  if (r == 0) throw Error("tuple size must be positive");
  if (r > family.size()) throw Error("tuple size exceeds family size");
  TupleCount out;
  out.total = checked_binomial(family.size(), r, limits);
  detail::TupleScanner scanner(family, r, property);
  scanner.run([&](std::span<const std::size_t>) {
    ++out.intersecting;
    return true;
  });
  return out;
}

Rational density(const Family& family, std::size_t r, const MonotoneProperty& property) {
  return count_intersecting(family, r, property).density();
}

std::size_t prefix_bound(const Rational& alpha, std::size_t k, std::size_t n) {
  check_alpha(alpha);
  if (n == 0) throw Error("prefix bound of an empty family");
  const Rational slack = Rational(1) - alpha;
  const unsigned power = static_cast<unsigned>(k + 1);
  // Smallest p with (p/n)^(k+1) >= 1 - alpha; the predicate is monotone in p.
  std::size_t lo = 0, hi = n;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    Rational frac = Rational(static_cast<long long>(mid)) / Rational(static_cast<long long>(n));
    if (frac.pow(power) >= slack) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::max<std::size_t>(lo, 1);
}

long long beta_bound(const Rational& alpha, std::size_t k, std::size_t n) {
  check_alpha(alpha);
  const Rational slack = Rational(1) - alpha;
  const unsigned power = static_cast<unsigned>(k + 1);
  const long long nn = static_cast<long long>(n);
  const long long kk = static_cast<long long>(k);
  auto ok = [&](long long m) {
    if (nn - m <= 0) return true;
    Rational frac = Rational(nn - m) / Rational(nn * kk);
    return frac.pow(power) <= slack;
  };
  long long lo = nn - nn * kk, hi = nn;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

namespace {

class ProductSearch {
 public:
  ProductSearch(const Family& family, const MonotoneProperty& property,
                const std::vector<std::vector<std::size_t>>& orders)
      : family_(family), property_(property), orders_(orders), choice_(orders.size()), buffers_(orders.size()) {}

  std::optional<std::vector<std::size_t>> exhaustive(std::size_t prefix) {
    prefix_ = prefix;
    if (descend(0)) return choice_;
    return std::nullopt;
  }

  std::optional<std::vector<std::size_t>> sample(std::size_t prefix, std::uint64_t budget, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t k = orders_.size();
    Vector buf;
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
      for (std::size_t i = 0; i < k; ++i) choice_[i] = orders_[i][rng() % prefix];
      buf = family_.member(choice_[0]).offsets();
      for (std::size_t i = 1; i < k; ++i) {
        const Vector& o = family_.member(choice_[i]).offsets();
        for (std::size_t c = 0; c < buf.size(); ++c) buf[c] = min(buf[c], o[c]);
      }
      if (eval(property_, *family_.system(), buf)) return choice_;
    }
    return std::nullopt;
  }

 private:
  bool descend(std::size_t depth) {
    const std::size_t k = orders_.size();
    for (std::size_t t = 0; t < prefix_; ++t) {
      const std::size_t pos = orders_[depth][t];
      choice_[depth] = pos;
      const Vector& offsets = family_.member(pos).offsets();
      Vector& buf = buffers_[depth];
      if (depth == 0) {
        buf = offsets;
      } else {
        const Vector& prev = buffers_[depth - 1];
        buf.resize(offsets.size());
        for (std::size_t c = 0; c < offsets.size(); ++c) buf[c] = offsets[c] < prev[c] ? offsets[c] : prev[c];
      }
      if (!eval(property_, *family_.system(), buf)) continue;
      if (depth + 1 == k || descend(depth + 1)) return true;
    }
    return false;
  }

  const Family& family_;
  const MonotoneProperty& property_;
  const std::vector<std::vector<std::size_t>>& orders_;
  std::size_t prefix_ = 0;
  std::vector<std::size_t> choice_;
  std::vector<Vector> buffers_;
};

}  // namespace

std::optional<FractionalWitness> fractional_k(const Family& family, const MonotoneProperty& property,
                                              const Rational& alpha, const FractionalOptions& options) {
  check_alpha(alpha);
  if (family.empty()) throw Error("fractional Helly on an empty family");
  const std::size_t n = family.size();
  const std::size_t k = family.system()->size();

  std::vector<std::vector<std::size_t>> orders;
  orders.reserve(k);
  for (std::size_t i = 0; i < k; ++i) orders.push_back(sorted_by_ordering(family, i));

  const std::size_t bound = prefix_bound(alpha, k, n);
  ProductSearch search(family, property, orders);
  std::size_t prefix = bound;
  std::optional<std::vector<std::size_t>> tuple;
  if (options.sample) {
    tuple = search.sample(prefix, options.sample_budget, options.seed);
  } else {
    tuple = search.exhaustive(prefix);
    if (tuple && options.policy == PrefixPolicy::Minimal) {
      // Success is monotone in the prefix size, so bisect for the smallest.
      std::size_t lo = 1, hi = bound;
      while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (auto found = search.exhaustive(mid)) {
          hi = mid;
          tuple = std::move(found);
        } else {
          lo = mid + 1;
        }
      }
      prefix = lo;
      tuple = search.exhaustive(prefix);
    }
  }
  if (!tuple) return std::nullopt;

  FractionalWitness w;
  w.alpha = alpha;
  w.uniformity = k;
  w.prefix_bound = bound;
  w.prefix_size = prefix;
  w.gamma = Rational(static_cast<long long>(prefix)) / Rational(static_cast<long long>(n));
  std::vector<bool> discarded(n, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> head(orders[i].begin(), orders[i].begin() + static_cast<std::ptrdiff_t>(prefix));
    for (std::size_t pos : head) discarded[pos] = true;
    w.prefixes.push_back(family.ids_of(head));
  }
  w.witness_tuple = family.ids_of(*tuple);
  std::vector<HSet> tuple_sets;
  for (std::size_t pos : *tuple) tuple_sets.push_back(family.member(pos));
  HSet witness = intersect(std::span<const HSet>(tuple_sets));
  if (!eval(property, witness)) throw std::logic_error("fractional witness fails the property");
  w.witness_intersection = witness.offsets();
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (discarded[pos]) continue;
    if (!offset_leq(witness, family.member(pos))) throw std::logic_error("survivor does not contain the witness");
    w.survivors.push_back(family.id(pos));
  }
  w.beta_achieved = Rational(static_cast<long long>(w.survivors.size())) / Rational(static_cast<long long>(n));
  w.beta_bound = beta_bound(alpha, k, n);
  return w;
}

std::size_t VectorHash::operator()(const std::vector<std::size_t>& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t x : v) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool Hypergraph::has_edge(std::vector<std::size_t> tuple) const {
  std::sort(tuple.begin(), tuple.end());
  return edge_set.contains(tuple);
}

std::vector<std::size_t> Hypergraph::degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    for (std::size_t v : e) ++deg[v];
  }
  return deg;
}

Hypergraph build_hypergraph(const Family& family, std::size_t r, const MonotoneProperty& property,
                            const Limits& limits) {
  if (r == 0) throw Error("tuple size must be positive");
  if (r > family.size()) throw Error("tuple size exceeds family size");
  checked_binomial(family.size(), r, limits);
  Hypergraph g;
  g.vertices = family.ids();
  g.uniformity = r;
  detail::TupleScanner scanner(family, r, property);
  scanner.run([&](std::span<const std::size_t> tuple) {
    g.edges.emplace_back(tuple.begin(), tuple.end());
    g.edge_set.insert(g.edges.back());
    return true;
  });
  return g;
}

namespace {

class MultipartiteFinder {
 public:
  MultipartiteFinder(const Hypergraph& g, std::size_t r, std::size_t t, const MultipartiteOptions& options)
      : g_(g), r_(r), t_(t), budget_(options.budget), used_(g.vertices.size(), false) {
    const auto deg = g.degrees();
    mpz_class need = 1;
    for (std::size_t i = 1; i < r; ++i) need *= static_cast<unsigned long>(t);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      bool excluded = v < options.excluded.size() && options.excluded[v];
      if (!excluded && mpz_class(static_cast<unsigned long>(deg[v])) >= need) candidates_.push_back(v);
    }
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    rank_.assign(g.vertices.size(), SIZE_MAX);
    for (std::size_t i = 0; i < candidates_.size(); ++i) rank_[candidates_[i]] = i;
    degree_ = deg;
  }

  std::optional<std::vector<std::vector<std::size_t>>> run() {
    if (candidates_.size() < r_ * t_) return std::nullopt;
    std::vector<const std::vector<std::size_t>*> seeds;
    for (const auto& e : g_.edges) {
      if (std::all_of(e.begin(), e.end(), [&](std::size_t v) { return rank_[v] != SIZE_MAX; })) seeds.push_back(&e);
    }
    auto weight = [&](const std::vector<std::size_t>* e) {
      std::size_t s = 0;
      for (std::size_t v : *e) s += degree_[v];
      return s;
    };
    std::stable_sort(seeds.begin(), seeds.end(), [&](auto* a, auto* b) { return weight(a) > weight(b); });
    for (const auto* seed : seeds) {
      classes_.assign(r_, {});
      last_rank_.assign(r_, 0);
      for (std::size_t j = 0; j < r_; ++j) {
        classes_[j].push_back((*seed)[j]);
        used_[(*seed)[j]] = true;
      }
      if (extend()) return classes_;
      for (std::size_t v : *seed) used_[v] = false;
      if (budget_ == 0) break;
    }
    return std::nullopt;
  }

 private:
  bool fits(std::size_t u, std::size_t cls) {
    // Every transversal of the other classes together with u must be an edge.
    std::vector<std::size_t> pick(r_, 0);
    std::vector<std::size_t> tuple(r_);
    while (true) {
      for (std::size_t j = 0; j < r_; ++j) tuple[j] = j == cls ? u : classes_[j][pick[j]];
      if (!g_.has_edge(tuple)) return false;
      std::size_t j = 0;
      for (; j < r_; ++j) {
        if (j == cls) continue;
        if (++pick[j] < classes_[j].size()) break;
        pick[j] = 0;
      }
      if (j == r_) return true;
    }
  }

  bool extend() {
    std::size_t cls = 0;
    for (std::size_t j = 1; j < r_; ++j) {
      if (classes_[j].size() < classes_[cls].size()) cls = j;
    }
    if (classes_[cls].size() == t_) return true;
    for (std::size_t i = last_rank_[cls]; i < candidates_.size(); ++i) {
      if (budget_ == 0) return false;
      --budget_;
      const std::size_t u = candidates_[i];
      if (used_[u] || !fits(u, cls)) continue;
      const std::size_t saved = last_rank_[cls];
      classes_[cls].push_back(u);
      used_[u] = true;
      last_rank_[cls] = i + 1;
      if (extend()) return true;
      classes_[cls].pop_back();
      used_[u] = false;
      last_rank_[cls] = saved;
    }
    return false;
  }

  const Hypergraph& g_;
  std::size_t r_, t_;
  std::uint64_t budget_;
  std::vector<bool> used_;
  std::vector<std::size_t> candidates_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> last_rank_;
};

}  // namespace

std::optional<std::vector<std::vector<std::size_t>>> find_multipartite(const Hypergraph& graph, std::size_t r,
                                                                      std::size_t t,
                                                                      const MultipartiteOptions& options) {
  if (r != graph.uniformity) throw Error("class count must equal the hypergraph uniformity");
  if (t == 0) throw Error("class size must be positive");
  if (r * t > graph.vertices.size()) throw Error("r * t exceeds the vertex count");
  MultipartiteFinder finder(graph, r, t, options);
  auto found = finder.run();
  if (found) {
    for (auto& cls : *found) std::sort(cls.begin(), cls.end());
  }
  return found;
}

bool is_complete_multipartite(const Hypergraph& graph, const std::vector<std::vector<std::size_t>>& classes) {
  if (classes.size() != graph.uniformity) return false;
  std::vector<bool> seen(graph.vertices.size(), false);
  for (const auto& cls : classes) {
    if (cls.empty()) return false;
    for (std::size_t v : cls) {
      if (v >= seen.size() || seen[v]) return false;
      seen[v] = true;
    }
  }
  const std::size_t r = classes.size();
  std::vector<std::size_t> pick(r, 0);
  std::vector<std::size_t> tuple(r);
  while (true) {
    for (std::size_t j = 0; j < r; ++j) tuple[j] = classes[j][pick[j]];
    if (!graph.has_edge(tuple)) return false;
    std::size_t j = 0;
    for (; j < r; ++j) {
      if (++pick[j] < classes[j].size()) break;
      pick[j] = 0;
    }
    if (j == r) return true;
  }
}

mpz_class kplus1_class_size(std::size_t k) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(k * (2 * k + 1) + 1));
  return t * static_cast<unsigned long>(2 * k + 1);
}

std::vector<std::vector<std::size_t>> derived_tuples(const Family& family, std::span<const MultipartiteCopy> copies,
                                                     std::size_t k, std::uint64_t tuples_per_copy) {
  std::set<std::vector<std::size_t>> out;
  for (const MultipartiteCopy& copy : copies) {
    const SelectionWitness& w = copy.weak.witness;
    std::vector<std::size_t> selection;
    for (const auto& id : w.chosen) selection.push_back(family.index_of(id));
    const std::string& pivot_choice = w.chosen.at(w.pivot_class);
    std::vector<std::size_t> rest;
    for (const auto& id : copy.weak.pruned_class.ids()) {
      if (id != pivot_choice) rest.push_back(family.index_of(id));
    }
    if (rest.size() < k) continue;
    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    std::uint64_t emitted = 0;
    do {
      std::vector<std::size_t> tuple = selection;
      for (std::size_t c : comb) tuple.push_back(rest[c]);
      std::sort(tuple.begin(), tuple.end());
      out.insert(std::move(tuple));
      if (++emitted >= tuples_per_copy) break;
    } while (k > 0 && detail::next_combination(comb, rest.size()));
  }
  return {out.begin(), out.end()};
}

std::optional<KPlusOneWitness> fractional_kplus1(const Family& family, const MonotoneProperty& property,
                                                 const Rational& alpha, std::optional<std::size_t> t_override,
                                                 const KPlusOneOptions& options) {
  check_alpha(alpha);
  const std::size_t halfspaces = family.system()->size();
  if (halfspaces % 2 == 0 || halfspaces < 3) {
    throw Error("fractional (k+1) pipeline needs 2k+1 halfspaces with k >= 1, got " + std::to_string(halfspaces));
  }
  const std::size_t k = (halfspaces - 1) / 2;
  const std::size_t n = family.size();
  if (n < halfspaces) return std::nullopt;

  KPlusOneWitness w;
  w.k = k;
  w.t_formula = kplus1_class_size(k);
  if (t_override) {
    w.t_used = *t_override;
  } else if (w.t_formula.fits_ulong_p()) {
    w.t_used = w.t_formula.get_ui();
  } else {
    return std::nullopt;
  }
  if (w.t_used == 0) throw Error("class size must be positive");

  Hypergraph g = build_hypergraph(family, k + 1, property);
  w.hypergraph_edges = g.edges.size();
  w.tuples_total = binomial(mpz_class(static_cast<unsigned long>(n)), k + 1).get_ui();
  w.measured_density = Rational(static_cast<long long>(w.hypergraph_edges)) /
                       Rational(static_cast<long long>(w.tuples_total));
  if (w.t_used > n / (k + 1)) return std::nullopt;

  MultipartiteOptions mp = options.multipartite;
  mp.excluded.resize(n, false);
  for (std::size_t c = 0; c < options.max_copies; ++c) {
    std::size_t free = static_cast<std::size_t>(std::count(mp.excluded.begin(), mp.excluded.end(), false));
    if (free < (k + 1) * w.t_used) break;
    auto classes = find_multipartite(g, k + 1, w.t_used, mp);
    if (!classes) break;
    std::vector<Family> fams;
    std::vector<std::vector<std::string>> class_ids;
    for (const auto& cls : *classes) {
      fams.push_back(family.subfamily(cls));
      class_ids.push_back(family.ids_of(cls));
      for (std::size_t v : cls) mp.excluded[v] = true;
    }
    w.copies.push_back(MultipartiteCopy{std::move(class_ids), weak_colorful_helly(ColorClasses(std::move(fams)))});
  }
  if (w.copies.empty()) return std::nullopt;

  auto tuples = derived_tuples(family, w.copies, k, options.tuples_per_copy);
  for (const auto& tuple : tuples) {
    std::vector<HSet> sets;
    for (std::size_t pos : tuple) sets.push_back(family.member(pos));
    if (!eval(property, intersect(std::span<const HSet>(sets)))) {
      throw std::logic_error("derived tuple is not P-intersecting");
    }
  }
  if (tuples.empty()) return std::nullopt;
  w.accumulated_tuples = tuples.size();
  mpz_class total = binomial(mpz_class(static_cast<unsigned long>(n)), halfspaces);
  w.alpha_prime = Rational(mpq_class(mpz_class(static_cast<unsigned long>(tuples.size())), total));

  auto fractional = fractional_k(family, property, w.alpha_prime, options.fractional);
  if (!fractional) return std::nullopt;
  w.fractional = std::move(*fractional);
  return w;
}

Rational pairs_threshold(std::size_t k) {
  if (k == 0) throw Error("threshold needs at least one halfspace");
  mpz_class n = chain_size_bound(k, k);
  return Rational(mpq_class(mpz_class(1), binomial(n, k)));
}

namespace {

bool monotone_in_order(const Family& family, const std::vector<std::size_t>& chain, std::size_t h) {
  bool up = true, down = true;
  for (std::size_t t = 1; t < chain.size(); ++t) {
    const Rational& a = family.member(chain[t - 1]).offset(h);
    const Rational& b = family.member(chain[t]).offset(h);
    if (b < a) up = false;
    if (a < b) down = false;
  }
  return up || down;
}

}  // namespace

std::uint64_t count_chain_tuples(const Family& family, const MonotoneProperty& property, const Limits& limits) {
  const std::size_t k = family.system()->size();
  const std::size_t n = family.size();
  if (n < k) return 0;
  checked_binomial(n, k, limits);

  std::vector<std::vector<char>> pair_ok(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      bool ok = eval(property, intersect(family.member(i), family.member(j)));
      pair_ok[i][j] = pair_ok[j][i] = ok ? 1 : 0;
    }
  }

  std::uint64_t count = 0;
  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  do {
    bool all_pairs = true;
    for (std::size_t a = 0; a < k && all_pairs; ++a) {
      for (std::size_t b = a; b < k && all_pairs; ++b) all_pairs = pair_ok[comb[a]][comb[b]] != 0;
    }
    if (!all_pairs) continue;
    std::vector<std::size_t> chain = comb;
    std::stable_sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) {
      return family.member(a).offset(0) < family.member(b).offset(0);
    });
    bool consistent = true;
    for (std::size_t h = 1; h < k && consistent; ++h) consistent = monotone_in_order(family, chain, h);
    if (consistent) ++count;
  } while (detail::next_combination(comb, n));
  return count;
}

std::optional<PairsWitness> fractional_pairs(const Family& family, const MonotoneProperty& property,
                                             const Rational& alpha, const FractionalOptions& options) {
  const std::size_t k = family.system()->size();
  const Rational c_k = pairs_threshold(k);
  if (!(alpha > Rational(1) - c_k) || alpha > Rational(1)) {
    throw Error("alpha must lie in (1 - c_k, 1] with c_k = " + c_k.str());
  }
  if (family.size() < 2) throw Error("fractional pairs needs at least two members");

  PairsWitness w;
  w.alpha = alpha;
  w.chain_bound = chain_size_bound(k, k);
  w.c_k = c_k;
  w.alpha_prime = alpha + c_k - Rational(1);
  w.pair_density = density(family, 2, property);
  w.chain_tuples = count_chain_tuples(family, property);
  w.tuples_total = binomial(mpz_class(static_cast<unsigned long>(family.size())), k).get_ui();
  w.hypothesis_certified = Rational(static_cast<long long>(w.chain_tuples)) >=
                           w.alpha_prime * Rational(static_cast<long long>(w.tuples_total));
  auto fractional = fractional_k(family, property, w.alpha_prime, options);
  if (!fractional) return std::nullopt;
  w.fractional = std::move(*fractional);
  return w;
}

PierceReport pq_pierce(const Family& family, const MonotoneProperty& property, std::size_t p, std::size_t q,
                       const Limits& limits) {
  if (q == 0 || p < q) throw Error("need p >= q >= 1");
  const std::size_t n = family.size();
  if (n > limits.pq_family) {
    throw LimitError("pq_pierce is limited to " + std::to_string(limits.pq_family) + " members");
  }
  PierceReport report;
  for (std::size_t i = 0; i < n; ++i) {
    if (!eval(property, family.member(i))) {
      report.outcome = HypothesisFailed{HypothesisFailed::Reason::MemberFailsProperty, {family.id(i)}};
      return report;
    }
  }

  if (n >= p) {
    std::vector<std::size_t> comb(p);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    do {
      Family sub = family.subfamily(comb);
      bool found = false;
      detail::TupleScanner scanner(sub, q, property);
      scanner.run([&](std::span<const std::size_t>) {
        found = true;
        return false;
      });
      if (!found) {
        report.outcome = HypothesisFailed{HypothesisFailed::Reason::NoIntersectingQSubset, family.ids_of(comb)};
        return report;
      }
    } while (detail::next_combination(comb, n));
  }

  // Maximal P-intersecting subfamilies, by depth-first expansion in position order.
  struct Candidate {
    std::vector<std::size_t> members;
    Vector offsets;
    std::uint64_t covers = 0;
  };
  std::vector<Candidate> candidates;
  std::vector<std::size_t> current;
  const HSystem& system = *family.system();
  auto is_maximal = [&](const Vector& offsets) {
    Vector buf(offsets.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(current.begin(), current.end(), j) != current.end()) continue;
      const Vector& o = family.member(j).offsets();
      for (std::size_t c = 0; c < buf.size(); ++c) buf[c] = min(offsets[c], o[c]);
      if (eval(property, system, buf)) return false;
    }
    return true;
  };
  auto expand = [&](auto&& self, std::size_t start, const Vector& offsets) -> void {
    if (!current.empty() && is_maximal(offsets)) candidates.push_back({current, offsets, 0});
    for (std::size_t j = start; j < n; ++j) {
      Vector next(offsets.size());
      const Vector& o = family.member(j).offsets();
      for (std::size_t c = 0; c < next.size(); ++c) next[c] = current.empty() ? o[c] : min(offsets[c], o[c]);
      if (!eval(property, system, next)) continue;
      current.push_back(j);
      self(self, j + 1, next);
      current.pop_back();
    }
  };
  expand(expand, 0, Vector(system.size()));

  for (Candidate& c : candidates) {
    for (std::size_t j = 0; j < n; ++j) {
      if (offset_leq(std::span<const Rational>(c.offsets), std::span<const Rational>(family.member(j).offsets()))) {
        c.covers |= std::uint64_t{1} << j;
      }
    }
  }
  report.candidate_pins = candidates.size();

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::size_t> chosen;
  std::uint64_t covered = 0;
  while (covered != all) {
    std::size_t best = candidates.size();
    int best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      int gain = std::popcount(candidates[c].covers & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == candidates.size()) throw std::logic_error("greedy cover stalled");
    chosen.push_back(best);
    covered |= candidates[best].covers;
  }
  report.greedy_size = chosen.size();

  // Exhaustive improvement below the greedy size, within a fixed budget.
  std::uint64_t budget = 2000000;
  bool improved = false;
  for (std::size_t s = 1; s < chosen.size() && !improved && budget > 0; ++s) {
    if (s > candidates.size()) break;
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    do {
      if (budget-- == 0) break;
      std::uint64_t mask = 0;
      for (std::size_t c : comb) mask |= candidates[c].covers;
      if (mask == all) {
        chosen = comb;
        improved = true;
        break;
      }
    } while (detail::next_combination(comb, candidates.size()));
  }

  PiercingFamily pf;
  for (std::size_t c : chosen) {
    pf.pins.push_back(Pin{family.ids_of(candidates[c].members), HSet(family.system(), candidates[c].offsets)});
  }
  pf.cover.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (candidates[chosen[i]].covers >> j & 1U) {
        pf.cover[j] = i;
        break;
      }
    }
  }
  report.outcome = std::move(pf);
  return report;
}

}  // namespace helly
