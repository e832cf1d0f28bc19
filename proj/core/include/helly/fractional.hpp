#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "helly/hsystem.hpp"
#include "helly/limits.hpp"
#include "helly/properties.hpp"
#include "helly/selection.hpp"

namespace helly {

struct TupleCount {
  std::uint64_t intersecting = 0;
  std::uint64_t total = 0;

  Rational density() const;
};

/// Exact count of P-intersecting r-subsets (lexicographic scan, pruned by monotonicity).
TupleCount count_intersecting(const Family& family, std::size_t r, const MonotoneProperty& property,
                              const Limits& limits = Limits::from_env());

Rational density(const Family& family, std::size_t r, const MonotoneProperty& property);

/// Smallest p >= 1 with p >= (1-alpha)^(1/(k+1)) * n, computed exactly.
std::size_t prefix_bound(const Rational& alpha, std::size_t k, std::size_t n);

/// Smallest integer m with m >= n * (1 - k * (1-alpha)^(1/(k+1))), computed exactly.
long long beta_bound(const Rational& alpha, std::size_t k, std::size_t n);

enum class PrefixPolicy {
  Minimal,  // smallest uniform prefix size (at most prefix_bound) whose product holds a P-tuple
  Bound,    // exactly prefix_bound members per ordering
};

struct FractionalOptions {
  PrefixPolicy policy = PrefixPolicy::Minimal;
  bool sample = false;  // random product tuples instead of the exhaustive scan
  std::uint64_t sample_budget = 100000;
  std::uint64_t seed = 0;
};

struct FractionalWitness {
  Rational alpha;
  std::size_t uniformity = 0;   // k, the number of halfspaces
  std::size_t prefix_bound = 0;
  std::size_t prefix_size = 0;  // prefix size actually discarded per ordering
  Rational gamma;               // prefix_size / |F|
  std::vector<std::vector<std::string>> prefixes;  // per ordering
  std::vector<std::string> witness_tuple;          // witness_tuple[i] lies in prefixes[i]
  Vector witness_intersection;
  std::vector<std::string> survivors;  // family order
  Rational beta_achieved;              // |survivors| / |F|
  long long beta_bound = 0;
};

std::optional<FractionalWitness> fractional_k(const Family& family, const MonotoneProperty& property,
                                              const Rational& alpha, const FractionalOptions& options = {});

struct VectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept;
};

/// r-uniform hypergraph over family positions.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::size_t uniformity = 0;
  std::vector<std::vector<std::size_t>> edges;  // sorted position tuples, lexicographic order
  std::unordered_set<std::vector<std::size_t>, VectorHash> edge_set;

  bool has_edge(std::vector<std::size_t> tuple) const;
  std::vector<std::size_t> degrees() const;
};

Hypergraph build_hypergraph(const Family& family, std::size_t r, const MonotoneProperty& property,
                            const Limits& limits = Limits::from_env());

struct MultipartiteOptions {
  std::uint64_t budget = 100000;  // backtracking steps
  std::vector<bool> excluded;     // vertices that may not be used
};

/// r classes of t vertices with every transversal an edge, or nullopt.
std::optional<std::vector<std::vector<std::size_t>>> find_multipartite(const Hypergraph& graph, std::size_t r,
                                                                      std::size_t t,
                                                                      const MultipartiteOptions& options = {});

bool is_complete_multipartite(const Hypergraph& graph, const std::vector<std::vector<std::size_t>>& classes);

/// 2^(k(2k+1)+1) * (2k+1).
mpz_class kplus1_class_size(std::size_t k);

struct MultipartiteCopy {
  std::vector<std::vector<std::string>> classes;
  WeakColorfulResult weak;
};

struct KPlusOneWitness {
  std::size_t k = 0;
  std::size_t t_used = 0;
  mpz_class t_formula;
  std::uint64_t hypergraph_edges = 0;
  std::uint64_t tuples_total = 0;
  Rational measured_density;
  std::vector<MultipartiteCopy> copies;
  std::uint64_t accumulated_tuples = 0;
  Rational alpha_prime;  // accumulated_tuples / C(n, 2k+1)
  FractionalWitness fractional;
};

struct KPlusOneOptions {
  std::size_t max_copies = 4;
  std::uint64_t tuples_per_copy = 100000;
  MultipartiteOptions multipartite;
  FractionalOptions fractional;
};

/// Hypergraph, multipartite copy, weak colorful selection, then fractional_k at 2k+1.
std::optional<KPlusOneWitness> fractional_kplus1(const Family& family, const MonotoneProperty& property,
                                                 const Rational& alpha, std::optional<std::size_t> t_override,
                                                 const KPlusOneOptions& options = {});

/// Every (2k+1)-tuple derivable from the copies' weak colorful selections.
std::vector<std::vector<std::size_t>> derived_tuples(const Family& family, std::span<const MultipartiteCopy> copies,
                                                     std::size_t k, std::uint64_t tuples_per_copy);

/// c_k = 1 / C(N, k) with N = chain_size_bound(k, k).
Rational pairs_threshold(std::size_t k);

struct PairsWitness {
  Rational alpha;
  mpz_class chain_bound;  // N(k, k)
  Rational c_k;
  Rational alpha_prime;  // alpha + c_k - 1
  std::uint64_t chain_tuples = 0;  // consistently ordered k-subsets with all pairs P-intersecting
  std::uint64_t tuples_total = 0;  // C(n, k)
  bool hypothesis_certified = false;  // chain_tuples >= alpha_prime * tuples_total
  Rational pair_density;
  FractionalWitness fractional;
};

std::uint64_t count_chain_tuples(const Family& family, const MonotoneProperty& property,
                                 const Limits& limits = Limits::from_env());

/// Throws Error (naming c_k) when alpha is outside (1 - c_k, 1].
std::optional<PairsWitness> fractional_pairs(const Family& family, const MonotoneProperty& property,
                                             const Rational& alpha, const FractionalOptions& options = {});

struct Pin {
  std::vector<std::string> source;  // the P-intersecting subfamily whose intersection is the pin
  HSet set;
};

struct PiercingFamily {
  std::vector<Pin> pins;
  std::vector<std::size_t> cover;  // cover[i]: pin contained in family member i
};

struct HypothesisFailed {
  enum class Reason { NoIntersectingQSubset, MemberFailsProperty };
  Reason reason = Reason::NoIntersectingQSubset;
  std::vector<std::string> violating;
};

struct PierceReport {
  std::variant<PiercingFamily, HypothesisFailed> outcome;
  std::size_t candidate_pins = 0;
  std::size_t greedy_size = 0;
};

/// Desk-scale (p,q) piercing: hypothesis scan, maximal P-intersecting
/// subfamilies as candidate pins, greedy cover, then exhaustive improvement.
PierceReport pq_pierce(const Family& family, const MonotoneProperty& property, std::size_t p, std::size_t q,
                       const Limits& limits = Limits::from_env());

}  // namespace helly
