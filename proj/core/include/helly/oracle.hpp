#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "helly/fractional.hpp"
#include "helly/hsystem.hpp"
#include "helly/limits.hpp"
#include "helly/properties.hpp"
#include "helly/selection.hpp"

namespace helly {

/// Exhaustive ground truth for small instances. Every routine checks its size
/// gate from Limits and throws LimitError past it.

/// Smallest subfamily (first in size-then-lexicographic order) whose
/// intersection has the family's offsets.
std::vector<std::string> brute_min_witness(const Family& family, const Limits& limits = Limits::from_env());

struct HellyReport {
  bool hypothesis = false;  // every subfamily of the given size is P-intersecting
  bool conclusion = false;  // the whole family is P-intersecting
};

/// Monotone Helly check with subfamilies of size `arity` (the system's k by default).
HellyReport verify_monotone_helly(const Family& family, const MonotoneProperty& property,
                                  std::optional<std::size_t> arity = std::nullopt,
                                  const Limits& limits = Limits::from_env());

struct ColorfulReport {
  bool hypothesis = false;                       // every transversal is P-intersecting
  bool conclusion = false;                       // some class is P-intersecting
  std::vector<std::string> failing_transversal;  // first failure when the hypothesis is false
  std::optional<std::size_t> intersecting_class;
};

ColorfulReport brute_colorful(const ColorClasses& classes, const MonotoneProperty& property,
                              const Limits& limits = Limits::from_env());

/// A largest P-intersecting subfamily (ids in family order).
std::vector<std::string> brute_best_subfamily(const Family& family, const MonotoneProperty& property,
                                              const Limits& limits = Limits::from_env());

/// Minimum piercing family with at most `bound` pins, or nullopt. Searches
/// partitions of the family into P-intersecting groups.
std::optional<PiercingFamily> brute_pierce(const Family& family, const MonotoneProperty& property,
                                           std::size_t bound, const Limits& limits = Limits::from_env());

/// Plain count of P-intersecting r-subsets in reverse colexicographic order,
/// with no pruning.
TupleCount brute_density(const Family& family, std::size_t r, const MonotoneProperty& property,
                         const Limits& limits = Limits::from_env());

/// True iff some tuple of the product prefixes[0] x ... x prefixes[k-1] is P-intersecting.
bool brute_product_has_tuple(const Family& family, const MonotoneProperty& property,
                             const std::vector<std::vector<std::string>>& prefixes,
                             const Limits& limits = Limits::from_env());

/// True iff the (p,q) hypothesis holds.
bool brute_pq_hypothesis(const Family& family, const MonotoneProperty& property, std::size_t p, std::size_t q,
                         const Limits& limits = Limits::from_env());

// Certificate re-verification from raw offsets. Each returns false on any
// mismatch and throws Error on ids that do not exist.

bool verify_certificate(const Family& family, const StrongHellyWitness& witness);
/// colorful_select output: the certificate must cover the whole pivot class.
bool verify_certificate(const ColorClasses& classes, const SelectionWitness& witness);
bool verify_certificate(const ColorClasses& classes, const WeakColorfulResult& result);
bool verify_certificate(const Family& family, const ChainWitness& witness);
bool verify_certificate(const Family& family, const MonotoneProperty& property, const FractionalWitness& witness);
bool verify_certificate(const Family& family, const MonotoneProperty& property, const KPlusOneWitness& witness);
bool verify_certificate(const Family& family, const MonotoneProperty& property, const PairsWitness& witness);
bool verify_certificate(const Family& family, const MonotoneProperty& property, const PiercingFamily& pins);
bool verify_certificate(const Family& family, const MonotoneProperty& property, std::size_t p, std::size_t q,
                        const HypothesisFailed& failure);

}  // namespace helly
