#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace helly {

/// Size gates for exhaustive routines. Raise them through the environment
/// variable HELLY_ORACLE_LIMITS, e.g. "brute_family=24,pierce_family=14".
struct Limits {
  std::size_t brute_family = 20;             // brute_min_witness, brute_best_subfamily
  std::uint64_t colorful_product = 1000000;  // brute_colorful transversal count
  std::size_t pierce_family = 12;            // brute_pierce
  std::size_t pierce_bound = 4;              // brute_pierce pin count
  std::size_t pq_family = 16;                // pq_pierce subset enumeration
  std::uint64_t enumeration = 400000000;     // r-subset scans (density, hypergraphs)

  static Limits defaults() { return Limits{}; }
  /// Defaults overridden by HELLY_ORACLE_LIMITS when set.
  static Limits from_env();
  /// Applies "key=value,..." overrides; unknown keys throw.
  static Limits parse(std::string_view spec);
  static Limits parse(std::string_view spec, Limits base);
};

}  // namespace helly
