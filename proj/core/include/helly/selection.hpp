#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "helly/hsystem.hpp"

namespace helly {

/// Subfamily of at most k members with the same intersection as the family.
struct StrongHellyWitness {
  std::vector<std::string> ids;          // distinct, in order of first use
  std::vector<std::string> attained_by;  // per ordering: member attaining the minimum offset
  Vector intersection;                   // offsets of the family's intersection
};

StrongHellyWitness strong_helly_witness(const Family& family);

/// One ordering's worth of evidence that a chosen member's halfspace sits inside
/// a pivot-class member's halfspace.
struct CoordinateBound {
  std::size_t ordering = 0;
  std::size_t bounding_class = 0;
  Rational bound;          // offset of the chosen member of bounding_class
  Rational member_offset;  // offset of the pivot-class member
};

struct ContainmentEntry {
  std::string member_id;
  std::vector<CoordinateBound> bounds;  // one per ordering, in ordering order
};

/// Output of the colorful selection theorems.
///
/// `permutation[h]` is the class tied to ordering h: for colorful_select the
/// class consumed at step h, for weak_colorful_helly the class forming the
/// minimal block under h. Each certificate entry bounds ordering h by the
/// chosen member of `permutation[h]`.
struct SelectionWitness {
  std::vector<std::string> chosen;  // chosen[c]: id selected from class c
  std::size_t pivot_class = 0;
  std::vector<std::size_t> permutation;
  std::vector<ContainmentEntry> certificate;  // one per member of the pivot class
};

SelectionWitness colorful_select(const ColorClasses& classes);

enum class SplitDirection { FirstPrecedes, SecondPrecedes };

struct SplitResult {
  Family first;
  Family second;
  SplitDirection direction;
};

/// Halves both families so one precedes the other entirely under ordering h.
SplitResult consistent_split(const Family& first, const Family& second, std::size_t ordering);

/// True iff every member of `before` has ordering-h offset <= every member of `after`.
bool precedes(const Family& before, const Family& after, std::size_t ordering);

/// Every pair of classes is ordered consistently under every ordering.
bool pairwise_consistent(const ColorClasses& classes);

/// Number of halvings consistent_grid applies to each class: (classes-1) * orderings.
std::size_t grid_halvings(std::size_t class_count, std::size_t orderings);

/// Trims every class to a common power of two (dropping the lexicographically
/// largest ids) and splits every class pair under every ordering.
ColorClasses consistent_grid(const ColorClasses& classes);

struct WeakColorfulResult {
  SelectionWitness witness;
  Family pruned_class;             // the surviving sub-class B'_l
  std::size_t original_size = 0;   // |B_l|
  std::size_t exponent = 0;        // k(2k+1); guarantee |B'_l| * 2^(exponent+1) >= |B_l|
};

/// k+1 equal classes over a system of 2k+1 halfspaces, each of size >= 2^(k(2k+1)+1).
WeakColorfulResult weak_colorful_helly(const ColorClasses& classes);

enum class ChainDirection { Ascending, Descending };

struct ChainWitness {
  std::vector<std::string> ids;
  std::vector<ChainDirection> directions;  // one per ordering
};

/// (target-1)^(2^(k-1)) + 1: sizes at least this always yield a chain of `target`.
mpz_class chain_size_bound(std::size_t orderings, std::size_t target);

/// Iterated longest-monotone-subsequence extraction; nullopt when too short.
std::optional<ChainWitness> consistent_chain(const Family& family, std::size_t target);

/// Offsets are monotone along the chain in each recorded direction.
bool is_consistent_chain(std::span<const HSet> chain, const ChainWitness& witness);

/// Intersection of first and last; throws Error("not consistently ordered").
HSet chain_intersection(std::span<const HSet> chain, const ChainWitness& witness);
HSet chain_intersection(const Family& family, const ChainWitness& witness);

}  // namespace helly
