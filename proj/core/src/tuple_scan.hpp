#pragma once

// Internal enumeration helpers shared by the fractional pipelines.

#include <cstddef>
#include <span>
#include <vector>

#include "helly/hsystem.hpp"
#include "helly/properties.hpp"

namespace helly::detail {

/// Lexicographic scan of r-subsets of a family that keeps one running
/// intersection per depth. A partial intersection failing P cuts the whole
/// subtree, which is exact because P is monotone.
class TupleScanner {
 public:
  TupleScanner(const Family& family, std::size_t r, const MonotoneProperty& property)
      : family_(family), property_(property), r_(r), index_(r), buffers_(r) {}

  /// Calls leaf(positions) for every P-intersecting r-subset; leaf returns
  /// false to stop the scan early.
  template <class Leaf>
  void run(Leaf&& leaf) {
    if (r_ == 0 || r_ > family_.size()) return;
    stop_ = false;
    descend(0, 0, leaf);
  }

 private:
  template <class Leaf>
  void descend(std::size_t depth, std::size_t start, Leaf& leaf) {
    const std::size_t n = family_.size();
    const HSystem& system = *family_.system();
    for (std::size_t i = start; i + (r_ - depth) <= n && !stop_; ++i) {
      index_[depth] = i;
      const Vector& offsets = family_.member(i).offsets();
      Vector& buf = buffers_[depth];
      if (depth == 0) {
        buf = offsets;
      } else {
        const Vector& prev = buffers_[depth - 1];
        buf.resize(offsets.size());
        for (std::size_t c = 0; c < offsets.size(); ++c) buf[c] = offsets[c] < prev[c] ? offsets[c] : prev[c];
      }
      if (!eval(property_, system, buf)) continue;
      if (depth + 1 == r_) {
        if (!leaf(std::span<const std::size_t>(index_))) stop_ = true;
      } else {
        descend(depth + 1, i + 1, leaf);
      }
    }
  }

  const Family& family_;
  const MonotoneProperty& property_;
  std::size_t r_;
  std::vector<std::size_t> index_;
  std::vector<Vector> buffers_;
  bool stop_ = false;
};

/// Advances `comb` (strictly increasing, values < n) to the next combination.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
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

}  // namespace helly::detail
