#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "helly/hsystem.hpp"
#include "helly/properties.hpp"

namespace helly {

/// Deterministic bounded draws over mt19937_64. Plain modulo reduction keeps
/// the output identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long long between(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

enum class GenKind { TightColorful, TightFractional, Random, Dense };

struct GenSpec {
  GenKind kind = GenKind::Random;
  std::size_t dim = 2;
  std::size_t n = 0;            // family size (Random, Dense, TightFractional)
  std::size_t halfspaces = 0;   // 0 selects the canonical box system
  std::size_t classes = 0;      // Random: number of color classes (0 for a plain family)
  std::size_t class_size = 0;   // Random: members per class
  Rational epsilon = Rational(1, 2);
  std::optional<Rational> clip; // bounding cube half-width M
  Rational thickness = Rational(1, 4);
  std::uint64_t seed = 0;
  Rational alpha_target = Rational(1);
  std::size_t r = 2;
  MonotoneProperty property = MonotoneProperty::non_empty();
  long long lattice = 16;       // Random: coordinates are integers in [0, lattice] divided by denominator
  long long denominator = 1;
};

/// 2*dim boxes: the halfspaces x_j >= 0 and x_j <= s_j clipped to [-M, M]^dim,
/// with s = (1, ..., 1, epsilon). M defaults to 2*dim/epsilon. Throws when M is
/// too small for every (2*dim-1)-subfamily to keep volume >= 1.
Family gen_tight_colorful(std::size_t dim, const Rational& epsilon, std::optional<Rational> clip = std::nullopt);

/// Smallest clip for which gen_tight_colorful's post-check passes: max_j s_j / epsilon.
Rational tight_colorful_min_clip(std::size_t dim, const Rational& epsilon);

/// n slabs [2c, 2c + thickness] orthogonal to the axes, dealt round-robin over
/// the dim axes and clipped to [-M, M]^dim.
Family gen_tight_fractional(std::size_t dim, std::size_t n, const Rational& thickness = Rational(1, 4),
                            std::optional<Rational> clip = std::nullopt);

/// Seeded family: lattice boxes over the canonical system, or uniform offsets
/// over a random integer normal system when spec.halfspaces > 0.
Family gen_random(const GenSpec& spec);

/// Seeded color classes of spec.class_size members each (spec.classes of them).
ColorClasses gen_random_classes(const GenSpec& spec);

/// The normal system gen_random uses for a spec (canonical boxes when halfspaces == 0).
SystemPtr gen_system(const GenSpec& spec);

struct DenseInstance {
  Family family;
  Rational density;   // exact measured density of P-intersecting r-subsets
  std::size_t core = 0;
};

/// A core of sets sharing a P-satisfying kernel plus random outliers, with the
/// core grown until the measured density reaches alpha_target.
DenseInstance gen_dense(const GenSpec& spec);

Family generate(const GenSpec& spec);

}  // namespace helly
