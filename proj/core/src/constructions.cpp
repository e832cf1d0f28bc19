#include "helly/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "helly/error.hpp"
#include "helly/fractional.hpp"

namespace helly {
namespace {

std::vector<Rational> tight_sides(std::size_t dim, const Rational& epsilon) {
  std::vector<Rational> s(dim, Rational(1));
  s.back() = epsilon;
  return s;
}

Box full_cube(std::size_t dim, const Rational& clip) {
  return Box{Vector(dim, -clip), Vector(dim, clip)};
}

}  // namespace

Rational tight_colorful_min_clip(std::size_t dim, const Rational& epsilon) {
  if (dim == 0) throw Error("dimension must be positive");
  Rational best(0);
  for (const Rational& s : tight_sides(dim, epsilon)) best = max(best, s / epsilon);
  return best;
}

Family gen_tight_colorful(std::size_t dim, const Rational& epsilon, std::optional<Rational> clip) {
  if (dim == 0) throw Error("dimension must be positive");
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) throw Error("epsilon must be in (0,1)");
  const Rational m = clip ? *clip : Rational(static_cast<long long>(2 * dim)) / epsilon;
  if (m < Rational(1)) throw Error("clip M must be at least 1");

  const auto s = tight_sides(dim, epsilon);
  auto system = canonical_box_system(dim);
  Family family(system);
  for (std::size_t j = 0; j < dim; ++j) {
    Box lower = full_cube(dim, m);
    lower.lo[j] = Rational(0);
    Box upper = full_cube(dim, m);
    upper.hi[j] = s[j];
    family.add("lo" + std::to_string(j), box_to_hset(lower, system));
    family.add("hi" + std::to_string(j), box_to_hset(upper, system));
  }

  if (box_volume(hset_to_box(intersect(family))) != epsilon) {
    throw std::logic_error("tight colorful construction has the wrong volume");
  }
  for (std::size_t drop = 0; drop < family.size(); ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i != drop) keep.push_back(i);
    }
    if (box_volume(hset_to_box(intersect(family.subfamily(keep)))) < Rational(1)) {
      throw Error("clip M = " + m.str() + " is too small; the minimal M is " +
                  tight_colorful_min_clip(dim, epsilon).str());
    }
  }
  return family;
}

Family gen_tight_fractional(std::size_t dim, std::size_t n, const Rational& thickness, std::optional<Rational> clip) {
  if (dim == 0) throw Error("dimension must be positive");
  if (n < dim) throw Error("need at least one slab per axis (n >= dim)");
  if (thickness.sign() <= 0) throw Error("thickness must be positive");
  if (thickness >= Rational(2)) throw Error("thickness must be below 2 so slabs in a class stay disjoint");
  const std::size_t per_class = (n + dim - 1) / dim;
  const Rational reach = Rational(static_cast<long long>(2 * (per_class - 1))) + thickness;
  const Rational m = clip ? *clip : reach + Rational(1);
  if (m < reach) throw Error("clip M must be at least " + reach.str() + " to contain every slab");

  auto system = canonical_box_system(dim);
  Family family(system);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t axis = i % dim;
    const std::size_t c = i / dim;
    Box slab = full_cube(dim, m);
    slab.lo[axis] = Rational(static_cast<long long>(2 * c));
    slab.hi[axis] = slab.lo[axis] + thickness;
    family.add("s" + std::to_string(axis) + "_" + std::to_string(c), box_to_hset(slab, system));
  }
  return family;
}

SystemPtr gen_system(const GenSpec& spec) {
  if (spec.dim == 0) throw Error("dimension must be positive");
  if (spec.halfspaces == 0) return canonical_box_system(spec.dim);
  SeededRng rng(spec.seed ^ 0x5deece66dULL);
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < spec.halfspaces; ++i) {
    Vector a(spec.dim);
    do {
      for (auto& x : a) x = Rational(rng.between(-2, 2));
    } while (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.sign() == 0; }));
    normals.push_back(std::move(a));
  }
  return make_system(spec.dim, std::move(normals));
}

namespace {

void check_lattice(const GenSpec& spec) {
  if (spec.lattice <= 0) throw Error("lattice must be positive");
  if (spec.denominator <= 0) throw Error("denominator must be positive");
}

Vector random_offsets(const GenSpec& spec, const HSystem& system, SeededRng& rng) {
  const Rational den(spec.denominator);
  Vector offsets(system.size());
  if (system.is_box_system()) {
    for (std::size_t j = 0; j < system.dim(); ++j) {
      long long a = rng.between(0, spec.lattice);
      long long b = rng.between(0, spec.lattice);
      if (b < a) std::swap(a, b);
      offsets[2 * j] = Rational(b) / den;
      offsets[2 * j + 1] = -Rational(a) / den;
    }
  } else {
    for (auto& b : offsets) b = Rational(rng.between(-spec.lattice / 2, spec.lattice)) / den;
  }
  return offsets;
}

}  // namespace

Family gen_random(const GenSpec& spec) {
  check_lattice(spec);
  auto system = gen_system(spec);
  SeededRng rng(spec.seed);
  Family family(system);
  for (std::size_t i = 0; i < spec.n; ++i) family.add("b" + std::to_string(i), random_offsets(spec, *system, rng));
  return family;
}

ColorClasses gen_random_classes(const GenSpec& spec) {
  check_lattice(spec);
  if (spec.classes == 0) throw Error("need at least one color class");
  auto system = gen_system(spec);
  SeededRng rng(spec.seed);
  std::vector<Family> classes;
  for (std::size_t c = 0; c < spec.classes; ++c) {
    Family f(system);
    for (std::size_t i = 0; i < spec.class_size; ++i) {
      f.add("c" + std::to_string(c) + "m" + std::to_string(i), random_offsets(spec, *system, rng));
    }
    classes.push_back(std::move(f));
  }
  return ColorClasses(std::move(classes));
}

DenseInstance gen_dense(const GenSpec& spec) {
  check_lattice(spec);
  if (spec.alpha_target.sign() <= 0 || spec.alpha_target > Rational(1)) {
    throw Error("alpha_target must lie in (0, 1]");
  }
  if (spec.r == 0 || spec.r > spec.n) throw Error("need 1 <= r <= n");
  auto system = gen_system(spec);
  const std::size_t k = system->size();
  const Rational den(spec.denominator);

  // Kernel {<a_i, x> <= s}: contains the origin, doubled until P holds.
  Rational scale(1);
  int doublings = 0;
  while (!eval(spec.property, *system, Vector(k, scale))) {
    if (++doublings > 200) throw Error("no dilation of the kernel satisfies the property");
    scale *= Rational(2);
  }
  const Vector kernel(k, scale);

  const mpz_class target_count =
      binomial(mpz_class(static_cast<unsigned long>(spec.n)), spec.r);
  const mpq_class need = spec.alpha_target.to_mpq() * mpq_class(target_count);
  // Cheap instances grow the core from r; large ones start where the core
  // alone already meets the target.
  std::size_t core = spec.r;
  if (target_count > 1000000) {
    while (core < spec.n && mpq_class(binomial(mpz_class(static_cast<unsigned long>(core)), spec.r)) < need) ++core;
  }

  for (; core <= spec.n; ++core) {
    SeededRng rng(spec.seed);
    std::vector<Vector> members;
    for (std::size_t i = 0; i < spec.n; ++i) {
      Vector offsets = kernel;
      for (auto& b : offsets) b += Rational(rng.between(0, spec.lattice)) / den;
      if (i >= core) {
        Vector shift(system->dim());
        for (auto& x : shift) x = Rational(rng.between(-3 * spec.lattice, 3 * spec.lattice)) / den;
        for (std::size_t h = 0; h < k; ++h) {
          Rational dot(0);
          for (std::size_t c = 0; c < system->dim(); ++c) dot += system->normal(h)[c] * shift[c];
          offsets[h] += dot;
        }
      }
      members.push_back(std::move(offsets));
    }
    for (std::size_t i = members.size(); i > 1; --i) std::swap(members[i - 1], members[rng.index(i)]);

    Family family(system);
    for (std::size_t i = 0; i < members.size(); ++i) family.add("m" + std::to_string(i), std::move(members[i]));
    Rational measured = density(family, spec.r, spec.property);
    if (measured >= spec.alpha_target) return DenseInstance{std::move(family), measured, core};
  }
  throw Error("could not reach density " + spec.alpha_target.str());
}

Family generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::TightColorful:
      return gen_tight_colorful(spec.dim, spec.epsilon, spec.clip);
    case GenKind::TightFractional:
      return gen_tight_fractional(spec.dim, spec.n, spec.thickness, spec.clip);
    case GenKind::Random:
      return gen_random(spec);
    case GenKind::Dense:
      return gen_dense(spec).family;
  }
  throw Error("unknown generator kind");
}

}  // namespace helly
