#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace helly {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Values whose numerator and denominator fit in 63 bits are stored inline
/// and use 128-bit intermediate arithmetic; anything larger is promoted to a
/// shared, immutable GMP rational. Promotion and demotion are automatic, so a
/// given value has exactly one representation and equality is structural.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
    requires(!std::same_as<T, long long> && !std::same_as<T, bool>)
  Rational(T value) : Rational(static_cast<long long>(value)) {}  // NOLINT
  Rational(long long numerator, long long denominator);
  explicit Rational(const mpq_class& value);

  /// Accepts "p", "p/q" and finite decimals such as "-0.125".
  static Rational parse(std::string_view text);

  /// Canonical "p/q" text; integers print with denominator 1 ("3/1", "0/1").
  std::string str() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  int sign() const noexcept;
  bool is_integer() const noexcept;
  bool is_small() const noexcept { return big_ == nullptr; }

  Rational floor() const;
  Rational ceil() const;
  Rational abs() const;
  Rational pow(unsigned exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

 private:
  void assign(const mpq_class& value);
  __extension__ typedef __int128 wide;
  void assign_reduced(wide numerator, wide denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Exact binomial coefficient C(n, r); zero when r > n.
mpz_class binomial(const mpz_class& n, unsigned long r);

}  // namespace helly
