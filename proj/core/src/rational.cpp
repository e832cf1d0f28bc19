#include "helly/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "helly/error.hpp"

namespace helly {
namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v) {
  bool negative = v < 0;
  u128 m = magnitude(v);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class lo(static_cast<unsigned long>(m & ~std::uint64_t{0}));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(long long value) : num_(value), den_(1) {
  if (value == std::numeric_limits<long long>::min()) {
    assign(mpq_class(mpz_class(static_cast<long>(value))));
  }
}

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  assign_reduced(numerator, denominator);
}

Rational::Rational(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  if (copy.get_den() == 0) throw Error("rational with zero denominator");
  assign(copy);
}

void Rational::assign(const mpq_class& value) {
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(value);
  }
}

void Rational::assign_reduced(i128 numerator, i128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  u128 g = gcd128(magnitude(numerator), static_cast<u128>(denominator));
  if (g > 1) {
    numerator /= static_cast<i128>(g);
    denominator /= static_cast<i128>(g);
  }
  if (numerator == 0) denominator = 1;
  if (numerator <= kSmallMax && numerator >= -kSmallMax && denominator <= kSmallMax) {
    num_ = static_cast<std::int64_t>(numerator);
    den_ = static_cast<std::int64_t>(denominator);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(numerator), to_mpz(denominator));
  assign(q);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  auto bad = [&]() { return Error("malformed rational \"" + std::string(text) + "\""); };
  auto parse_int = [&](const std::string& t) {
    if (t.empty()) throw bad();
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw bad();
    for (std::size_t i = start; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw bad();
    }
    return mpz_class(t[0] == '+' ? t.substr(1) : t, 10);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num = parse_int(s.substr(0, slash));
    std::string den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) throw bad();
    mpz_class den = parse_int(den_text);
    if (den == 0) throw Error("rational with zero denominator");
    return Rational(mpq_class(num, den));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string int_part = s.substr(0, dot);
    std::string frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (int_part == "-" || int_part == "+" || int_part.empty()) int_part += "0";
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    }
    if (frac_part.empty()) throw bad();
    mpz_class whole = parse_int(int_part);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    mpz_class frac(frac_part, 10);
    mpz_class num = ::abs(whole) * scale + frac;
    if (negative) num = -num;
    return Rational(mpq_class(num, scale));
  }
  return Rational(mpq_class(parse_int(s)));
}

std::string Rational::str() const {
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

Rational Rational::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Rational(static_cast<long long>(q));
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return Rational(static_cast<long long>(q));
  }
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.assign(mpq_class(-*big_));
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_reduced(static_cast<i128>(num_) + rhs.num_, 1);
    } else {
      i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
      i128 d = static_cast<i128>(den_) * rhs.den_;
      assign_reduced(n, d);
    }
    return *this;
  }
  assign(mpq_class(to_mpq() + rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    assign_reduced(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign(mpq_class(to_mpq() * rhs.to_mpq()));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw Error("division by zero");
  if (!big_ && !rhs.big_) {
    assign_reduced(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign(mpq_class(to_mpq() / rhs.to_mpq()));
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  if (!lhs.big_ && !rhs.big_) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a <=> b;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

mpz_class binomial(const mpz_class& n, unsigned long r) {
  if (n < 0) throw Error("binomial of negative n");
  if (mpz_class(r) > n) return 0;
  mpz_class out;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    mpz_bin_uiui(out.get_mpz_t(), n.get_ui(), r);
  } else {
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), r);
  }
  return out;
}

}  // namespace helly
