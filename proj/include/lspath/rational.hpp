#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lspath {

/// Exact rational with 64-bit numerator and positive denominator, always in
/// lowest terms. Arithmetic is carried out in 128 bits and throws
/// InvariantViolation if the reduced result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of the algebra
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// "p/q", or just "p" for integers.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws InputError on anything else.
Rational parse_rational(const std::string& text);

}  // namespace lspath
