#include "lspath/rational.hpp"

#include <limits>

#include "lspath/errors.hpp"

namespace lspath {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InvariantViolation("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi || d > hi) throw InvariantViolation("rational arithmetic overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d == 0 ? 1 : d);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) return *this = from_wide(static_cast<__int128>(num_) + o.num_, 1);
  return *this = from_wide(static_cast<__int128>(num_) * o.den_ +
                               static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.num_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InvariantViolation("rational division by zero");
  return *this = from_wide(static_cast<__int128>(num_) * o.den_,
                           static_cast<__int128>(den_) * o.num_);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace lspath
