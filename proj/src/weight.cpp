#include "lspath/weight.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lspath/errors.hpp"

namespace lspath {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("cannot parse number '" + whole + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  auto num = parse_int(std::string_view(text).substr(0, slash), text);
  auto den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](std::int64_t c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](std::int64_t c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Weight operator+(Weight a, const Weight& b) { return a += b; }
Weight operator-(Weight a, const Weight& b) { return a -= b; }

Weight operator-(Weight a) {
  for (auto& c : a.coords) c = -c;
  return a;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto c : w.coords) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Weight& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  return out.str();
}

RationalWeight::RationalWeight(const Weight& w) {
  coords.reserve(w.rank());
  for (auto c : w.coords) coords.emplace_back(c);
}

bool RationalWeight::is_integral() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& q) { return is_integer(q); });
}

Weight RationalWeight::to_weight() const {
  Weight w(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (!is_integer(coords[i])) {
      throw InvariantViolation("weight (" + to_string(*this) +
                               ") is not integral");
    }
    w[i] = coords[i].numerator();
  }
  return w;
}

RationalWeight& RationalWeight::operator+=(const RationalWeight& other) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

RationalWeight& RationalWeight::operator-=(const RationalWeight& other) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

RationalWeight operator+(RationalWeight a, const RationalWeight& b) { return a += b; }
RationalWeight operator-(RationalWeight a, const RationalWeight& b) { return a -= b; }

RationalWeight operator*(const Rational& k, RationalWeight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

std::string to_string(const RationalWeight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

}  // namespace lspath
