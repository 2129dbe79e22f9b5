#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lspath/rational.hpp"

namespace lspath {

/// An integral weight, stored in the fundamental-weight basis.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

Weight operator+(Weight a, const Weight& b);
Weight operator-(Weight a, const Weight& b);
Weight operator-(Weight a);
Weight operator*(std::int64_t k, Weight a);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Comma separated coordinates, e.g. "1,0,2".
std::string to_string(const Weight& w);

/// A weight with exact rational coordinates in the fundamental-weight basis.
struct RationalWeight {
  std::vector<Rational> coords;

  RationalWeight() = default;
  explicit RationalWeight(std::size_t rank) : coords(rank, Rational(0)) {}
  explicit RationalWeight(std::vector<Rational> c) : coords(std::move(c)) {}
  explicit RationalWeight(const Weight& w);

  std::size_t rank() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_integral() const;
  /// Lossless conversion; throws InvariantViolation when a coordinate is not
  /// an integer.
  Weight to_weight() const;

  RationalWeight& operator+=(const RationalWeight& other);
  RationalWeight& operator-=(const RationalWeight& other);

  bool operator==(const RationalWeight&) const = default;
};

RationalWeight operator+(RationalWeight a, const RationalWeight& b);
RationalWeight operator-(RationalWeight a, const RationalWeight& b);
RationalWeight operator*(const Rational& k, RationalWeight a);

std::string to_string(const RationalWeight& w);

}  // namespace lspath
