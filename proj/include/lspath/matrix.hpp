#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lspath/rational.hpp"
#include "lspath/weight.hpp"

namespace lspath {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Small dense matrix over the rationals. Only what the root-system code
/// needs: products, transpose and Gauss-Jordan inversion.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalMatrix transpose() const;
  /// Throws InputError when singular.
  RationalMatrix inverse() const;
  bool is_integral() const;
  bool is_invertible() const;

  RationalWeight apply(const RationalWeight& v) const;
  RationalWeight apply(const Weight& v) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& k, RationalMatrix a);

std::string to_string(const RationalMatrix& m);

}  // namespace lspath
