#include "lspath/matrix.hpp"

#include <sstream>
#include <utility>

#include "lspath/errors.hpp"

namespace lspath {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(const IntMatrix& m)
    : RationalMatrix(m.size(), m.empty() ? 0 : m.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m[i][j];
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("cannot invert a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InputError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_integral() const {
  for (const auto& q : data_)
    if (!is_integer(q)) return false;
  return true;
}

bool RationalMatrix::is_invertible() const {
  if (rows_ != cols_) return false;
  try {
    (void)inverse();
  } catch (const InputError&) {
    return false;
  }
  return true;
}

RationalWeight RationalMatrix::apply(const RationalWeight& v) const {
  RationalWeight out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

RationalWeight RationalMatrix::apply(const Weight& v) const {
  return apply(RationalWeight(v));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix operator*(const Rational& k, RationalMatrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= k;
  return a;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_string(m(i, j));
    }
  }
  out << ']';
  return out.str();
}

}  // namespace lspath
