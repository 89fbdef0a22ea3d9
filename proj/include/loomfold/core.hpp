#pragma once

// Exact scalar types, the error hierarchy and a small dense rational matrix.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// boost 1.74 recurses without bound when rational<long> is compared with an int.
// Exact-match overloads take precedence over its mixed-type templates.
namespace boost {
#define LOOMFOLD_RATIONAL_CMP(op)                                                                       \
  inline bool operator op(const rational<std::int64_t>& a, int b) { return a op rational<std::int64_t>(b); } \
  inline bool operator op(int a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) op b; }
LOOMFOLD_RATIONAL_CMP(==)
LOOMFOLD_RATIONAL_CMP(!=)
LOOMFOLD_RATIONAL_CMP(<)
LOOMFOLD_RATIONAL_CMP(>)
LOOMFOLD_RATIONAL_CMP(<=)
LOOMFOLD_RATIONAL_CMP(>=)
#undef LOOMFOLD_RATIONAL_CMP
}  // namespace boost

namespace loomfold {

using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<int>>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidType : public Error { using Error::Error; };
class UnknownType : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class IndexOutOfRange : public Error { using Error::Error; };
class NotLengthZeroResidue : public Error { using Error::Error; };
class NotReduced : public Error { using Error::Error; };
class NotTwisted : public Error { using Error::Error; };
class NotInInversionSet : public Error { using Error::Error; };
class NonIntegerExponent : public Error { using Error::Error; };
class RankMismatch : public Error { using Error::Error; };
class NotMinuscule : public Error { using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised when a checked identity fails; carries the offending root.
class IdentityViolation : public Error {
 public:
  IdentityViolation(const std::string& what, std::vector<std::int64_t> beta)
      : Error(what), beta_(std::move(beta)) {}
  const std::vector<std::int64_t>& beta() const noexcept { return beta_; }

 private:
  std::vector<std::int64_t> beta_;
};

class NonzeroCoefficient : public Error {
 public:
  NonzeroCoefficient(const std::string& what, std::string polynomial)
      : Error(what + ": " + polynomial), polynomial_(std::move(polynomial)) {}
  const std::string& polynomial() const noexcept { return polynomial_; }

 private:
  std::string polynomial_;
};

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

inline std::string to_string(const Rational& x) {
  if (is_integer(x)) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

inline std::int64_t to_int(const Rational& x) {
  if (!is_integer(x)) throw Error("expected an integer, got " + to_string(x));
  return x.numerator();
}

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  std::vector<Rational> operator*(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const RationalMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Gauss-Jordan over the rationals.
  RationalMatrix inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && a(pivot, col) == 0) ++pivot;
      if (pivot == n) throw Error("matrix is singular");
      if (pivot != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(pivot, j), a(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      const Rational p = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a(r, col) == 0) continue;
        const Rational f = a(r, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace loomfold
