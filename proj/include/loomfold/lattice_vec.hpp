#pragma once

#include "loomfold/core.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace loomfold {

/// Coefficient vector over simple roots. Affine vectors are indexed by nodes
/// {0,...,n}; finite vectors by {1,...,n}. Node labels are used for access in
/// both cases, so `v[s]` always means the coefficient of alpha_s.
class LatticeVec {
 public:
  LatticeVec() = default;
  LatticeVec(std::vector<Rational> coords, bool affine) : coords_(std::move(coords)), affine_(affine) {}

  static LatticeVec zero_affine(int n) { return LatticeVec(std::vector<Rational>(n + 1, Rational(0)), true); }
  static LatticeVec zero_finite(int n) { return LatticeVec(std::vector<Rational>(n, Rational(0)), false); }

  static LatticeVec from_ints(const std::vector<std::int64_t>& c, bool affine) {
    std::vector<Rational> r(c.begin(), c.end());
    return LatticeVec(std::move(r), affine);
  }
  static LatticeVec finite(std::initializer_list<std::int64_t> c) { return from_ints(std::vector<std::int64_t>(c), false); }
  static LatticeVec affine(std::initializer_list<std::int64_t> c) { return from_ints(std::vector<std::int64_t>(c), true); }

  static LatticeVec simple(int n, int node, bool affine) {
    LatticeVec v = affine ? zero_affine(n) : zero_finite(n);
    v[node] = 1;
    return v;
  }

  bool is_affine() const noexcept { return affine_; }
  std::size_t size() const noexcept { return coords_.size(); }
  int first_index() const noexcept { return affine_ ? 0 : 1; }
  int last_index() const noexcept { return first_index() + static_cast<int>(coords_.size()) - 1; }
  /// Rank n of the finite part.
  int rank() const noexcept { return affine_ ? static_cast<int>(coords_.size()) - 1 : static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool has_index(int node) const noexcept { return node >= first_index() && node <= last_index(); }

  const Rational& operator[](int node) const {
    check_index(node);
    return coords_[node - first_index()];
  }
  Rational& operator[](int node) {
    check_index(node);
    return coords_[node - first_index()];
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  LatticeVec& operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator*(const Rational& c, LatticeVec a) { return a *= c; }
  friend LatticeVec operator*(std::int64_t c, LatticeVec a) { return a *= Rational(c); }
  LatticeVec operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) {
    return a.affine_ == b.affine_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const LatticeVec& a, const LatticeVec& b) { return !(a == b); }
  friend bool operator<(const LatticeVec& a, const LatticeVec& b) {
    if (a.affine_ != b.affine_) return !a.affine_;
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
  }
  /// Nonzero with every coordinate >= 0, i.e. an element of Q_+.
  bool is_positive() const {
    return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x >= 0; });
  }
  bool is_negative() const {
    return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x <= 0; });
  }
  bool is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return is_integer(x); });
  }
  Rational height() const {
    Rational h = 0;
    for (const auto& x : coords_) h += x;
    return h;
  }

  std::vector<std::int64_t> to_ints() const {
    std::vector<std::int64_t> out;
    out.reserve(coords_.size());
    for (const auto& x : coords_) out.push_back(to_int(x));
    return out;
  }

  /// Coordinates concatenated, e.g. "1221" for finite integral vectors of small entries,
  /// and "(1,2,-1)" otherwise.
  std::string compact() const {
    bool digits = true;
    for (const auto& x : coords_) digits = digits && is_integer(x) && x >= 0 && x <= 9;
    std::string s;
    if (digits) {
      for (const auto& x : coords_) s += std::to_string(x.numerator());
      return s;
    }
    s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + to_string(coords_[i]);
    return s + ")";
  }

 private:
  void check_index(int node) const {
    if (!has_index(node))
      throw IndexOutOfRange("node " + std::to_string(node) + " outside index set [" + std::to_string(first_index()) +
                            "," + std::to_string(last_index()) + "]");
  }
  void check_same_shape(const LatticeVec& o) const {
    if (o.affine_ != affine_ || o.coords_.size() != coords_.size())
      throw DimensionMismatch("lattice vectors of different shape");
  }

  std::vector<Rational> coords_;
  bool affine_ = false;
};

}  // namespace loomfold
