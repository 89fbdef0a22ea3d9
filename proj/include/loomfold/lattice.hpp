#pragma once

// Finite root enumeration, the projection to the finite part, and root coefficients.

#include "loomfold/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

namespace loomfold {

/// Order by height, then lexicographically; used for every "ordered set" of roots.
struct HeightOrder {
  bool operator()(const LatticeVec& a, const LatticeVec& b) const {
    Rational ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

/// Positive roots of the finite type with Cartan matrix c (indices 1..size), found by
/// closing the simple roots under beta -> beta - <h_i, beta> alpha_i inside Q_+.
inline std::vector<LatticeVec> finite_positive_roots(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::set<LatticeVec> seen;
  std::deque<LatticeVec> queue;
  for (int i = 1; i <= n; ++i) {
    auto a = LatticeVec::simple(n, i, false);
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    LatticeVec b = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Rational p = 0;
      for (int j = 1; j <= n; ++j) p += b[j] * c[i - 1][j - 1];
      if (p == 0) continue;
      LatticeVec img = b;
      img[i] -= p;
      if (!img.is_positive() || seen.count(img)) continue;
      seen.insert(img);
      queue.push_back(img);
    }
  }
  std::vector<LatticeVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), HeightOrder{});
  return out;
}

/// The Cartan matrix of the finite part: rows and columns 1..n of the GCM.
inline IntMatrix finite_cartan(const AffineData& data) {
  const int n = data.n();
  IntMatrix c(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c[i - 1][j - 1] = data.gcm[i][j];
  return c;
}

inline std::vector<LatticeVec> finite_positive_roots(const AffineData& data) {
  return finite_positive_roots(finite_cartan(data));
}

/// Orthogonal projection onto the finite part: delta -> 0, alpha_0 -> -theta.
inline LatticeVec project_bar(const AffineData& data, const LatticeVec& v) {
  if (!v.is_affine()) {
    if (v.rank() != data.n()) throw DimensionMismatch("project_bar: rank mismatch");
    return v;
  }
  if (v.rank() != data.n()) throw DimensionMismatch("project_bar: rank mismatch");
  LatticeVec out = LatticeVec::zero_finite(data.n());
  for (int i = 1; i <= data.n(); ++i) out[i] = v[i] - v[0] * data.theta[i];
  return out;
}

/// alpha + k delta as an affine vector, for a finite vector alpha.
inline LatticeVec lift(const AffineData& data, const LatticeVec& alpha, const Rational& k) {
  LatticeVec out = LatticeVec::zero_affine(data.n());
  out[0] = k;
  for (int i = 1; i <= data.n(); ++i) out[i] = alpha[i] + k * data.kac[i];
  return out;
}

inline Rational coeff(const LatticeVec& v, int s) { return v[s]; }

/// True when the finite root alpha is long, i.e. (alpha, alpha) = 2 max d_i over I_0.
inline bool is_long(const AffineData& data, const LatticeVec& alpha) {
  return bilinear(data, alpha, alpha) == Rational(2 * data.max_finite_sym());
}

/// True when (alpha, alpha) = 2 min d_i over I_0. For a single length class both
/// is_long and is_short hold.
inline bool is_short(const AffineData& data, const LatticeVec& alpha) {
  int m = data.sym[1];
  for (int i = 1; i <= data.n(); ++i) m = std::min(m, data.sym[i]);
  return bilinear(data, alpha, alpha) == Rational(2 * m);
}

/// Membership test for the real roots of the affine algebra; `roots` is the output of
/// finite_positive_roots(data).
inline bool is_real_root(const AffineData& data, const LatticeVec& v, const std::vector<LatticeVec>& roots) {
  if (!v.is_affine() || !v.is_integral()) return false;
  const LatticeVec alpha = project_bar(data, v);
  const Rational k = v[0];
  auto in_finite = [&](const LatticeVec& a) {
    return std::binary_search(roots.begin(), roots.end(), a, HeightOrder{}) ||
           std::binary_search(roots.begin(), roots.end(), -a, HeightOrder{});
  };
  const auto& t = data.type;
  if (t.is_a_even_twisted()) {
    if (in_finite(alpha)) return true;
    LatticeVec half = Rational(1, 2) * alpha;
    return half.is_integral() && in_finite(half) && is_short(data, half) && k.numerator() % 2 != 0;
  }
  if (!in_finite(alpha)) return false;
  if (t.r == 1 || !is_long(data, alpha)) return true;
  return k.numerator() % t.r == 0;
}

inline bool is_real_root(const AffineData& data, const LatticeVec& v) {
  return is_real_root(data, v, finite_positive_roots(data));
}

}  // namespace loomfold
