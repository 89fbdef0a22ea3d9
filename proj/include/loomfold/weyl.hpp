#pragma once

// Extended affine Weyl group elements as matrices on affine root-lattice
// coordinates, the translations t_{-lambda_s}, and their inversion sets.

#include "loomfold/lattice.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace loomfold {

/// Column j of `matrix` is the image of alpha_j.
struct ExtWeylElt {
  RationalMatrix matrix;
  std::optional<std::vector<int>> word;
  std::optional<std::vector<int>> perm;

  LatticeVec apply(const LatticeVec& v) const { return LatticeVec(matrix * v.coords(), true); }
  ExtWeylElt operator*(const ExtWeylElt& o) const { return ExtWeylElt{matrix * o.matrix, std::nullopt, std::nullopt}; }
  ExtWeylElt inverse() const { return ExtWeylElt{matrix.inverse(), std::nullopt, std::nullopt}; }
  friend bool operator==(const ExtWeylElt& a, const ExtWeylElt& b) { return a.matrix == b.matrix; }
};

using ReducedWord = std::vector<int>;

enum class PairingRule { coeff, d_s_times_coeff };

/// The only property of lambda_s ever used is its pairing with finite roots.
struct LambdaS {
  int s = 0;
  PairingRule rule = PairingRule::coeff;
  int scale = 1;  // 1 or d_s

  Rational pair(const LatticeVec& alpha_bar) const { return Rational(scale) * alpha_bar[s]; }
};

inline void check_node(const AffineData& data, int i, bool allow_zero = true) {
  if (i < (allow_zero ? 0 : 1) || i > data.n())
    throw IndexOutOfRange("node " + std::to_string(i) + " outside " + (allow_zero ? "I" : "I_0") + " of " +
                          type_name(data.type));
}

inline LambdaS lambda_s(const AffineData& data, int s) {
  check_node(data, s, false);
  LambdaS l;
  l.s = s;
  if (data.type.r == 1 || data.type.is_a_even_twisted()) return l;
  l.rule = PairingRule::d_s_times_coeff;
  l.scale = data.d(s);
  return l;
}

/// Finite coordinates of lambda_s in the basis of simple roots, obtained by solving
/// (lambda_s, alpha_i) = pairing for i in I_0. Only used as a cross-check.
inline LatticeVec lambda_vector(const AffineData& data, int s) {
  const int n = data.n();
  RationalMatrix b(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) b(i - 1, j - 1) = Rational(data.d(i) * data.gcm[i][j]);
  std::vector<Rational> rhs(n, Rational(0));
  rhs[s - 1] = lambda_s(data, s).scale;
  return LatticeVec(b.inverse() * rhs, false);
}

inline ExtWeylElt identity_elt(const AffineData& data) {
  return ExtWeylElt{RationalMatrix::identity(data.n() + 1), ReducedWord{}, std::nullopt};
}

/// s_i(alpha_j) = alpha_j - a_ij alpha_i.
inline ExtWeylElt simple_reflection(const AffineData& data, int i) {
  check_node(data, i);
  auto m = RationalMatrix::identity(data.n() + 1);
  for (int j = 0; j <= data.n(); ++j) m(i, j) -= data.gcm[i][j];
  return ExtWeylElt{m, ReducedWord{i}, std::nullopt};
}

/// t_{-m lambda_s}: alpha -> alpha + m (lambda_s, bar alpha) delta on level-zero vectors.
inline ExtWeylElt translation(const AffineData& data, int s, int multiple) {
  const LambdaS l = lambda_s(data, s);
  const int n = data.n();
  auto m = RationalMatrix::identity(n + 1);
  for (int j = 0; j <= n; ++j) {
    Rational p = l.pair(project_bar(data, LatticeVec::simple(n, j, true))) * multiple;
    for (int i = 0; i <= n; ++i) m(i, j) += p * data.kac[i];
  }
  return ExtWeylElt{m, std::nullopt, std::nullopt};
}

inline ExtWeylElt translation_minus_lambda(const AffineData& data, int s) { return translation(data, s, 1); }

/// Element of Delta_+(t_{-lambda_s}) written as bar + k delta (family 1) or, for
/// A_{2n}^(2) only, 2 alpha + (2k+1) delta with bar = 2 alpha (family 2).
struct InversionRoot {
  LatticeVec root;  // affine
  LatticeVec bar;   // finite
  int family = 1;

  friend bool operator<(const InversionRoot& a, const InversionRoot& b) { return HeightOrder{}(a.root, b.root); }
};

inline std::vector<InversionRoot> inversion_set_closed_form(const AffineData& data, int s) {
  const LambdaS l = lambda_s(data, s);
  std::vector<InversionRoot> out;
  const auto& t = data.type;
  for (const auto& alpha : finite_positive_roots(data)) {
    if (t.is_a_even_twisted()) {
      const std::int64_t m = to_int(alpha[s]);
      for (std::int64_t k = 0; k < m; ++k) out.push_back({lift(data, alpha, k), alpha, 1});
      if (is_short(data, alpha))
        for (std::int64_t k = 0; k < m; ++k) out.push_back({lift(data, 2 * alpha, 2 * k + 1), 2 * alpha, 2});
      continue;
    }
    const int gamma = (t.r > 1 && is_long(data, alpha)) ? t.r : 1;
    const Rational bound = l.pair(alpha) / gamma;
    for (std::int64_t k = 0; Rational(k) < bound; ++k) out.push_back({lift(data, alpha, gamma * k), alpha, 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct finite parts of the inversion set, each with its family and the number of
/// inversion roots projecting onto it.
struct BarRoot {
  LatticeVec beta;
  int family = 1;
  int multiplicity = 0;
};

inline std::vector<BarRoot> bar_inversion_set(const AffineData& data, int s) {
  std::map<LatticeVec, BarRoot> acc;
  for (const auto& r : inversion_set_closed_form(data, s)) {
    auto [it, fresh] = acc.try_emplace(r.bar, BarRoot{r.bar, r.family, 0});
    if (!fresh && it->second.family != r.family) throw Error("finite part shared by both families");
    ++it->second.multiplicity;
  }
  std::vector<BarRoot> out;
  for (auto& [k, v] : acc) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const BarRoot& a, const BarRoot& b) { return HeightOrder{}(a.beta, b.beta); });
  return out;
}

namespace detail {

inline bool column_negative(const RationalMatrix& m, int j) {
  bool any = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, j) > 0) return false;
    any = any || m(i, j) != 0;
  }
  return any;
}

/// m <- m s_i, i.e. column j becomes m_j - a_ij m_i.
inline void right_multiply_reflection(const AffineData& data, RationalMatrix& m, int i) {
  const int n = data.n();
  std::vector<Rational> ci(n + 1);
  for (int r = 0; r <= n; ++r) ci[r] = m(r, i);
  for (int j = 0; j <= n; ++j) {
    const int a = data.gcm[i][j];
    if (a == 0) continue;
    for (int r = 0; r <= n; ++r) m(r, j) -= a * ci[r];
  }
}

}  // namespace detail

struct Factorization {
  ReducedWord word;
  std::vector<int> tau;  // tau[j] = image of node j under the length-zero part
};

/// Writes elt = s_{i_1} ... s_{i_l} tau by repeatedly stripping the smallest left descent.
inline Factorization alcove_factorize(const AffineData& data, const ExtWeylElt& elt, int max_steps = 200000) {
  const int n = data.n();
  RationalMatrix inv = elt.matrix.inverse();
  Factorization f;
  for (;;) {
    int desc = -1;
    for (int i = 0; i <= n && desc < 0; ++i)
      if (detail::column_negative(inv, i)) desc = i;
    if (desc < 0) break;
    if (static_cast<int>(f.word.size()) >= max_steps) throw NotLengthZeroResidue("descent loop did not terminate");
    f.word.push_back(desc);
    detail::right_multiply_reflection(data, inv, desc);
  }
  // inv is now tau^{-1}; it must send each simple root to a simple root.
  std::vector<int> pinv(n + 1, -1);
  for (int j = 0; j <= n; ++j) {
    int target = -1;
    for (int i = 0; i <= n; ++i) {
      if (inv(i, j) == 0) continue;
      if (inv(i, j) != 1 || target >= 0) throw NotLengthZeroResidue("residual element is not a diagram automorphism");
      target = i;
    }
    if (target < 0) throw NotLengthZeroResidue("residual element is singular");
    pinv[j] = target;
  }
  f.tau.assign(n + 1, -1);
  for (int j = 0; j <= n; ++j) {
    if (f.tau[pinv[j]] >= 0) throw NotLengthZeroResidue("residual element is not a permutation");
    f.tau[pinv[j]] = j;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (data.gcm[f.tau[i]][f.tau[j]] != data.gcm[i][j])
        throw NotLengthZeroResidue("residual permutation does not preserve the Cartan matrix");
  return f;
}

/// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) in word order.
inline std::vector<LatticeVec> inversion_set_from_word(const AffineData& data, const ReducedWord& word) {
  const int n = data.n();
  auto prefix = RationalMatrix::identity(n + 1);
  std::vector<LatticeVec> out;
  std::set<LatticeVec> seen;
  for (int i : word) {
    check_node(data, i);
    std::vector<Rational> col(n + 1);
    for (int r = 0; r <= n; ++r) col[r] = prefix(r, i);
    LatticeVec beta(col, true);
    if (!beta.is_positive()) throw NotReduced("word is not reduced: a negative root appears");
    if (!seen.insert(beta).second) throw NotReduced("word is not reduced: a root repeats");
    out.push_back(beta);
    detail::right_multiply_reflection(data, prefix, i);
  }
  return out;
}

enum class Side { left, right };

/// l(s_k t) - l(t) (left) or l(t s_k) - l(t) (right) for t = t_{-lambda_s}.
inline int length_delta(const AffineData& data, int s, int k, Side side) {
  check_node(data, k);
  const auto alpha = LatticeVec::simple(data.n(), k, true);
  const auto img = side == Side::left ? translation(data, s, -1).apply(alpha) : translation(data, s, 1).apply(alpha);
  return img.is_negative() ? -1 : 1;
}

/// Sorts adjacent commuting letters ascending until stable.
inline ReducedWord braid_canonical(const AffineData& data, ReducedWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (data.gcm[w[k]][w[k + 1]] == 0 && w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        changed = true;
      }
    }
  }
  return w;
}

/// Reference enumeration: every positive real root alpha + k delta with 0 <= k < k_max
/// that t_{-lambda_s}^{-1} sends to a negative root.
inline std::vector<LatticeVec> inversion_set_brute_force(const AffineData& data, int s, int k_max) {
  const auto tinv = translation(data, s, -1);
  const auto roots = finite_positive_roots(data);
  std::vector<LatticeVec> candidates;
  for (const auto& a : roots) {
    candidates.push_back(a);
    candidates.push_back(-a);
    if (data.type.is_a_even_twisted() && is_short(data, a)) {
      candidates.push_back(2 * a);
      candidates.push_back(-(2 * a));
    }
  }
  std::vector<LatticeVec> out;
  for (int k = 0; k < k_max; ++k)
    for (const auto& a : candidates) {
      LatticeVec v = lift(data, a, k);
      if (!v.is_positive() || !is_real_root(data, v, roots)) continue;
      if (tinv.apply(v).is_negative()) out.push_back(v);
    }
  std::sort(out.begin(), out.end(), HeightOrder{});
  return out;
}

}  // namespace loomfold
