#pragma once

// Truncated power series in e^{-alpha_i} and the product formula for characters.

#include "loomfold/folding.hpp"

#include <map>
#include <optional>
#include <vector>

namespace loomfold {

using Monomial = std::vector<int>;  // exponents m_i of e^{-sum m_i alpha_i}, i = 1..rank

/// Series truncated at plain height sum(m_i) <= degree. Zero coefficients are not stored.
class CharSeries {
 public:
  CharSeries(int rank, int degree) : rank_(rank), degree_(degree) {}

  static CharSeries one(int rank, int degree) {
    CharSeries s(rank, degree);
    s.terms_[Monomial(rank, 0)] = 1;
    return s;
  }

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  BigInt coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add(const Monomial& m, const BigInt& c) {
    if (static_cast<int>(m.size()) != rank_) throw RankMismatch("monomial of wrong rank");
    if (height(m) > degree_ || c == 0) return;
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }

  static int height(const Monomial& m) {
    int h = 0;
    for (int x : m) h += x;
    return h;
  }

  /// Multiplies in place by (1 - e^{-beta})^{-e} = sum_j C(j+e-1, e-1) e^{-j beta}.
  void multiply_geometric(const Monomial& beta, int e) {
    if (e == 0) return;
    if (e < 0) throw NonIntegerExponent("negative exponent in product formula");
    const int hb = height(beta);
    if (hb <= 0) throw Error("factor with non-positive height");
    std::map<Monomial, BigInt> out;
    for (const auto& [m, c] : terms_) {
      Monomial cur = m;
      BigInt binom = 1;  // C(j+e-1, e-1)
      for (int j = 0; height(m) + j * hb <= degree_; ++j) {
        out[cur] += c * binom;
        for (int i = 0; i < rank_; ++i) cur[i] += beta[i];
        binom = binom * (j + e) / (j + 1);
      }
    }
    terms_ = std::move(out);
  }

  CharSeries operator*(const CharSeries& o) const {
    if (o.rank_ != rank_) throw RankMismatch("product of series of different rank");
    CharSeries out(rank_, std::min(degree_, o.degree_));
    for (const auto& [a, ca] : terms_)
      for (const auto& [b, cb] : o.terms_) {
        Monomial m(rank_);
        for (int i = 0; i < rank_; ++i) m[i] = a[i] + b[i];
        out.add(m, ca * cb);
      }
    return out;
  }

  CharSeries truncated(int degree) const {
    CharSeries out(rank_, std::min(degree, degree_));
    for (const auto& [m, c] : terms_) out.add(m, c);
    return out;
  }

 private:
  int rank_;
  int degree_;
  std::map<Monomial, BigInt> terms_;
};

struct Factor {
  Monomial beta;
  int exponent;
};

inline Monomial to_monomial(const LatticeVec& v) {
  Monomial m;
  for (auto x : v.to_ints()) m.push_back(static_cast<int>(x));
  return m;
}

inline CharSeries product_series(int rank, const std::vector<Factor>& factors, int degree) {
  CharSeries s = CharSeries::one(rank, degree);
  for (const auto& f : factors) s.multiply_geometric(f.beta, f.exponent);
  return s;
}

/// Factors (beta, e(beta)) of the product formula with e = xi_s(beta) [beta]_s.
inline std::vector<Factor> char_factors(const AffineData& data, int s) {
  std::vector<Factor> out;
  for (const auto& b : bar_inversion_set(data, s)) {
    const Rational e = xi_value(data, s, b) * b.beta[s];
    if (!is_integer(e))
      throw NonIntegerExponent("exponent " + to_string(e) + " at " + b.beta.compact() + " is not an integer");
    out.push_back({to_monomial(b.beta), static_cast<int>(e.numerator())});
  }
  return out;
}

inline CharSeries char_product(const AffineData& data, int s, int degree) {
  return product_series(data.n(), char_factors(data, s), degree);
}

/// Product formula of the untwisted parent X_N^(1) at parent node p.
inline CharSeries parent_char_product(const OrbitMap& om, int parent_node, int degree) {
  std::vector<Factor> f;
  for (const auto& [a, e] : parent_inversion_roots(om, parent_node)) f.push_back({to_monomial(a), e});
  return product_series(om.parent_rank(), f, degree);
}

/// pi(e^{-alpha_i}) = e^{-alpha_{rep_of(i)}}, applied to each monomial.
inline CharSeries fold_series(const CharSeries& parent, const OrbitMap& om, int degree) {
  if (parent.rank() != om.parent_rank()) throw RankMismatch("fold_series: series rank differs from parent rank");
  CharSeries out(om.rank(), std::min(degree, parent.degree()));
  for (const auto& [m, c] : parent.terms()) {
    Monomial f(om.rank(), 0);
    for (int i = 1; i <= om.parent_rank(); ++i) f[om.rep_of[i] - 1] += m[i - 1];
    out.add(f, c);
  }
  return out;
}

struct SeriesWitness {
  Monomial monomial;
  BigInt left;
  BigInt right;
};

struct SeriesComparison {
  bool equal = true;
  std::optional<SeriesWitness> witness;  // lowest-height differing monomial
};

inline SeriesComparison series_equal(const CharSeries& a, const CharSeries& b, int degree) {
  if (a.rank() != b.rank()) throw RankMismatch("series_equal: ranks differ");
  if (a.degree() < degree || b.degree() < degree) throw Error("series_equal: inputs truncated below requested degree");
  std::map<std::pair<int, Monomial>, std::pair<BigInt, BigInt>> diff;
  for (const auto& [m, c] : a.terms())
    if (CharSeries::height(m) <= degree) diff[{CharSeries::height(m), m}].first = c;
  for (const auto& [m, c] : b.terms())
    if (CharSeries::height(m) <= degree) diff[{CharSeries::height(m), m}].second = c;
  SeriesComparison out;
  for (const auto& [key, v] : diff)
    if (v.first != v.second) {
      out.equal = false;
      out.witness = SeriesWitness{key.second, v.first, v.second};
      break;
    }
  return out;
}

/// Twisted product formula against the folded parent series at the same degree.
inline SeriesComparison fold_check(const AffineType& t, int s, int degree) {
  const auto data = build_affine(t);
  const auto om = sigma_for(t);
  const auto folded = fold_series(parent_char_product(om, om.representative(s), degree), om, degree);
  return series_equal(folded, char_product(data, s, degree), degree);
}

}  // namespace loomfold
