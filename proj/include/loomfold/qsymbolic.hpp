#pragma once

// Exact Laurent polynomials in q with a formal spectral parameter a, and the scalar
// identities behind the l-weight and quantum Serre computations.

#include "loomfold/core.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace loomfold {

/// Finite sum of c q^i a^j with i in Z, j >= 0. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Key = std::pair<int, int>;  // (power of q, power of a)

  LaurentPoly() = default;
  LaurentPoly(Rational c) { add_term(0, 0, c); }  // NOLINT: scalars embed implicitly
  LaurentPoly(std::int64_t c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly monomial(int q_power, int a_power = 0, Rational c = 1) {
    LaurentPoly p;
    p.add_term(q_power, a_power, c);
    return p;
  }
  static LaurentPoly q(int k) { return monomial(k, 0); }
  static LaurentPoly a() { return monomial(0, 1); }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int qp, int ap, const Rational& c) {
    if (ap < 0) throw Error("negative power of a");
    if (c == 0) return;
    auto& slot = terms_[{qp, ap}];
    slot += c;
    if (slot == 0) terms_.erase({qp, ap});
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  LaurentPoly operator-() const { return LaurentPoly() - *this; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out;
    for (const auto& [kx, cx] : x.terms_)
      for (const auto& [ky, cy] : y.terms_) out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

  LaurentPoly pow(int e) const {
    if (e < 0) throw Error("negative power of a Laurent polynomial");
    LaurentPoly out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  /// Substitutes a -> a_value.
  LaurentPoly eval_a(const Rational& a_value) const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) {
      Rational f = 1;
      for (int i = 0; i < k.second; ++i) f *= a_value;
      out.add_term(k.first, 0, c * f);
    }
    return out;
  }

  /// "q^-3*a - q^-5*a" style rendering, highest q power first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto [qp, ap] = it->first;
      Rational c = it->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::string body;
      if (qp != 0) body += qp == 1 ? "q" : "q^" + std::to_string(qp);
      if (ap != 0) body += (body.empty() ? "" : "*") + std::string(ap == 1 ? "a" : "a^" + std::to_string(ap));
      if (body.empty())
        os << loomfold::to_string(c);
      else if (c == 1)
        os << body;
      else
        os << loomfold::to_string(c) << "*" << body;
    }
    return os.str();
  }

 private:
  std::map<Key, Rational> terms_;
};

/// [m]_{q^d} = q^{d(m-1)} + q^{d(m-3)} + ... + q^{-d(m-1)}.
inline LaurentPoly qint(int m, int d = 1) {
  if (m < 0 || d < 1) throw Error("qint: need m >= 0 and d >= 1");
  LaurentPoly out;
  for (int k = 0; k < m; ++k) out.add_term(d * (m - 1 - 2 * k), 0, 1);
  return out;
}

/// Symmetric Gaussian binomial [m choose k]_{q^d}.
inline LaurentPoly qbinomial(int m, int k, int d = 1) {
  if (k < 0 || k > m) return LaurentPoly();
  if (k == 0 || k == m) return LaurentPoly(1);
  return LaurentPoly::q(d * k) * qbinomial(m - 1, k, d) + LaurentPoly::q(-d * (m - k)) * qbinomial(m - 1, k - 1, d);
}

enum class EllKind { constant, polynomial, pure_pole, rational };

inline const char* kind_name(EllKind k) {
  switch (k) {
    case EllKind::constant: return "constant";
    case EllKind::polynomial: return "polynomial";
    case EllKind::pure_pole: return "pure_pole";
    default: return "rational";
  }
}

/// Psi(z) = omega (num0 + num1 w) / (den0 + den1 w) with w = z^{dtwist}.
struct EllWeight {
  std::string omega;
  int o = 1;
  int d = 1;
  int dtwist = 1;
  LaurentPoly num0{1}, num1;
  LaurentPoly den0{1}, den1;
  EllKind kind = EllKind::rational;

  /// Coefficients of w^0..w^{terms-1} in Psi / omega.
  std::vector<LaurentPoly> expand(int terms) const {
    // num / den with den0 = 1: c_k = num_k - den1 c_{k-1}.
    std::vector<LaurentPoly> c;
    for (int k = 0; k < terms; ++k) {
      LaurentPoly v = k == 0 ? num0 : (k == 1 ? num1 : LaurentPoly());
      if (k > 0) v -= den1 * c[k - 1];
      c.push_back(v);
    }
    return c;
  }
};

/// l-weight of a vector with eigenvalue data (b, c): the numerator is
/// 1 - (c + b(q_i^{-1} - q_i^{-3})) o w and the denominator 1 - o c w, q_i = q^d.
inline EllWeight psi_from_bc(const std::string& omega, const LaurentPoly& b, const LaurentPoly& c, int o, int d,
                             int dtwist) {
  if (o != 1 && o != -1) throw Error("o must be +1 or -1");
  EllWeight w;
  w.omega = omega;
  w.o = o;
  w.d = d;
  w.dtwist = dtwist;
  const LaurentPoly x = c + b * (LaurentPoly::q(-d) - LaurentPoly::q(-3 * d));
  w.num1 = -(x * LaurentPoly(o));
  w.den1 = -(c * LaurentPoly(o));
  if (w.num1 == w.den1)
    w.kind = EllKind::constant;
  else if (w.den1.is_zero())
    w.kind = EllKind::polynomial;
  else if (w.num1.is_zero())
    w.kind = EllKind::pure_pole;
  return w;
}

/// 1 - b(q_i^{-1} - q_i^{-3}) sum_{k>=1} o^k c^{k-1} w^k, truncated.
inline std::vector<LaurentPoly> psi_series_reference(const LaurentPoly& b, const LaurentPoly& c, int o, int d,
                                                     int terms) {
  std::vector<LaurentPoly> out;
  const LaurentPoly f = b * (LaurentPoly::q(-d) - LaurentPoly::q(-3 * d));
  for (int k = 0; k < terms; ++k) {
    if (k == 0) {
      out.emplace_back(1);
      continue;
    }
    out.push_back(-(f * c.pow(k - 1) * LaurentPoly((k % 2 == 0 || o == 1) ? 1 : -1)));
  }
  return out;
}

enum class EtaFamily { A_odd, D };

struct EtaCase {
  EtaFamily family;
  int n = 0;
  int s = 0;
  int o = 1;
  LaurentPoly b, c, eta;
  LaurentPoly cancellation;  // c + b(q^{-1} - q^{-3})
  bool cancellation_ok = false;
  bool eta_consistent = false;  // o c = a eta
  std::string main1_module;     // L^-_{s, a eta}
  std::string main2_module;     // L^+_{s, -a eta}
};

inline EtaCase eta_case(EtaFamily fam, int n, int o = 1) {
  if (n < 2) throw InvalidType("eta_case needs n >= 2");
  EtaCase e;
  e.family = fam;
  e.n = n;
  e.o = o;
  const LaurentPoly a = LaurentPoly::a();
  if (fam == EtaFamily::A_odd) {
    e.s = 1;
    e.b = -(a * LaurentPoly::q(-2 * n + 2));
    e.c = a * (LaurentPoly::q(-2 * n + 1) - LaurentPoly::q(-2 * n - 1));
    e.eta = LaurentPoly(o) * (LaurentPoly::q(-2 * n + 1) - LaurentPoly::q(-2 * n - 1));
  } else {
    e.s = n;
    const LaurentPoly sign(n % 2 == 1 ? 1 : -1);  // (-1)^{n-1}
    e.b = sign * a * LaurentPoly::q(-2 * n + 2);
    e.c = sign * a * (LaurentPoly::q(-2 * n - 1) - LaurentPoly::q(-2 * n + 1));
    e.eta = LaurentPoly(o) * sign * (LaurentPoly::q(-2 * n - 1) - LaurentPoly::q(-2 * n + 1));
  }
  e.cancellation = e.c + e.b * (LaurentPoly::q(-1) - LaurentPoly::q(-3));
  e.cancellation_ok = e.cancellation.is_zero();
  e.eta_consistent = LaurentPoly(o) * e.c == a * e.eta;
  e.main1_module = "L^-_{" + std::to_string(e.s) + ",a*eta}";
  e.main2_module = "L^+_{" + std::to_string(e.s) + ",-a*eta}";
  return e;
}

enum class SerreCaseKind { i1j0_D, i0j1_D, generic };

struct SerreCase {
  SerreCaseKind kind = SerreCaseKind::generic;
  int aij = 0;
  int di = 1;
};

/// sum_k (-1)^k [m choose k]_{q^d} term_k.
inline LaurentPoly alternating_qbinomial_sum(int m, int d, const std::vector<LaurentPoly>& terms) {
  LaurentPoly out;
  for (int k = 0; k <= m; ++k) {
    LaurentPoly t = qbinomial(m, k, d) * terms.at(k);
    if (k % 2) out -= t;
    else out += t;
  }
  return out;
}

/// Coefficient combinations that must vanish; each is returned as is.
inline std::vector<LaurentPoly> serre_coefficients(const SerreCase& sc) {
  using P = LaurentPoly;
  switch (sc.kind) {
    case SerreCaseKind::i1j0_D:
      return {alternating_qbinomial_sum(2, 2, {P(1), P::q(-2), P::q(-4)}),
              alternating_qbinomial_sum(2, 2, {P(1) + P::q(4), P::q(2), P()})};
    case SerreCaseKind::i0j1_D:
      return {alternating_qbinomial_sum(3, 1, {P(1), P::q(2), P::q(4), P::q(6)}),
              alternating_qbinomial_sum(3, 1, {P(), P(1), P(1) + P::q(-2), P(1) + P::q(-2) + P::q(-4)})};
    default: {
      if (sc.aij > 0 || sc.di < 1) throw Error("generic Serre case needs a_ij <= 0 and d_i >= 1");
      const int m = 1 - sc.aij;
      std::vector<LaurentPoly> out;
      for (int j = 0; j < m; ++j) {
        // q-commuting x y = q_i^{m-1-2j} y x turns the relation into P(q_i^{m-1-2j}).
        const P t = P::q(sc.di * (m - 1 - 2 * j));
        std::vector<P> terms;
        for (int k = 0; k <= m; ++k) terms.push_back(t.pow(k));
        out.push_back(alternating_qbinomial_sum(m, sc.di, terms));
      }
      return out;
    }
  }
}

inline std::vector<LaurentPoly> serre_coeff_check(const SerreCase& sc) {
  auto out = serre_coefficients(sc);
  for (const auto& p : out)
    if (!p.is_zero()) throw NonzeroCoefficient("Serre coefficient does not vanish", p.to_string());
  return out;
}

}  // namespace loomfold
