#pragma once

// Diagram automorphisms of the simply-laced parent X_N, the folding map on roots,
// the exponent correction xi_s, and the fiber identity relating both sides.

#include "loomfold/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace loomfold {

/// Finite Cartan matrix of the simply-laced parent X_N of a twisted type, in the
/// numbering used by sigma_for. D_N is 1 - ... - (N-2) with N-1 and N both on N-2.
inline IntMatrix parent_finite_cartan(const AffineType& t) {
  if (!t.twisted()) throw NotTwisted(type_name(t) + " is untwisted");
  const int N = t.N;
  std::vector<Bond> b;
  if (t.family == Family::A) {
    b = detail::chain(1, N);
  } else if (t.family == Family::D) {
    b = detail::chain(1, N - 2);
    b.push_back({N - 1, N - 2});
    b.push_back({N, N - 2});
  } else {
    b = detail::chain(1, 5);
    b.push_back({6, 3});
  }
  IntMatrix c(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i) c[i][i] = 2;
  for (const auto& e : b) c[e.u - 1][e.v - 1] = c[e.v - 1][e.u - 1] = -1;
  return c;
}

struct OrbitMap {
  AffineType twisted_type;
  std::vector<int> sigma;               // sigma[i] for i in 1..N; entry 0 unused
  std::vector<std::vector<int>> orbits;  // orbits[k] is the orbit folding onto node k (k in 1..n); entry 0 unused
  std::vector<int> rep_of;               // rep_of[i] = folded node of parent node i

  int parent_rank() const { return twisted_type.N; }
  int rank() const { return twisted_type.n; }
  /// Smallest member of the orbit above folded node k.
  int representative(int k) const { return orbits.at(k).front(); }
};

inline OrbitMap sigma_for(const AffineType& t) {
  if (!t.twisted()) throw NotTwisted(type_name(t) + " is untwisted");
  const int N = t.N;
  OrbitMap om;
  om.twisted_type = t;
  om.sigma.assign(N + 1, 0);
  om.rep_of.assign(N + 1, 0);
  for (int i = 1; i <= N; ++i) om.sigma[i] = i;
  if (t.family == Family::A) {
    for (int i = 1; i <= N; ++i) om.sigma[i] = N + 1 - i;
  } else if (t.family == Family::D && t.r == 2) {
    std::swap(om.sigma[N - 1], om.sigma[N]);
  } else if (t.family == Family::E) {
    om.sigma[1] = 5, om.sigma[5] = 1, om.sigma[2] = 4, om.sigma[4] = 2;
  } else {
    om.sigma[1] = 3, om.sigma[3] = 4, om.sigma[4] = 1;
  }
  // Folded node labels: E_6 sends the orbit {6} to node 4, everything else is labelled
  // by its smallest member in increasing order.
  std::vector<int> label(N + 1, 0);
  if (t.family == Family::E) {
    label = {0, 1, 2, 3, 2, 1, 4};
  } else {
    int next = 0;
    for (int i = 1; i <= N; ++i) {
      int m = i;
      for (int j = om.sigma[i]; j != i; j = om.sigma[j]) m = std::min(m, j);
      label[i] = m == i ? ++next : label[m];
    }
  }
  om.orbits.assign(t.n + 1, {});
  for (int i = 1; i <= N; ++i) {
    om.rep_of[i] = label[i];
    om.orbits[label[i]].push_back(i);
  }
  return om;
}

/// Pi: parent finite lattice -> folded finite lattice, alpha_i -> alpha_{rep_of(i)}.
inline LatticeVec fold_root(const OrbitMap& om, const LatticeVec& beta) {
  if (beta.is_affine() || beta.rank() != om.parent_rank()) throw DimensionMismatch("fold_root: not a parent finite vector");
  LatticeVec out = LatticeVec::zero_finite(om.rank());
  for (int i = 1; i <= om.parent_rank(); ++i) out[om.rep_of[i]] += beta[i];
  return out;
}

/// Finite parts of Delta_+(t_{-lambda_p}) for the untwisted parent at node p, with
/// exponent [alpha]_p.
inline std::vector<std::pair<LatticeVec, int>> parent_inversion_roots(const OrbitMap& om, int parent_node) {
  std::vector<std::pair<LatticeVec, int>> out;
  for (const auto& a : finite_positive_roots(parent_finite_cartan(om.twisted_type))) {
    const int e = static_cast<int>(to_int(a[parent_node]));
    if (e >= 1) out.emplace_back(a, e);
  }
  return out;
}

/// xi_s for an entry of the twisted folded inversion set.
inline Rational xi_value(const AffineData& data, int s, const BarRoot& b) {
  if (!data.type.twisted()) return Rational(1);
  if (data.type.is_a_even_twisted()) return b.family == 1 ? Rational(1) : Rational(1, 2);
  const int gamma = is_long(data, b.beta) ? data.type.r : 1;
  return Rational(data.d(s), gamma);
}

inline Rational xi(const AffineData& data, int s, const LatticeVec& beta) {
  for (const auto& b : bar_inversion_set(data, s))
    if (b.beta == beta) return xi_value(data, s, b);
  throw NotInInversionSet(beta.compact() + " is not in the projected inversion set of " + type_name(data.type) +
                          " at node " + std::to_string(s));
}

struct FoldEntry {
  LatticeVec beta;
  int family = 1;
  bool is_long = false;
  Rational xi;
  std::vector<std::pair<LatticeVec, int>> fiber;  // parent root, [beta']_p
  Rational lhs;
  Rational rhs;
  bool ok = false;
};

struct FoldReport {
  AffineType type;
  int s = 0;
  int parent_node = 0;
  std::vector<FoldEntry> entries;
  bool ok = true;
};

struct FoldOptions {
  int parent_node = 0;        // 0 selects the smallest orbit representative
  bool inject_fault = false;  // doubles one xi value
  bool throw_on_violation = true;
};

inline FoldReport verify_fold_identity(const AffineType& t, int s, const FoldOptions& opt = {}) {
  const auto data = build_affine(t);
  check_node(data, s, false);
  const auto om = sigma_for(t);
  FoldReport rep;
  rep.type = t;
  rep.s = s;
  rep.parent_node = opt.parent_node ? opt.parent_node : om.representative(s);
  if (om.rep_of.at(rep.parent_node) != s)
    throw Error("parent node " + std::to_string(rep.parent_node) + " is not above node " + std::to_string(s));

  std::map<LatticeVec, std::vector<std::pair<LatticeVec, int>>> fibers;
  for (const auto& [a, e] : parent_inversion_roots(om, rep.parent_node)) fibers[fold_root(om, a)].emplace_back(a, e);

  const auto bars = bar_inversion_set(data, s);
  for (const auto& b : bars) {
    FoldEntry fe;
    fe.beta = b.beta;
    fe.family = b.family;
    fe.is_long = is_long(data, b.beta) && !is_short(data, b.beta);
    fe.xi = xi_value(data, s, b);
    if (opt.inject_fault && &b == &bars.back()) fe.xi *= 2;
    auto it = fibers.find(b.beta);
    if (it != fibers.end()) fe.fiber = it->second;
    fe.lhs = 0;
    for (const auto& [a, e] : fe.fiber) fe.lhs += e;
    fe.rhs = fe.xi * b.beta[s];
    fe.ok = fe.lhs == fe.rhs;
    rep.ok = rep.ok && fe.ok;
    rep.entries.push_back(fe);
  }
  // Every parent root must land in the folded set.
  for (const auto& [beta, fib] : fibers) {
    bool found = false;
    for (const auto& b : bars) found = found || b.beta == beta;
    if (!found) {
      rep.ok = false;
      if (opt.throw_on_violation)
        throw IdentityViolation("parent roots fold outside the projected inversion set", beta.to_ints());
    }
  }
  if (!rep.ok && opt.throw_on_violation)
    for (const auto& fe : rep.entries)
      if (!fe.ok)
        throw IdentityViolation("fold identity fails at " + fe.beta.compact() + ": " + to_string(fe.lhs) +
                                    " != " + to_string(fe.rhs),
                                fe.beta.to_ints());
  return rep;
}

}  // namespace loomfold
