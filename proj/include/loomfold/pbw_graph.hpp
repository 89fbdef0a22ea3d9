#pragma once

// The e'_i-edge combinatorics of dual PBW vectors at minuscule nodes.

#include "loomfold/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace loomfold {

inline bool is_minuscule(const AffineType& t, int s) {
  const int n = t.n;
  if (s < 1 || s > n) return false;
  if (t.r == 1) {
    switch (t.family) {
      case Family::A: return true;
      case Family::D: return s == 1 || s == n - 1 || s == n;
      case Family::E: return (n == 6 && (s == 1 || s == 5)) || (n == 7 && s == 6);
      default: return false;
    }
  }
  if (t.r == 2 && t.family == Family::A && t.N % 2 == 1) return s == 1;
  if (t.r == 2 && t.family == Family::D) return s == n;
  return false;
}

struct MinusculeCase {
  AffineData data;
  int s = 0;
  ReducedWord word;
  std::vector<int> tau;
  std::vector<LatticeVec> betas;  // finite parts, word order
  int theta_index = 0;            // 1-based
};

inline MinusculeCase minuscule_case(const AffineType& t, int s) {
  if (!is_minuscule(t, s))
    throw NotMinuscule("node " + std::to_string(s) + " is not minuscule for " + type_name(t));
  MinusculeCase mc;
  mc.data = build_affine(t);
  mc.s = s;
  auto f = alcove_factorize(mc.data, translation_minus_lambda(mc.data, s));
  mc.word = f.word;
  mc.tau = f.tau;
  for (const auto& b : inversion_set_from_word(mc.data, mc.word)) {
    if (b[0] != 0) throw Error("minuscule inversion root with a delta component: " + b.compact());
    mc.betas.push_back(project_bar(mc.data, b));
  }
  for (std::size_t k = 0; k < mc.betas.size(); ++k)
    if (mc.betas[k] == mc.data.theta) mc.theta_index = static_cast<int>(k) + 1;
  if (mc.theta_index == 0) throw Error("theta does not occur among the inversion roots");
  return mc;
}

/// Node 0 is F(0) = 1, node k >= 1 is beta_k.
struct GraphEdge {
  int source;
  int label;
  int target;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

/// An orbit weight of the same degree as a PBW monomial in two root vectors, with
/// an e'_i-edge onto a single PBW vector.
struct CompositeEdge {
  LatticeVec weight;
  std::vector<std::pair<int, int>> factors;  // (a, b) with beta_a + beta_b = weight
  int label;
  int target;
};

/// Pairing condition holds but beta_k - alpha_i is not a single PBW index or zero.
struct UnmatchedEdge {
  int source;
  int label;
  LatticeVec target_weight;
};

struct EprimeGraph {
  int node_count = 0;
  std::vector<GraphEdge> edges;
  std::vector<CompositeEdge> composite_targets;
  std::vector<UnmatchedEdge> unmatched;
};

inline bool eprime_pairing(const AffineData& data, int s, int i, const LatticeVec& beta) {
  const Rational lhs = bilinear(data, LatticeVec::simple(data.n(), i, false), beta);
  return lhs == Rational(data.d(i) + (i == s ? 1 : 0));
}

/// Weights mu with Lambda_s - mu in the Weyl orbit of the fundamental weight Lambda_s.
inline std::vector<LatticeVec> minuscule_orbit(const AffineData& data, int s) {
  const int n = data.n();
  std::set<LatticeVec> seen{LatticeVec::zero_finite(n)};
  std::deque<LatticeVec> queue{LatticeVec::zero_finite(n)};
  while (!queue.empty()) {
    LatticeVec mu = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Rational p = i == s ? 1 : 0;
      for (int j = 1; j <= n; ++j) p -= mu[j] * data.gcm[i][j];
      if (p <= 0) continue;
      LatticeVec next = mu;
      next[i] += p;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<LatticeVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), HeightOrder{});
  return out;
}

inline EprimeGraph eprime_graph(const MinusculeCase& mc) {
  const auto& data = mc.data;
  const int n = data.n();
  EprimeGraph g;
  g.node_count = static_cast<int>(mc.betas.size()) + 1;
  auto index_of = [&](const LatticeVec& v) -> int {
    if (v.is_zero()) return 0;
    for (std::size_t k = 0; k < mc.betas.size(); ++k)
      if (mc.betas[k] == v) return static_cast<int>(k) + 1;
    return -1;
  };
  for (std::size_t k = 0; k < mc.betas.size(); ++k)
    for (int i = 1; i <= n; ++i) {
      if (!eprime_pairing(data, mc.s, i, mc.betas[k])) continue;
      LatticeVec target = mc.betas[k] - LatticeVec::simple(n, i, false);
      const int t = index_of(target);
      if (t >= 0)
        g.edges.push_back({static_cast<int>(k) + 1, i, t});
      else
        g.unmatched.push_back({static_cast<int>(k) + 1, i, target});
    }
  for (const auto& mu : minuscule_orbit(data, mc.s)) {
    if (index_of(mu) >= 0) continue;
    std::vector<std::pair<int, int>> factors;
    for (std::size_t a = 0; a < mc.betas.size(); ++a)
      for (std::size_t b = a + 1; b < mc.betas.size(); ++b)
        if (mc.betas[a] + mc.betas[b] == mu) factors.emplace_back(a + 1, b + 1);
    for (int i = 1; i <= n; ++i) {
      if (!eprime_pairing(data, mc.s, i, mu)) continue;
      const int t = index_of(mu - LatticeVec::simple(n, i, false));
      if (t >= 0) g.composite_targets.push_back({mu, factors, i, t});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

struct X0Classification {
  std::vector<int> j0;
  std::vector<int> j1;
  std::map<int, int> exponents;  // i in J_1 -> exponent of q
  bool consistent = true;        // theta has no i-edge for i in J_0, one for i in J_1 with a single target
};

inline X0Classification classify_x0(const MinusculeCase& mc) {
  const auto& data = mc.data;
  X0Classification c;
  const auto g = eprime_graph(mc);
  for (int i = 1; i <= data.n(); ++i) {
    const bool zero = bilinear(data, LatticeVec::simple(data.n(), i, false), data.theta) == 0;
    (zero ? c.j0 : c.j1).push_back(i);
    if (!zero) c.exponents[i] = -data.d(0) * (2 + data.gcm[0][i]);
    int out = 0;
    for (const auto& e : g.edges) out += e.source == mc.theta_index && e.label == i;
    for (const auto& u : g.unmatched) out += u.source == mc.theta_index && u.label == i;
    const LatticeVec target = data.theta - LatticeVec::simple(data.n(), i, false);
    const bool single = target.is_zero() || std::find(mc.betas.begin(), mc.betas.end(), target) != mc.betas.end();
    c.consistent = c.consistent && (zero ? out == 0 : out == (single ? 1 : 0));
  }
  return c;
}

inline std::string node_name(int k) { return k == 0 ? "1" : "b" + std::to_string(k); }

inline std::string to_dot(const MinusculeCase& mc, const EprimeGraph& g) {
  std::ostringstream os;
  os << "digraph eprime {\n  rankdir=RL;\n";
  os << "  \"1\" [label=\"1\"];\n";
  for (std::size_t k = 0; k < mc.betas.size(); ++k)
    os << "  \"" << node_name(static_cast<int>(k) + 1) << "\" [label=\"F(" << mc.betas[k].compact() << ")\"];\n";
  for (const auto& e : g.edges)
    os << "  \"" << node_name(e.source) << "\" -> \"" << node_name(e.target) << "\" [label=\"e'_" << e.label << "\"];\n";
  for (std::size_t c = 0; c < g.composite_targets.size(); ++c) {
    const auto& ce = g.composite_targets[c];
    std::string name = "c" + ce.weight.compact();
    std::string label;
    for (const auto& [a, b] : ce.factors) label += (label.empty() ? "" : " | ") + node_name(a) + node_name(b);
    os << "  \"" << name << "\" [shape=box,label=\"" << (label.empty() ? ce.weight.compact() : label) << "\"];\n";
    os << "  \"" << name << "\" -> \"" << node_name(ce.target) << "\" [label=\"e'_" << ce.label << "\",style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace loomfold
