#pragma once

// The full verification sweep behind `loomfold verify-all`.

#include "loomfold/json_io.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace loomfold {

struct VerifyOptions {
  int degree = 12;
  int max_n = 8;
  bool inject_fault = false;
};

struct VerifyCell {
  AffineType type;
  int s = 0;
  bool inversions = false;
  std::optional<bool> fold;
  std::optional<bool> series;
  std::string witness;
};

struct VerifyResult {
  std::vector<VerifyCell> cells;
  std::vector<std::pair<std::string, bool>> fixtures;
  std::string first_witness;
  bool ok = true;
};

/// Word-based and closed-form inversion sets agree, the word starts with s and its
/// canonical form ends with tau(0).
inline bool check_inversions(const AffineData& data, int s, std::string* why = nullptr) {
  const auto f = alcove_factorize(data, translation_minus_lambda(data, s));
  auto w = inversion_set_from_word(data, f.word);
  std::sort(w.begin(), w.end(), HeightOrder{});
  std::vector<LatticeVec> c;
  for (const auto& r : inversion_set_closed_form(data, s)) c.push_back(r.root);
  if (w != c) {
    if (why) *why = "word and closed-form inversion sets differ";
    return false;
  }
  if (f.word.empty() || f.word.front() != s) {
    if (why) *why = "word does not start with s";
    return false;
  }
  const auto canon = braid_canonical(data, f.word);
  bool ends = false;
  // tau(0) must be movable to the end through commuting letters.
  for (std::size_t k = canon.size(); k-- > 0;) {
    if (canon[k] == f.tau[0]) {
      ends = true;
      break;
    }
    if (data.gcm[canon[k]][f.tau[0]] != 0) break;
  }
  if (!ends && why) *why = "word does not end with tau(0)";
  return ends;
}

struct GraphFixture {
  AffineType type;
  int s;
  std::vector<GraphEdge> edges;
  std::size_t composites;
};

inline std::vector<GraphFixture> graph_fixtures() {
  return {
      {make_type(Family::A, 5, 2), 1, {{1, 1, 0}, {2, 2, 1}, {3, 1, 5}, {4, 3, 2}, {5, 2, 4}}, 0},
      {make_type(Family::D, 3, 2), 2, {{1, 2, 0}, {2, 2, 3}, {3, 1, 1}}, 0},
      {make_type(Family::D, 4, 2),
       3,
       {{1, 3, 0}, {2, 3, 4}, {3, 1, 2}, {3, 3, 6}, {4, 2, 1}, {5, 2, 3}, {6, 1, 4}},
       1},
  };
}

inline bool check_graph_fixtures(std::string* why = nullptr) {
  for (const auto& fx : graph_fixtures()) {
    const auto mc = minuscule_case(fx.type, fx.s);
    const auto g = eprime_graph(mc);
    if (g.edges != fx.edges || g.composite_targets.size() != fx.composites) {
      if (why) *why = "e'-graph of " + type_name(fx.type) + " differs from the fixture";
      return false;
    }
  }
  const auto a5 = classify_x0(minuscule_case(make_type(Family::A, 5, 2), 1));
  const auto d3 = classify_x0(minuscule_case(make_type(Family::D, 3, 2), 2));
  const bool x0 = a5.j0 == std::vector<int>{1, 3} && a5.j1 == std::vector<int>{2} && a5.exponents.at(2) == -1 &&
                  d3.j0 == std::vector<int>{2} && d3.j1 == std::vector<int>{1} && d3.exponents.at(1) == 0;
  if (!x0 && why) *why = "x0 classification differs from the fixture";
  return x0;
}

inline bool check_q_identities(std::string* why = nullptr) {
  for (auto k : {SerreCaseKind::i1j0_D, SerreCaseKind::i0j1_D})
    for (const auto& p : serre_coefficients({k, 0, 1}))
      if (!p.is_zero()) {
        if (why) *why = "Serre coefficient " + p.to_string() + " does not vanish";
        return false;
      }
  for (int n = 2; n <= 10; ++n)
    for (auto fam : {EtaFamily::A_odd, EtaFamily::D}) {
      const auto e = eta_case(fam, n);
      if (!e.cancellation_ok || !e.eta_consistent) {
        if (why) *why = "eta cancellation fails at n = " + std::to_string(n);
        return false;
      }
    }
  const auto d3 = eta_case(EtaFamily::D, 2, 1);
  const auto expected = LaurentPoly::q(-3) * (LaurentPoly(1) - LaurentPoly::q(-2));
  if (d3.eta != expected) {
    if (why) *why = "eta_2 for D3~2 is " + d3.eta.to_string();
    return false;
  }
  return true;
}

inline bool check_a2_law(int degree, std::string* why = nullptr) {
  const auto c = char_product(build_affine(make_type(Family::A, 2, 2)), 1, degree);
  for (int k = 0; k <= degree; ++k)
    if (c.coefficient({k}) != (k + 2) / 2) {
      if (why) *why = "A2~2 coefficient of e^-" + std::to_string(k) + "a1 is " + c.coefficient({k}).str();
      return false;
    }
  return true;
}

inline VerifyResult run_verify_all(const VerifyOptions& opt) {
  VerifyResult res;
  auto fail = [&](const std::string& w) {
    if (res.ok) res.first_witness = w;
    res.ok = false;
  };
  for (const auto& t : table_types(opt.max_n)) {
    const auto data = build_affine(t);
    for (int s = 1; s <= t.n; ++s) {
      VerifyCell cell;
      cell.type = t;
      cell.s = s;
      std::string why;
      cell.inversions = check_inversions(data, s, &why);
      if (!cell.inversions) cell.witness = why;
      if (t.twisted()) {
        FoldOptions fo;
        fo.inject_fault = opt.inject_fault;
        try {
          verify_fold_identity(t, s, fo);
          cell.fold = true;
        } catch (const IdentityViolation& e) {
          cell.fold = false;
          if (cell.witness.empty()) cell.witness = std::string("IdentityViolation: ") + e.what();
        }
        const auto cmp = fold_check(t, s, opt.degree);
        cell.series = cmp.equal;
        if (!cmp.equal && cell.witness.empty())
          cell.witness = "series differ at " + monomial_key(cmp.witness->monomial) + ": " + cmp.witness->left.str() +
                         " vs " + cmp.witness->right.str();
      }
      const bool ok = cell.inversions && cell.fold.value_or(true) && cell.series.value_or(true);
      if (!ok) fail(type_name(t) + " node " + std::to_string(s) + ": " + cell.witness);
      res.cells.push_back(cell);
    }
  }
  auto fixture = [&](const std::string& name, bool ok, const std::string& why) {
    res.fixtures.emplace_back(name, ok);
    if (!ok) fail(name + ": " + why);
  };
  std::string why;
  bool g = check_graph_fixtures(&why);
  fixture("pbw-graph fixtures", g, why);
  why.clear();
  bool q = check_q_identities(&why);
  fixture("q-identities", q, why);
  why.clear();
  bool a2 = check_a2_law(std::min(opt.degree, 20), &why);
  fixture("A2~2 coefficient law", a2, why);
  return res;
}

inline void print_matrix(const VerifyResult& r, std::ostream& os) {
  auto mark = [](std::optional<bool> b) { return b ? (*b ? "PASS" : "FAIL") : "-"; };
  os << "type     node  inversions  fold  series\n";
  for (const auto& c : r.cells) {
    std::string name = type_name(c.type);
    name.resize(8, ' ');
    std::string node = std::to_string(c.s);
    node.resize(4, ' ');
    os << name << " " << node << "  " << (c.inversions ? "PASS" : "FAIL") << "        " << mark(c.fold) << "  "
       << mark(c.series) << "\n";
  }
  for (const auto& [name, ok] : r.fixtures) os << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
  os << (r.ok ? "verify-all: PASS" : "verify-all: FAIL") << " (" << r.cells.size() << " cells)\n";
  if (!r.ok) os << "first witness: " << r.first_witness << "\n";
}

}  // namespace loomfold
