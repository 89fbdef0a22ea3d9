#pragma once

// JSON views of the library's values. Objects use sorted keys, so output is
// deterministic.

#include "loomfold/characters.hpp"
#include "loomfold/pbw_graph.hpp"
#include "loomfold/qsymbolic.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace loomfold {

using Json = nlohmann::json;

inline Json to_json(const Rational& x) {
  if (is_integer(x)) return x.numerator();
  return to_string(x);
}

inline Json to_json(const BigInt& x) {
  if (x <= BigInt(INT64_MAX) && x >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json to_json(const LatticeVec& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_json(c));
  return out;
}

inline Json to_json(const AffineType& t) {
  return Json{{"name", type_name(t)}, {"family", std::string(1, family_char(t.family))}, {"n", t.n}, {"r", t.r}, {"N", t.N}};
}

inline Json to_json(const AffineData& d) {
  return Json{{"type", to_json(d.type)}, {"gcm", d.gcm},           {"kac", d.kac},
              {"dual_kac", d.dual_kac}, {"sym", d.sym},             {"delta", to_json(d.delta)},
              {"theta", to_json(d.theta)}};
}

inline Json root_json(const LatticeVec& v, int s) {
  return Json{{"coords", to_json(v)}, {"height", to_json(v.height())}, {"coeff_s", to_json(v[s])}};
}

inline Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [k, c] : p.terms()) out[std::to_string(k.first)][std::to_string(k.second)] = to_json(c);
  return out;
}

inline Json to_json(const FoldReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json fiber = Json::array();
    for (const auto& [a, c] : e.fiber) fiber.push_back(Json{{"root", to_json(a)}, {"coeff", c}});
    entries.push_back(Json{{"beta", to_json(e.beta)},
                           {"family", e.family},
                           {"long", e.is_long},
                           {"xi", to_json(e.xi)},
                           {"fiber", fiber},
                           {"lhs", to_json(e.lhs)},
                           {"rhs", to_json(e.rhs)},
                           {"ok", e.ok}});
  }
  return Json{{"type", type_name(r.type)}, {"node", r.s}, {"parent_node", r.parent_node}, {"ok", r.ok}, {"entries", entries}};
}

inline std::string monomial_key(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

inline Json to_json(const CharSeries& s) {
  Json out = Json::object();
  for (const auto& [m, c] : s.terms()) out[monomial_key(m)] = to_json(c);
  return out;
}

inline Json to_json(const SeriesComparison& c) {
  Json out{{"equal", c.equal}};
  if (c.witness)
    out["witness"] = Json{{"monomial", c.witness->monomial}, {"left", to_json(c.witness->left)}, {"right", to_json(c.witness->right)}};
  return out;
}

inline Json to_json(const MinusculeCase& mc, const EprimeGraph& g) {
  Json nodes = Json::array();
  nodes.push_back(Json{{"id", "1"}, {"weight", to_json(LatticeVec::zero_finite(mc.data.n()))}});
  for (std::size_t k = 0; k < mc.betas.size(); ++k)
    nodes.push_back(Json{{"id", node_name(static_cast<int>(k) + 1)}, {"weight", to_json(mc.betas[k])}});
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json{{"source", node_name(e.source)}, {"target", node_name(e.target)}, {"label", e.label}});
  Json comp = Json::array();
  for (const auto& c : g.composite_targets) {
    Json factors = Json::array();
    for (const auto& [a, b] : c.factors) factors.push_back(Json::array({node_name(a), node_name(b)}));
    comp.push_back(Json{{"weight", to_json(c.weight)}, {"factors", factors}, {"label", c.label}, {"target", node_name(c.target)}});
  }
  Json unm = Json::array();
  for (const auto& u : g.unmatched)
    unm.push_back(Json{{"source", node_name(u.source)}, {"label", u.label}, {"target_weight", to_json(u.target_weight)}});
  const auto x0 = classify_x0(mc);
  Json exps = Json::object();
  for (const auto& [i, e] : x0.exponents) exps[std::to_string(i)] = e;
  return Json{{"type", type_name(mc.data.type)},
              {"node", mc.s},
              {"word", mc.word},
              {"theta", node_name(mc.theta_index)},
              {"nodes", nodes},
              {"edges", edges},
              {"composite_targets", comp},
              {"unmatched", unm},
              {"x0", Json{{"J0", x0.j0}, {"J1", x0.j1}, {"exponents", exps}, {"consistent", x0.consistent}}}};
}

inline Json to_json(const EtaCase& e) {
  return Json{{"family", e.family == EtaFamily::A_odd ? "A_{2n-1}^(2)" : "D_{n+1}^(2)"},
              {"n", e.n},
              {"node", e.s},
              {"o", e.o},
              {"b", to_json(e.b)},
              {"c", to_json(e.c)},
              {"eta", to_json(e.eta)},
              {"eta_text", e.eta.to_string()},
              {"cancellation", to_json(e.cancellation)},
              {"cancellation_ok", e.cancellation_ok},
              {"eta_consistent", e.eta_consistent},
              {"sign_convention", Json{{"main1", e.main1_module}, {"main2", e.main2_module}}}};
}

}  // namespace loomfold
