#pragma once

// JSON and DOT serialization: algebras with their monadic structures, the
// MV-style signature, verification reports, chain specs, Kripke models, and
// Hasse or filter-lattice diagrams with stable node ordering.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "chains.hpp"
#include "core.hpp"
#include "filters.hpp"
#include "logic.hpp"
#include "monadic.hpp"
#include "varieties.hpp"

namespace mbl {

using nlohmann::json;

// ---- loading -------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_parameter("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw invalid_parameter("cannot write " + path);
  out << j.dump(2) << '\n';
}

namespace detail {

inline std::vector<std::vector<int>> json_table(const json& j, const char* key) {
  if (!j.contains(key)) throw structural_error(std::string("missing table \"") + key + "\"");
  return j.at(key).get<std::vector<std::vector<int>>>();
}

}  // namespace detail

// Accepts the explicit table format and the shorthands {"ordinal_sum":
// [...]}, {"mv_chain": k}, {"godel_chain": k} and {"blocks": [...], "fixed":
// [...]} (whose base is the ordinal sum of its blocks).
inline FiniteBLAlgebra base_algebra_from_json(const json& j) {
  if (j.contains("ordinal_sum")) return ordinal_sum(j.at("ordinal_sum").get<std::vector<int>>());
  if (j.contains("mv_chain")) return make_mv_chain(j.at("mv_chain").get<int>());
  if (j.contains("godel_chain")) return make_godel_chain(j.at("godel_chain").get<int>());
  if (j.contains("blocks")) return ordinal_sum(j.at("blocks").get<std::vector<int>>());
  FiniteBLAlgebra a;
  a.size = j.at("size").get<int>();
  a.join = detail::json_table(j, "join");
  a.meet = detail::json_table(j, "meet");
  a.mul = detail::json_table(j, "mul");
  a.imp = detail::json_table(j, "imp");
  if (j.contains("labels")) a.labels = j.at("labels").get<std::vector<std::string>>();
  validate_shape(a);
  return a;
}

// Quantifier resolution order: explicit forall/exists tables win, then the
// {"blocks","fixed"} chain construction, then the identity structure.
inline MonadicBLAlgebra monadic_from_json(const json& j) {
  if (j.contains("blocks") && !j.contains("forall")) {
    IndexChainSpec spec;
    spec.blocks = j.at("blocks").get<std::vector<int>>();
    if (j.contains("fixed")) spec.fixed = j.at("fixed").get<std::vector<int>>();
    else {
      for (int b = 0; b <= static_cast<int>(spec.blocks.size()); ++b) spec.fixed.push_back(b);
    }
    return build_chain(spec);
  }
  MonadicBLAlgebra m;
  m.base = base_algebra_from_json(j);
  if (j.contains("forall") || j.contains("exists")) {
    if (!j.contains("forall") || !j.contains("exists"))
      throw structural_error("forall and exists tables must come together");
    m.q.forall = j.at("forall").get<std::vector<int>>();
    m.q.exists = j.at("exists").get<std::vector<int>>();
  } else {
    m.q = identity_quantifiers(m.base.size);
  }
  validate_shape(m);
  return m;
}

inline MMVAlgebra mmv_from_json(const json& j) {
  MMVAlgebra a;
  a.size = j.at("size").get<int>();
  a.oplus = detail::json_table(j, "oplus");
  a.neg = j.at("neg").get<std::vector<int>>();
  a.exists = j.at("exists").get<std::vector<int>>();
  if (j.contains("labels")) a.labels = j.at("labels").get<std::vector<std::string>>();
  validate_shape(a);
  return a;
}

// The chain may be given inline or as a path to another JSON file.
inline KripkeModel kripke_from_json(const json& j) {
  KripkeModel k;
  k.worlds = j.at("worlds").get<int>();
  const json& chain = j.at("chain");
  k.chain = chain.is_string() ? base_algebra_from_json(load_json_file(chain.get<std::string>()))
                              : base_algebra_from_json(chain);
  for (const auto& [name, values] : j.at("eval").items())
    k.eval[name] = values.get<std::vector<int>>();
  validate_shape(k);
  return k;
}

// ---- saving ---------------------------------------------------------------

inline json algebra_to_json(const FiniteBLAlgebra& a) {
  std::vector<std::string> labels(a.size);
  for (int x = 0; x < a.size; ++x) labels[x] = a.label(x);
  return json{{"size", a.size}, {"join", a.join},    {"meet", a.meet},
              {"mul", a.mul},   {"imp", a.imp},      {"labels", labels}};
}

inline json algebra_to_json(const MonadicBLAlgebra& m) {
  json j = algebra_to_json(m.base);
  j["forall"] = m.q.forall;
  j["exists"] = m.q.exists;
  return j;
}

inline json algebra_to_json(const MMVAlgebra& a) {
  std::vector<std::string> labels(a.size);
  for (int x = 0; x < a.size; ++x) labels[x] = a.label(x);
  return json{{"size", a.size}, {"oplus", a.oplus}, {"neg", a.neg},
              {"exists", a.exists}, {"labels", labels}};
}

inline json spec_to_json(const IndexChainSpec& s) {
  return json{{"blocks", s.blocks}, {"fixed", s.fixed}};
}

inline IndexChainSpec spec_from_json(const json& j) {
  IndexChainSpec s;
  s.blocks = j.at("blocks").get<std::vector<int>>();
  s.fixed = j.at("fixed").get<std::vector<int>>();
  return s;
}

inline json decomposition_to_json(const ChainDecomposition& d) {
  json j = spec_to_json(d.spec);
  j["psi"] = d.psi;
  return j;
}

inline json kripke_to_json(const KripkeModel& k) {
  json eval = json::object();
  for (const auto& [name, values] : k.eval) eval[name] = values;
  return json{{"worlds", k.worlds}, {"chain", algebra_to_json(k.chain)}, {"eval", eval}};
}

// Witness tuples are rendered through the element labels when an algebra is
// supplied, and as raw indices otherwise.
inline json report_to_json(const Report& r, const FiniteBLAlgebra* labeller = nullptr) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json witness = json::array();
    for (int x : f.witness)
      witness.push_back(labeller ? labeller->label(x) : std::to_string(x));
    failures.push_back(json{{"law", f.law}, {"witness", witness}, {"detail", f.detail}});
  }
  return json{{"checks", r.checks}, {"ok", r.ok()}, {"failures", failures}};
}

// ---- DOT export -----------------------------------------------------------

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// Hasse diagram of the lattice order. Nodes appear in carrier order and
// edges in the order cover_edges yields them, so output is reproducible.
inline std::string hasse_to_dot(const FiniteBLAlgebra& a, const std::string& name = "hasse") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (int x = 0; x < a.size; ++x)
    out << "  n" << x << " [label=\"" << detail::dot_escape(a.label(x)) << "\"];\n";
  for (const auto& [lo, hi] : cover_edges(a)) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

// Inclusion order on a family of filters. Nodes are sorted by size and then
// by bitset, and the edges are the covers of the inclusion order.
inline std::string filter_lattice_to_dot(const FiniteBLAlgebra& a, std::vector<Mask> filters,
                                         const std::string& name = "filters") {
  std::sort(filters.begin(), filters.end(), [](Mask x, Mask y) {
    return mask_size(x) != mask_size(y) ? mask_size(x) < mask_size(y) : x < y;
  });
  auto subset = [](Mask x, Mask y) { return (x & y) == x; };
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < filters.size(); ++i) {
    out << "  f" << i << " [label=\"{";
    bool first = true;
    for (int e : mask_elements(filters[i])) {
      if (!first) out << ", ";
      out << detail::dot_escape(a.label(e));
      first = false;
    }
    out << "}\"];\n";
  }
  for (std::size_t i = 0; i < filters.size(); ++i)
    for (std::size_t j = 0; j < filters.size(); ++j) {
      if (i == j || !subset(filters[i], filters[j]) || filters[i] == filters[j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < filters.size(); ++k) {
        if (k == i || k == j || filters[k] == filters[i] || filters[k] == filters[j]) continue;
        if (subset(filters[i], filters[k]) && subset(filters[k], filters[j])) {
          direct = false;
          break;
        }
      }
      if (direct) out << "  f" << i << " -> f" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace mbl
