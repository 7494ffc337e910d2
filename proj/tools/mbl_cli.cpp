// Command line front end for the finite monadic BL-algebra workbench.
// Every verb is a thin adapter around one library call; --json switches the
// report to the serialized form, and exit codes separate "property violated
// or countermodel found" (1) from usage or input errors (2).

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mbl/algebra.hpp"
#include "mbl/chains.hpp"
#include "mbl/core.hpp"
#include "mbl/filters.hpp"
#include "mbl/io.hpp"
#include "mbl/logic.hpp"
#include "mbl/monadic.hpp"
#include "mbl/varieties.hpp"

namespace {

using namespace mbl;
using nlohmann::json;

struct AlgebraArgs {
  std::string algebra_path;
  std::vector<int> ordinal;
  std::vector<int> fixed;
};

void add_algebra_flags(CLI::App* cmd, AlgebraArgs& args) {
  cmd->add_option("--algebra", args.algebra_path, "JSON algebra file");
  cmd->add_option("--ordinal-sum", args.ordinal, "ordinal sum block sizes, e.g. 3,2")
      ->delimiter(',');
  cmd->add_option("--fixed", args.fixed, "fixed block boundaries, e.g. 0,2 (with --ordinal-sum)")
      ->delimiter(',');
}

MonadicBLAlgebra load_monadic(const AlgebraArgs& args) {
  if (!args.algebra_path.empty()) return monadic_from_json(load_json_file(args.algebra_path));
  if (!args.ordinal.empty()) {
    if (!args.fixed.empty()) return build_chain({args.ordinal, args.fixed});
    MonadicBLAlgebra m;
    m.base = ordinal_sum(args.ordinal);
    m.q = identity_quantifiers(m.base.size);
    return m;
  }
  throw invalid_parameter("no algebra given: use --algebra FILE or --ordinal-sum k1,k2,...");
}

std::string row_text(const std::vector<int>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(row[i]);
  }
  return out;
}

void print_algebra_text(std::ostream& os, const MonadicBLAlgebra& m) {
  os << "size " << m.base.size << "\n";
  os << "labels:";
  for (int x = 0; x < m.base.size; ++x) os << ' ' << m.base.label(x);
  os << "\n";
  const std::pair<const char*, const std::vector<std::vector<int>>*> tables[] = {
      {"join", &m.base.join}, {"meet", &m.base.meet}, {"mul", &m.base.mul}, {"imp", &m.base.imp}};
  for (const auto& [name, table] : tables) {
    os << name << ":\n";
    for (const auto& row : *table) os << "  " << row_text(row) << "\n";
  }
  os << "forall: " << row_text(m.q.forall) << "\n";
  os << "exists: " << row_text(m.q.exists) << "\n";
}

std::string set_text(const FiniteBLAlgebra& a, Mask mask) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elements(mask)) {
    if (!first) out += ", ";
    out += a.label(e);
    first = false;
  }
  return out + "}";
}

std::string index_set_text(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

void print_failures(std::ostream& os, const Report& r, const FiniteBLAlgebra& a) {
  for (const auto& f : r.failures) {
    os << "  " << f.law;
    if (!f.witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < f.witness.size(); ++i) {
        if (i) os << ", ";
        os << a.label(f.witness[i]);
      }
      os << ")";
    }
    if (!f.detail.empty()) os << ": " << f.detail;
    os << "\n";
  }
}

// parses "p=2,q=0"; values may be element indices or labels
std::map<std::string, int> parse_assignment(const std::string& text, const FiniteBLAlgebra& a) {
  std::map<std::string, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw invalid_parameter("assignment entry needs var=value: " + item);
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    int element = -1;
    try {
      element = std::stoi(value);
    } catch (const std::exception&) {
      for (int x = 0; x < a.size; ++x)
        if (a.label(x) == value) element = x;
    }
    if (element < 0 || element >= a.size)
      throw invalid_parameter("assignment value out of range: " + item);
    out[name] = element;
  }
  return out;
}

int run_build(const AlgebraArgs& args, const std::string& output, bool as_json) {
  MonadicBLAlgebra m = load_monadic(args);
  validate_shape(m);
  json j = algebra_to_json(m);
  if (!output.empty()) save_json_file(output, j);
  if (as_json) std::cout << j.dump(2) << "\n";
  else print_algebra_text(std::cout, m);
  return 0;
}

int run_verify(const AlgebraArgs& args, bool as_json) {
  MonadicBLAlgebra m = load_monadic(args);
  Report bl = check_bl_axioms(m.base);
  Report axioms = check_mbl_axioms(m);
  Report derived = check_derived_identities(m);
  bool ok = bl.ok() && axioms.ok() && derived.ok();
  if (as_json) {
    json j{{"bl", report_to_json(bl, &m.base)},
           {"axioms", report_to_json(axioms, &m.base)},
           {"derived", report_to_json(derived, &m.base)},
           {"ok", ok}};
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  int ax_pass = passed_groups(axioms, {"M1", "M2", "M3", "M4", "M5"});
  int der_pass = passed_groups(derived, derived_identity_names());
  int der_total = static_cast<int>(derived_identity_names().size());
  std::cout << "MBL axioms: " << (ax_pass == 5 ? "PASS" : "FAIL") << " (" << ax_pass << "/5)"
            << "; derived identities: " << (der_pass == der_total ? "PASS" : "FAIL") << " ("
            << der_pass << "/" << der_total << ")\n";
  if (!bl.ok()) {
    std::cout << "BL reduct: FAIL\n";
    print_failures(std::cout, bl, m.base);
  }
  print_failures(std::cout, axioms, m.base);
  print_failures(std::cout, derived, m.base);
  return ok ? 0 : 1;
}

void print_structures(const FiniteBLAlgebra& base, const std::vector<QuantifierPair>& structures,
                      bool as_json) {
  bool is_chain = classify(base).chain;
  if (as_json) {
    json out = json::array();
    for (const auto& q : structures) {
      json item{{"forall", q.forall}, {"exists", q.exists}};
      if (is_chain) item["fixed"] = decompose_chain({base, q}).spec.fixed;
      out.push_back(item);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << structures.size() << " monadic structure" << (structures.size() == 1 ? "" : "s")
            << "\n";
  for (const auto& q : structures) {
    std::string prefix;
    if (is_chain) prefix = "S = " + index_set_text(decompose_chain({base, q}).spec.fixed) + "  ";
    std::cout << prefix << "forall: " << row_text(q.forall) << "  exists: " << row_text(q.exists)
              << "\n";
  }
}

int run_enumerate(const AlgebraArgs& args, bool as_json) {
  FiniteBLAlgebra base = load_monadic(args).base;
  print_structures(base, enumerate_monadic_structures(base), as_json);
  return 0;
}

int run_brute(const AlgebraArgs& args, int max_size, int jobs, bool as_json) {
  FiniteBLAlgebra base = load_monadic(args).base;
  print_structures(base, brute_force_monadic_structures(base, max_size, jobs), as_json);
  return 0;
}

int run_quotient(const AlgebraArgs& args, const std::vector<int>& generators, bool as_json) {
  MonadicBLAlgebra m = load_monadic(args);
  Mask seed = 0;
  for (int g : generators) {
    if (g < 0 || g >= m.base.size) throw invalid_parameter("filter generator out of range");
    seed |= mask_bit(g);
  }
  Mask filter = generated_monadic_filter(m, seed);
  QuotientMBL q = quotient(m, filter);
  std::cout << "filter " << set_text(m.base, filter) << " gives quotient of size "
            << q.algebra.base.size << "\n";
  if (as_json) std::cout << algebra_to_json(q.algebra).dump(2) << "\n";
  else print_algebra_text(std::cout, q.algebra);
  return 0;
}

int run_filters(const AlgebraArgs& args, const std::string& dot_path, bool as_json) {
  MonadicBLAlgebra m = load_monadic(args);
  std::vector<Mask> plain = all_filters(m.base);
  std::vector<Mask> monadic = all_monadic_filters(m);
  if (as_json) {
    json j{{"filters", json::array()}, {"monadic_filters", json::array()}};
    for (Mask f : plain) j["filters"].push_back(mask_elements(f));
    for (Mask f : monadic) j["monadic_filters"].push_back(mask_elements(f));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << plain.size() << " filters, " << monadic.size() << " monadic filters\n";
    for (Mask f : monadic) std::cout << "  " << set_text(m.base, f) << "\n";
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw invalid_parameter("cannot write " + dot_path);
    out << filter_lattice_to_dot(m.base, monadic);
  }
  return 0;
}

int run_decompose(const AlgebraArgs& args, bool as_json) {
  MonadicBLAlgebra m = load_monadic(args);
  ChainDecomposition d = decompose_chain(m);
  if (!d.report.ok()) {
    std::cout << "decomposition failed\n";
    print_failures(std::cout, d.report, m.base);
    return 1;
  }
  if (as_json) {
    std::cout << decomposition_to_json(d).dump(2) << "\n";
    return 0;
  }
  std::cout << "blocks: " << index_set_text(d.spec.blocks) << "\n";
  std::cout << "fixed: " << index_set_text(d.spec.fixed) << "\n";
  std::cout << "psi: " << row_text(d.psi) << "\n";
  return 0;
}

int run_eval(const AlgebraArgs& args, const std::string& formula_text,
             const std::string& assign_text, const std::string& kripke_path, bool as_json) {
  FormulaPtr f = parse_formula(formula_text);
  if (!kripke_path.empty()) {
    KripkeModel k = kripke_from_json(load_json_file(kripke_path));
    std::vector<int> values = eval_kripke_vector(k, f);
    if (as_json) {
      std::cout << json{{"formula", print_formula(f)}, {"values", values}}.dump(2) << "\n";
      return 0;
    }
    std::cout << print_formula(f) << " =";
    for (int v : values) std::cout << ' ' << k.chain.label(v);
    std::cout << "\n";
    return 0;
  }
  MonadicBLAlgebra m = load_monadic(args);
  std::map<std::string, int> v = parse_assignment(assign_text, m.base);
  int value = eval_algebraic(m, f, v);
  if (as_json) {
    std::cout << json{{"formula", print_formula(f)},
                      {"value", value},
                      {"label", m.base.label(value)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << print_formula(f) << " = " << m.base.label(value) << " (index " << value << ")\n";
  return 0;
}

int run_countermodel(const std::string& formula_text, int max_size, int jobs, bool as_json) {
  FormulaPtr f = parse_formula(formula_text);
  std::vector<MonadicBLAlgebra> family = enumerate_monadic_chains(max_size);
  ValidityResult r = check_validity(f, family, jobs);
  if (r.valid) {
    if (as_json) std::cout << json{{"valid", true}}.dump(2) << "\n";
    else
      std::cout << print_formula(f) << " is valid on all " << family.size()
                << " monadic chains of size <= " << max_size << "\n";
    return 0;
  }
  const MonadicBLAlgebra& m = family[r.algebra_index];
  if (as_json) {
    json assignment = json::object();
    for (const auto& [name, value] : r.assignment) assignment[name] = value;
    std::cout << json{{"valid", false},
                      {"algebra", algebra_to_json(m)},
                      {"assignment", assignment},
                      {"value", r.value}}
                     .dump(2)
              << "\n";
    return 1;
  }
  std::cout << "countermodel for " << print_formula(f) << " (algebra " << r.algebra_index + 1
            << " of " << family.size() << ")\n";
  print_algebra_text(std::cout, m);
  for (const auto& [name, value] : r.assignment)
    std::cout << "v(" << name << ") = " << m.base.label(value) << " (index " << value << ")\n";
  std::cout << "value = " << m.base.label(r.value) << " (index " << r.value << ")\n";
  return 1;
}

int run_axioms(const AlgebraArgs& args, int max_size, bool as_json) {
  std::vector<MonadicBLAlgebra> family;
  if (!args.algebra_path.empty() || !args.ordinal.empty()) family.push_back(load_monadic(args));
  else family = enumerate_monadic_chains(max_size);
  Report suite = axiom_suite(family);
  Report rules = check_derived_rules(family);
  if (as_json) {
    json j{{"axioms", report_to_json(suite)}, {"rules", report_to_json(rules)}};
    std::cout << j.dump(2) << "\n";
    return suite.ok() && rules.ok() ? 0 : 1;
  }
  const char* groups[] = {"box1", "box2", "box3", "dia1", "dia2", "dia3",
                          "A1",   "A2",   "A3",   "A4",   "A5"};
  for (const char* g : groups)
    std::cout << g << ": " << (suite.ok_for(g) ? "PASS" : "FAIL") << "\n";
  std::cout << "rules: " << (rules.ok() ? "PASS" : "FAIL") << "\n";
  std::cout << "checked " << suite.checks + rules.checks << " instances on " << family.size()
            << " algebra" << (family.size() == 1 ? "" : "s") << "\n";
  if (!suite.ok() || !rules.ok()) {
    Report merged = suite;
    merged.merge(rules);
    std::size_t shown = 0;
    for (const auto& f : merged.failures) {
      if (++shown > 10) break;
      std::cout << "  " << f.law << ": " << f.detail << "\n";
    }
    return 1;
  }
  return 0;
}

int run_export(const AlgebraArgs& args, const std::string& dot_path, const std::string& output,
               bool as_json) {
  MonadicBLAlgebra m = load_monadic(args);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw invalid_parameter("cannot write " + dot_path);
    out << hasse_to_dot(m.base);
  }
  if (!output.empty()) save_json_file(output, algebra_to_json(m));
  if (dot_path.empty() && output.empty()) {
    if (as_json) std::cout << algebra_to_json(m).dump(2) << "\n";
    else print_algebra_text(std::cout, m);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite monadic BL-algebra workbench"};
  app.require_subcommand(1);
  int exit_code = 0;
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  AlgebraArgs build_args;
  std::string build_output;
  CLI::App* build = app.add_subcommand("build", "construct an algebra and print it");
  add_algebra_flags(build, build_args);
  build->add_option("--output", build_output, "write the algebra JSON to this file");
  build->callback([&] { exit_code = run_build(build_args, build_output, as_json); });

  AlgebraArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check the axioms and derived identities");
  add_algebra_flags(verify, verify_args);
  verify->callback([&] { exit_code = run_verify(verify_args, as_json); });

  AlgebraArgs enum_args;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list all monadic structures");
  add_algebra_flags(enumerate, enum_args);
  enumerate->callback([&] { exit_code = run_enumerate(enum_args, as_json); });

  AlgebraArgs brute_args;
  int brute_bound = 6, brute_jobs = 1;
  CLI::App* brute = app.add_subcommand("brute", "monadic structures by exhaustive table search");
  add_algebra_flags(brute, brute_args);
  brute->add_option("--max-size", brute_bound, "carrier size bound for the search");
  brute->add_option("--jobs", brute_jobs, "worker count");
  brute->callback([&] { exit_code = run_brute(brute_args, brute_bound, brute_jobs, as_json); });

  AlgebraArgs quot_args;
  std::vector<int> quot_generators;
  CLI::App* quot = app.add_subcommand("quotient", "quotient by a generated monadic filter");
  add_algebra_flags(quot, quot_args);
  quot->add_option("--filter", quot_generators, "elements generating the filter, e.g. 2,3")
      ->delimiter(',')
      ->required();
  quot->callback([&] { exit_code = run_quotient(quot_args, quot_generators, as_json); });

  AlgebraArgs filter_args;
  std::string filter_dot;
  CLI::App* filters = app.add_subcommand("filters", "list filters and monadic filters");
  add_algebra_flags(filters, filter_args);
  filters->add_option("--dot", filter_dot, "write the monadic filter lattice as DOT");
  filters->callback([&] { exit_code = run_filters(filter_args, filter_dot, as_json); });

  AlgebraArgs dec_args;
  CLI::App* dec = app.add_subcommand("decompose", "recover blocks and fixed set of a chain");
  add_algebra_flags(dec, dec_args);
  dec->callback([&] { exit_code = run_decompose(dec_args, as_json); });

  AlgebraArgs eval_args;
  std::string eval_formula, eval_assign, eval_kripke;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula");
  add_algebra_flags(eval, eval_args);
  eval->add_option("--formula", eval_formula, "formula text")->required();
  eval->add_option("--assign", eval_assign, "assignment, e.g. p=2,q=0");
  eval->add_option("--kripke", eval_kripke, "Kripke model JSON file");
  eval->callback(
      [&] { exit_code = run_eval(eval_args, eval_formula, eval_assign, eval_kripke, as_json); });

  std::string cm_formula;
  int cm_max = 4, cm_jobs = 1;
  CLI::App* cm = app.add_subcommand("countermodel", "search monadic chains for a countermodel");
  cm->add_option("--formula", cm_formula, "formula text")->required();
  cm->add_option("--max-size", cm_max, "largest chain size to search");
  cm->add_option("--jobs", cm_jobs, "worker count");
  cm->callback([&] { exit_code = run_countermodel(cm_formula, cm_max, cm_jobs, as_json); });

  AlgebraArgs ax_args;
  int ax_max = 4;
  CLI::App* ax = app.add_subcommand("axioms", "run the modal axiom schema suite");
  add_algebra_flags(ax, ax_args);
  ax->add_option("--max-size", ax_max, "chain family size bound (without --algebra)");
  ax->callback([&] { exit_code = run_axioms(ax_args, ax_max, as_json); });

  AlgebraArgs export_args;
  std::string export_dot, export_output;
  CLI::App* exp = app.add_subcommand("export", "write JSON or a DOT Hasse diagram");
  add_algebra_flags(exp, export_args);
  exp->add_option("--dot", export_dot, "write the Hasse diagram as DOT");
  exp->add_option("--output", export_output, "write the algebra JSON to this file");
  exp->callback([&] { exit_code = run_export(export_args, export_dot, export_output, as_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mbl::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
