#pragma once

// The modal layer: formulas of the fuzzy S5 language over BL, algebraic and
// Kripke evaluation, the bridge from safe Kripke models to functional
// algebras, the axiom schema suites, and deterministic countermodel search.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "core.hpp"
#include "monadic.hpp"

namespace mbl {

class syntax_error : public error {
 public:
  std::size_t position;
  syntax_error(std::size_t pos, const std::string& message)
      : error("syntax error at position " + std::to_string(pos) + ": " + message),
        position(pos) {}
};

enum class FKind { Var, Const0, Const1, And, Or, Fuse, Imp, Box, Dia };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable tree. Negation and equivalence are not node kinds: ~x stands
// for x -> 0 and x <-> y for (x -> y) & (y -> x), and the printer folds
// those shapes back into the sugared spelling.
struct Formula {
  FKind kind;
  std::string var;      // Var only
  FormulaPtr lhs, rhs;  // Box and Dia use lhs only
};

inline FormulaPtr make_var(std::string name) {
  return std::make_shared<Formula>(Formula{FKind::Var, std::move(name), nullptr, nullptr});
}
inline FormulaPtr make_zero() {
  return std::make_shared<Formula>(Formula{FKind::Const0, "", nullptr, nullptr});
}
inline FormulaPtr make_one() {
  return std::make_shared<Formula>(Formula{FKind::Const1, "", nullptr, nullptr});
}
inline FormulaPtr make_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{FKind::And, "", std::move(a), std::move(b)});
}
inline FormulaPtr make_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{FKind::Or, "", std::move(a), std::move(b)});
}
inline FormulaPtr make_fuse(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{FKind::Fuse, "", std::move(a), std::move(b)});
}
inline FormulaPtr make_imp(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{FKind::Imp, "", std::move(a), std::move(b)});
}
inline FormulaPtr make_box(FormulaPtr a) {
  return std::make_shared<Formula>(Formula{FKind::Box, "", std::move(a), nullptr});
}
inline FormulaPtr make_dia(FormulaPtr a) {
  return std::make_shared<Formula>(Formula{FKind::Dia, "", std::move(a), nullptr});
}
inline FormulaPtr make_neg(FormulaPtr a) { return make_imp(std::move(a), make_zero()); }
inline FormulaPtr make_equiv(FormulaPtr a, FormulaPtr b) {
  return make_and(make_imp(a, b), make_imp(b, a));
}

inline bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->var != b->var) return false;
  return formulas_equal(a->lhs, b->lhs) && formulas_equal(a->rhs, b->rhs);
}

inline void collect_variables_into(const FormulaPtr& f, std::vector<std::string>& out) {
  if (!f) return;
  if (f->kind == FKind::Var) out.push_back(f->var);
  collect_variables_into(f->lhs, out);
  collect_variables_into(f->rhs, out);
}

inline std::vector<std::string> collect_variables(const FormulaPtr& f) {
  std::vector<std::string> out;
  collect_variables_into(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int modal_depth(const FormulaPtr& f) {
  if (!f) return 0;
  int d = std::max(modal_depth(f->lhs), modal_depth(f->rhs));
  return f->kind == FKind::Box || f->kind == FKind::Dia ? d + 1 : d;
}

// ---- concrete syntax ----------------------------------------------------
//
//   formula := equiv
//   equiv   := imp ("<->" imp)*          (left-associated)
//   imp     := or ("->" imp)?            (right-associated)
//   or      := and ("|" and)*
//   and     := fuse ("&" fuse)*
//   fuse    := unary ("*" unary)*
//   unary   := ("~" | "[]" | "<>") unary | atom
//   atom    := "0" | "1" | ident | "(" formula ")"

namespace detail {

struct Token {
  enum Type { End, LParen, RParen, Zero, One, Ident, ImpOp, EquivOp, OrOp, AndOp, FuseOp, NegOp, BoxOp, DiaOp };
  Type type;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex_formula(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&out](Token::Type t, std::string text, std::size_t pos) {
    out.push_back({t, std::move(text), pos});
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '(') push(Token::LParen, "(", i), ++i;
    else if (c == ')') push(Token::RParen, ")", i), ++i;
    else if (c == '0') push(Token::Zero, "0", i), ++i;
    else if (c == '1') push(Token::One, "1", i), ++i;
    else if (c == '~') push(Token::NegOp, "~", i), ++i;
    else if (c == '|') push(Token::OrOp, "|", i), ++i;
    else if (c == '&') push(Token::AndOp, "&", i), ++i;
    else if (c == '*') push(Token::FuseOp, "*", i), ++i;
    else if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') push(Token::ImpOp, "->", i), i += 2;
      else throw syntax_error(i, "expected '->'");
    } else if (c == '<') {
      if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>')
        push(Token::EquivOp, "<->", i), i += 3;
      else if (i + 1 < s.size() && s[i + 1] == '>')
        push(Token::DiaOp, "<>", i), i += 2;
      else
        throw syntax_error(i, "expected '<->' or '<>'");
    } else if (c == '[') {
      if (i + 1 < s.size() && s[i + 1] == ']') push(Token::BoxOp, "[]", i), i += 2;
      else throw syntax_error(i, "expected '[]'");
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      push(Token::Ident, s.substr(start, i - start), start);
    } else {
      throw syntax_error(i, std::string("unexpected character '") + c + "'");
    }
  }
  push(Token::End, "", s.size());
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FormulaPtr run() {
    FormulaPtr f = equiv();
    if (cur().type != Token::End)
      throw syntax_error(cur().pos, "expected end of input, found '" + cur().text + "'");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t idx_ = 0;

  const Token& cur() const { return toks_[idx_]; }
  void advance() { ++idx_; }
  bool eat(Token::Type t) {
    if (cur().type != t) return false;
    advance();
    return true;
  }

  FormulaPtr equiv() {
    FormulaPtr f = imp();
    while (eat(Token::EquivOp)) f = make_equiv(std::move(f), imp());
    return f;
  }
  FormulaPtr imp() {
    FormulaPtr f = disj();
    if (eat(Token::ImpOp)) f = make_imp(std::move(f), imp());
    return f;
  }
  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (eat(Token::OrOp)) f = make_or(std::move(f), conj());
    return f;
  }
  FormulaPtr conj() {
    FormulaPtr f = fuse();
    while (eat(Token::AndOp)) f = make_and(std::move(f), fuse());
    return f;
  }
  FormulaPtr fuse() {
    FormulaPtr f = unary();
    while (eat(Token::FuseOp)) f = make_fuse(std::move(f), unary());
    return f;
  }
  FormulaPtr unary() {
    if (eat(Token::NegOp)) return make_neg(unary());
    if (eat(Token::BoxOp)) return make_box(unary());
    if (eat(Token::DiaOp)) return make_dia(unary());
    return atom();
  }
  FormulaPtr atom() {
    const Token& t = cur();
    switch (t.type) {
      case Token::Zero: advance(); return make_zero();
      case Token::One: advance(); return make_one();
      case Token::Ident: advance(); return make_var(t.text);
      case Token::LParen: {
        advance();
        FormulaPtr f = equiv();
        if (!eat(Token::RParen)) throw syntax_error(cur().pos, "expected ')'");
        return f;
      }
      default:
        throw syntax_error(t.pos, "expected '0', '1', a variable, '(', '~', '[]' or '<>'");
    }
  }
};

}  // namespace detail

inline FormulaPtr parse_formula(const std::string& text) {
  return detail::FormulaParser(detail::lex_formula(text)).run();
}

namespace detail {

// precedence levels: 1 <->, 2 ->, 3 |, 4 &, 5 *, 6 unary and atoms
inline void print_formula_rec(const FormulaPtr& f, int min_level, std::string& out) {
  auto wrap = [&out, min_level](int level, auto&& body) {
    bool parens = level < min_level;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  // sugar: x -> 0 prints as ~x, (a -> b) & (b -> a) prints as a <-> b
  if (f->kind == FKind::Imp && f->rhs->kind == FKind::Const0) {
    wrap(6, [&] {
      out += '~';
      print_formula_rec(f->lhs, 6, out);
    });
    return;
  }
  if (f->kind == FKind::And && f->lhs->kind == FKind::Imp && f->rhs->kind == FKind::Imp &&
      formulas_equal(f->lhs->lhs, f->rhs->rhs) && formulas_equal(f->lhs->rhs, f->rhs->lhs)) {
    wrap(1, [&] {
      print_formula_rec(f->lhs->lhs, 2, out);
      out += " <-> ";
      print_formula_rec(f->lhs->rhs, 2, out);
    });
    return;
  }
  switch (f->kind) {
    case FKind::Var: out += f->var; break;
    case FKind::Const0: out += '0'; break;
    case FKind::Const1: out += '1'; break;
    case FKind::Imp:
      wrap(2, [&] {
        print_formula_rec(f->lhs, 3, out);
        out += " -> ";
        print_formula_rec(f->rhs, 2, out);
      });
      break;
    case FKind::Or:
      wrap(3, [&] {
        print_formula_rec(f->lhs, 3, out);
        out += " | ";
        print_formula_rec(f->rhs, 4, out);
      });
      break;
    case FKind::And:
      wrap(4, [&] {
        print_formula_rec(f->lhs, 4, out);
        out += " & ";
        print_formula_rec(f->rhs, 5, out);
      });
      break;
    case FKind::Fuse:
      wrap(5, [&] {
        print_formula_rec(f->lhs, 5, out);
        out += " * ";
        print_formula_rec(f->rhs, 6, out);
      });
      break;
    case FKind::Box:
      wrap(6, [&] {
        out += "[]";
        print_formula_rec(f->lhs, 6, out);
      });
      break;
    case FKind::Dia:
      wrap(6, [&] {
        out += "<>";
        print_formula_rec(f->lhs, 6, out);
      });
      break;
  }
}

}  // namespace detail

inline std::string print_formula(const FormulaPtr& f) {
  std::string out;
  detail::print_formula_rec(f, 1, out);
  return out;
}

// ---- evaluation ---------------------------------------------------------

inline int eval_algebraic(const MonadicBLAlgebra& m, const FormulaPtr& f,
                          const std::map<std::string, int>& v) {
  switch (f->kind) {
    case FKind::Var: {
      auto it = v.find(f->var);
      if (it == v.end()) throw invalid_parameter("unbound variable " + f->var);
      if (it->second < 0 || it->second >= m.base.size)
        throw invalid_parameter("assignment for " + f->var + " is out of range");
      return it->second;
    }
    case FKind::Const0: return 0;
    case FKind::Const1: return m.base.top();
    case FKind::And: return m.base.meet[eval_algebraic(m, f->lhs, v)][eval_algebraic(m, f->rhs, v)];
    case FKind::Or: return m.base.join[eval_algebraic(m, f->lhs, v)][eval_algebraic(m, f->rhs, v)];
    case FKind::Fuse: return m.base.mul[eval_algebraic(m, f->lhs, v)][eval_algebraic(m, f->rhs, v)];
    case FKind::Imp: return m.base.imp[eval_algebraic(m, f->lhs, v)][eval_algebraic(m, f->rhs, v)];
    case FKind::Box: return m.q.forall[eval_algebraic(m, f->lhs, v)];
    case FKind::Dia: return m.q.exists[eval_algebraic(m, f->lhs, v)];
  }
  throw structural_error("unreachable formula kind");
}

// ---- Kripke models ------------------------------------------------------

struct KripkeModel {
  int worlds = 0;
  FiniteBLAlgebra chain;
  std::map<std::string, std::vector<int>> eval;
};

inline void validate_shape(const KripkeModel& k) {
  if (k.worlds < 1) throw structural_error("a Kripke model needs at least one world");
  validate_shape(k.chain);
  if (!classify(k.chain).chain)
    throw structural_error("Kripke models are evaluated over totally ordered algebras");
  for (const auto& [name, values] : k.eval) {
    if (static_cast<int>(values.size()) != k.worlds)
      throw structural_error("evaluation of " + name + " must cover all worlds");
    for (int x : values)
      if (x < 0 || x >= k.chain.size)
        throw structural_error("evaluation of " + name + " is out of range");
  }
}

// World-indexed value vector; box and dia fold meet and join across worlds,
// which on a finite chain is exactly inf and sup.
inline std::vector<int> eval_kripke_vector(const KripkeModel& k, const FormulaPtr& f) {
  int n = k.worlds;
  switch (f->kind) {
    case FKind::Var: {
      auto it = k.eval.find(f->var);
      if (it == k.eval.end()) throw invalid_parameter("unbound variable " + f->var);
      return it->second;
    }
    case FKind::Const0: return std::vector<int>(n, 0);
    case FKind::Const1: return std::vector<int>(n, k.chain.size - 1);
    case FKind::And:
    case FKind::Or:
    case FKind::Fuse:
    case FKind::Imp: {
      std::vector<int> a = eval_kripke_vector(k, f->lhs);
      std::vector<int> b = eval_kripke_vector(k, f->rhs);
      const auto& table = f->kind == FKind::And   ? k.chain.meet
                          : f->kind == FKind::Or  ? k.chain.join
                          : f->kind == FKind::Fuse ? k.chain.mul
                                                   : k.chain.imp;
      std::vector<int> out(n);
      for (int x = 0; x < n; ++x) out[x] = table[a[x]][b[x]];
      return out;
    }
    case FKind::Box:
    case FKind::Dia: {
      std::vector<int> a = eval_kripke_vector(k, f->lhs);
      int acc = a[0];
      for (int x = 1; x < n; ++x)
        acc = f->kind == FKind::Box ? k.chain.meet[acc][a[x]] : k.chain.join[acc][a[x]];
      return std::vector<int>(n, acc);
    }
  }
  throw structural_error("unreachable formula kind");
}

inline int eval_kripke(const KripkeModel& k, const FormulaPtr& f, int world) {
  if (world < 0 || world >= k.worlds) throw invalid_parameter("world index out of range");
  return eval_kripke_vector(k, f)[world];
}

struct KripkeFunctional {
  FunctionalMBL functional;
  std::map<std::string, int> assignment;  // variable -> element of the functional algebra
};

// The lifted evaluation lands in the functional algebra generated by the
// per-variable world vectors over the model's chain.
inline KripkeFunctional kripke_to_functional(const KripkeModel& k) {
  validate_shape(k);
  std::vector<std::vector<int>> generators;
  for (const auto& [name, values] : k.eval) generators.push_back(values);
  KripkeFunctional out{build_functional(k.chain, k.worlds, generators), {}};
  for (const auto& [name, values] : k.eval) out.assignment[name] = out.functional.index_of(values);
  return out;
}

// Both evaluation routes must produce the same world vector for every
// formula whose variables the model covers.
inline Report check_kripke_agreement(const KripkeModel& k,
                                     const std::vector<FormulaPtr>& formulas) {
  KripkeFunctional kf = kripke_to_functional(k);
  Report r;
  for (const auto& f : formulas) {
    ++r.checks;
    std::vector<int> direct = eval_kripke_vector(k, f);
    int element = eval_algebraic(kf.functional.algebra, f, kf.assignment);
    if (kf.functional.tuples[element] != direct)
      r.fail("kripke-functional-agreement", {element}, print_formula(f));
  }
  return r;
}

// ---- validity and countermodels ------------------------------------------

struct ValidityResult {
  bool valid = true;
  std::size_t algebra_index = 0;
  std::map<std::string, int> assignment;
  int value = 0;  // the non-top value the formula takes at the countermodel
};

// The family is scanned in the given order; within an algebra, assignments
// run in lexicographic order over the name-sorted variables, and the first
// refuting assignment wins. Sharded workers each report their earliest hit
// and the minimum is taken, so the result does not depend on jobs.
inline ValidityResult check_validity(const FormulaPtr& f,
                                     const std::vector<MonadicBLAlgebra>& family, int jobs = 1) {
  if (family.empty()) throw invalid_parameter("validity needs a nonempty algebra family");
  std::vector<std::string> vars = collect_variables(f);
  for (std::size_t ai = 0; ai < family.size(); ++ai) {
    const MonadicBLAlgebra& m = family[ai];
    int n = m.base.size, top = m.base.top();
    std::size_t count = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) count *= static_cast<std::size_t>(n);

    std::mutex mu;
    std::size_t best = count;
    auto decode = [&vars, n](std::size_t idx) {
      std::map<std::string, int> v;
      for (std::size_t i = vars.size(); i-- > 0;) {
        v[vars[i]] = static_cast<int>(idx % n);
        idx /= static_cast<std::size_t>(n);
      }
      return v;
    };
    run_sharded(jobs, count, [&](std::size_t begin, std::size_t end) {
      for (std::size_t idx = begin; idx < end; ++idx) {
        if (eval_algebraic(m, f, decode(idx)) != top) {
          std::lock_guard<std::mutex> lock(mu);
          best = std::min(best, idx);
          return;
        }
      }
    });
    if (best < count) {
      ValidityResult out;
      out.valid = false;
      out.algebra_index = ai;
      out.assignment = decode(best);
      out.value = eval_algebraic(m, f, out.assignment);
      return out;
    }
  }
  return {};
}

inline bool is_valid_on(const MonadicBLAlgebra& m, const FormulaPtr& f) {
  return check_validity(f, {m}).valid;
}

// ---- axiom schemata -------------------------------------------------------

struct AxiomInstance {
  std::string law;
  FormulaPtr formula;
};

namespace detail {

// instantiation pool for the schema variables: all shapes over p, q with
// modal depth at most one
inline std::vector<FormulaPtr> phi_catalogue() {
  FormulaPtr p = make_var("p"), q = make_var("q");
  return {p,
          q,
          make_zero(),
          make_one(),
          make_neg(p),
          make_and(p, q),
          make_or(p, q),
          make_fuse(p, q),
          make_imp(p, q),
          make_box(p),
          make_dia(p),
          make_box(q),
          make_dia(q)};
}

// the admissible nu shapes: propositional combinations of modal-prefixed
// formulas; this finite catalogue is semantically exhaustive because every
// such combination evaluates into the common quantifier image
inline std::vector<FormulaPtr> nu_catalogue() {
  FormulaPtr q = make_var("q");
  return {make_box(q),
          make_dia(q),
          make_neg(make_box(q)),
          make_or(make_box(q), make_dia(q)),
          make_and(make_box(q), make_dia(q)),
          make_fuse(make_box(q), make_dia(q))};
}

}  // namespace detail

// All bounded instances of the six modal schemata and of the simplified
// five-axiom calculus, capped at the given modal depth.
inline std::vector<AxiomInstance> axiom_instances(int max_modal_depth = 2) {
  std::vector<AxiomInstance> out;
  auto keep = [&out, max_modal_depth](const std::string& law, FormulaPtr f) {
    if (modal_depth(f) <= max_modal_depth) out.push_back({law, std::move(f)});
  };
  std::vector<FormulaPtr> phis = detail::phi_catalogue();
  std::vector<FormulaPtr> nus = detail::nu_catalogue();

  for (const auto& phi : phis) {
    keep("box1", make_imp(make_box(phi), phi));
    keep("dia1", make_imp(phi, make_dia(phi)));
    keep("dia3", make_equiv(make_dia(make_fuse(phi, phi)), make_fuse(make_dia(phi), make_dia(phi))));
    for (const auto& nu : nus) {
      keep("box2", make_imp(make_box(make_imp(nu, phi)), make_imp(nu, make_box(phi))));
      keep("dia2", make_imp(make_box(make_imp(phi, nu)), make_imp(make_dia(phi), nu)));
      keep("box3", make_imp(make_box(make_or(nu, phi)), make_or(nu, make_box(phi))));
    }
  }
  for (const auto& phi : phis) {
    keep("A1", make_imp(make_box(phi), phi));
    keep("A5", make_equiv(make_dia(make_fuse(phi, phi)), make_fuse(make_dia(phi), make_dia(phi))));
    for (const auto& psi : phis) {
      keep("A2", make_equiv(make_box(make_imp(phi, make_box(psi))),
                            make_imp(make_dia(phi), make_box(psi))));
      keep("A3", make_equiv(make_box(make_imp(make_box(phi), psi)),
                            make_imp(make_box(phi), make_box(psi))));
      keep("A4", make_equiv(make_box(make_or(make_dia(phi), psi)),
                            make_or(make_dia(phi), make_box(psi))));
    }
  }
  return out;
}

// Every axiom instance must be valid on every family member; modus ponens
// and necessitation must preserve validity over the instantiation pool.
inline Report axiom_suite(const std::vector<MonadicBLAlgebra>& family, int max_modal_depth = 2) {
  Report r;
  std::vector<AxiomInstance> instances = axiom_instances(max_modal_depth);
  for (std::size_t ai = 0; ai < family.size(); ++ai) {
    for (const auto& inst : instances) {
      ++r.checks;
      ValidityResult res = check_validity(inst.formula, {family[ai]});
      if (!res.valid)
        r.fail(inst.law, {static_cast<int>(ai)},
               print_formula(inst.formula) + " takes value " + family[ai].base.label(res.value));
    }
  }

  std::vector<FormulaPtr> pool = detail::phi_catalogue();
  for (const auto& nu : detail::nu_catalogue()) pool.push_back(nu);
  for (std::size_t ai = 0; ai < family.size(); ++ai) {
    const MonadicBLAlgebra& m = family[ai];
    std::vector<bool> pool_valid(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool_valid[i] = is_valid_on(m, pool[i]);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      ++r.checks;
      if (pool_valid[i] && !is_valid_on(m, make_box(pool[i])))
        r.fail("rule-Nec", {static_cast<int>(ai)}, print_formula(pool[i]));
      for (std::size_t j = 0; j < pool.size(); ++j) {
        ++r.checks;
        if (pool_valid[i] && is_valid_on(m, make_imp(pool[i], pool[j])) && !pool_valid[j])
          r.fail("rule-MP", {static_cast<int>(ai)},
                 print_formula(pool[i]) + " , " + print_formula(make_imp(pool[i], pool[j])));
      }
    }
  }
  return r;
}

// Congruence rules for the modalities, checked pointwise: whenever an
// equivalence evaluates to 1 under an assignment, the boxed and diamonded
// equivalences do too. Also the two theorems used to derive them.
inline Report check_derived_rules(const std::vector<MonadicBLAlgebra>& family) {
  Report r;
  std::vector<FormulaPtr> pool = detail::phi_catalogue();
  for (std::size_t ai = 0; ai < family.size(); ++ai) {
    const MonadicBLAlgebra& m = family[ai];
    int top = m.base.top();
    for (const auto& phi : pool) {
      ++r.checks;
      if (!is_valid_on(m, make_equiv(make_dia(phi), make_box(make_dia(phi)))))
        r.fail("theorem.dia-box-dia", {static_cast<int>(ai)}, print_formula(phi));
      if (!is_valid_on(m, make_imp(phi, make_dia(phi))))
        r.fail("theorem.into-dia", {static_cast<int>(ai)}, print_formula(phi));
      for (const auto& psi : pool) {
        FormulaPtr premise = make_equiv(phi, psi);
        FormulaPtr box_conc = make_equiv(make_box(phi), make_box(psi));
        FormulaPtr dia_conc = make_equiv(make_dia(phi), make_dia(psi));
        std::vector<std::string> vars = collect_variables(premise);
        std::size_t count = 1;
        for (std::size_t i = 0; i < vars.size(); ++i)
          count *= static_cast<std::size_t>(m.base.size);
        ++r.checks;
        for (std::size_t idx = 0; idx < count; ++idx) {
          std::map<std::string, int> v;
          std::size_t rest = idx;
          for (std::size_t i = vars.size(); i-- > 0;) {
            v[vars[i]] = static_cast<int>(rest % m.base.size);
            rest /= static_cast<std::size_t>(m.base.size);
          }
          if (eval_algebraic(m, premise, v) != top) continue;
          if (eval_algebraic(m, box_conc, v) != top)
            r.fail("rule-box-congruence", {static_cast<int>(ai)},
                   print_formula(phi) + " , " + print_formula(psi));
          if (eval_algebraic(m, dia_conc, v) != top)
            r.fail("rule-dia-congruence", {static_cast<int>(ai)},
                   print_formula(phi) + " , " + print_formula(psi));
        }
      }
    }
  }
  return r;
}

// Equality of two formula values coincides with the biconditional taking
// the value 1, at every assignment on every family member.
inline Report check_algebraization(const std::vector<MonadicBLAlgebra>& family,
                                   const std::vector<std::pair<FormulaPtr, FormulaPtr>>& pairs) {
  Report r;
  for (std::size_t ai = 0; ai < family.size(); ++ai) {
    const MonadicBLAlgebra& m = family[ai];
    int top = m.base.top();
    for (const auto& [phi, psi] : pairs) {
      FormulaPtr bicond = make_equiv(phi, psi);
      std::vector<std::string> vars = collect_variables(bicond);
      std::size_t count = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) count *= static_cast<std::size_t>(m.base.size);
      ++r.checks;
      for (std::size_t idx = 0; idx < count; ++idx) {
        std::map<std::string, int> v;
        std::size_t rest = idx;
        for (std::size_t i = vars.size(); i-- > 0;) {
          v[vars[i]] = static_cast<int>(rest % m.base.size);
          rest /= static_cast<std::size_t>(m.base.size);
        }
        bool equal = eval_algebraic(m, phi, v) == eval_algebraic(m, psi, v);
        bool unit = eval_algebraic(m, bicond, v) == top;
        if (equal != unit) {
          r.fail("algebraization", {static_cast<int>(ai)},
                 print_formula(phi) + " vs " + print_formula(psi));
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace mbl
