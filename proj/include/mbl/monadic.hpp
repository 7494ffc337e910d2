#pragma once

// Monadic structure on finite BL-algebras: a pair of unary tables for the
// universal and existential quantifier. Verification covers the five
// defining axioms M1..M5, the derived identities M6..M37, and the three
// restricted identities R1..R3 that hold for elements of the universal
// image. Structures are enumerated two independent ways: through
// relatively complete subalgebras and by pruned brute force over tables.

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "core.hpp"

namespace mbl {

struct QuantifierPair {
  std::vector<int> forall, exists;

  bool operator==(const QuantifierPair& o) const {
    return forall == o.forall && exists == o.exists;
  }
  bool operator<(const QuantifierPair& o) const {
    return forall != o.forall ? forall < o.forall : exists < o.exists;
  }
};

inline QuantifierPair identity_quantifiers(int n) {
  QuantifierPair q;
  q.forall.resize(n);
  q.exists.resize(n);
  for (int i = 0; i < n; ++i) q.forall[i] = q.exists[i] = i;
  return q;
}

struct MonadicBLAlgebra {
  FiniteBLAlgebra base;
  QuantifierPair q;
};

inline void validate_shape(const MonadicBLAlgebra& m) {
  validate_shape(m.base);
  int n = m.base.size;
  if (static_cast<int>(m.q.forall.size()) != n || static_cast<int>(m.q.exists.size()) != n)
    throw structural_error("quantifier tables must match the carrier size");
  for (int i = 0; i < n; ++i)
    if (m.q.forall[i] < 0 || m.q.forall[i] >= n || m.q.exists[i] < 0 || m.q.exists[i] >= n)
      throw structural_error("quantifier table entry out of range at " + std::to_string(i));
}

// Sorted image of the universal quantifier. For a valid structure this
// equals the image of the existential one and is a subalgebra.
inline std::vector<int> quantifier_image(const MonadicBLAlgebra& m) {
  std::vector<int> img(m.q.forall);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

// The five defining axioms, checked at every element pair.
inline Report check_mbl_axioms(const MonadicBLAlgebra& m) {
  validate_shape(m);
  Report r;
  const auto& A = m.base;
  const auto& fa = m.q.forall;
  const auto& ex = m.q.exists;
  int n = A.size, top = A.top();
  auto val = [&A](int x) { return A.label(x); };

  for (int a = 0; a < n; ++a) {
    ++r.checks;
    if (A.imp[fa[a]][a] != top)
      r.fail("M1", {a}, "forall " + val(a) + " -> " + val(a) + " = " + val(A.imp[fa[a]][a]));
    for (int b = 0; b < n; ++b) {
      ++r.checks;
      if (fa[A.imp[a][fa[b]]] != A.imp[ex[a]][fa[b]])
        r.fail("M2", {a, b},
               "forall(" + val(a) + " -> forall " + val(b) + ") = " + val(fa[A.imp[a][fa[b]]]) +
                   " but exists " + val(a) + " -> forall " + val(b) + " = " +
                   val(A.imp[ex[a]][fa[b]]));
      if (fa[A.imp[fa[a]][b]] != A.imp[fa[a]][fa[b]])
        r.fail("M3", {a, b},
               "forall(forall " + val(a) + " -> " + val(b) + ") = " + val(fa[A.imp[fa[a]][b]]) +
                   " but forall " + val(a) + " -> forall " + val(b) + " = " +
                   val(A.imp[fa[a]][fa[b]]));
      if (fa[A.join[ex[a]][b]] != A.join[ex[a]][fa[b]])
        r.fail("M4", {a, b},
               "forall(exists " + val(a) + " v " + val(b) + ") = " + val(fa[A.join[ex[a]][b]]) +
                   " but exists " + val(a) + " v forall " + val(b) + " = " +
                   val(A.join[ex[a]][fa[b]]));
    }
    ++r.checks;
    if (ex[A.mul[a][a]] != A.mul[ex[a]][ex[a]])
      r.fail("M5", {a},
             "exists(" + val(a) + " * " + val(a) + ") = " + val(ex[A.mul[a][a]]) +
                 " but exists " + val(a) + " * exists " + val(a) + " = " +
                 val(A.mul[ex[a]][ex[a]]));
  }
  return r;
}

namespace detail {

// Equation checkers shared by the derived-identity sweep. Each lambda gets
// (a, b) and returns the two sides to compare; unary laws ignore b.
struct Eq {
  const char* law;
  bool unary;
  int (*lhs)(const MonadicBLAlgebra&, int, int);
  int (*rhs)(const MonadicBLAlgebra&, int, int);
};

}  // namespace detail

// Derived identities M6..M37 plus the three identities R1..R3 restricted to
// elements of the universal image. All follow from M1..M5, so this is a
// consistency net over the implementation rather than new axioms.
inline Report check_derived_identities(const MonadicBLAlgebra& m) {
  validate_shape(m);
  Report r;
  const auto& A = m.base;
  const auto& fa = m.q.forall;
  const auto& ex = m.q.exists;
  int n = A.size;

  using M = const MonadicBLAlgebra&;
  static const detail::Eq eqs[] = {
      {"M6", true, [](M m_, int a, int) { return m_.q.forall[m_.q.exists[a]]; },
       [](M m_, int a, int) { return m_.q.exists[a]; }},
      {"M7", true, [](M m_, int a, int) { return m_.base.imp[a][m_.q.exists[a]]; },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M8", false,
       [](M m_, int a, int b) { return m_.q.forall[m_.base.imp[m_.q.exists[a]][b]]; },
       [](M m_, int a, int b) { return m_.base.imp[m_.q.exists[a]][m_.q.forall[b]]; }},
      {"M9", false,
       [](M m_, int a, int b) { return m_.q.forall[m_.base.imp[a][m_.q.exists[b]]]; },
       [](M m_, int a, int b) { return m_.base.imp[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M10", true, [](M m_, int, int) { return m_.q.forall[m_.base.top()]; },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M11", true, [](M m_, int a, int) { return m_.q.exists[m_.q.forall[a]]; },
       [](M m_, int a, int) { return m_.q.forall[a]; }},
      {"M12", false,
       [](M m_, int a, int b) { return m_.q.forall[m_.base.join[m_.q.forall[a]][b]]; },
       [](M m_, int a, int b) { return m_.base.join[m_.q.forall[a]][m_.q.forall[b]]; }},
      {"M13.forall-0", true, [](M m_, int, int) { return m_.q.forall[0]; },
       [](M, int, int) { return 0; }},
      {"M13.exists-1", true, [](M m_, int, int) { return m_.q.exists[m_.base.top()]; },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M13.exists-0", true, [](M m_, int, int) { return m_.q.exists[0]; },
       [](M, int, int) { return 0; }},
      {"M14.exists", true, [](M m_, int a, int) { return m_.q.exists[m_.q.exists[a]]; },
       [](M m_, int a, int) { return m_.q.exists[a]; }},
      {"M14.forall", true, [](M m_, int a, int) { return m_.q.forall[m_.q.forall[a]]; },
       [](M m_, int a, int) { return m_.q.forall[a]; }},
      {"M15", false,
       [](M m_, int a, int b) {
         return m_.q.forall[m_.base.imp[m_.q.exists[a]][m_.q.exists[b]]];
       },
       [](M m_, int a, int b) { return m_.base.imp[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M16", false,
       [](M m_, int a, int b) {
         return m_.base.imp[m_.q.exists[m_.base.imp[m_.q.exists[a]][b]]]
                           [m_.base.imp[m_.q.exists[a]][m_.q.exists[b]]];
       },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M18", false,
       [](M m_, int a, int b) {
         return m_.q.forall[m_.base.join[m_.q.exists[a]][m_.q.exists[b]]];
       },
       [](M m_, int a, int b) { return m_.base.join[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M20", false, [](M m_, int a, int b) { return m_.q.exists[m_.base.join[a][b]]; },
       [](M m_, int a, int b) { return m_.base.join[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M21", false,
       [](M m_, int a, int b) {
         return m_.q.exists[m_.base.mul[m_.q.exists[a]][m_.q.exists[b]]];
       },
       [](M m_, int a, int b) { return m_.base.mul[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M22", false,
       [](M m_, int a, int b) {
         return m_.base.imp[m_.q.forall[m_.base.imp[a][b]]]
                           [m_.base.imp[m_.q.forall[a]][m_.q.forall[b]]];
       },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M23", false,
       [](M m_, int a, int b) {
         return m_.base.imp[m_.q.forall[m_.base.imp[a][b]]]
                           [m_.base.imp[m_.q.exists[a]][m_.q.exists[b]]];
       },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M24", false,
       [](M m_, int a, int b) {
         return m_.base.imp[m_.base.mul[m_.q.forall[a]][m_.q.exists[b]]]
                           [m_.q.exists[m_.base.mul[a][b]]];
       },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M25", false,
       [](M m_, int a, int b) {
         return m_.base.imp[m_.base.mul[m_.q.forall[a]][m_.q.forall[b]]]
                           [m_.q.exists[m_.base.mul[a][b]]];
       },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M26", false,
       [](M m_, int a, int b) { return m_.q.exists[m_.base.mul[a][m_.q.exists[b]]]; },
       [](M m_, int a, int b) { return m_.base.mul[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M27", false,
       [](M m_, int a, int b) { return m_.q.exists[m_.base.mul[a][m_.q.forall[b]]]; },
       [](M m_, int a, int b) { return m_.base.mul[m_.q.exists[a]][m_.q.forall[b]]; }},
      {"M28", false,
       [](M m_, int a, int b) {
         return m_.base.imp[m_.q.exists[m_.base.imp[a][m_.q.exists[b]]]]
                           [m_.base.imp[m_.q.forall[a]][m_.q.exists[b]]];
       },
       [](M m_, int, int) { return m_.base.top(); }},
      {"M29", false,
       [](M m_, int a, int b) {
         return m_.q.exists[m_.base.imp[m_.q.exists[a]][m_.q.exists[b]]];
       },
       [](M m_, int a, int b) { return m_.base.imp[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M30", false,
       [](M m_, int a, int b) {
         return m_.q.exists[m_.base.imp[m_.q.forall[a]][m_.q.forall[b]]];
       },
       [](M m_, int a, int b) { return m_.base.imp[m_.q.forall[a]][m_.q.forall[b]]; }},
      {"M31", false,
       [](M m_, int a, int b) {
         return m_.q.exists[m_.base.meet[m_.q.exists[a]][m_.q.exists[b]]];
       },
       [](M m_, int a, int b) { return m_.base.meet[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M32", false,
       [](M m_, int a, int b) { return m_.q.exists[m_.base.meet[a][m_.q.exists[b]]]; },
       [](M m_, int a, int b) { return m_.base.meet[m_.q.exists[a]][m_.q.exists[b]]; }},
      {"M33", false,
       [](M m_, int a, int b) {
         return m_.q.forall[m_.base.imp[m_.q.forall[a]][m_.q.forall[b]]];
       },
       [](M m_, int a, int b) { return m_.base.imp[m_.q.forall[a]][m_.q.forall[b]]; }},
      {"M34", false,
       [](M m_, int a, int b) {
         return m_.q.exists[m_.base.mul[m_.q.forall[a]][m_.q.forall[b]]];
       },
       [](M m_, int a, int b) { return m_.base.mul[m_.q.forall[a]][m_.q.forall[b]]; }},
      {"M35", false,
       [](M m_, int a, int b) {
         return m_.q.forall[m_.base.mul[m_.q.forall[a]][m_.q.forall[b]]];
       },
       [](M m_, int a, int b) { return m_.base.mul[m_.q.forall[a]][m_.q.forall[b]]; }},
      {"M36", false,
       [](M m_, int a, int b) {
         return m_.q.forall[m_.base.meet[m_.q.forall[a]][m_.q.forall[b]]];
       },
       [](M m_, int a, int b) { return m_.base.meet[m_.q.forall[a]][m_.q.forall[b]]; }},
      {"M37", false, [](M m_, int a, int b) { return m_.q.forall[m_.base.meet[a][b]]; },
       [](M m_, int a, int b) { return m_.base.meet[m_.q.forall[a]][m_.q.forall[b]]; }},
  };

  for (const auto& eq : eqs) {
    for (int a = 0; a < n; ++a) {
      if (eq.unary) {
        ++r.checks;
        int l = eq.lhs(m, a, 0), rr = eq.rhs(m, a, 0);
        if (l != rr) r.fail(eq.law, {a}, A.label(l) + " != " + A.label(rr));
      } else {
        for (int b = 0; b < n; ++b) {
          ++r.checks;
          int l = eq.lhs(m, a, b), rr = eq.rhs(m, a, b);
          if (l != rr) r.fail(eq.law, {a, b}, A.label(l) + " != " + A.label(rr));
        }
      }
    }
  }

  // M17: both quantifiers are monotone for the derived order.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!A.leq(a, b)) continue;
      ++r.checks;
      if (!A.leq(fa[a], fa[b])) r.fail("M17.forall", {a, b});
      if (!A.leq(ex[a], ex[b])) r.fail("M17.exists", {a, b});
    }

  // M19: the quantifiers fix exactly the same elements.
  for (int a = 0; a < n; ++a) {
    ++r.checks;
    if ((fa[a] == a) != (ex[a] == a))
      r.fail("M19", {a},
             "forall fixes " + A.label(a) + ": " + (fa[a] == a ? "yes" : "no") +
                 ", exists fixes it: " + (ex[a] == a ? "yes" : "no"));
  }

  // R1..R3: identities with one side restricted to the universal image.
  for (int a = 0; a < n; ++a)
    for (int ci = 0; ci < n; ++ci) {
      int c = fa[ci];
      ++r.checks;
      if (fa[A.imp[a][c]] != A.imp[ex[a]][c]) r.fail("R1", {a, c});
      if (fa[A.imp[c][a]] != A.imp[c][fa[a]]) r.fail("R2", {a, c});
      if (fa[A.join[c][a]] != A.join[c][fa[a]]) r.fail("R3", {a, c});
    }

  return r;
}

inline const std::vector<std::string>& derived_identity_names() {
  static const std::vector<std::string> names = {
      "M6",  "M7",  "M8",  "M9",  "M10", "M11", "M12", "M13", "M14", "M15", "M16",
      "M17", "M18", "M19", "M20", "M21", "M22", "M23", "M24", "M25", "M26", "M27",
      "M28", "M29", "M30", "M31", "M32", "M33", "M34", "M35", "M36", "M37"};
  return names;
}

// forall(x*x) = forall x * forall x does not follow from M1..M5. This probe
// reports where the equation breaks on a given structure.
inline Report check_forall_square(const MonadicBLAlgebra& m) {
  validate_shape(m);
  Report r;
  const auto& A = m.base;
  for (int a = 0; a < A.size; ++a) {
    ++r.checks;
    int lhs = m.q.forall[A.mul[a][a]];
    int rhs = A.mul[m.q.forall[a]][m.q.forall[a]];
    if (lhs != rhs)
      r.fail("forall-square", {a},
             "forall(" + A.label(a) + " * " + A.label(a) + ") = " + A.label(lhs) +
                 " but forall " + A.label(a) + " * forall " + A.label(a) + " = " + A.label(rhs));
  }
  return r;
}

// ---- relative completeness -------------------------------------------------

struct MRelResult {
  bool ok = true;
  std::string condition;       // first violated condition, empty when ok
  std::vector<int> witness;    // elements witnessing the violation
  std::string detail;
};

namespace detail {

inline bool greatest_below(const FiniteBLAlgebra& a, const std::vector<int>& c, int x, int* out) {
  int best = -1;
  for (int e : c) {
    if (!a.leq(e, x)) continue;
    if (best < 0 || a.leq(best, e)) best = e;
  }
  if (best < 0) return false;
  for (int e : c)  // best must dominate every candidate, not merely be maximal
    if (a.leq(e, x) && !a.leq(e, best)) return false;
  *out = best;
  return true;
}

inline bool least_above(const FiniteBLAlgebra& a, const std::vector<int>& c, int x, int* out) {
  int best = -1;
  for (int e : c) {
    if (!a.leq(x, e)) continue;
    if (best < 0 || a.leq(e, best)) best = e;
  }
  if (best < 0) return false;
  for (int e : c)
    if (a.leq(x, e) && !a.leq(best, e)) return false;
  *out = best;
  return true;
}

inline bool totally_ordered(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (!a.leq(c[i], c[j]) && !a.leq(c[j], c[i])) return false;
  return true;
}

}  // namespace detail

// (s1): every element has a greatest lower and least upper approximation in C.
inline MRelResult check_s1(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  int g;
  for (int x = 0; x < a.size; ++x) {
    if (!detail::greatest_below(a, c, x, &g))
      return {false, "s1", {x}, "no greatest element of C below " + a.label(x)};
    if (!detail::least_above(a, c, x, &g))
      return {false, "s1", {x}, "no least element of C above " + a.label(x)};
  }
  return {};
}

// (s2): c1 <= c2 v a admits a witness c3 <= a with c1 <= c2 v c3.
inline MRelResult check_s2_full(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  for (int x = 0; x < a.size; ++x)
    for (int c1 : c)
      for (int c2 : c) {
        if (!a.leq(c1, a.join[c2][x])) continue;
        bool found = false;
        for (int c3 : c)
          if (a.leq(c3, x) && a.leq(c1, a.join[c2][c3])) {
            found = true;
            break;
          }
        if (!found)
          return {false, "s2", {c1, c2, x},
                  a.label(c1) + " <= " + a.label(c2) + " v " + a.label(x) + " has no witness in C"};
      }
  return {};
}

// (s2'): the same with equality in place of both inequalities on c1.
inline MRelResult check_s2_eq(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  for (int x = 0; x < a.size; ++x)
    for (int c1 : c)
      for (int c2 : c) {
        if (a.join[c2][x] != c1) continue;
        bool found = false;
        for (int c3 : c)
          if (a.leq(c3, x) && a.join[c2][c3] == c1) {
            found = true;
            break;
          }
        if (!found) return {false, "s2'", {c1, c2, x}, ""};
      }
  return {};
}

// (s2''): only the top instance of (s2') is required.
inline MRelResult check_s2_top(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  int top = a.top();
  for (int x = 0; x < a.size; ++x)
    for (int c1 : c) {
      if (a.join[c1][x] != top) continue;
      bool found = false;
      for (int c2 : c)
        if (a.leq(c2, x) && a.join[c1][c2] == top) {
          found = true;
          break;
        }
      if (!found) return {false, "s2''", {c1, x}, ""};
    }
  return {};
}

// (s2''l): for totally ordered C a join can only reach top trivially.
inline MRelResult check_s2_linear(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  if (!detail::totally_ordered(a, c))
    throw precondition_error("the linear form of (s2) requires a totally ordered subalgebra");
  int top = a.top();
  for (int x = 0; x < a.size; ++x)
    for (int c1 : c)
      if (a.join[c1][x] == top && c1 != top && x != top)
        return {false, "s2''l", {c1, x},
                a.label(c1) + " v " + a.label(x) + " = 1 with both sides below 1"};
  return {};
}

// (s3): a*a <= c1 admits c2 in C with a <= c2 and c2*c2 <= c1.
inline MRelResult check_s3(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  for (int x = 0; x < a.size; ++x)
    for (int c1 : c) {
      if (!a.leq(a.mul[x][x], c1)) continue;
      bool found = false;
      for (int c2 : c)
        if (a.leq(x, c2) && a.leq(a.mul[c2][c2], c1)) {
          found = true;
          break;
        }
      if (!found)
        return {false, "s3", {x, c1},
                a.label(x) + " * " + a.label(x) + " <= " + a.label(c1) + " has no witness in C"};
    }
  return {};
}

// Full completeness test for a subalgebra carrier. The (s2) leg uses the
// linear shortcut when C is totally ordered and the unabridged condition
// otherwise; both routes agree wherever the shortcut applies.
inline MRelResult is_m_relatively_complete(const FiniteBLAlgebra& a, const std::vector<int>& c) {
  if (c.empty()) throw invalid_parameter("subalgebra carrier is empty");
  MRelResult r = check_s1(a, c);
  if (!r.ok) return r;
  r = detail::totally_ordered(a, c) ? check_s2_linear(a, c) : check_s2_full(a, c);
  if (!r.ok) return r;
  return check_s3(a, c);
}

// Quantifiers induced by an m-relatively complete subalgebra: the universal
// quantifier picks the greatest element of C below, the existential one the
// least element above.
inline QuantifierPair quantifiers_from_subalgebra(const FiniteBLAlgebra& a,
                                                  const std::vector<int>& c) {
  MRelResult check = is_m_relatively_complete(a, c);
  if (!check.ok) {
    std::string msg = "subalgebra is not m-relatively complete: condition " + check.condition;
    if (!check.witness.empty()) {
      msg += " fails at (";
      for (size_t i = 0; i < check.witness.size(); ++i)
        msg += (i ? ", " : "") + a.label(check.witness[i]);
      msg += ")";
    }
    if (!check.detail.empty()) msg += ": " + check.detail;
    throw precondition_error(msg);
  }
  QuantifierPair q;
  q.forall.resize(a.size);
  q.exists.resize(a.size);
  for (int x = 0; x < a.size; ++x) {
    detail::greatest_below(a, c, x, &q.forall[x]);
    detail::least_above(a, c, x, &q.exists[x]);
  }
  return q;
}

// Every monadic structure on A, through the subalgebra route. Sorted by the
// quantifier tables so independent enumerations can be compared as lists.
inline std::vector<QuantifierPair> enumerate_monadic_structures(const FiniteBLAlgebra& a) {
  std::vector<QuantifierPair> out;
  for (const auto& c : enumerate_subalgebras(a)) {
    if (!is_m_relatively_complete(a, c).ok) continue;
    out.push_back(quantifiers_from_subalgebra(a, c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Candidate unary tables for one quantifier: comparisons against already
// fixed entries prune non-monotone prefixes, idempotence and the
// deflationary or inflationary bound cut the rest.
inline void unary_candidates(const FiniteBLAlgebra& a, bool deflationary,
                             std::vector<std::vector<int>>* out) {
  int n = a.size;
  std::vector<int> f(n, -1);
  auto ok_at = [&](int x) {
    if (deflationary ? !a.leq(f[x], x) : !a.leq(x, f[x])) return false;
    for (int y = 0; y < x; ++y) {
      if (a.leq(x, y) && !a.leq(f[x], f[y])) return false;
      if (a.leq(y, x) && !a.leq(f[y], f[x])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      for (int e = 0; e < n; ++e)
        if (f[f[e]] != f[e]) return;
      out->push_back(f);
      return;
    }
    for (int v = 0; v < n; ++v) {
      f[x] = v;
      if (ok_at(x)) self(self, x + 1);
    }
    f[x] = -1;
  };
  rec(rec, 0);
}

inline bool passes_m1_to_m5(const FiniteBLAlgebra& a, const std::vector<int>& fa,
                            const std::vector<int>& ex) {
  int n = a.size, top = a.top();
  for (int x = 0; x < n; ++x) {
    if (a.imp[fa[x]][x] != top) return false;
    if (ex[a.mul[x][x]] != a.mul[ex[x]][ex[x]]) return false;
    for (int y = 0; y < n; ++y) {
      if (fa[a.imp[x][fa[y]]] != a.imp[ex[x]][fa[y]]) return false;
      if (fa[a.imp[fa[x]][y]] != a.imp[fa[x]][fa[y]]) return false;
      if (fa[a.join[ex[x]][y]] != a.join[ex[x]][fa[y]]) return false;
    }
  }
  return true;
}

}  // namespace detail

// Independent oracle: search the table space directly. Candidates are
// pruned to deflationary/inflationary monotone idempotent maps (all of
// which are consequences of M1..M5), the survivors are filtered by the
// axioms themselves. Guarded because the candidate space grows quickly.
inline std::vector<QuantifierPair> brute_force_monadic_structures(const FiniteBLAlgebra& a,
                                                                  int size_bound = 6,
                                                                  int jobs = 1) {
  if (a.size > size_bound)
    throw invalid_parameter("brute force bound exceeded: carrier has " + std::to_string(a.size) +
                            " elements, bound is " + std::to_string(size_bound));
  std::vector<std::vector<int>> falls, exes;
  detail::unary_candidates(a, true, &falls);
  detail::unary_candidates(a, false, &exes);

  std::vector<QuantifierPair> out;
  std::mutex guard;
  std::size_t total = falls.size();
  run_sharded(jobs, total, [&](std::size_t begin, std::size_t end) {
    std::vector<QuantifierPair> local;
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& ex : exes)
        if (detail::passes_m1_to_m5(a, falls[i], ex)) local.push_back({falls[i], ex});
    std::lock_guard<std::mutex> lock(guard);
    out.insert(out.end(), local.begin(), local.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Quantifier pairs that satisfy M1, M2, M3, M5 but break M4, found by an
// unpruned sweep over all table pairs. The monotonicity and idempotence
// prunings are unsound here because their derivations pass through M4, so
// the search space is the full n^(2n) and the bound stays small.
inline std::vector<QuantifierPair> search_m4_independent(const FiniteBLAlgebra& a,
                                                         int size_bound = 4) {
  int n = a.size;
  if (n > size_bound)
    throw invalid_parameter("independence search is limited to " + std::to_string(size_bound) +
                            " elements");
  std::vector<std::vector<int>> maps;
  std::vector<int> f(n, 0);
  while (true) {
    maps.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }

  int top = a.top();
  std::vector<QuantifierPair> out;
  for (const auto& fa : maps) {
    bool m1 = true;
    for (int x = 0; x < n && m1; ++x)
      if (a.imp[fa[x]][x] != top) m1 = false;
    if (!m1) continue;
    for (const auto& ex : maps) {
      bool keep = true;
      bool m4_broken = false;
      for (int x = 0; x < n && keep; ++x) {
        if (ex[a.mul[x][x]] != a.mul[ex[x]][ex[x]]) keep = false;
        for (int y = 0; y < n && keep; ++y) {
          if (fa[a.imp[x][fa[y]]] != a.imp[ex[x]][fa[y]]) keep = false;
          if (fa[a.imp[fa[x]][y]] != a.imp[fa[x]][fa[y]]) keep = false;
          if (fa[a.join[ex[x]][y]] != a.join[ex[x]][fa[y]]) m4_broken = true;
        }
      }
      if (keep && m4_broken) out.push_back({fa, ex});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- functional algebras ---------------------------------------------------

// Subalgebra of chain^X closed under the pointwise operations and the two
// constant-map quantifiers inf and sup. Elements are tuples over X indexed
// in lexicographic order.
struct FunctionalMBL {
  MonadicBLAlgebra algebra;
  std::vector<std::vector<int>> tuples;

  int index_of(const std::vector<int>& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) throw invalid_parameter("tuple is not in the carrier");
    return static_cast<int>(it - tuples.begin());
  }
};

// Builds the functional algebra over a totally ordered base. With no
// generators the carrier is all of chain^X; otherwise it is the closure of
// the generators together with the constant maps.
inline FunctionalMBL build_functional(const FiniteBLAlgebra& chain, int x_size,
                                      const std::vector<std::vector<int>>& generators = {}) {
  if (x_size < 1) throw invalid_parameter("functional algebras need at least one world");
  if (!classify(chain).chain)
    throw precondition_error(
        "functional construction needs a totally ordered base; inf and sup of the tuple entries "
        "are not defined otherwise");
  int n = chain.size;

  std::vector<std::vector<int>> carrier;
  if (generators.empty()) {
    double full = 1;
    for (int i = 0; i < x_size; ++i) full *= n;
    if (full > 64) throw invalid_parameter("full functional carrier exceeds 64 elements");
    std::vector<int> t(x_size, 0);
    while (true) {
      carrier.push_back(t);
      int i = x_size - 1;
      while (i >= 0 && ++t[i] == n) t[i--] = 0;
      if (i < 0) break;
    }
  } else {
    for (const auto& g : generators) {
      if (static_cast<int>(g.size()) != x_size)
        throw structural_error("generator arity does not match the world count");
      for (int v : g)
        if (v < 0 || v >= n) throw structural_error("generator entry out of range");
      carrier.push_back(g);
    }
    for (int v = 0; v < n; ++v) carrier.push_back(std::vector<int>(x_size, v));
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

    auto apply = [&](const std::vector<std::vector<int>>& table, const std::vector<int>& u,
                     const std::vector<int>& v) {
      std::vector<int> w(x_size);
      for (int i = 0; i < x_size; ++i) w[i] = table[u[i]][v[i]];
      return w;
    };
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<int>> next = carrier;
      for (const auto& u : carrier) {
        int lo = *std::min_element(u.begin(), u.end());
        int hi = *std::max_element(u.begin(), u.end());
        next.push_back(std::vector<int>(x_size, lo));
        next.push_back(std::vector<int>(x_size, hi));
        for (const auto& v : carrier) {
          next.push_back(apply(chain.join, u, v));
          next.push_back(apply(chain.meet, u, v));
          next.push_back(apply(chain.mul, u, v));
          next.push_back(apply(chain.imp, u, v));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.size() > 64)
        throw invalid_parameter("functional closure exceeds 64 elements");
      if (next.size() != carrier.size()) {
        carrier = std::move(next);
        grew = true;
      }
    }
  }

  FunctionalMBL f;
  f.tuples = carrier;
  int m = static_cast<int>(carrier.size());
  auto at = [&](const std::vector<int>& t) {
    return static_cast<int>(std::lower_bound(carrier.begin(), carrier.end(), t) - carrier.begin());
  };

  FiniteBLAlgebra& b = f.algebra.base;
  b.size = m;
  b.join.assign(m, std::vector<int>(m));
  b.meet.assign(m, std::vector<int>(m));
  b.mul.assign(m, std::vector<int>(m));
  b.imp.assign(m, std::vector<int>(m));
  std::vector<int> w(x_size);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < x_size; ++k) w[k] = chain.join[carrier[i][k]][carrier[j][k]];
      b.join[i][j] = at(w);
      for (int k = 0; k < x_size; ++k) w[k] = chain.meet[carrier[i][k]][carrier[j][k]];
      b.meet[i][j] = at(w);
      for (int k = 0; k < x_size; ++k) w[k] = chain.mul[carrier[i][k]][carrier[j][k]];
      b.mul[i][j] = at(w);
      for (int k = 0; k < x_size; ++k) w[k] = chain.imp[carrier[i][k]][carrier[j][k]];
      b.imp[i][j] = at(w);
    }
  b.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    std::string s = "(";
    for (int k = 0; k < x_size; ++k) s += (k ? "," : "") + chain.label(carrier[i][k]);
    b.labels[i] = s + ")";
  }

  f.algebra.q.forall.resize(m);
  f.algebra.q.exists.resize(m);
  for (int i = 0; i < m; ++i) {
    int lo = *std::min_element(carrier[i].begin(), carrier[i].end());
    int hi = *std::max_element(carrier[i].begin(), carrier[i].end());
    f.algebra.q.forall[i] = at(std::vector<int>(x_size, lo));
    f.algebra.q.exists[i] = at(std::vector<int>(x_size, hi));
  }
  return f;
}

}  // namespace mbl
