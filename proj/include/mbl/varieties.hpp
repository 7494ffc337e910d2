#pragma once

// The subvariety toolbox: monadic MV-algebras in the signature (oplus, neg,
// exists, 0) with the term translations to and from involutive monadic
// BL-algebras, monadic Heyting and Goedel algebras, trivial quantifiers on
// product chains, and the MV-closure of a totally ordered Wajsberg hoop.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "core.hpp"
#include "monadic.hpp"

namespace mbl {

struct MMVAlgebra {
  int size = 0;
  std::vector<std::vector<int>> oplus;
  std::vector<int> neg, exists;
  int zero = 0;
  std::vector<std::string> labels;

  int top() const { return neg[zero]; }
  int mul(int x, int y) const { return neg[oplus[neg[x]][neg[y]]]; }
  int imp(int x, int y) const { return oplus[neg[x]][y]; }
  int meet(int x, int y) const { return mul(x, imp(x, y)); }
  int join(int x, int y) const { return oplus[neg[oplus[neg[x]][y]]][y]; }
  int forall(int x) const { return neg[exists[neg[x]]]; }

  std::string label(int x) const {
    if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty()) return labels[x];
    return std::to_string(x);
  }
};

inline void validate_shape(const MMVAlgebra& b) {
  if (b.size <= 0) throw structural_error("algebra size must be positive");
  detail::require_square(b.oplus, b.size, "oplus");
  if (static_cast<int>(b.neg.size()) != b.size || static_cast<int>(b.exists.size()) != b.size)
    throw structural_error("neg and exists tables must match the carrier size");
  for (int i = 0; i < b.size; ++i)
    if (b.neg[i] < 0 || b.neg[i] >= b.size || b.exists[i] < 0 || b.exists[i] >= b.size)
      throw structural_error("unary table entry out of range at " + std::to_string(i));
  if (b.zero != 0) throw structural_error("the zero element must sit at index 0");
  if (b.size > 1 && b.neg[b.zero] != b.size - 1)
    throw structural_error("the top element neg(0) must sit at the last index");
}

// The MV reduct laws for (oplus, neg, 0).
inline Report check_mv_reduct(const MMVAlgebra& b) {
  validate_shape(b);
  Report r;
  int n = b.size, one = b.top();
  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (b.oplus[x][b.zero] != x) r.fail("mv-zero-unit", {x});
    if (b.neg[b.neg[x]] != x) r.fail("mv-double-neg", {x});
    if (b.oplus[x][one] != one) r.fail("mv-top-absorb", {x});
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (b.oplus[x][y] != b.oplus[y][x]) r.fail("mv-comm", {x, y});
      if (b.oplus[b.neg[b.oplus[b.neg[x]][y]]][y] != b.oplus[b.neg[b.oplus[b.neg[y]][x]]][x])
        r.fail("mv-exchange", {x, y});
      for (int z = 0; z < n; ++z) {
        ++r.checks;
        if (b.oplus[b.oplus[x][y]][z] != b.oplus[x][b.oplus[y][z]]) r.fail("mv-assoc", {x, y, z});
      }
    }
  }
  return r;
}

// Monadic MV axioms MV1..MV6 on top of the reduct, together with the seven
// derived quantifier laws D1..D7 and the two MV identities I1, I2 that the
// term translations lean on.
inline Report check_mmv_axioms(const MMVAlgebra& b) {
  Report r = check_mv_reduct(b);
  int n = b.size, one = b.top();
  const auto& ex = b.exists;
  auto fa = [&b](int x) { return b.forall(x); };

  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (b.imp(x, ex[x]) != one)
      r.fail("MV1", {x}, b.label(x) + " -> exists " + b.label(x) + " = " + b.label(b.imp(x, ex[x])));
    if (ex[b.neg[ex[x]]] != b.neg[ex[x]]) r.fail("MV3", {x});
    if (ex[b.mul(x, x)] != b.mul(ex[x], ex[x]))
      r.fail("MV5", {x},
             "exists(" + b.label(x) + " * " + b.label(x) + ") = " + b.label(ex[b.mul(x, x)]) +
                 " but exists " + b.label(x) + " * exists " + b.label(x) + " = " +
                 b.label(b.mul(ex[x], ex[x])));
    if (ex[b.oplus[x][x]] != b.oplus[ex[x]][ex[x]]) r.fail("MV6", {x});
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (ex[b.join(x, y)] != b.join(ex[x], ex[y])) r.fail("MV2", {x, y});
      if (ex[b.oplus[ex[x]][ex[y]]] != b.oplus[ex[x]][ex[y]]) r.fail("MV4", {x, y});
    }
  }

  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (b.imp(fa(x), x) != one) r.fail("D1", {x});
    if (fa(b.neg[fa(x)]) != b.neg[fa(x)]) r.fail("D2", {x});
    if (fa(b.mul(x, x)) != b.mul(fa(x), fa(x))) r.fail("D7", {x});
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (fa(b.join(ex[x], y)) != b.join(ex[x], fa(y))) r.fail("D3", {x, y});
      int lhs = fa(b.imp(x, y)), rhs = b.imp(fa(x), fa(y));
      if (b.imp(lhs, rhs) != one) r.fail("D4", {x, y});
      if (fa(b.meet(x, y)) != b.meet(fa(x), fa(y))) r.fail("D5", {x, y});
      if (fa(b.oplus[fa(x)][fa(y)]) != b.oplus[fa(x)][fa(y)]) r.fail("D6", {x, y});
      // I1: oplus is definable from * and -> alone
      if (b.oplus[x][y] != b.imp(b.imp(x, b.mul(x, y)), y)) r.fail("I1", {x, y});
      // I2: (x -> y)^2 -> (2x -> 2y) = 1
      int sq = b.mul(b.imp(x, y), b.imp(x, y));
      if (b.imp(sq, b.imp(b.oplus[x][x], b.oplus[y][y])) != one) r.fail("I2", {x, y});
    }
  }
  return r;
}

// Involutive monadic BL-algebras present as monadic MV-algebras through
// neg x = x -> 0 and x oplus y = neg x -> y.
inline MMVAlgebra mbl_to_mmv(const MonadicBLAlgebra& m) {
  validate_shape(m);
  const FiniteBLAlgebra& a = m.base;
  for (int x = 0; x < a.size; ++x)
    if (a.neg(a.neg(x)) != x)
      throw precondition_error("negation is not involutive at " + a.label(x) + ": not not " +
                               a.label(x) + " = " + a.label(a.neg(a.neg(x))));
  MMVAlgebra b;
  b.size = a.size;
  b.zero = 0;
  b.neg.resize(a.size);
  b.exists = m.q.exists;
  b.oplus.assign(a.size, std::vector<int>(a.size));
  for (int x = 0; x < a.size; ++x) {
    b.neg[x] = a.neg(x);
    for (int y = 0; y < a.size; ++y) b.oplus[x][y] = a.imp[a.neg(x)][y];
  }
  b.labels = a.labels;
  return b;
}

// The reverse translation; the lattice, product and implication tables are
// all spelled out in terms of oplus and neg.
inline MonadicBLAlgebra mmv_to_mbl(const MMVAlgebra& b) {
  validate_shape(b);
  MonadicBLAlgebra m;
  FiniteBLAlgebra& a = m.base;
  a.size = b.size;
  a.join.assign(b.size, std::vector<int>(b.size));
  a.meet.assign(b.size, std::vector<int>(b.size));
  a.mul.assign(b.size, std::vector<int>(b.size));
  a.imp.assign(b.size, std::vector<int>(b.size));
  for (int x = 0; x < b.size; ++x)
    for (int y = 0; y < b.size; ++y) {
      a.join[x][y] = b.join(x, y);
      a.meet[x][y] = b.meet(x, y);
      a.mul[x][y] = b.mul(x, y);
      a.imp[x][y] = b.imp(x, y);
    }
  m.q.exists = b.exists;
  m.q.forall.resize(b.size);
  for (int x = 0; x < b.size; ++x) m.q.forall[x] = b.forall(x);
  a.labels = b.labels;
  return m;
}

// Totally ordered monadic MV-algebras only carry the identity quantifier.
// Verified for every Lukasiewicz chain up to k_max by the subalgebra route
// and, up to brute_bound, by the table search as well.
inline Report check_mmv_chain_triviality(int k_max, int brute_bound = 5) {
  if (k_max < 2) throw invalid_parameter("chain triviality needs k_max >= 2");
  Report r;
  for (int k = 2; k <= k_max; ++k) {
    FiniteBLAlgebra chain = make_mv_chain(k);
    auto structures = enumerate_monadic_structures(chain);
    ++r.checks;
    if (structures.size() != 1)
      r.fail("mmv-chain-trivial.count", {k},
             std::to_string(structures.size()) + " structures on the " + std::to_string(k) +
                 " element chain");
    else if (!(structures[0] == identity_quantifiers(k)))
      r.fail("mmv-chain-trivial.identity", {k});
    if (k <= brute_bound) {
      ++r.checks;
      if (brute_force_monadic_structures(chain, brute_bound) != structures)
        r.fail("mmv-chain-trivial.brute-agreement", {k});
    }
    // each structure presents as a monadic MV-algebra and passes the axioms
    for (const auto& q : structures) {
      ++r.checks;
      if (!check_mmv_axioms(mbl_to_mmv({chain, q})).ok()) r.fail("mmv-chain-trivial.axioms", {k});
    }
  }
  return r;
}

// ---- monadic Heyting and Goedel algebras ------------------------------------

struct HeytingCheck {
  Report laws;                   // lattice + residuation + H1..H5 + L1..L5
  bool eq1 = true;               // forall(exists x v y) = exists x v forall y
  std::vector<int> eq1_witness;  // first failing (x, y) when eq1 is false
  std::string eq1_detail;
  bool prelinear = true;
};

// Monadic Heyting laws for an algebra given in BL table form with mul equal
// to meet. Works over any bounded lattice order, not only chains; the
// distributivity identity is part of the sweep. The join-shift equation and
// prelinearity are reported as flags since they single out the Goedel case.
inline HeytingCheck check_monadic_heyting(const MonadicBLAlgebra& m) {
  validate_shape(m);
  HeytingCheck out;
  Report& r = out.laws;
  const FiniteBLAlgebra& a = m.base;
  const auto& fa = m.q.forall;
  const auto& ex = m.q.exists;
  int n = a.size, top = a.top();

  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (a.join[x][0] != x || a.meet[x][top] != x || a.join[x][top] != top || a.meet[x][0] != 0)
      r.fail("heyting-bounds", {x});
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (a.mul[x][y] != a.meet[x][y]) r.fail("heyting-mul-is-meet", {x, y});
      if (a.join[x][y] != a.join[y][x] || a.meet[x][y] != a.meet[y][x])
        r.fail("heyting-lattice-comm", {x, y});
      if (a.join[x][a.meet[x][y]] != x || a.meet[x][a.join[x][y]] != x)
        r.fail("heyting-absorption", {x, y});
      for (int z = 0; z < n; ++z) {
        ++r.checks;
        if (a.join[a.join[x][y]][z] != a.join[x][a.join[y][z]] ||
            a.meet[a.meet[x][y]][z] != a.meet[x][a.meet[y][z]])
          r.fail("heyting-lattice-assoc", {x, y, z});
        if (a.meet[x][a.join[y][z]] != a.join[a.meet[x][y]][a.meet[x][z]])
          r.fail("heyting-distributivity", {x, y, z});
        bool meet_le = a.leq(a.meet[x][y], z);
        bool imp_le = a.leq(x, a.imp[y][z]);
        if (meet_le != imp_le) r.fail("heyting-residuation", {x, y, z});
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (!a.leq(fa[x], x)) r.fail("H1.forall", {x});
    if (!a.leq(x, ex[x])) r.fail("H1.exists", {x});
    if (fa[top] != top) r.fail("H3.forall", {x});
    if (ex[0] != 0) r.fail("H3.exists", {x});
    if (fa[ex[x]] != ex[x]) r.fail("H4.forall-exists", {x});
    if (ex[fa[x]] != fa[x]) r.fail("H4.exists-forall", {x});
    if (fa[fa[x]] != fa[x] || ex[ex[x]] != ex[x]) r.fail("L3", {x});
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (fa[a.meet[x][y]] != a.meet[fa[x]][fa[y]]) r.fail("H2.forall", {x, y});
      if (ex[a.join[x][y]] != a.join[ex[x]][ex[y]]) r.fail("H2.exists", {x, y});
      if (ex[a.meet[ex[x]][y]] != a.meet[ex[x]][ex[y]]) r.fail("H5", {x, y});
      if (a.leq(x, y) && (!a.leq(fa[x], fa[y]) || !a.leq(ex[x], ex[y]))) r.fail("L1", {x, y});
      if (!a.leq(fa[a.imp[x][y]], a.imp[fa[x]][fa[y]])) r.fail("L2", {x, y});
      if (fa[a.imp[x][fa[y]]] != a.imp[ex[x]][fa[y]]) r.fail("L4", {x, y});
      if (fa[a.imp[x][ex[y]]] != a.imp[ex[x]][ex[y]]) r.fail("L5", {x, y});
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = fa[a.join[ex[x]][y]];
      int rhs = a.join[ex[x]][fa[y]];
      if (lhs != rhs && out.eq1) {
        out.eq1 = false;
        out.eq1_witness = {x, y};
        out.eq1_detail = "forall(exists " + a.label(x) + " v " + a.label(y) + ") = " +
                         a.label(lhs) + " but exists " + a.label(x) + " v forall " + a.label(y) +
                         " = " + a.label(rhs);
      }
      if (a.join[a.imp[x][y]][a.imp[y][x]] != top) out.prelinear = false;
    }
  return out;
}

// Monadic Goedel algebras are exactly the prelinear monadic Heyting
// algebras satisfying the join-shift equation. Both directions checked.
inline Report check_godel_coincidence(const std::vector<MonadicBLAlgebra>& corpus) {
  Report r;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& m = corpus[i];
    bool idempotent = true;
    for (int x = 0; x < m.base.size; ++x)
      if (m.base.mul[x][x] != x) idempotent = false;
    bool is_mbl =
        idempotent && check_bl_axioms(m.base).ok() && check_mbl_axioms(m).ok();
    HeytingCheck h = check_monadic_heyting(m);
    bool is_heyting_side = h.laws.ok() && h.eq1 && h.prelinear;
    ++r.checks;
    if (is_mbl && !is_heyting_side)
      r.fail("godel-coincidence.forward", {static_cast<int>(i)},
             "a monadic Goedel algebra must satisfy the Heyting laws, prelinearity and the "
             "join-shift equation");
    if (is_heyting_side && !is_mbl)
      r.fail("godel-coincidence.backward", {static_cast<int>(i)},
             "a prelinear monadic Heyting algebra with the join-shift equation must be a "
             "monadic Goedel algebra");
  }
  return r;
}

// The two-valued quantifier pair: forall collapses everything below the
// top to 0, exists dually lifts everything above 0 to the top.
inline QuantifierPair delta_nabla(const FiniteBLAlgebra& a) {
  QuantifierPair q;
  q.forall.resize(a.size);
  q.exists.resize(a.size);
  for (int x = 0; x < a.size; ++x) {
    q.forall[x] = x == a.top() ? a.top() : 0;
    q.exists[x] = x == 0 ? 0 : a.top();
  }
  return q;
}

// On totally ordered product algebras only the identity and the two-valued
// pair survive. Also verifies, on every admissible structure, the three
// supporting facts: exists(exists a -> a) = 1, the zero dichotomy, and that
// the elements with nonzero universal value form a cancellative hoop.
inline Report check_product_chain_triviality(const FiniteBLAlgebra& a) {
  Classification c = classify(a);
  if (!c.chain) throw precondition_error("product triviality applies to chains only");
  if (!c.product) {
    std::string why = "algebra is not a product algebra";
    for (int x = 0; x < a.size; ++x)
      if (a.meet[x][a.neg(x)] != 0) {
        why += ": " + a.label(x) + " ^ not " + a.label(x) + " = " +
               a.label(a.meet[x][a.neg(x)]);
        break;
      }
    throw precondition_error(why);
  }

  Report r;
  auto structures = enumerate_monadic_structures(a);
  QuantifierPair id = identity_quantifiers(a.size);
  QuantifierPair dn = delta_nabla(a);
  for (const auto& q : structures) {
    ++r.checks;
    if (!(q == id) && !(q == dn)) r.fail("product-trivial.extra-structure", {});

    int top = a.top();
    for (int x = 0; x < a.size; ++x) {
      ++r.checks;
      if (q.exists[a.imp[q.exists[x]][x]] != top) r.fail("product-trivial.lemma-1", {x});
      if (x != 0 && q.forall[x] == 0 && q.exists[x] != top) r.fail("product-trivial.lemma-2", {x});
    }
    // A' = { u : forall u != 0 } is closed under * and -> and cancellative
    std::vector<int> prime;
    for (int x = 0; x < a.size; ++x)
      if (q.forall[x] != 0) prime.push_back(x);
    for (int u : prime)
      for (int v : prime) {
        ++r.checks;
        bool mul_in = std::find(prime.begin(), prime.end(), a.mul[u][v]) != prime.end();
        bool imp_in = std::find(prime.begin(), prime.end(), a.imp[u][v]) != prime.end();
        if (!mul_in || !imp_in) r.fail("product-trivial.lemma-3-closure", {u, v});
        for (int w : prime) {
          ++r.checks;
          if (a.mul[u][v] == a.mul[u][w] && v != w) r.fail("product-trivial.lemma-3-cancel", {u, v, w});
        }
      }
  }
  return r;
}

// ---- Wajsberg hoops and the MV-closure ---------------------------------------

struct HoopTable {
  int size = 0;
  std::vector<std::vector<int>> mul, imp;
  int top = 0;
  bool bounded = false;
  int bottom = 0;  // meaningful only when bounded
  std::vector<std::string> labels;

  std::string label(int x) const {
    if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty()) return labels[x];
    return std::to_string(x);
  }
};

inline HoopTable hoop_reduct(const FiniteBLAlgebra& a) {
  HoopTable h;
  h.size = a.size;
  h.mul = a.mul;
  h.imp = a.imp;
  h.top = a.top();
  h.bounded = true;
  h.bottom = 0;
  h.labels = a.labels;
  return h;
}

// Hoop laws plus the Wajsberg identity. The derived order a <= b iff
// a -> b = top must be total; the declared top is the monoid unit and the
// greatest element, and the declared bottom is least when bounded.
inline Report check_wajsberg_hoop(const HoopTable& h) {
  if (h.size <= 0) throw structural_error("hoop size must be positive");
  detail::require_square(h.mul, h.size, "mul");
  detail::require_square(h.imp, h.size, "imp");
  if (h.top < 0 || h.top >= h.size) throw structural_error("hoop top index out of range");
  if (h.bounded && (h.bottom < 0 || h.bottom >= h.size))
    throw structural_error("hoop bottom index out of range");
  Report r;
  int n = h.size, unit = h.top;

  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (h.mul[x][unit] != x) r.fail("hoop-unit", {x});
    if (h.imp[x][x] != unit) r.fail("hoop-refl", {x});
    if (h.imp[x][unit] != unit) r.fail("hoop-unit-top", {x});
    if (h.bounded && h.imp[h.bottom][x] != unit) r.fail("hoop-bottom-least", {x});
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (h.mul[x][y] != h.mul[y][x]) r.fail("hoop-comm", {x, y});
      if (h.mul[x][h.imp[x][y]] != h.mul[y][h.imp[y][x]]) r.fail("hoop-div", {x, y});
      if (h.imp[h.imp[x][y]][y] != h.imp[h.imp[y][x]][x]) r.fail("wajsberg", {x, y});
      bool le = h.imp[x][y] == unit, ge = h.imp[y][x] == unit;
      if (!le && !ge) r.fail("hoop-total-order", {x, y});
      if (le && ge && x != y) r.fail("hoop-antisymmetry", {x, y});
      for (int z = 0; z < n; ++z) {
        ++r.checks;
        if (h.mul[h.mul[x][y]][z] != h.mul[x][h.mul[y][z]]) r.fail("hoop-assoc", {x, y, z});
        if (h.imp[x][h.imp[y][z]] != h.imp[h.mul[x][y]][z]) r.fail("hoop-exchange", {x, y, z});
      }
    }
  }
  return r;
}

struct MVClosure {
  MMVAlgebra algebra;
  // carrier element -> (hoop element, copy): copy 1 is the original hoop,
  // copy 0 the adjoined negations
  std::vector<std::pair<int, int>> carrier;
  Report mv_report;  // MV reduct verdict on the result; reported, not assumed
};

// Doubles a totally ordered Wajsberg hoop into an algebra in MV signature:
// a negated copy below, the hoop itself on top, with the four-case sum. A
// quantifier pair on the hoop lifts by swapping the roles on the negated
// copy. The MV laws are evaluated on the result and returned as a report,
// since they can fail when the hoop is not cancellative and unbounded.
inline MVClosure mv_closure(const HoopTable& h, const QuantifierPair* q = nullptr) {
  Report hoop_check = check_wajsberg_hoop(h);
  if (!hoop_check.ok())
    throw precondition_error("mv closure needs a totally ordered Wajsberg hoop: " +
                             hoop_check.failures[0].law);
  if (q && (static_cast<int>(q->forall.size()) != h.size ||
            static_cast<int>(q->exists.size()) != h.size))
    throw structural_error("quantifier tables must match the hoop size");

  int n = h.size;
  int unit = h.top;
  // ascending hoop order
  std::vector<int> asc(n);
  for (int i = 0; i < n; ++i) asc[i] = i;
  std::sort(asc.begin(), asc.end(),
            [&](int x, int y) { return x != y && h.imp[x][y] == unit && h.imp[y][x] != unit; });

  MVClosure out;
  out.carrier.resize(2 * n);
  std::vector<int> at_neg(n), at_pos(n);  // hoop element -> carrier index per copy
  for (int i = 0; i < n; ++i) {
    out.carrier[i] = {asc[n - 1 - i], 0};
    at_neg[asc[n - 1 - i]] = i;
    out.carrier[n + i] = {asc[i], 1};
    at_pos[asc[i]] = n + i;
  }

  auto hoop_sum = [&](int x, int y) { return h.imp[h.imp[x][h.mul[x][y]]][y]; };

  MMVAlgebra& b = out.algebra;
  b.size = 2 * n;
  b.zero = 0;
  b.neg.resize(2 * n);
  b.oplus.assign(2 * n, std::vector<int>(2 * n));
  for (int i = 0; i < 2 * n; ++i) {
    auto [a_elem, a_copy] = out.carrier[i];
    b.neg[i] = a_copy == 1 ? at_neg[a_elem] : at_pos[a_elem];
    for (int j = 0; j < 2 * n; ++j) {
      auto [b_elem, b_copy] = out.carrier[j];
      if (a_copy == 1 && b_copy == 1)
        b.oplus[i][j] = at_pos[hoop_sum(a_elem, b_elem)];
      else if (a_copy == 1 && b_copy == 0)
        b.oplus[i][j] = at_pos[h.imp[b_elem][a_elem]];
      else if (a_copy == 0 && b_copy == 1)
        b.oplus[i][j] = at_pos[h.imp[a_elem][b_elem]];
      else
        b.oplus[i][j] = at_neg[h.mul[a_elem][b_elem]];
    }
  }

  QuantifierPair lift = q ? *q : identity_quantifiers(n);
  b.exists.resize(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    auto [elem, copy] = out.carrier[i];
    b.exists[i] = copy == 1 ? at_pos[lift.exists[elem]] : at_neg[lift.forall[elem]];
  }

  b.labels.resize(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    auto [elem, copy] = out.carrier[i];
    b.labels[i] = copy == 1 ? h.label(elem) : "-" + h.label(elem);
  }

  out.mv_report = check_mv_reduct(b);
  return out;
}

}  // namespace mbl
