#pragma once

// Two-way characterization of totally ordered monadic BL-algebras: build one
// from an index chain with a fixed subset plus finite MV-blocks, or decompose
// any monadic BL-chain back into that shape and verify the round trip.

#include <algorithm>
#include <future>
#include <numeric>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "core.hpp"
#include "monadic.hpp"

namespace mbl {

// blocks lists the r MV-chain component sizes (each >= 2) for indices
// 0..r-1 of the index chain {0..r}; index r carries the trivial one-element
// component. fixed is the subset S of {0..r} whose classes the quantifiers
// leave pointwise fixed; it must contain 0 and r.
struct IndexChainSpec {
  std::vector<int> blocks;
  std::vector<int> fixed;

  bool operator==(const IndexChainSpec& o) const {
    return blocks == o.blocks && fixed == o.fixed;
  }
};

inline void validate_spec(const IndexChainSpec& spec) {
  int r = static_cast<int>(spec.blocks.size());
  for (int b : spec.blocks)
    if (b < 2) throw invalid_parameter("block sizes must be at least 2");
  if (spec.fixed.empty() || spec.fixed.front() != 0 || spec.fixed.back() != r)
    throw invalid_parameter("the fixed set must contain the index chain bounds 0 and " +
                            std::to_string(r));
  for (size_t i = 0; i < spec.fixed.size(); ++i) {
    if (spec.fixed[i] < 0 || spec.fixed[i] > r) throw invalid_parameter("fixed index out of range");
    if (i > 0 && spec.fixed[i] <= spec.fixed[i - 1])
      throw invalid_parameter("the fixed set must be strictly increasing");
  }
}

// Quantifiers on the ordinal sum of the blocks: elements of a fixed class
// stay put; anything else drops to the greatest element of the component at
// the nearest fixed index below, respectively rises to the least element of
// the component at the nearest fixed index above (the top when that index
// is r).
inline MonadicBLAlgebra build_chain(const IndexChainSpec& spec) {
  validate_spec(spec);
  int r = static_cast<int>(spec.blocks.size());
  if (r == 0) return {make_one_element(), identity_quantifiers(1)};

  MonadicBLAlgebra m;
  m.base = ordinal_sum({spec.blocks});
  int n = m.base.size, top = n - 1;

  std::vector<int> offset(r);
  for (int b = 1; b < r; ++b) offset[b] = offset[b - 1] + spec.blocks[b - 1] - 1;

  std::vector<bool> in_fixed(r + 1, false);
  for (int s : spec.fixed) in_fixed[s] = true;
  std::vector<int> fall(r + 1), rise(r + 1);
  for (int i = 0, last = 0; i <= r; ++i) {
    if (in_fixed[i]) last = i;
    fall[i] = last;
  }
  for (int i = r, next = r; i >= 0; --i) {
    if (in_fixed[i]) next = i;
    rise[i] = next;
  }

  m.q.forall.resize(n);
  m.q.exists.resize(n);
  for (int x = 0; x < n; ++x) {
    int i = x == top ? r : static_cast<int>(std::upper_bound(offset.begin(), offset.end(), x) -
                                            offset.begin()) -
                               1;
    if (in_fixed[i]) {
      m.q.forall[x] = x;
      m.q.exists[x] = x;
    } else {
      int fi = fall[i], ei = rise[i];
      m.q.forall[x] = offset[fi] + spec.blocks[fi] - 2;
      m.q.exists[x] = ei == r ? top : offset[ei];
    }
  }
  return m;
}

struct ChainDecomposition {
  IndexChainSpec spec;
  std::vector<int> psi;  // element -> carrier index of build_chain(spec)
  Report report;         // convexity, dichotomy, boundary and isomorphism checks
};

// Recover the component structure of a monadic BL-chain from the sets
// F_x = { y != 1 : x -> y = y }: equal sets mean same component. Verifies
// the classes are convex, each is inside or disjoint from the quantifier
// image, the quantifiers land on component boundaries, and the rebuilt
// algebra is isomorphic to the input under the computed map.
inline ChainDecomposition decompose_chain(const MonadicBLAlgebra& m) {
  validate_shape(m);
  if (!classify(m.base).chain)
    throw precondition_error("chain decomposition needs a totally ordered algebra");
  if (!check_mbl_axioms(m).ok())
    throw precondition_error("chain decomposition needs a valid monadic BL-algebra");

  const FiniteBLAlgebra& a = m.base;
  int n = a.size, top = a.top();
  ChainDecomposition out;
  Report& r = out.report;
  if (n == 1) {
    out.spec = {{}, {0}};
    out.psi = {0};
    return out;
  }

  std::vector<int> asc(n);
  std::iota(asc.begin(), asc.end(), 0);
  std::sort(asc.begin(), asc.end(), [&a](int x, int y) { return x != y && a.leq(x, y); });
  std::vector<int> rank(n);
  for (int p = 0; p < n; ++p) rank[asc[p]] = p;

  std::vector<Mask> sets(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (y != top && a.imp[x][y] == y) sets[x] |= mask_bit(y);

  // group ascending ranks into classes of equal F-sets
  std::vector<int> cls(n, 0);
  int classes = 1;
  for (int p = 1; p < n; ++p) {
    if (sets[asc[p]] != sets[asc[p - 1]]) ++classes;
    cls[asc[p]] = classes - 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (sets[x] == sets[y] && cls[x] != cls[y])
        r.fail("class-convexity", {x, y}, "equal component sets in separated classes");
    }
  ++r.checks;
  if (cls[top] != classes - 1 || (rank[top] > 0 && cls[asc[rank[top] - 1]] == cls[top]))
    r.fail("top-class-trivial", {top});
  int rr = classes - 1;  // component indices 0..rr, class rr = {top}

  std::vector<int> class_size(classes, 0), first_rank(classes, n);
  for (int x = 0; x < n; ++x) {
    ++class_size[cls[x]];
    first_rank[cls[x]] = std::min(first_rank[cls[x]], rank[x]);
  }

  out.spec.blocks.resize(rr);
  for (int i = 0; i < rr; ++i) out.spec.blocks[i] = class_size[i] + 1;

  // dichotomy: a class is inside the quantifier image or disjoint from it
  std::vector<bool> fixed_class(classes, false);
  for (int i = 0; i < classes; ++i) {
    int fixed_count = 0, sz = 0;
    for (int x = 0; x < n; ++x)
      if (cls[x] == i) {
        ++sz;
        if (m.q.forall[x] == x) ++fixed_count;
      }
    ++r.checks;
    if (fixed_count != 0 && fixed_count != sz)
      r.fail("class-dichotomy", {i}, "class meets the quantifier image without being contained");
    fixed_class[i] = fixed_count == sz;
  }
  for (int i = 0; i <= rr; ++i)
    if (fixed_class[i]) out.spec.fixed.push_back(i);
  ++r.checks;
  if (out.spec.fixed.empty() || out.spec.fixed.front() != 0 || out.spec.fixed.back() != rr)
    r.fail("fixed-set-bounds", {}, "classes of 0 and 1 must be fixed");

  // on a non-fixed class the quantifiers land on component boundaries
  for (int x = 0; x < n; ++x)
    if (!fixed_class[cls[x]]) {
      ++r.checks;
      int f = m.q.forall[x], e = m.q.exists[x];
      bool f_greatest = rank[f] + 1 >= n || cls[asc[rank[f] + 1]] != cls[f];
      bool e_least = rank[e] == 0 || cls[asc[rank[e] - 1]] != cls[e];
      if (!fixed_class[cls[f]] || !fixed_class[cls[e]] || !f_greatest || !e_least)
        r.fail("quantifier-boundary", {x});
    }

  if (!r.ok()) return out;

  // psi sends rank order onto the rebuilt carrier, class by class
  MonadicBLAlgebra rebuilt = build_chain(out.spec);
  out.psi.resize(n);
  std::vector<int> offset(rr + 1, 0);
  for (int b = 1; b <= rr; ++b) offset[b] = offset[b - 1] + out.spec.blocks[b - 1] - 1;
  for (int x = 0; x < n; ++x)
    out.psi[x] = x == top ? rebuilt.base.top() : offset[cls[x]] + rank[x] - first_rank[cls[x]];

  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (rebuilt.q.forall[out.psi[x]] != out.psi[m.q.forall[x]]) r.fail("iso.forall", {x});
    if (rebuilt.q.exists[out.psi[x]] != out.psi[m.q.exists[x]]) r.fail("iso.exists", {x});
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (rebuilt.base.join[out.psi[x]][out.psi[y]] != out.psi[a.join[x][y]]) r.fail("iso.join", {x, y});
      if (rebuilt.base.meet[out.psi[x]][out.psi[y]] != out.psi[a.meet[x][y]]) r.fail("iso.meet", {x, y});
      if (rebuilt.base.mul[out.psi[x]][out.psi[y]] != out.psi[a.mul[x][y]]) r.fail("iso.mul", {x, y});
      if (rebuilt.base.imp[out.psi[x]][out.psi[y]] != out.psi[a.imp[x][y]]) r.fail("iso.imp", {x, y});
    }
  }
  return out;
}

// forall(x v y) = forall x v forall y: valid on every monadic BL-chain,
// refutable on functional algebras over a two-point domain.
inline bool check_chain_variety_identity(const MonadicBLAlgebra& m) {
  validate_shape(m);
  for (int x = 0; x < m.base.size; ++x)
    for (int y = 0; y < m.base.size; ++y)
      if (m.q.forall[m.base.join[x][y]] != m.base.join[m.q.forall[x]][m.q.forall[y]]) return false;
  return true;
}

// forall(x * forall y) = forall x * forall y: valid on every functional
// monadic BL-algebra.
inline bool check_functional_variety_identity(const MonadicBLAlgebra& m) {
  validate_shape(m);
  for (int x = 0; x < m.base.size; ++x)
    for (int y = 0; y < m.base.size; ++y) {
      int fy = m.q.forall[y];
      if (m.q.forall[m.base.mul[x][fy]] != m.base.mul[m.q.forall[x]][fy]) return false;
    }
  return true;
}

// All block compositions for chains of the given total carrier size, in
// lexicographic order: a chain of size n splits its n-1 non-top elements
// into consecutive components of sizes >= 1, and each component plus the
// top is a block of size >= 2.
inline std::vector<std::vector<int>> all_block_compositions(int size) {
  if (size < 1) throw invalid_parameter("chain size must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      acc.push_back(part + 1);
      self(self, remaining - part);
      acc.pop_back();
    }
  };
  rec(rec, size - 1);
  return out;
}

// Every monadic BL-chain with carrier size <= max_size, in canonical order:
// size ascending, block composition lexicographic, then the fixed subset of
// inner indices as an ascending bitmask.
inline std::vector<MonadicBLAlgebra> enumerate_monadic_chains(int max_size) {
  if (max_size < 1) throw invalid_parameter("chain size bound must be positive");
  std::vector<MonadicBLAlgebra> out;
  for (int n = 1; n <= max_size; ++n)
    for (const auto& blocks : all_block_compositions(n)) {
      int r = static_cast<int>(blocks.size());
      int inner = r >= 1 ? r - 1 : 0;
      for (Mask mask = 0; mask < (Mask{1} << inner); ++mask) {
        IndexChainSpec spec;
        spec.blocks = blocks;
        spec.fixed.push_back(0);
        for (int i = 1; i < r; ++i)
          if (mask_has(mask, i - 1)) spec.fixed.push_back(i);
        if (r >= 1) spec.fixed.push_back(r);
        out.push_back(build_chain(spec));
      }
    }
  return out;
}

// Three independent routes to the monadic structures on an ordinal sum:
// the relatively complete subalgebra enumeration, the raw table search,
// and the fixed-subset construction. All must produce the same set, of
// size 2^(r-1) for r blocks.
inline Report crossvalidate_enumeration(const std::vector<int>& blocks, int size_bound = 6) {
  int total = 1;
  for (int b : blocks) total += b - 1;
  if (total > size_bound)
    throw invalid_parameter("carrier size " + std::to_string(total) +
                            " exceeds the table search bound " + std::to_string(size_bound));
  int r = static_cast<int>(blocks.size());
  if (r == 0) throw invalid_parameter("at least one block is needed");

  FiniteBLAlgebra base = ordinal_sum({blocks});
  auto via_subalgebras = std::async(std::launch::async,
                                    [&base] { return enumerate_monadic_structures(base); });
  auto via_tables = std::async(std::launch::async, [&base, size_bound] {
    return brute_force_monadic_structures(base, size_bound);
  });
  std::vector<QuantifierPair> via_fixed_sets;
  for (Mask mask = 0; mask < (Mask{1} << (r - 1)); ++mask) {
    IndexChainSpec spec;
    spec.blocks = blocks;
    spec.fixed.push_back(0);
    for (int i = 1; i < r; ++i)
      if (mask_has(mask, i - 1)) spec.fixed.push_back(i);
    spec.fixed.push_back(r);
    via_fixed_sets.push_back(build_chain(spec).q);
  }
  std::sort(via_fixed_sets.begin(), via_fixed_sets.end());

  std::vector<QuantifierPair> a = via_subalgebras.get();
  std::vector<QuantifierPair> b = via_tables.get();

  Report rep;
  ++rep.checks;
  if (a != b) rep.fail("crossvalidate.table-search", {}, "subalgebra route != table search");
  ++rep.checks;
  if (a != via_fixed_sets)
    rep.fail("crossvalidate.fixed-sets", {}, "subalgebra route != fixed-subset construction");
  ++rep.checks;
  long long expected = 1LL << (r - 1);
  if (static_cast<long long>(a.size()) != expected)
    rep.fail("crossvalidate.count", {r},
             std::to_string(a.size()) + " structures, expected " + std::to_string(expected));
  return rep;
}

}  // namespace mbl
