#pragma once

// Finite BL-algebras as dense operation tables. The carrier is 0..size-1
// with 0 the bottom and size-1 the top element; the lattice order is always
// derived from the meet table (a <= b iff a meet b = a), middle indices
// carry no ordering promise of their own.

#include <algorithm>
#include <string>
#include <vector>

#include "core.hpp"

namespace mbl {

struct FiniteBLAlgebra {
  int size = 0;
  std::vector<std::vector<int>> join, meet, mul, imp;
  std::vector<std::string> labels;  // optional; empty entries fall back to the index

  int bottom() const { return 0; }
  int top() const { return size - 1; }
  bool leq(int a, int b) const { return meet[a][b] == a; }
  int neg(int a) const { return imp[a][0]; }

  std::string label(int a) const {
    if (a >= 0 && a < static_cast<int>(labels.size()) && !labels[a].empty()) return labels[a];
    return std::to_string(a);
  }

  bool same_tables(const FiniteBLAlgebra& other) const {
    return size == other.size && join == other.join && meet == other.meet &&
           mul == other.mul && imp == other.imp;
  }
};

// Block sizes for an ordinal sum of MV-chains. Block i contributes the
// bottom k_i - 1 elements of the k_i element Lukasiewicz chain; the block
// tops are all identified with the single global top.
struct OrdinalSumSpec {
  std::vector<int> blocks;
};

namespace detail {

inline void require_square(const std::vector<std::vector<int>>& t, int n, const std::string& name) {
  if (static_cast<int>(t.size()) != n)
    throw structural_error(name + " table has " + std::to_string(t.size()) + " rows, expected " +
                           std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t[i].size()) != n)
      throw structural_error(name + " row " + std::to_string(i) + " has " +
                             std::to_string(t[i].size()) + " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (t[i][j] < 0 || t[i][j] >= n)
        throw structural_error(name + "[" + std::to_string(i) + "][" + std::to_string(j) +
                               "] = " + std::to_string(t[i][j]) + " is out of range");
  }
}

}  // namespace detail

// Shape validation only; the algebraic laws live in check_bl_axioms.
inline void validate_shape(const FiniteBLAlgebra& a) {
  if (a.size <= 0) throw structural_error("algebra size must be positive");
  if (a.size > 64) throw structural_error("carriers above 64 elements are not supported");
  detail::require_square(a.join, a.size, "join");
  detail::require_square(a.meet, a.size, "meet");
  detail::require_square(a.mul, a.size, "mul");
  detail::require_square(a.imp, a.size, "imp");
  if (!a.labels.empty() && static_cast<int>(a.labels.size()) != a.size)
    throw structural_error("labels length does not match carrier size");
}

inline FiniteBLAlgebra make_one_element() {
  FiniteBLAlgebra a;
  a.size = 1;
  a.join = a.meet = a.mul = a.imp = {{0}};
  a.labels = {"1"};
  return a;
}

// k-element Lukasiewicz chain: i*j = max(0, i+j-(k-1)), i->j = min(k-1, k-1-i+j).
inline FiniteBLAlgebra make_mv_chain(int k) {
  if (k < 1) throw invalid_parameter("mv chain needs at least one element");
  if (k == 1) return make_one_element();
  FiniteBLAlgebra a;
  a.size = k;
  a.join.assign(k, std::vector<int>(k));
  a.meet.assign(k, std::vector<int>(k));
  a.mul.assign(k, std::vector<int>(k));
  a.imp.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      a.join[i][j] = std::max(i, j);
      a.meet[i][j] = std::min(i, j);
      a.mul[i][j] = std::max(0, i + j - (k - 1));
      a.imp[i][j] = std::min(k - 1, k - 1 - i + j);
    }
  a.labels.resize(k);
  for (int i = 0; i < k; ++i) a.labels[i] = fraction_label(i, k - 1);
  return a;
}

// k-element Goedel chain: * is min, i->j is top when i <= j and j otherwise.
inline FiniteBLAlgebra make_godel_chain(int k) {
  if (k < 1) throw invalid_parameter("godel chain needs at least one element");
  if (k == 1) return make_one_element();
  FiniteBLAlgebra a;
  a.size = k;
  a.join.assign(k, std::vector<int>(k));
  a.meet.assign(k, std::vector<int>(k));
  a.mul.assign(k, std::vector<int>(k));
  a.imp.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      a.join[i][j] = std::max(i, j);
      a.meet[i][j] = std::min(i, j);
      a.mul[i][j] = std::min(i, j);
      a.imp[i][j] = i <= j ? k - 1 : j;
    }
  a.labels.resize(k);
  for (int i = 0; i < k; ++i) a.labels[i] = fraction_label(i, k - 1);
  return a;
}

// Ordinal sum of Lukasiewicz blocks. Elements of lower blocks sit below
// elements of higher blocks; the shared top closes the chain. Within a
// block the Lukasiewicz operations apply; across blocks * picks the lower
// argument and -> returns top (when ordered) or the smaller right side.
inline FiniteBLAlgebra ordinal_sum(const OrdinalSumSpec& spec) {
  if (spec.blocks.empty()) throw invalid_parameter("ordinal sum needs at least one block");
  for (int k : spec.blocks)
    if (k < 2) throw invalid_parameter("ordinal sum blocks need at least two elements");

  int r = static_cast<int>(spec.blocks.size());
  std::vector<int> offset(r);
  int n = 0;
  for (int b = 0; b < r; ++b) {
    offset[b] = n;
    n += spec.blocks[b] - 1;
  }
  int top = n;  // one shared top element
  n += 1;
  if (n > 64) throw invalid_parameter("ordinal sum carrier exceeds 64 elements");

  // block index of each element, with the top in a virtual block r
  std::vector<int> blk(n), pos(n);
  for (int b = 0; b < r; ++b)
    for (int p = 0; p < spec.blocks[b] - 1; ++p) {
      blk[offset[b] + p] = b;
      pos[offset[b] + p] = p;
    }
  blk[top] = r;
  pos[top] = 0;

  FiniteBLAlgebra a;
  a.size = n;
  a.join.assign(n, std::vector<int>(n));
  a.meet.assign(n, std::vector<int>(n));
  a.mul.assign(n, std::vector<int>(n));
  a.imp.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.join[x][y] = std::max(x, y);
      a.meet[x][y] = std::min(x, y);
      if (x == top) {
        a.mul[x][y] = y;
      } else if (y == top) {
        a.mul[x][y] = x;
      } else if (blk[x] != blk[y]) {
        a.mul[x][y] = std::min(x, y);
      } else {
        int k = spec.blocks[blk[x]];
        a.mul[x][y] = offset[blk[x]] + std::max(0, pos[x] + pos[y] - (k - 1));
      }
      if (x <= y) {
        a.imp[x][y] = top;
      } else if (blk[x] != blk[y]) {  // covers x == top as well
        a.imp[x][y] = y;
      } else {
        int k = spec.blocks[blk[x]];
        a.imp[x][y] = offset[blk[x]] + (k - 1 - pos[x] + pos[y]);
      }
    }

  a.labels.resize(n);
  for (int e = 0; e < top; ++e) {
    int b = blk[e], k = spec.blocks[b];
    std::string frac = fraction_label(pos[e], k - 1);
    a.labels[e] = r == 1 ? frac : frac + "_" + std::to_string(b + 1);
  }
  a.labels[top] = "1";
  return a;
}

inline FiniteBLAlgebra ordinal_sum(const std::vector<int>& blocks) {
  return ordinal_sum(OrdinalSumSpec{blocks});
}

// Exhaustive check of the BL-algebra laws. Records every failing instance;
// the witness holds the quantified elements in order of appearance.
inline Report check_bl_axioms(const FiniteBLAlgebra& a) {
  validate_shape(a);
  Report r;
  int n = a.size, top = a.top();
  auto val = [&a](int x) { return a.label(x); };

  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (a.join[x][0] != x) r.fail("join-bottom-unit", {x}, val(x) + " v 0 = " + val(a.join[x][0]));
    if (a.meet[x][top] != x) r.fail("meet-top-unit", {x}, val(x) + " ^ 1 = " + val(a.meet[x][top]));
    if (a.join[x][top] != top) r.fail("join-top", {x});
    if (a.meet[x][0] != 0) r.fail("meet-bottom", {x});
    if (a.mul[x][top] != x) r.fail("mul-unit", {x}, val(x) + " * 1 = " + val(a.mul[x][top]));
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (a.join[x][y] != a.join[y][x]) r.fail("join-comm", {x, y});
      if (a.meet[x][y] != a.meet[y][x]) r.fail("meet-comm", {x, y});
      if (a.mul[x][y] != a.mul[y][x]) r.fail("mul-comm", {x, y});
      if (a.join[x][a.meet[x][y]] != x) r.fail("absorption-join", {x, y});
      if (a.meet[x][a.join[x][y]] != x) r.fail("absorption-meet", {x, y});
      bool meet_le = a.meet[x][y] == x;
      bool join_le = a.join[x][y] == y;
      if (meet_le != join_le) r.fail("order-consistency", {x, y});
      if (a.mul[x][a.imp[x][y]] != a.meet[x][y])
        r.fail("divisibility", {x, y},
               val(x) + " ^ " + val(y) + " = " + val(a.meet[x][y]) + " but " + val(x) + " * (" +
                   val(x) + " -> " + val(y) + ") = " + val(a.mul[x][a.imp[x][y]]));
      if (a.join[a.imp[x][y]][a.imp[y][x]] != top)
        r.fail("prelinearity", {x, y},
               "(" + val(x) + " -> " + val(y) + ") v (" + val(y) + " -> " + val(x) + ") = " +
                   val(a.join[a.imp[x][y]][a.imp[y][x]]));
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        ++r.checks;
        if (a.join[a.join[x][y]][z] != a.join[x][a.join[y][z]]) r.fail("join-assoc", {x, y, z});
        if (a.meet[a.meet[x][y]][z] != a.meet[x][a.meet[y][z]]) r.fail("meet-assoc", {x, y, z});
        if (a.mul[a.mul[x][y]][z] != a.mul[x][a.mul[y][z]]) r.fail("mul-assoc", {x, y, z});
        if (a.meet[x][a.join[y][z]] != a.join[a.meet[x][y]][a.meet[x][z]])
          r.fail("distributivity", {x, y, z});
        bool prod_le = a.meet[a.mul[x][y]][z] == a.mul[x][y];
        bool res_le = a.meet[x][a.imp[y][z]] == x;
        if (prod_le != res_le)
          r.fail("residuation", {x, y, z},
                 val(x) + " * " + val(y) + " <= " + val(z) + " is " + (prod_le ? "true" : "false") +
                     " but " + val(x) + " <= " + val(y) + " -> " + val(z) + " is " +
                     (res_le ? "true" : "false"));
      }

  return r;
}

struct Classification {
  bool chain = false;
  bool mv = false;
  bool godel = false;
  bool product = false;
};

// Assumes the BL laws hold; callers verify via check_bl_axioms first.
inline Classification classify(const FiniteBLAlgebra& a) {
  Classification c{true, true, true, true};
  int n = a.size, top = a.top();
  for (int x = 0; x < n; ++x) {
    if (a.neg(a.neg(x)) != x) c.mv = false;
    if (a.mul[x][x] != x) c.godel = false;
    if (a.meet[x][a.neg(x)] != 0) c.product = false;
    for (int y = 0; y < n; ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) c.chain = false;
  }
  if (c.product) {
    for (int x = 0; x < n && c.product; ++x)
      for (int y = 0; y < n && c.product; ++y)
        for (int z = 0; z < n; ++z) {
          int cancel = a.imp[a.imp[a.mul[x][z]][a.mul[y][z]]][a.imp[x][y]];
          if (a.imp[a.neg(a.neg(z))][cancel] != top) {
            c.product = false;
            break;
          }
        }
  }
  return c;
}

// All subsets containing bottom and top that are closed under the four
// operations, as sorted element lists ordered by size then by mask value.
inline std::vector<std::vector<int>> enumerate_subalgebras(const FiniteBLAlgebra& a) {
  int n = a.size;
  if (n > 24) throw invalid_parameter("subalgebra enumeration is limited to 24 elements");
  Mask base = mask_bit(0) | mask_bit(a.top());
  std::vector<Mask> found;
  int middle = std::max(0, n - 2);
  for (Mask choice = 0; choice < (Mask{1} << middle); ++choice) {
    Mask m = base | (choice << 1);
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!mask_has(m, x)) continue;
      for (int y = 0; y < n; ++y) {
        if (!mask_has(m, y)) continue;
        if (!mask_has(m, a.join[x][y]) || !mask_has(m, a.meet[x][y]) ||
            !mask_has(m, a.mul[x][y]) || !mask_has(m, a.imp[x][y])) {
          closed = false;
          break;
        }
      }
    }
    if (closed) found.push_back(m);
  }
  std::sort(found.begin(), found.end(), [](Mask x, Mask y) {
    int sx = mask_size(x), sy = mask_size(y);
    return sx != sy ? sx < sy : x < y;
  });
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(mask_elements(m));
  return out;
}

// Restriction of the algebra to a closed subset, reindexed in ascending
// carrier order so bottom and top land on 0 and size-1 again.
inline FiniteBLAlgebra subalgebra(const FiniteBLAlgebra& a, const std::vector<int>& elements) {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  int m = static_cast<int>(elems.size());
  if (m == 0) throw invalid_parameter("subalgebra needs a nonempty carrier");
  if (elems.front() != 0 || elems.back() != a.top())
    throw precondition_error("subalgebra carrier must contain bottom and top");
  std::vector<int> index(a.size, -1);
  for (int i = 0; i < m; ++i) index[elems[i]] = i;

  FiniteBLAlgebra s;
  s.size = m;
  s.join.assign(m, std::vector<int>(m));
  s.meet.assign(m, std::vector<int>(m));
  s.mul.assign(m, std::vector<int>(m));
  s.imp.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int x = elems[i], y = elems[j];
      int tables[4] = {a.join[x][y], a.meet[x][y], a.mul[x][y], a.imp[x][y]};
      for (int v : tables)
        if (index[v] < 0)
          throw precondition_error("carrier is not closed: " + a.label(x) + ", " + a.label(y) +
                                   " produce " + a.label(v));
      s.join[i][j] = index[tables[0]];
      s.meet[i][j] = index[tables[1]];
      s.mul[i][j] = index[tables[2]];
      s.imp[i][j] = index[tables[3]];
    }
  s.labels.resize(m);
  for (int i = 0; i < m; ++i) s.labels[i] = a.label(elems[i]);
  return s;
}

// Cover pairs (a, b) of the derived order, i.e. a < b with nothing between.
inline std::vector<std::pair<int, int>> cover_edges(const FiniteBLAlgebra& a) {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      if (x == y || !a.leq(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < a.size; ++z) {
        if (z == x || z == y) continue;
        if (a.leq(x, z) && a.leq(z, y)) {
          direct = false;
          break;
        }
      }
      if (direct) covers.emplace_back(x, y);
    }
  return covers;
}

}  // namespace mbl
