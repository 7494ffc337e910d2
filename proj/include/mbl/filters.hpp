#pragma once

// Filters, congruences and the lattice correspondences between them.
// Filters are bitsets over the carrier: upward closed, closed under *, and
// containing the top; monadic filters are additionally closed under the
// universal quantifier. Congruences are partitions compatible with the
// operations. On monadic algebras the four lattices (monadic congruences,
// monadic filters, filters of the quantifier image, congruences of that
// image) are isomorphic, and this module constructs the witnessing maps.

#include <algorithm>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "core.hpp"
#include "monadic.hpp"

namespace mbl {

struct FilterSet {
  Mask bits = 0;
  bool monadic = false;
};

inline bool is_filter(const FiniteBLAlgebra& a, Mask m) {
  if (!mask_has(m, a.top())) return false;
  for (int x = 0; x < a.size; ++x) {
    if (!mask_has(m, x)) continue;
    for (int y = 0; y < a.size; ++y) {
      if (mask_has(m, y) && !mask_has(m, a.mul[x][y])) return false;
      if (a.leq(x, y) && !mask_has(m, y)) return false;
    }
  }
  return true;
}

inline bool is_monadic_filter(const MonadicBLAlgebra& m, Mask f) {
  if (!is_filter(m.base, f)) return false;
  for (int x = 0; x < m.base.size; ++x)
    if (mask_has(f, x) && !mask_has(f, m.q.forall[x])) return false;
  return true;
}

// Smallest filter containing the given elements: close under * first (the
// product set is finite and only shrinks element values), then close upward.
inline Mask generated_filter(const FiniteBLAlgebra& a, Mask seed) {
  Mask prods = seed | mask_bit(a.top());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < a.size; ++x) {
      if (!mask_has(prods, x)) continue;
      for (int y = 0; y < a.size; ++y) {
        if (!mask_has(prods, y)) continue;
        int p = a.mul[x][y];
        if (!mask_has(prods, p)) {
          prods |= mask_bit(p);
          grew = true;
        }
      }
    }
  }
  Mask out = 0;
  for (int x = 0; x < a.size; ++x)
    for (int s = 0; s < a.size; ++s)
      if (mask_has(prods, s) && a.leq(s, x)) {
        out |= mask_bit(x);
        break;
      }
  return out;
}

inline Mask generated_filter(const FiniteBLAlgebra& a, const std::vector<int>& elements) {
  return generated_filter(a, mask_of(elements));
}

// Smallest monadic filter containing the elements, computed as a direct
// fixpoint under upward closure, products and the universal quantifier.
// This coincides with the plain filter generated by the forall-values of
// the seed; tests pin that equality down.
inline Mask generated_monadic_filter(const MonadicBLAlgebra& m, Mask seed) {
  Mask cur = seed | mask_bit(m.base.top());
  bool grew = true;
  while (grew) {
    grew = false;
    Mask next = cur;
    for (int x = 0; x < m.base.size; ++x) {
      if (!mask_has(cur, x)) continue;
      next |= mask_bit(m.q.forall[x]);
      for (int y = 0; y < m.base.size; ++y) {
        if (mask_has(cur, y)) next |= mask_bit(m.base.mul[x][y]);
        if (m.base.leq(x, y)) next |= mask_bit(y);
      }
    }
    if (next != cur) {
      cur = next;
      grew = true;
    }
  }
  return cur;
}

inline Mask generated_monadic_filter(const MonadicBLAlgebra& m, const std::vector<int>& elements) {
  return generated_monadic_filter(m, mask_of(elements));
}

namespace detail {

inline void require_enumerable(int n, const char* what) {
  if (n > 16)
    throw invalid_parameter(std::string(what) + " enumeration is limited to 16 elements");
}

}  // namespace detail

// All filters, sorted by size then by mask value.
inline std::vector<Mask> all_filters(const FiniteBLAlgebra& a) {
  detail::require_enumerable(a.size, "filter");
  std::vector<Mask> out;
  int n = a.size;
  Mask topbit = mask_bit(a.top());
  // rest ranges over subsets of 0..n-2; the top is always included
  for (Mask rest = 0; rest < (Mask{1} << (n - 1)); ++rest) {
    Mask m = rest | topbit;
    if (is_filter(a, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    int sx = mask_size(x), sy = mask_size(y);
    return sx != sy ? sx < sy : x < y;
  });
  return out;
}

inline std::vector<Mask> all_monadic_filters(const MonadicBLAlgebra& m) {
  std::vector<Mask> out;
  for (Mask f : all_filters(m.base))
    if (is_monadic_filter(m, f)) out.push_back(f);
  return out;
}

// ---- congruences -----------------------------------------------------------

// Partition of the carrier; block ids are assigned by first occurrence, so
// equal partitions have equal block_of vectors.
struct CongruenceRel {
  std::vector<int> block_of;
  int blocks = 0;

  bool operator==(const CongruenceRel& o) const { return block_of == o.block_of; }
  bool refines(const CongruenceRel& o) const {
    // every block of *this lies inside one block of o
    for (size_t x = 0; x < block_of.size(); ++x)
      for (size_t y = x + 1; y < block_of.size(); ++y)
        if (block_of[x] == block_of[y] && o.block_of[x] != o.block_of[y]) return false;
    return true;
  }
};

inline CongruenceRel canonical_partition(std::vector<int> raw) {
  CongruenceRel rel;
  rel.block_of.assign(raw.size(), -1);
  std::vector<int> seen;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), raw[i]);
    if (it == seen.end()) {
      seen.push_back(raw[i]);
      rel.block_of[i] = static_cast<int>(seen.size()) - 1;
    } else {
      rel.block_of[i] = static_cast<int>(it - seen.begin());
    }
  }
  rel.blocks = static_cast<int>(seen.size());
  return rel;
}

// Relation a ~ b iff (a -> b) * (b -> a) lies in F. For a filter this is an
// equivalence; compatibility with the operations is a separate check so
// that non-monadic filters can be diagnosed rather than rejected blindly.
inline CongruenceRel congruence_of_filter(const FiniteBLAlgebra& a, Mask f) {
  if (!is_filter(a, f)) throw precondition_error("congruence_of_filter needs a filter");
  int n = a.size;
  std::vector<int> raw(n, -1);
  for (int x = 0; x < n; ++x) {
    if (raw[x] >= 0) continue;
    raw[x] = x;
    for (int y = x + 1; y < n; ++y)
      if (raw[y] < 0 && mask_has(f, a.mul[a.imp[x][y]][a.imp[y][x]])) raw[y] = x;
  }
  return canonical_partition(raw);
}

inline Mask filter_of_congruence(const CongruenceRel& rel, int top) {
  Mask m = 0;
  for (size_t x = 0; x < rel.block_of.size(); ++x)
    if (rel.block_of[x] == rel.block_of[top]) m |= mask_bit(static_cast<int>(x));
  return m;
}

// Compatibility report of a partition with the given operation tables.
inline Report check_congruence(const std::vector<std::pair<std::string, const std::vector<std::vector<int>>*>>& binary,
                               const std::vector<std::pair<std::string, const std::vector<int>*>>& unary,
                               const CongruenceRel& rel) {
  Report r;
  int n = static_cast<int>(rel.block_of.size());
  for (const auto& [name, table] : binary) {
    std::vector<std::vector<int>> image(rel.blocks, std::vector<int>(rel.blocks, -1));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        ++r.checks;
        int& slot = image[rel.block_of[x]][rel.block_of[y]];
        int v = rel.block_of[(*table)[x][y]];
        if (slot < 0)
          slot = v;
        else if (slot != v)
          r.fail("congruence." + name, {x, y}, "class of " + name + " result differs");
      }
  }
  for (const auto& [name, table] : unary) {
    std::vector<int> image(rel.blocks, -1);
    for (int x = 0; x < n; ++x) {
      ++r.checks;
      int& slot = image[rel.block_of[x]];
      int v = rel.block_of[(*table)[x]];
      if (slot < 0)
        slot = v;
      else if (slot != v)
        r.fail("congruence." + name, {x}, "class of " + name + " result differs");
    }
  }
  return r;
}

inline Report check_congruence(const FiniteBLAlgebra& a, const CongruenceRel& rel) {
  return check_congruence({{"join", &a.join}, {"meet", &a.meet}, {"mul", &a.mul}, {"imp", &a.imp}},
                          {}, rel);
}

inline Report check_congruence(const MonadicBLAlgebra& m, const CongruenceRel& rel) {
  return check_congruence(
      {{"join", &m.base.join}, {"meet", &m.base.meet}, {"mul", &m.base.mul}, {"imp", &m.base.imp}},
      {{"forall", &m.q.forall}, {"exists", &m.q.exists}}, rel);
}

// All congruences by exhaustive partition search, finest first. The
// partition count grows as the Bell numbers, hence the small bound.
inline std::vector<CongruenceRel> all_congruences(
    const std::vector<const std::vector<std::vector<int>>*>& binary,
    const std::vector<const std::vector<int>*>& unary, int n) {
  if (n > 10) throw invalid_parameter("congruence enumeration is limited to 10 elements");
  std::vector<CongruenceRel> out;
  std::vector<int> s(n, 0);

  auto compatible = [&]() {
    CongruenceRel rel = canonical_partition(s);
    for (const auto* table : binary) {
      std::vector<std::vector<int>> image(rel.blocks, std::vector<int>(rel.blocks, -1));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int& slot = image[rel.block_of[x]][rel.block_of[y]];
          int v = rel.block_of[(*table)[x][y]];
          if (slot < 0)
            slot = v;
          else if (slot != v)
            return;
        }
    }
    for (const auto* table : unary) {
      std::vector<int> image(rel.blocks, -1);
      for (int x = 0; x < n; ++x) {
        int& slot = image[rel.block_of[x]];
        int v = rel.block_of[(*table)[x]];
        if (slot < 0)
          slot = v;
        else if (slot != v)
          return;
      }
    }
    out.push_back(std::move(rel));
  };

  // restricted growth strings enumerate set partitions exactly once
  auto rec = [&](auto&& self, int i, int maxid) -> void {
    if (i == n) {
      compatible();
      return;
    }
    for (int v = 0; v <= maxid + 1; ++v) {
      s[i] = v;
      self(self, i + 1, std::max(maxid, v));
    }
  };
  rec(rec, 1, 0);

  std::sort(out.begin(), out.end(), [](const CongruenceRel& a, const CongruenceRel& b) {
    if (a.blocks != b.blocks) return a.blocks > b.blocks;
    return a.block_of < b.block_of;
  });
  return out;
}

inline std::vector<CongruenceRel> all_congruences(const FiniteBLAlgebra& a) {
  return all_congruences({&a.join, &a.meet, &a.mul, &a.imp}, {}, a.size);
}

inline std::vector<CongruenceRel> all_congruences(const MonadicBLAlgebra& m) {
  return all_congruences({&m.base.join, &m.base.meet, &m.base.mul, &m.base.imp},
                         {&m.q.forall, &m.q.exists}, m.base.size);
}

// ---- quotients -------------------------------------------------------------

namespace detail {

// Renumbers partition blocks so the block of 0 gets index 0, the block of
// the old top the last index, and middle blocks follow their least element.
inline std::vector<int> quotient_order(const CongruenceRel& rel, int top) {
  int n = static_cast<int>(rel.block_of.size());
  std::vector<int> min_elem(rel.blocks, n);
  for (int x = 0; x < n; ++x) min_elem[rel.block_of[x]] = std::min(min_elem[rel.block_of[x]], x);
  std::vector<int> order;
  for (int b = 0; b < rel.blocks; ++b)
    if (b != rel.block_of[0] && b != rel.block_of[top]) order.push_back(b);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return min_elem[x] < min_elem[y]; });
  std::vector<int> newid(rel.blocks, -1);
  int next = 0;
  newid[rel.block_of[0]] = next++;
  for (int b : order) newid[b] = next++;
  if (newid[rel.block_of[top]] < 0) newid[rel.block_of[top]] = next++;
  return newid;
}

}  // namespace detail

struct QuotientBL {
  FiniteBLAlgebra algebra;
  std::vector<int> block_of;  // carrier element -> quotient element
};

inline QuotientBL quotient_bl(const FiniteBLAlgebra& a, Mask f) {
  if (!is_filter(a, f)) throw precondition_error("quotient needs a filter");
  CongruenceRel rel = congruence_of_filter(a, f);
  Report compat = check_congruence(a, rel);
  if (!compat.ok())
    throw precondition_error("filter does not induce a congruence: " + compat.failures[0].law);

  std::vector<int> newid = detail::quotient_order(rel, a.top());
  int m = rel.blocks;
  QuotientBL q;
  q.block_of.resize(a.size);
  for (int x = 0; x < a.size; ++x) q.block_of[x] = newid[rel.block_of[x]];

  std::vector<int> rep(m, -1);
  for (int x = 0; x < a.size; ++x)
    if (rep[q.block_of[x]] < 0) rep[q.block_of[x]] = x;

  FiniteBLAlgebra& b = q.algebra;
  b.size = m;
  b.join.assign(m, std::vector<int>(m));
  b.meet.assign(m, std::vector<int>(m));
  b.mul.assign(m, std::vector<int>(m));
  b.imp.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      b.join[i][j] = q.block_of[a.join[rep[i]][rep[j]]];
      b.meet[i][j] = q.block_of[a.meet[rep[i]][rep[j]]];
      b.mul[i][j] = q.block_of[a.mul[rep[i]][rep[j]]];
      b.imp[i][j] = q.block_of[a.imp[rep[i]][rep[j]]];
    }
  b.labels.resize(m);
  for (int i = 0; i < m; ++i) b.labels[i] = "[" + a.label(rep[i]) + "]";
  return q;
}

struct QuotientMBL {
  MonadicBLAlgebra algebra;
  std::vector<int> block_of;
};

inline QuotientMBL quotient(const MonadicBLAlgebra& m, Mask f) {
  if (!is_monadic_filter(m, f)) throw precondition_error("quotient needs a monadic filter");
  QuotientBL base = quotient_bl(m.base, f);
  CongruenceRel rel = canonical_partition(base.block_of);
  Report compat = check_congruence(m, rel);
  if (!compat.ok())
    throw precondition_error("monadic filter congruence is not quantifier compatible");

  QuotientMBL q;
  q.block_of = base.block_of;
  q.algebra.base = std::move(base.algebra);
  int n = q.algebra.base.size;
  std::vector<int> rep(n, -1);
  for (int x = 0; x < m.base.size; ++x)
    if (rep[q.block_of[x]] < 0) rep[q.block_of[x]] = x;
  q.algebra.q.forall.resize(n);
  q.algebra.q.exists.resize(n);
  for (int i = 0; i < n; ++i) {
    q.algebra.q.forall[i] = q.block_of[m.q.forall[rep[i]]];
    q.algebra.q.exists[i] = q.block_of[m.q.exists[rep[i]]];
  }
  return q;
}

// ---- the four-lattice correspondence ----------------------------------------

struct LatticeCorrespondence {
  std::vector<CongruenceRel> monadic_congruences;  // of the monadic algebra
  std::vector<Mask> monadic_filters;               // of the monadic algebra
  std::vector<int> image;                          // carrier of the quantifier image
  std::vector<Mask> image_filters;                 // filters of the image subalgebra
  std::vector<CongruenceRel> image_congruences;    // congruences of the image subalgebra
  Report report;
};

// Builds all four lattices independently and verifies that the canonical
// maps between neighbouring ones are mutually inverse order isomorphisms:
// congruence <-> block of top / induced relation, monadic filter <->
// restriction to the image / generated monadic filter.
inline LatticeCorrespondence check_lattice_isomorphisms(const MonadicBLAlgebra& m) {
  LatticeCorrespondence res;
  const FiniteBLAlgebra& A = m.base;
  res.monadic_congruences = all_congruences(m);
  res.monadic_filters = all_monadic_filters(m);
  res.image = quantifier_image(m);
  FiniteBLAlgebra sa = subalgebra(A, res.image);
  res.image_filters = all_filters(sa);
  res.image_congruences = all_congruences(sa);
  Report& r = res.report;

  auto find_mask = [](const std::vector<Mask>& list, Mask x) {
    return std::find(list.begin(), list.end(), x) != list.end();
  };

  if (res.monadic_congruences.size() != res.monadic_filters.size() ||
      res.monadic_filters.size() != res.image_filters.size() ||
      res.image_filters.size() != res.image_congruences.size())
    r.fail("lattice-iso.sizes", {},
           std::to_string(res.monadic_congruences.size()) + ", " +
               std::to_string(res.monadic_filters.size()) + ", " +
               std::to_string(res.image_filters.size()) + ", " +
               std::to_string(res.image_congruences.size()));

  // leg 1: monadic congruences <-> monadic filters
  std::vector<Mask> cong_to_filter;
  for (const auto& theta : res.monadic_congruences) {
    Mask f = filter_of_congruence(theta, A.top());
    cong_to_filter.push_back(f);
    ++r.checks;
    if (!find_mask(res.monadic_filters, f)) r.fail("lattice-iso.cong-to-filter", {}, "image not a monadic filter");
    CongruenceRel back = congruence_of_filter(A, f);
    if (!(back == theta)) r.fail("lattice-iso.cong-filter-inverse", {});
  }
  for (Mask f : res.monadic_filters) {
    CongruenceRel theta = congruence_of_filter(A, f);
    ++r.checks;
    if (std::find(res.monadic_congruences.begin(), res.monadic_congruences.end(), theta) ==
        res.monadic_congruences.end())
      r.fail("lattice-iso.filter-to-cong", {}, "induced relation is not a monadic congruence");
    if (filter_of_congruence(theta, A.top()) != f) r.fail("lattice-iso.filter-cong-inverse", {});
  }
  for (size_t i = 0; i < res.monadic_congruences.size(); ++i)
    for (size_t j = 0; j < res.monadic_congruences.size(); ++j) {
      ++r.checks;
      bool refine = res.monadic_congruences[i].refines(res.monadic_congruences[j]);
      bool subset = (cong_to_filter[i] & ~cong_to_filter[j]) == 0;
      if (refine != subset) r.fail("lattice-iso.cong-filter-order", {static_cast<int>(i), static_cast<int>(j)});
    }

  // leg 2: monadic filters <-> filters of the quantifier image
  std::vector<int> to_image_index(A.size, -1);
  for (size_t i = 0; i < res.image.size(); ++i) to_image_index[res.image[i]] = static_cast<int>(i);
  std::vector<Mask> filter_to_image;
  for (Mask f : res.monadic_filters) {
    Mask restricted = 0;
    for (size_t i = 0; i < res.image.size(); ++i)
      if (mask_has(f, res.image[i])) restricted |= mask_bit(static_cast<int>(i));
    filter_to_image.push_back(restricted);
    ++r.checks;
    if (!find_mask(res.image_filters, restricted))
      r.fail("lattice-iso.filter-restrict", {}, "restriction is not a filter of the image");
    Mask seed = 0;
    for (size_t i = 0; i < res.image.size(); ++i)
      if (mask_has(restricted, static_cast<int>(i))) seed |= mask_bit(res.image[i]);
    if (generated_monadic_filter(m, seed) != f) r.fail("lattice-iso.filter-restrict-inverse", {});
  }
  for (Mask g : res.image_filters) {
    Mask seed = 0;
    for (size_t i = 0; i < res.image.size(); ++i)
      if (mask_has(g, static_cast<int>(i))) seed |= mask_bit(res.image[i]);
    Mask lifted = generated_monadic_filter(m, seed);
    ++r.checks;
    if (!find_mask(res.monadic_filters, lifted)) r.fail("lattice-iso.filter-lift", {});
    Mask back = 0;
    for (size_t i = 0; i < res.image.size(); ++i)
      if (mask_has(lifted, res.image[i])) back |= mask_bit(static_cast<int>(i));
    if (back != g) r.fail("lattice-iso.filter-lift-inverse", {});
  }
  for (size_t i = 0; i < res.monadic_filters.size(); ++i)
    for (size_t j = 0; j < res.monadic_filters.size(); ++j) {
      ++r.checks;
      bool sub = (res.monadic_filters[i] & ~res.monadic_filters[j]) == 0;
      bool sub_img = (filter_to_image[i] & ~filter_to_image[j]) == 0;
      if (sub != sub_img) r.fail("lattice-iso.filter-image-order", {static_cast<int>(i), static_cast<int>(j)});
    }

  // leg 3: filters of the image <-> congruences of the image
  std::vector<CongruenceRel> image_filter_to_cong;
  for (Mask g : res.image_filters) {
    CongruenceRel theta = congruence_of_filter(sa, g);
    image_filter_to_cong.push_back(theta);
    ++r.checks;
    if (std::find(res.image_congruences.begin(), res.image_congruences.end(), theta) ==
        res.image_congruences.end())
      r.fail("lattice-iso.image-filter-to-cong", {});
    if (filter_of_congruence(theta, sa.top()) != g) r.fail("lattice-iso.image-cong-inverse", {});
  }
  for (const auto& theta : res.image_congruences) {
    Mask g = filter_of_congruence(theta, sa.top());
    ++r.checks;
    if (!find_mask(res.image_filters, g)) r.fail("lattice-iso.image-cong-to-filter", {});
    if (!(congruence_of_filter(sa, g) == theta)) r.fail("lattice-iso.image-filter-inverse", {});
  }
  for (size_t i = 0; i < res.image_filters.size(); ++i)
    for (size_t j = 0; j < res.image_filters.size(); ++j) {
      ++r.checks;
      bool sub = (res.image_filters[i] & ~res.image_filters[j]) == 0;
      bool refine = image_filter_to_cong[i].refines(image_filter_to_cong[j]);
      if (sub != refine) r.fail("lattice-iso.image-order", {static_cast<int>(i), static_cast<int>(j)});
    }

  return res;
}

// Atoms of a finite inclusion lattice of masks: minimal nontrivial members.
inline std::vector<Mask> lattice_atoms(const std::vector<Mask>& filters, Mask trivial) {
  std::vector<Mask> atoms;
  for (Mask f : filters) {
    if (f == trivial) continue;
    bool atom = true;
    for (Mask g : filters) {
      if (g == trivial || g == f) continue;
      if ((g & ~f) == 0) {
        atom = false;
        break;
      }
    }
    if (atom) atoms.push_back(f);
  }
  return atoms;
}

// Subdirect irreducibility via the unique atom of the monadic filter
// lattice, cross-checked on the quantifier image.
inline bool is_subdirectly_irreducible(const MonadicBLAlgebra& m) {
  Mask trivial = mask_bit(m.base.top());
  auto atoms = lattice_atoms(all_monadic_filters(m), trivial);
  FiniteBLAlgebra sa = subalgebra(m.base, quantifier_image(m));
  auto image_atoms = lattice_atoms(all_filters(sa), mask_bit(sa.top()));
  if (atoms.size() != image_atoms.size())
    throw error("internal inconsistency: filter lattice atoms differ from the image's");
  return atoms.size() == 1;
}

inline bool is_simple(const MonadicBLAlgebra& m) {
  size_t count = all_monadic_filters(m).size();
  FiniteBLAlgebra sa = subalgebra(m.base, quantifier_image(m));
  size_t image_count = all_filters(sa).size();
  if (count != image_count)
    throw error("internal inconsistency: monadic filter count differs from the image's");
  return count == 2;
}

// F equals the intersection of the filters generated by F with either
// implication adjoined. Holds in every BL-algebra.
inline bool filter_splitting_holds(const FiniteBLAlgebra& a, Mask f, int x, int y) {
  if (!is_filter(a, f)) throw precondition_error("filter splitting needs a filter");
  Mask left = generated_filter(a, f | mask_bit(a.imp[x][y]));
  Mask right = generated_filter(a, f | mask_bit(a.imp[y][x]));
  return (left & right) == f;
}

inline bool is_prime_filter(const FiniteBLAlgebra& a, Mask f) {
  if (!is_filter(a, f)) return false;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (!mask_has(f, a.imp[x][y]) && !mask_has(f, a.imp[y][x])) return false;
  return true;
}

// Largest filter avoiding C = { a v forall r : r != top }, which is prime
// whenever the quantifier image is totally ordered. Ties on size are broken
// towards the smallest mask value, so the result is deterministic.
inline Mask find_prime_filter_avoiding(const MonadicBLAlgebra& m, int a) {
  const FiniteBLAlgebra& A = m.base;
  if (a < 0 || a >= A.size) throw invalid_parameter("element out of range");
  if (a == A.top()) throw invalid_parameter("the top element admits no avoiding filter");
  if (!detail::totally_ordered(A, quantifier_image(m)))
    throw precondition_error("prime filter construction needs a totally ordered quantifier image");

  Mask avoid = 0;
  for (int r = 0; r < A.size; ++r)
    if (r != A.top()) avoid |= mask_bit(A.join[a][m.q.forall[r]]);

  Mask best = 0;
  bool found = false;
  for (Mask f : all_filters(A)) {
    if (f & avoid) continue;
    if (!found || mask_size(f) > mask_size(best) ||
        (mask_size(f) == mask_size(best) && f < best)) {
      best = f;
      found = true;
    }
  }
  if (!found) throw error("internal inconsistency: no filter avoids the join set");
  if (!is_prime_filter(A, best))
    throw error("internal inconsistency: maximal avoiding filter is not prime");
  return best;
}

struct SubdirectFactor {
  Mask prime = 0;
  std::vector<int> witnesses;  // elements whose avoiding filter this is
  FiniteBLAlgebra quotient;
  std::vector<int> block_of;
};

struct SubdirectResult {
  std::vector<SubdirectFactor> factors;
  Report report;
};

// Subdirect representation through the prime filters avoiding each a != 1:
// the factors are totally ordered, the primes intersect to the trivial
// filter, and the quantifier image embeds into every factor.
inline SubdirectResult subdirect_representation(const MonadicBLAlgebra& m) {
  const FiniteBLAlgebra& A = m.base;
  SubdirectResult res;
  Report& r = res.report;
  if (A.size == 1) return res;

  for (int a = 0; a < A.size - 1; ++a) {
    Mask p = find_prime_filter_avoiding(m, a);
    bool known = false;
    for (auto& f : res.factors)
      if (f.prime == p) {
        f.witnesses.push_back(a);
        known = true;
        break;
      }
    if (known) continue;
    QuotientBL q = quotient_bl(A, p);
    res.factors.push_back({p, {a}, std::move(q.algebra), std::move(q.block_of)});
  }

  Mask meet_all = ~Mask{0};
  for (const auto& f : res.factors) {
    meet_all &= f.prime;
    ++r.checks;
    if (!classify(f.quotient).chain) r.fail("subdirect.factor-chain", f.witnesses);
  }
  ++r.checks;
  if (meet_all != mask_bit(A.top()))
    r.fail("subdirect.trivial-intersection", {}, "prime filters do not intersect to {1}");

  for (int x = 0; x < A.size; ++x)
    for (int y = x + 1; y < A.size; ++y) {
      ++r.checks;
      bool separated = false;
      for (const auto& f : res.factors)
        if (f.block_of[x] != f.block_of[y]) {
          separated = true;
          break;
        }
      if (!separated) r.fail("subdirect.separation", {x, y});
    }

  std::vector<int> image = quantifier_image(m);
  for (const auto& f : res.factors)
    for (size_t i = 0; i < image.size(); ++i)
      for (size_t j = i + 1; j < image.size(); ++j) {
        ++r.checks;
        if (f.block_of[image[i]] == f.block_of[image[j]])
          r.fail("subdirect.image-embedding", {image[i], image[j]},
                 "quantifier image elements collapse in a factor");
      }
  return res;
}

}  // namespace mbl
