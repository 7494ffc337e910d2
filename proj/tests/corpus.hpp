#pragma once

// Shared fixtures: the two worked examples, the functional squares, and the
// enumerated families that several suites iterate over.

#include <vector>

#include "mbl/algebra.hpp"
#include "mbl/chains.hpp"
#include "mbl/core.hpp"
#include "mbl/monadic.hpp"

namespace fixtures {

using namespace mbl;

// the four-element chain 0_1 < 1/2_1 < 0_2 < 1 with forall collapsing the
// second block onto 1/2_1; the standard counterexample to forall(x*x) =
// forall x * forall x
inline MonadicBLAlgebra remark_chain() { return build_chain({{3, 2}, {0, 2}}); }

// the five-element Heyting algebra 0 < a < b,c < 1 (b and c incomparable)
// with the quantifier pair that satisfies H1..H5 but breaks the join
// distribution equation; it is a valid BL-algebra that is not monadic
inline MonadicBLAlgebra heyting_counterexample() {
  MonadicBLAlgebra m;
  m.base.size = 5;
  m.base.labels = {"0", "a", "b", "c", "1"};
  m.base.join = {{0, 1, 2, 3, 4},
                 {1, 1, 2, 3, 4},
                 {2, 2, 2, 4, 4},
                 {3, 3, 4, 3, 4},
                 {4, 4, 4, 4, 4}};
  m.base.meet = {{0, 0, 0, 0, 0},
                 {0, 1, 1, 1, 1},
                 {0, 1, 2, 1, 2},
                 {0, 1, 1, 3, 3},
                 {0, 1, 2, 3, 4}};
  m.base.mul = m.base.meet;
  m.base.imp = {{4, 4, 4, 4, 4},
                {0, 4, 4, 4, 4},
                {0, 3, 4, 3, 4},
                {0, 2, 2, 4, 4},
                {0, 1, 2, 3, 4}};
  m.q.forall = {0, 0, 0, 3, 4};
  m.q.exists = {0, 3, 4, 3, 4};
  return m;
}

inline MonadicBLAlgebra functional_square(int k, int worlds) {
  return build_functional(make_mv_chain(k), worlds).algebra;
}

// every monadic chain of size <= 5, both functional squares, and the two
// worked examples
inline std::vector<MonadicBLAlgebra> corpus() {
  std::vector<MonadicBLAlgebra> out = enumerate_monadic_chains(5);
  out.push_back(functional_square(2, 2));
  out.push_back(functional_square(3, 2));
  out.push_back(remark_chain());
  out.push_back(heyting_counterexample());
  return out;
}

// the corpus members that satisfy M1..M5 (the Heyting counterexample fails
// M4, so the lemmas whose hypotheses include the monadic axioms skip it)
inline std::vector<MonadicBLAlgebra> mbl_corpus() {
  std::vector<MonadicBLAlgebra> out;
  for (auto& m : corpus())
    if (check_mbl_axioms(m).ok()) out.push_back(std::move(m));
  return out;
}

}  // namespace fixtures
