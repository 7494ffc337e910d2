#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mbl/algebra.hpp"
#include "mbl/chains.hpp"
#include "mbl/core.hpp"
#include "mbl/monadic.hpp"

using namespace mbl;

TEST_CASE("chains built from an index chain specification", "[chains]") {
  MonadicBLAlgebra m = build_chain({{3, 2}, {0, 2}});
  CHECK(m.base.size == 4);
  CHECK(m.base.labels == std::vector<std::string>{"0_1", "1/2_1", "0_2", "1"});
  CHECK(m.q.forall == std::vector<int>{0, 1, 1, 3});
  CHECK(m.q.exists == std::vector<int>{0, 1, 3, 3});
  CHECK(check_mbl_axioms(m).ok());

  MonadicBLAlgebra g = build_chain({{2, 2, 2}, {0, 3}});
  CHECK(g.base.same_tables(make_godel_chain(4)));
  CHECK(g.q.forall == std::vector<int>{0, 0, 0, 3});
  CHECK(g.q.exists == std::vector<int>{0, 3, 3, 3});

  // all boundaries fixed means identity quantifiers
  MonadicBLAlgebra id = build_chain({{3, 2}, {0, 1, 2}});
  CHECK(id.q.forall == std::vector<int>{0, 1, 2, 3});
  CHECK(id.q.exists == std::vector<int>{0, 1, 2, 3});

  // no blocks at all is the one-element algebra
  MonadicBLAlgebra one = build_chain({{}, {0}});
  CHECK(one.base.size == 1);
}

TEST_CASE("index chain specifications are validated", "[chains]") {
  CHECK_THROWS_AS(build_chain({{3, 1}, {0, 2}}), invalid_parameter);
  CHECK_THROWS_AS(build_chain({{3, 2}, {0, 1}}), invalid_parameter);   // 2 missing
  CHECK_THROWS_AS(build_chain({{3, 2}, {1, 2}}), invalid_parameter);   // 0 missing
  CHECK_THROWS_AS(build_chain({{3, 2}, {0, 2, 2}}), invalid_parameter);
  CHECK_THROWS_AS(build_chain({{3, 2}, {}}), invalid_parameter);
}

TEST_CASE("decomposition recovers the specification", "[chains]") {
  ChainDecomposition d = decompose_chain(fixtures::remark_chain());
  CHECK(d.report.ok());
  CHECK(d.spec == IndexChainSpec{{3, 2}, {0, 2}});
  CHECK(d.psi == std::vector<int>{0, 1, 2, 3});

  ChainDecomposition l3 =
      decompose_chain({make_mv_chain(3), identity_quantifiers(3)});
  CHECK(l3.spec == IndexChainSpec{{3}, {0, 1}});

  ChainDecomposition two =
      decompose_chain({make_mv_chain(2), identity_quantifiers(2)});
  CHECK(two.spec == IndexChainSpec{{2}, {0, 1}});

  ChainDecomposition one = decompose_chain(build_chain({{}, {0}}));
  CHECK(one.spec == IndexChainSpec{{}, {0}});
  CHECK(one.psi == std::vector<int>{0});
}

TEST_CASE("decomposition needs a chain", "[chains]") {
  CHECK_THROWS_WITH(decompose_chain(fixtures::functional_square(2, 2)),
                    "chain decomposition needs a totally ordered algebra");
  CHECK_THROWS_AS(decompose_chain(fixtures::heyting_counterexample()), precondition_error);
}

TEST_CASE("build and decompose are mutually inverse", "[chains]") {
  std::vector<std::vector<int>> block_lists = {{2},      {3},      {4},      {3, 2},
                                               {2, 3},   {2, 2},   {4, 2},   {2, 3, 2}};
  int trips = 0;
  for (const auto& blocks : block_lists) {
    int r = static_cast<int>(blocks.size());
    for (Mask mask = 0; mask < (Mask{1} << (r - 1)); ++mask) {
      IndexChainSpec spec;
      spec.blocks = blocks;
      spec.fixed.push_back(0);
      for (int i = 1; i < r; ++i)
        if (mask_has(mask, i - 1)) spec.fixed.push_back(i);
      spec.fixed.push_back(r);

      MonadicBLAlgebra m = build_chain(spec);
      CHECK(check_mbl_axioms(m).ok());
      ChainDecomposition d = decompose_chain(m);
      CHECK(d.report.ok());
      CHECK(d.spec == spec);
      ++trips;
    }
  }
  CHECK(trips == 15);
}

TEST_CASE("the chain enumeration is complete and canonical", "[chains]") {
  auto upto4 = enumerate_monadic_chains(4);
  CHECK(upto4.size() == 14);
  CHECK(enumerate_monadic_chains(5).size() == 41);

  // position 11 is the four-element sum of a three and a two block with the
  // middle boundary free
  ChainDecomposition d = decompose_chain(upto4[11]);
  CHECK(d.spec == IndexChainSpec{{3, 2}, {0, 2}});

  // every member is a valid monadic chain with a distinct decomposition
  std::vector<IndexChainSpec> seen;
  for (const auto& m : upto4) {
    CHECK(classify(m.base).chain);
    CHECK(check_mbl_axioms(m).ok());
    IndexChainSpec spec = decompose_chain(m).spec;
    for (const auto& other : seen) CHECK_FALSE(other == spec);
    seen.push_back(spec);
  }
}

TEST_CASE("three enumeration routes agree on small sums", "[chains]") {
  for (const std::vector<int>& blocks :
       {std::vector<int>{2}, {3}, {4}, {3, 2}, {2, 3}, {2, 2}, {2, 2, 2}, {4, 2}}) {
    Report r = crossvalidate_enumeration(blocks);
    CHECK(r.ok());
    CHECK(r.checks == 3);
  }
  CHECK_THROWS_AS(crossvalidate_enumeration({4, 4}), invalid_parameter);
  CHECK_THROWS_AS(crossvalidate_enumeration({}), invalid_parameter);
}

TEST_CASE("the join identity separates chains from squares", "[chains]") {
  for (const auto& m : enumerate_monadic_chains(5)) CHECK(check_chain_variety_identity(m));
  CHECK(check_chain_variety_identity(fixtures::remark_chain()));

  MonadicBLAlgebra sq = fixtures::functional_square(2, 2);
  CHECK_FALSE(check_chain_variety_identity(sq));
  // the witness: x = (1,0), y = (0,1) gives forall(x v y) = 1 but
  // forall x v forall y = 0
  int x = 2, y = 1;
  CHECK(sq.q.forall[sq.base.join[x][y]] == 3);
  CHECK(sq.base.join[sq.q.forall[x]][sq.q.forall[y]] == 0);
}

TEST_CASE("the mul identity separates functional members from the free chain",
          "[chains]") {
  CHECK(check_functional_variety_identity(fixtures::functional_square(2, 2)));
  CHECK(check_functional_variety_identity(fixtures::functional_square(3, 2)));
  CHECK(check_functional_variety_identity(build_functional(make_mv_chain(3), 3).algebra));
  CHECK_FALSE(check_functional_variety_identity(fixtures::remark_chain()));
}
