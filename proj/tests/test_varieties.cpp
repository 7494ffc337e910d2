#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mbl/algebra.hpp"
#include "mbl/core.hpp"
#include "mbl/monadic.hpp"
#include "mbl/varieties.hpp"

using namespace mbl;

TEST_CASE("MV signature of the three-element chain", "[varieties]") {
  MonadicBLAlgebra l3{make_mv_chain(3), identity_quantifiers(3)};
  MMVAlgebra mv = mbl_to_mmv(l3);
  CHECK(mv.oplus == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
  CHECK(mv.neg == std::vector<int>{2, 1, 0});
  CHECK(mv.exists == std::vector<int>{0, 1, 2});
  CHECK(mv.top() == 2);
  CHECK(mv.mul(1, 1) == 0);
  CHECK(mv.imp(1, 0) == 1);
  CHECK(check_mv_reduct(mv).ok());
  CHECK(check_mmv_axioms(mv).ok());
}

TEST_CASE("term equivalence round trips on involutive members", "[varieties]") {
  for (int k = 2; k <= 6; ++k) {
    for (const auto& q : enumerate_monadic_structures(make_mv_chain(k))) {
      MonadicBLAlgebra m{make_mv_chain(k), q};
      MMVAlgebra mv = mbl_to_mmv(m);
      CHECK(check_mmv_axioms(mv).ok());
      MonadicBLAlgebra back = mmv_to_mbl(mv);
      CHECK(back.base.same_tables(m.base));
      CHECK(back.q.forall == m.q.forall);
      CHECK(back.q.exists == m.q.exists);
    }
  }
  // functional squares are involutive too
  MonadicBLAlgebra sq = fixtures::functional_square(3, 2);
  MonadicBLAlgebra back = mmv_to_mbl(mbl_to_mmv(sq));
  CHECK(back.base.same_tables(sq.base));
  CHECK(back.q.forall == sq.q.forall);
}

TEST_CASE("non-involutive algebras cannot cross to the MV signature", "[varieties]") {
  MonadicBLAlgebra r = fixtures::remark_chain();
  CHECK_THROWS_WITH(mbl_to_mmv(r), "negation is not involutive at 0_2: not not 0_2 = 1");
}

TEST_CASE("quantifier axioms in the MV signature detect bad structures", "[varieties]") {
  MonadicBLAlgebra l3{make_mv_chain(3), identity_quantifiers(3)};
  MMVAlgebra mv = mbl_to_mmv(l3);
  mv.exists = {0, 2, 2};  // collapses 1/2 upward; breaks distribution over +
  Report r = check_mmv_axioms(mv);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.ok_for("MV5"));
}

TEST_CASE("MV chains admit only the identity structure", "[varieties]") {
  Report r = check_mmv_chain_triviality(7, 5);
  CHECK(r.ok());
  CHECK_FALSE(check_mmv_chain_triviality(2, 2).failures.size());
  CHECK_THROWS_AS(check_mmv_chain_triviality(1), invalid_parameter);
}

TEST_CASE("hoop reduct and MV closure of the two-element chain", "[varieties]") {
  HoopTable h = hoop_reduct(make_mv_chain(2));
  CHECK(check_wajsberg_hoop(h).ok());
  MVClosure c = mv_closure(h);
  CHECK(c.algebra.size == 4);
  CHECK(c.mv_report.ok());
  CHECK(c.algebra.oplus == std::vector<std::vector<int>>{{0, 1, 2, 3},
                                                         {1, 1, 3, 3},
                                                         {2, 3, 2, 3},
                                                         {3, 3, 3, 3}});
  CHECK(c.algebra.neg == std::vector<int>{3, 2, 1, 0});
  CHECK(c.algebra.labels == std::vector<std::string>{"-1", "-0", "0", "1"});
  CHECK(c.carrier[0] == std::pair<int, int>{1, 0});
  CHECK(c.carrier[3] == std::pair<int, int>{1, 1});
}

TEST_CASE("MV closure doubles the three-element chain", "[varieties]") {
  MVClosure c = mv_closure(hoop_reduct(make_mv_chain(3)));
  CHECK(c.algebra.size == 6);
  CHECK(c.mv_report.ok());
  CHECK(c.algebra.labels ==
        std::vector<std::string>{"-1", "-1/2", "-0", "0", "1/2", "1"});
  CHECK(c.algebra.neg == std::vector<int>{5, 4, 3, 2, 1, 0});
  CHECK(c.algebra.oplus[1][1] == 2);  // -1/2 + -1/2 = -0 under the hoop sum
  CHECK(check_mmv_axioms(c.algebra).ok());
}

TEST_CASE("MV closure rejects non-Wajsberg hoops", "[varieties]") {
  HoopTable g = hoop_reduct(make_godel_chain(3));
  Report r = check_wajsberg_hoop(g);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.ok_for("wajsberg"));
  CHECK_THROWS_AS(mv_closure(g), precondition_error);
}

TEST_CASE("the trivial hoop closes to the two-element Boolean algebra", "[varieties]") {
  HoopTable h = hoop_reduct(make_one_element());
  MVClosure c = mv_closure(h);
  CHECK(c.algebra.size == 2);
  CHECK(c.mv_report.ok());
}

TEST_CASE("Heyting laws hold on the counterexample but equation one fails", "[varieties]") {
  MonadicBLAlgebra k = fixtures::heyting_counterexample();
  HeytingCheck h = check_monadic_heyting(k);
  CHECK(h.laws.ok());
  CHECK(passed_groups(h.laws, {"H1", "H2", "H3", "H4", "H5"}) == 5);
  CHECK(passed_groups(h.laws, {"L1", "L2", "L3", "L4", "L5"}) == 5);
  CHECK_FALSE(h.eq1);
  CHECK(h.eq1_witness == std::vector<int>{1, 2});
  CHECK(h.prelinear);

  // the quoted instance: forall(b v exists c) = 1 while forall b v exists c = c
  int lhs = k.q.forall[k.base.join[2][k.q.exists[3]]];
  int rhs = k.base.join[k.q.forall[2]][k.q.exists[3]];
  CHECK(lhs == 4);
  CHECK(rhs == 3);
  CHECK(k.base.label(lhs) == "1");
  CHECK(k.base.label(rhs) == "c");
}

TEST_CASE("on Goedel algebras equation one plus prelinearity is the monadic variety",
          "[varieties]") {
  std::vector<MonadicBLAlgebra> pool;
  pool.push_back(fixtures::heyting_counterexample());
  pool.push_back({make_godel_chain(4), {{0, 0, 0, 3}, {0, 3, 3, 3}}});
  pool.push_back({make_godel_chain(3), identity_quantifiers(3)});
  pool.push_back({make_mv_chain(2), identity_quantifiers(2)});
  Report r = check_godel_coincidence(pool);
  CHECK(r.ok());
}

TEST_CASE("delta nabla structures", "[varieties]") {
  QuantifierPair dn = delta_nabla(make_godel_chain(3));
  CHECK(dn.forall == std::vector<int>{0, 0, 2});
  CHECK(dn.exists == std::vector<int>{0, 2, 2});
  CHECK(check_mbl_axioms({make_godel_chain(3), dn}).ok());
  // on the Lukasiewicz chain the same pair breaks the square axiom
  Report r = check_mbl_axioms({make_mv_chain(3), delta_nabla(make_mv_chain(3))});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.ok_for("M5"));
}

TEST_CASE("product chains force near-trivial structures", "[varieties]") {
  CHECK(check_product_chain_triviality(make_mv_chain(2)).ok());
  CHECK(check_product_chain_triviality(make_one_element()).ok());
  CHECK_THROWS_WITH(check_product_chain_triviality(make_mv_chain(3)),
                    "algebra is not a product algebra: 1/2 ^ not 1/2 = 1/2");
  MonadicBLAlgebra sq = fixtures::functional_square(2, 2);
  CHECK_THROWS_WITH(check_product_chain_triviality(sq.base),
                    "product triviality applies to chains only");
}
