#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mbl/algebra.hpp"
#include "mbl/core.hpp"

using namespace mbl;

TEST_CASE("three-element MV chain tables", "[algebra]") {
  FiniteBLAlgebra a = make_mv_chain(3);
  CHECK(a.size == 3);
  CHECK(a.labels == std::vector<std::string>{"0", "1/2", "1"});
  CHECK(a.join == std::vector<std::vector<int>>{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  CHECK(a.meet == std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK(a.mul == std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
  CHECK(a.imp == std::vector<std::vector<int>>{{2, 2, 2}, {1, 2, 2}, {0, 1, 2}});
  CHECK(a.neg(1) == 1);
  CHECK(a.leq(0, 1));
  CHECK_FALSE(a.leq(2, 1));
  CHECK(check_bl_axioms(a).ok());
}

TEST_CASE("Goedel chains are idempotent", "[algebra]") {
  FiniteBLAlgebra g = make_godel_chain(3);
  CHECK(g.mul == g.meet);
  CHECK(g.imp == std::vector<std::vector<int>>{{2, 2, 2}, {0, 2, 2}, {0, 1, 2}});
  CHECK(g.neg(1) == 0);
  CHECK(check_bl_axioms(g).ok());
  for (int k = 2; k <= 7; ++k) CHECK(check_bl_axioms(make_godel_chain(k)).ok());
  for (int k = 2; k <= 7; ++k) CHECK(check_bl_axioms(make_mv_chain(k)).ok());
}

TEST_CASE("one-element algebra is degenerate but valid", "[algebra]") {
  FiniteBLAlgebra one = make_one_element();
  CHECK(one.size == 1);
  CHECK(one.bottom() == one.top());
  CHECK(check_bl_axioms(one).ok());
}

TEST_CASE("chain builders accept one and reject smaller sizes", "[algebra]") {
  CHECK(make_mv_chain(1).size == 1);
  CHECK(make_godel_chain(1).size == 1);
  CHECK_THROWS_AS(make_mv_chain(0), invalid_parameter);
  CHECK_THROWS_AS(make_godel_chain(0), invalid_parameter);
}

TEST_CASE("ordinal sum of a three and a two block", "[algebra]") {
  FiniteBLAlgebra a = ordinal_sum(std::vector<int>{3, 2});
  CHECK(a.size == 4);
  CHECK(a.labels == std::vector<std::string>{"0_1", "1/2_1", "0_2", "1"});
  // inside the first block the product is Lukasiewicz, across blocks it is min
  CHECK(a.mul[1][1] == 0);
  CHECK(a.mul[2][2] == 2);
  CHECK(a.mul[1][2] == 1);
  CHECK(a.imp[2][1] == 1);
  CHECK(a.imp[1][2] == 3);
  CHECK(check_bl_axioms(a).ok());

  // a sum of two-element blocks is the Goedel chain
  CHECK(ordinal_sum(std::vector<int>{2, 2}).same_tables(make_godel_chain(3)));
  CHECK(ordinal_sum(std::vector<int>{2, 2, 2}).same_tables(make_godel_chain(4)));
  // a single block is the MV chain
  CHECK(ordinal_sum(std::vector<int>{4}).same_tables(make_mv_chain(4)));

  CHECK_THROWS_AS(ordinal_sum(std::vector<int>{}), invalid_parameter);
  CHECK_THROWS_AS(ordinal_sum(std::vector<int>{3, 1}), invalid_parameter);
}

TEST_CASE("ordinal sums of MV blocks satisfy the axioms", "[algebra]") {
  for (auto blocks : std::vector<std::vector<int>>{{2, 3}, {3, 3}, {2, 2, 3}, {4, 2}, {5}})
    CHECK(check_bl_axioms(ordinal_sum(blocks)).ok());
}

TEST_CASE("axiom checker pinpoints a broken law", "[algebra]") {
  FiniteBLAlgebra a = make_mv_chain(3);
  a.mul[0][1] = 1;  // break commutativity (and more)
  Report r = check_bl_axioms(a);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.ok_for("mul-comm"));

  FiniteBLAlgebra b = make_godel_chain(3);
  b.imp[1][0] = 2;  // break residuation
  Report rb = check_bl_axioms(b);
  CHECK_FALSE(rb.ok());
  CHECK_FALSE(rb.ok_for("residuation"));
}

TEST_CASE("shape validation rejects malformed tables", "[algebra]") {
  FiniteBLAlgebra a = make_mv_chain(3);
  a.join[1].pop_back();
  CHECK_THROWS_AS(validate_shape(a), structural_error);

  FiniteBLAlgebra b = make_mv_chain(3);
  b.mul[0][0] = 7;  // out of carrier
  CHECK_THROWS_AS(validate_shape(b), structural_error);

  FiniteBLAlgebra c = make_mv_chain(3);
  c.labels.pop_back();
  CHECK_THROWS_AS(validate_shape(c), structural_error);
}

TEST_CASE("classification flags", "[algebra]") {
  Classification l3 = classify(make_mv_chain(3));
  CHECK((l3.chain && l3.mv && !l3.godel && !l3.product));
  Classification g3 = classify(make_godel_chain(3));
  CHECK((g3.chain && !g3.mv && g3.godel && !g3.product));
  // the two-element chain belongs to every subvariety
  Classification l2 = classify(make_mv_chain(2));
  CHECK((l2.chain && l2.mv && l2.godel && l2.product));
  Classification sum = classify(ordinal_sum(std::vector<int>{3, 2}));
  CHECK((sum.chain && !sum.mv && !sum.godel && !sum.product));
}

TEST_CASE("subalgebra enumeration and extraction", "[algebra]") {
  // MV chains have few subalgebras: only the two-element one and the whole
  CHECK(enumerate_subalgebras(make_mv_chain(4)).size() == 2);
  CHECK(enumerate_subalgebras(make_mv_chain(6)).size() == 2);
  // every subset of a Goedel chain containing the bounds is closed
  CHECK(enumerate_subalgebras(make_godel_chain(4)).size() == 4);

  FiniteBLAlgebra sub = subalgebra(make_mv_chain(4), {0, 3});
  CHECK(sub.same_tables(make_mv_chain(2)));
  CHECK(sub.labels == std::vector<std::string>{"0", "1"});

  // {0, 1/3, 1} is not multiplicatively closed in L4
  CHECK_THROWS_AS(subalgebra(make_mv_chain(4), {0, 1, 3}), precondition_error);
}

TEST_CASE("cover edges form the Hasse diagram", "[algebra]") {
  FiniteBLAlgebra a = ordinal_sum(std::vector<int>{3, 2});
  CHECK(cover_edges(a) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}
