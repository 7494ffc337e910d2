#include <algorithm>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mbl/algebra.hpp"
#include "mbl/core.hpp"
#include "mbl/monadic.hpp"

using namespace mbl;

namespace {

MonadicBLAlgebra remark_by_hand() {
  MonadicBLAlgebra m;
  m.base = ordinal_sum(std::vector<int>{3, 2});
  m.q.forall = {0, 1, 1, 3};
  m.q.exists = {0, 1, 3, 3};
  return m;
}

}  // namespace

TEST_CASE("the collapsing structure on the 3+2 chain satisfies every axiom", "[monadic]") {
  MonadicBLAlgebra m = remark_by_hand();
  validate_shape(m);
  Report axioms = check_mbl_axioms(m);
  CHECK(axioms.ok());
  CHECK(passed_groups(axioms, {"M1", "M2", "M3", "M4", "M5"}) == 5);

  Report derived = check_derived_identities(m);
  CHECK(derived.ok());
  CHECK(derived_identity_names().size() == 32);
  CHECK(passed_groups(derived, derived_identity_names()) == 32);
}

TEST_CASE("forall does not distribute over the square on the 3+2 chain", "[monadic]") {
  MonadicBLAlgebra m = remark_by_hand();
  // forall(0_2 * 0_2) = 1/2 while forall 0_2 * forall 0_2 = 0
  CHECK(m.base.mul[2][2] == 2);
  CHECK(m.q.forall[m.base.mul[2][2]] == 1);
  CHECK(m.base.mul[m.q.forall[2]][m.q.forall[2]] == 0);

  Report r = check_forall_square(m);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].witness == std::vector<int>{2});
  CHECK(r.failures[0].detail.find("1/2_1") != std::string::npos);
  CHECK(r.failures[0].detail.find("0_1") != std::string::npos);
}

TEST_CASE("identity quantifiers always satisfy the axioms", "[monadic]") {
  for (auto blocks : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {3, 2}, {4}}) {
    MonadicBLAlgebra m;
    m.base = ordinal_sum(blocks);
    m.q = identity_quantifiers(m.base.size);
    CHECK(check_mbl_axioms(m).ok());
    CHECK(check_derived_identities(m).ok());
    CHECK(check_forall_square(m).ok());  // identity trivially distributes
  }
}

TEST_CASE("quantifier shape validation", "[monadic]") {
  MonadicBLAlgebra m = remark_by_hand();
  m.q.forall = {0, 1, 1};  // wrong length
  CHECK_THROWS_AS(validate_shape(m), structural_error);
  m = remark_by_hand();
  m.q.exists[2] = 9;  // out of carrier
  CHECK_THROWS_AS(validate_shape(m), structural_error);
}

TEST_CASE("monadic structure counts on small chains", "[monadic]") {
  CHECK(enumerate_monadic_structures(ordinal_sum(std::vector<int>{3, 2})).size() == 2);
  CHECK(enumerate_monadic_structures(make_mv_chain(3)).size() == 1);
  CHECK(enumerate_monadic_structures(make_mv_chain(6)).size() == 1);
  CHECK(enumerate_monadic_structures(make_godel_chain(4)).size() == 4);
  CHECK(enumerate_monadic_structures(make_godel_chain(5)).size() == 8);
  CHECK(enumerate_monadic_structures(make_godel_chain(6)).size() == 16);
}

TEST_CASE("the G4 structures are exactly the four subalgebra collapses", "[monadic]") {
  std::vector<QuantifierPair> st = enumerate_monadic_structures(make_godel_chain(4));
  REQUIRE(st.size() == 4);
  std::sort(st.begin(), st.end());
  std::vector<QuantifierPair> expected = {
      {{0, 0, 0, 3}, {0, 3, 3, 3}},
      {{0, 0, 2, 3}, {0, 2, 2, 3}},
      {{0, 1, 1, 3}, {0, 1, 3, 3}},
      {{0, 1, 2, 3}, {0, 1, 2, 3}}};
  std::sort(expected.begin(), expected.end());
  CHECK(st == expected);
}

TEST_CASE("brute table search agrees with the subalgebra route", "[monadic]") {
  for (auto blocks : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {3, 2}, {2, 2, 2}, {5}}) {
    FiniteBLAlgebra a = ordinal_sum(blocks);
    std::vector<QuantifierPair> fast = enumerate_monadic_structures(a);
    std::vector<QuantifierPair> slow = brute_force_monadic_structures(a);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
  }
  CHECK_THROWS_AS(brute_force_monadic_structures(make_godel_chain(7)), invalid_parameter);
}

TEST_CASE("relative completeness picks out the quantifier images", "[monadic]") {
  FiniteBLAlgebra a = ordinal_sum(std::vector<int>{3, 2});
  // the image {0, 1/2, 1} of the collapsing structure qualifies
  CHECK(is_m_relatively_complete(a, {0, 1, 3}).ok);
  CHECK(is_m_relatively_complete(a, {0, 1, 2, 3}).ok);
  // {0, 1} does not: 0_2 has no greatest lower bound inside it that works
  MRelResult bad = is_m_relatively_complete(a, {0, 3});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.condition.empty());

  QuantifierPair q = quantifiers_from_subalgebra(make_godel_chain(4), {0, 2, 3});
  CHECK(q.forall == std::vector<int>{0, 0, 2, 3});
  CHECK(q.exists == std::vector<int>{0, 2, 2, 3});
}

TEST_CASE("the enumeration equals the relatively complete subalgebra sweep", "[monadic]") {
  for (auto blocks : std::vector<std::vector<int>>{{3, 2}, {2, 2}, {4}}) {
    FiniteBLAlgebra a = ordinal_sum(blocks);
    std::vector<QuantifierPair> from_subs;
    for (const auto& carrier : enumerate_subalgebras(a))
      if (is_m_relatively_complete(a, carrier).ok)
        from_subs.push_back(quantifiers_from_subalgebra(a, carrier));
    std::vector<QuantifierPair> direct = enumerate_monadic_structures(a);
    std::sort(from_subs.begin(), from_subs.end());
    std::sort(direct.begin(), direct.end());
    CHECK(from_subs == direct);
  }
}

TEST_CASE("join distribution is independent of the remaining axioms", "[monadic]") {
  // quantifier pairs satisfying M1, M2, M3, M5 but not M4 exist already on
  // the three-element Goedel chain
  std::vector<QuantifierPair> found3 = search_m4_independent(make_godel_chain(3));
  CHECK(found3.size() == 3);
  std::vector<QuantifierPair> found4 = search_m4_independent(make_godel_chain(4));
  CHECK(found4.size() == 32);
  for (const auto& q : found4) {
    MonadicBLAlgebra m{make_godel_chain(4), q};
    Report r = check_mbl_axioms(m);
    CHECK((r.ok_for("M1") && r.ok_for("M2") && r.ok_for("M3") && r.ok_for("M5")));
    CHECK_FALSE(r.ok_for("M4"));
  }
  CHECK_THROWS_AS(search_m4_independent(make_godel_chain(5)), invalid_parameter);
}

TEST_CASE("the Heyting counterexample fails exactly the join distribution", "[monadic]") {
  MonadicBLAlgebra k = fixtures::heyting_counterexample();
  CHECK(check_bl_axioms(k.base).ok());
  Report r = check_mbl_axioms(k);
  CHECK_FALSE(r.ok());
  CHECK((r.ok_for("M1") && r.ok_for("M2") && r.ok_for("M3") && r.ok_for("M5")));
  CHECK_FALSE(r.ok_for("M4"));
  // its base carries exactly three monadic structures
  CHECK(enumerate_monadic_structures(k.base).size() == 3);
}

TEST_CASE("functional algebras over a chain", "[monadic]") {
  FunctionalMBL f = build_functional(make_mv_chain(2), 2);
  CHECK(f.algebra.base.size == 4);
  CHECK(f.tuples ==
        std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(f.algebra.base.label(2) == "(1,0)");
  CHECK(f.index_of({1, 0}) == 2);
  // quantifiers are the pointwise extrema
  CHECK(f.algebra.q.forall[2] == f.index_of({0, 0}));
  CHECK(f.algebra.q.exists[2] == f.index_of({1, 1}));
  CHECK(check_mbl_axioms(f.algebra).ok());
  CHECK(check_derived_identities(f.algebra).ok());

  // the single generator (1,2) over L3 already generates the full square
  FunctionalMBL g = build_functional(make_mv_chain(3), 2, {{1, 2}});
  CHECK(g.algebra.base.size == 9);
  CHECK(check_mbl_axioms(g.algebra).ok());

  FunctionalMBL l33 = build_functional(make_mv_chain(3), 2);
  CHECK(l33.algebra.base.size == 9);
  CHECK(check_mbl_axioms(l33.algebra).ok());
}

TEST_CASE("every corpus member that claims the axioms passes them", "[monadic]") {
  std::vector<MonadicBLAlgebra> ms = fixtures::mbl_corpus();
  CHECK(ms.size() >= 44);
  for (const auto& m : ms) {
    CHECK(check_mbl_axioms(m).ok());
    CHECK(check_derived_identities(m).ok());
  }
}
