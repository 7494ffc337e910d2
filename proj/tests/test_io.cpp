#include <cstdio>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "mbl/algebra.hpp"
#include "mbl/chains.hpp"
#include "mbl/core.hpp"
#include "mbl/filters.hpp"
#include "mbl/io.hpp"
#include "mbl/monadic.hpp"
#include "mbl/varieties.hpp"

using namespace mbl;

TEST_CASE("algebras survive a JSON round trip", "[io]") {
  MonadicBLAlgebra r = fixtures::remark_chain();
  json j = algebra_to_json(r);
  CHECK(j.at("size") == 4);
  CHECK(j.at("labels") == std::vector<std::string>{"0_1", "1/2_1", "0_2", "1"});
  MonadicBLAlgebra back = monadic_from_json(j);
  CHECK(back.base.same_tables(r.base));
  CHECK(back.q.forall == r.q.forall);
  CHECK(back.q.exists == r.q.exists);
  CHECK(back.base.labels == std::vector<std::string>{"0_1", "1/2_1", "0_2", "1"});

  FiniteBLAlgebra kite = fixtures::heyting_counterexample().base;
  CHECK(base_algebra_from_json(algebra_to_json(kite)).same_tables(kite));

  MMVAlgebra mv = mbl_to_mmv({make_mv_chain(3), identity_quantifiers(3)});
  MMVAlgebra mv_back = mmv_from_json(algebra_to_json(mv));
  CHECK(mv_back.oplus == mv.oplus);
  CHECK(mv_back.neg == mv.neg);
  CHECK(mv_back.exists == mv.exists);
}

TEST_CASE("shorthand descriptions load as algebras", "[io]") {
  CHECK(base_algebra_from_json(json{{"mv_chain", 3}}).same_tables(make_mv_chain(3)));
  CHECK(base_algebra_from_json(json{{"godel_chain", 4}}).same_tables(make_godel_chain(4)));
  CHECK(base_algebra_from_json(json{{"ordinal_sum", {3, 2}}})
            .same_tables(ordinal_sum(std::vector<int>{3, 2})));

  MonadicBLAlgebra r = monadic_from_json(json{{"blocks", {3, 2}}, {"fixed", {0, 2}}});
  CHECK(r.q.forall == fixtures::remark_chain().q.forall);

  // blocks without a fixed set keep every boundary fixed
  MonadicBLAlgebra id = monadic_from_json(json{{"blocks", {3, 2}}});
  CHECK(id.q.forall == std::vector<int>{0, 1, 2, 3});

  // an explicit quantifier pair overlays a shorthand base
  MonadicBLAlgebra dn = monadic_from_json(
      json{{"godel_chain", 3}, {"forall", {0, 0, 2}}, {"exists", {0, 2, 2}}});
  CHECK(dn.q.forall == std::vector<int>{0, 0, 2});
  CHECK(check_mbl_axioms(dn).ok());

  CHECK_THROWS_WITH(monadic_from_json(json{{"mv_chain", 3}, {"forall", {0, 1, 2}}}),
                    "forall and exists tables must come together");
}

TEST_CASE("malformed input is reported by name", "[io]") {
  json j = algebra_to_json(make_mv_chain(3));
  j.erase("meet");
  CHECK_THROWS_WITH(base_algebra_from_json(j), "missing table \"meet\"");
  CHECK_THROWS_AS(load_json_file("/nonexistent/algebra.json"), invalid_parameter);

  json bad = algebra_to_json(make_mv_chain(3));
  bad["join"][0][0] = 7;
  CHECK_THROWS_AS(base_algebra_from_json(bad), structural_error);
}

TEST_CASE("files round trip through the filesystem", "[io]") {
  std::string path = "roundtrip_tmp.json";
  save_json_file(path, algebra_to_json(fixtures::remark_chain()));
  MonadicBLAlgebra back = monadic_from_json(load_json_file(path));
  CHECK(back.base.same_tables(fixtures::remark_chain().base));
  std::remove(path.c_str());
}

TEST_CASE("chain specifications and decompositions serialize", "[io]") {
  IndexChainSpec spec{{3, 2}, {0, 2}};
  CHECK(spec_from_json(spec_to_json(spec)) == spec);

  ChainDecomposition d = decompose_chain(fixtures::remark_chain());
  json j = decomposition_to_json(d);
  CHECK(j.at("blocks") == std::vector<int>{3, 2});
  CHECK(j.at("fixed") == std::vector<int>{0, 2});
  CHECK(j.at("psi") == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("Kripke models serialize with inline or referenced chains", "[io]") {
  KripkeModel k{2, make_mv_chain(3), {{"p", {1, 2}}, {"q", {0, 0}}}};
  KripkeModel back = kripke_from_json(kripke_to_json(k));
  CHECK(back.worlds == 2);
  CHECK(back.chain.same_tables(k.chain));
  CHECK(back.eval == k.eval);

  std::string chain_path = "chain_tmp.json";
  save_json_file(chain_path, algebra_to_json(make_mv_chain(3)));
  json j{{"worlds", 2}, {"chain", chain_path}, {"eval", {{"p", {1, 2}}}}};
  KripkeModel from_path = kripke_from_json(j);
  CHECK(from_path.chain.same_tables(make_mv_chain(3)));
  std::remove(chain_path.c_str());

  json bad{{"worlds", 2}, {"chain", algebra_to_json(make_mv_chain(3))},
           {"eval", {{"p", {1, 2, 0}}}}};
  CHECK_THROWS_AS(kripke_from_json(bad), structural_error);
}

TEST_CASE("reports serialize witnesses through labels", "[io]") {
  MonadicBLAlgebra r = fixtures::remark_chain();
  Report rep = check_forall_square(r);
  json j = report_to_json(rep, &r.base);
  CHECK_FALSE(j.at("ok").get<bool>());
  CHECK(j.at("failures").size() == 1);
  CHECK(j.at("failures")[0].at("witness") == std::vector<std::string>{"0_2"});
  CHECK(j.at("failures")[0].at("law") == "forall-square");

  json raw = report_to_json(rep);
  CHECK(raw.at("failures")[0].at("witness") == std::vector<std::string>{"2"});
  CHECK(report_to_json(check_mbl_axioms(r)).at("ok").get<bool>());
}

TEST_CASE("DOT output is stable and shows only cover edges", "[io]") {
  FiniteBLAlgebra l3 = make_mv_chain(3);
  std::string dot = hasse_to_dot(l3);
  CHECK(dot == hasse_to_dot(l3));
  CHECK(dot.find("digraph hasse") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n1 -> n2") != std::string::npos);
  CHECK(dot.find("n0 -> n2") == std::string::npos);  // transitive edge suppressed
  CHECK(dot.find("label=\"1/2\"") != std::string::npos);

  MonadicBLAlgebra r = fixtures::remark_chain();
  std::string lattice = filter_lattice_to_dot(r.base, all_filters(r.base));
  CHECK(lattice == filter_lattice_to_dot(r.base, all_filters(r.base)));
  CHECK(lattice.find("digraph filters") != std::string::npos);
  CHECK(lattice.find("f0 -> f1") != std::string::npos);
  CHECK(lattice.find("f1 -> f2") != std::string::npos);
  CHECK(lattice.find("f0 -> f2") == std::string::npos);
  CHECK(lattice.find("{1}") != std::string::npos);
  CHECK(lattice.find("{0_2, 1}") != std::string::npos);
}
