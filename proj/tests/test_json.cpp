#include <doctest.h>

#include "error.hpp"
#include "json_io.hpp"

using namespace tropgw;
using tropgw::io::json;

TEST_CASE("scalar encodings") {
  CHECK(io::rational_to_json(Rational(5, 6)) == json("5/6"));
  CHECK(io::rational_to_json(Rational(-7)) == json("-7"));

  LaurentPoly p = LaurentPoly::monomial(Rational(-1, 2), -3) + LaurentPoly::kappa_pow(2);
  json j = io::laurent_to_json(p);
  CHECK(j.dump() == R"([{"coef":"-1/2","exp":-3},{"coef":"1","exp":2}])");
  CHECK(io::laurent_from_json(j) == p);
}

TEST_CASE("graph round trip") {
  for (int n = 4; n <= 5; ++n)
    for (const DualGraph& g : enumerate_dual_graphs(n))
      CHECK(io::graph_from_json(io::graph_to_json(g)) == g);

  json j = io::graph_to_json(DualGraph::smooth(4));
  CHECK(j["n"] == 4);
  CHECK(j["edges"].empty());
  CHECK(j["legs"]["1"] == 0);
}

TEST_CASE("cycle round trip") {
  TropicalCycle fund = p1_fundamental();
  json j = io::cycle_to_json(fund);
  TropicalCycle back = io::cycle_from_json(j);
  CHECK(back == fund);
  CHECK(check_balancing(back).balanced);

  TropicalCycle m05 = embed_cycle(psi_class(5, 2));
  CHECK(io::cycle_from_json(io::cycle_to_json(m05)) == m05);
}

TEST_CASE("chern handler emits the pinned shape") {
  CHECK(io::handle_chern_tp1(2).dump() ==
        R"({"cycle":{"points":[{"cone":"origin","weight":2}]},"m":2})");
  CHECK(io::handle_chern_tp1(0)["cycle"]["points"].empty());
}

TEST_CASE("sgw handlers") {
  json point = io::handle_sgw_point(5, false);
  CHECK(point["value"].dump() == R"([{"coef":"1","exp":-5}])");

  json with_terms = io::handle_sgw_point(4, true);
  REQUIRE(with_terms["terms"].size() == 1);
  CHECK(with_terms["terms"][0]["k"] == json::array({0, 0, 0, 1}));

  json p1 = io::handle_sgw_p1(true);
  CHECK(p1["value"].dump() == R"([{"coef":"1","exp":-4}])");
  REQUIRE(p1["strata"].size() == 2);
  CHECK(p1["strata"][1]["splitting"][0]["m"] == -1);
}

TEST_CASE("balance handler") {
  json fan = io::cycle_to_json(p1_fundamental());
  json ok = io::handle_balance_check(fan.dump());
  CHECK(ok["balanced"] == true);
  CHECK(ok["violations"].empty());

  // weights (2,1): unbalanced at the origin, deficiency e1
  fan["cones"][1]["weight"] = 2;
  json bad = io::handle_balance_check(fan.dump());
  CHECK(bad["balanced"] == false);
  REQUIRE(bad["violations"].size() == 1);
  CHECK(bad["violations"][0]["deficiency"] == json::array({1}));

  CHECK_THROWS_AS(io::handle_balance_check("not json"), UsageError);
  CHECK_THROWS_AS(io::handle_balance_check(R"({"dim":1,"rays":[],"cones":"x"})"), std::exception);
}

TEST_CASE("sections handler") {
  json yes = io::handle_sections("U0y", 3, -3, 1, "");
  CHECK(yes["is_section"] == true);
  CHECK(yes["lattice"]["m_dependent"] == true);
  json no = io::handle_sections("U0y", 3, -2, 1, "1/2");
  CHECK(no["is_section"] == false);
  CHECK_THROWS_AS(io::handle_sections("U9z", 0, 0, 0, ""), UsageError);
}

TEST_CASE("determinism: identical requests give identical bytes") {
  CHECK(io::handle_sgw_point(6, true).dump() == io::handle_sgw_point(6, true).dump());
  CHECK(io::handle_psi_product(5, {0, 0, 0, 1, 0}, true, false).dump() ==
        io::handle_psi_product(5, {0, 0, 0, 1, 0}, true, false).dump());
}

TEST_CASE("psi handler") {
  json j = io::handle_psi_product(4, {0, 0, 0, 1}, false, false);
  CHECK(j["dim"] == 0);
  CHECK(j["degree"] == 1);
  REQUIRE(j["facets"].size() == 1);
  CHECK(j["facets"][0]["weight"] == 1);

  json strict = io::handle_psi_product(4, {0, 0, 0, 1}, false, true);
  CHECK(strict["facets"].empty());

  json embedded = io::handle_psi_product(5, {1, 0, 0, 0, 0}, true, false);
  CHECK(embedded["embedding"]["rays"].size() == 6);
}
