#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "tropgw/tropgw.h"

using nlohmann::json;

namespace {

struct Freed {
  void operator()(tropgw_result* r) const { tropgw_result_free(r); }
};
using Result = std::unique_ptr<tropgw_result, Freed>;

json payload(const Result& r) { return json::parse(tropgw_result_json(r.get())); }

}  // namespace

TEST_CASE("version and strerror") {
  CHECK(std::string(tropgw_version()) == "0.1.0");
  CHECK(std::string(tropgw_strerror(TROPGW_OK)) == "success");
  CHECK(std::string(tropgw_strerror(TROPGW_ERR_DOMAIN)) == "domain error");
  CHECK(std::string(tropgw_strerror(TROPGW_ERR_USAGE)) == "usage error");
}

TEST_CASE("sgw point through the C surface") {
  Result r(tropgw_sgw_point(5, 0));
  CHECK(tropgw_result_status(r.get()) == TROPGW_OK);
  CHECK(payload(r)["value"].dump() == R"([{"coef":"1","exp":-5}])");

  // identical calls produce identical bytes
  Result again(tropgw_sgw_point(5, 0));
  CHECK(std::string(tropgw_result_json(r.get())) == tropgw_result_json(again.get()));
}

TEST_CASE("status codes map error kinds") {
  Result domain(tropgw_sgw_point(2, 0));
  CHECK(tropgw_result_status(domain.get()) == TROPGW_ERR_DOMAIN);
  CHECK(payload(domain)["error"] == "domain_error");

  Result usage(tropgw_sections("U9q", 0, 0, 0, nullptr));
  CHECK(tropgw_result_status(usage.get()) == TROPGW_ERR_USAGE);
  CHECK(payload(usage)["error"] == "usage_error");

  int k[3] = {0, 0, 0};
  Result mismatch(tropgw_psi_product(5, k, 3, 0, 0));  // k shorter than n
  CHECK(tropgw_result_status(mismatch.get()) == TROPGW_ERR_USAGE);

  Result null_json(tropgw_balance_check(nullptr));
  CHECK(tropgw_result_status(null_json.get()) == TROPGW_ERR_USAGE);
}

TEST_CASE("enumerate and chern through the C surface") {
  Result graphs(tropgw_enumerate_graphs(4, 1));
  CHECK(tropgw_result_status(graphs.get()) == TROPGW_OK);
  CHECK(payload(graphs)["count"] == 3);
  CHECK(payload(graphs)["total"] == 4);

  Result chern(tropgw_chern_tp1(-1));
  CHECK(payload(chern)["cycle"]["points"][0]["weight"] == -1);
}

TEST_CASE("balance check through the C surface") {
  const char* fan = R"({"dim":1,"rays":[[1],[-1]],"lineality":[],
    "cones":[{"rays":[],"weight":null},{"rays":[0],"weight":1},{"rays":[1],"weight":1}]})";
  Result r(tropgw_balance_check(fan));
  CHECK(tropgw_result_status(r.get()) == TROPGW_OK);
  CHECK(payload(r)["balanced"] == true);
}

TEST_CASE("sections and sgw-p1 through the C surface") {
  Result yes(tropgw_sections("U0y", 2, -2, 1, "1/3"));
  CHECK(payload(yes)["is_section"] == true);

  Result p1(tropgw_sgw_p1(0));
  CHECK(payload(p1)["value"].dump() == R"([{"coef":"1","exp":-4}])");
}
