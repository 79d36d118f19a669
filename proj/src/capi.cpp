#include "tropgw/tropgw.h"

#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "json_io.hpp"
#include "version.hpp"

struct tropgw_result {
  int status = TROPGW_OK;
  std::string json;
};

namespace {

tropgw_result* wrap(const std::function<nlohmann::json()>& fn) {
  auto* result = new tropgw_result;
  try {
    result->json = fn().dump();
  } catch (const tropgw::UsageError& e) {
    result->status = TROPGW_ERR_USAGE;
    result->json = nlohmann::json{{"error", "usage_error"}, {"detail", e.what()}}.dump();
  } catch (const tropgw::DomainError& e) {
    result->status = TROPGW_ERR_DOMAIN;
    result->json = nlohmann::json{{"error", "domain_error"}, {"detail", e.what()}}.dump();
  } catch (const nlohmann::json::exception& e) {
    result->status = TROPGW_ERR_USAGE;
    result->json = nlohmann::json{{"error", "usage_error"}, {"detail", e.what()}}.dump();
  } catch (const std::exception& e) {
    result->status = TROPGW_ERR_INTERNAL;
    result->json = nlohmann::json{{"error", "internal_error"}, {"detail", e.what()}}.dump();
  }
  return result;
}

}  // namespace

extern "C" {

const char* tropgw_version(void) { return TROPGW_VERSION_STRING; }

const char* tropgw_strerror(int status) {
  switch (status) {
    case TROPGW_OK: return "success";
    case TROPGW_ERR_DOMAIN: return "domain error";
    case TROPGW_ERR_USAGE: return "usage error";
    case TROPGW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int tropgw_result_status(const tropgw_result* result) {
  return result ? result->status : TROPGW_ERR_USAGE;
}

const char* tropgw_result_json(const tropgw_result* result) {
  return result ? result->json.c_str() : "";
}

void tropgw_result_free(tropgw_result* result) { delete result; }

tropgw_result* tropgw_enumerate_graphs(int n, int trivalent_only) {
  return wrap([&] { return tropgw::io::handle_enumerate_graphs(n, trivalent_only != 0); });
}

tropgw_result* tropgw_psi_product(int n, const int* k, size_t k_len, int embed,
                                  int strict_vertex_rule) {
  return wrap([&] {
    std::vector<int> kvec(k, k + k_len);
    return tropgw::io::handle_psi_product(n, kvec, embed != 0, strict_vertex_rule != 0);
  });
}

tropgw_result* tropgw_sgw_point(int n, int show_terms) {
  return wrap([&] { return tropgw::io::handle_sgw_point(n, show_terms != 0); });
}

tropgw_result* tropgw_sgw_p1(int audit) {
  return wrap([&] { return tropgw::io::handle_sgw_p1(audit != 0); });
}

tropgw_result* tropgw_chern_tp1(int m) {
  return wrap([&] { return tropgw::io::handle_chern_tp1(m); });
}

tropgw_result* tropgw_balance_check(const char* fan_json) {
  return wrap([&] {
    if (!fan_json) throw tropgw::UsageError("balance-check: missing JSON input");
    return tropgw::io::handle_balance_check(fan_json);
  });
}

tropgw_result* tropgw_sections(const char* chart, int m, int alpha, int beta, const char* r) {
  return wrap([&] {
    if (!chart) throw tropgw::UsageError("sections: missing chart id");
    return tropgw::io::handle_sections(chart, m, alpha, beta, r ? r : "");
  });
}

tropgw_result* tropgw_verify_all(void) {
  return wrap([] { return tropgw::io::handle_verify_all(); });
}

}  // extern "C"
