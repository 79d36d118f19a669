// Command-line front end. All computation goes through the C API in
// tropgw/tropgw.h; this file only parses arguments, prints JSON, and maps
// statuses to exit codes (0 success, 1 domain error, 2 usage error).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tropgw/tropgw.h"

namespace {

using nlohmann::json;

std::string iso8601_now() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

struct ResultDeleter {
  void operator()(tropgw_result* r) const { tropgw_result_free(r); }
};
using Result = std::unique_ptr<tropgw_result, ResultDeleter>;

// Prints the payload (optionally pretty), writes the reproducibility
// manifest when requested, and returns the process exit code.
int finish(const std::string& command, const json& inputs, Result result, bool pretty,
           const std::string& manifest_path) {
  const int status = tropgw_result_status(result.get());
  json payload = json::parse(tropgw_result_json(result.get()));
  std::cout << (pretty ? payload.dump(2) : payload.dump()) << "\n";
  if (!manifest_path.empty()) {
    json manifest{{"command", command},
                  {"inputs", inputs},
                  {"outputs", payload},
                  {"version", tropgw_version()},
                  {"timestamp", iso8601_now()}};
    std::ofstream out(manifest_path);
    if (!out) {
      std::cerr << "cannot write manifest to " << manifest_path << "\n";
      return TROPGW_ERR_USAGE;
    }
    out << manifest.dump(2) << "\n";
  }
  return status;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--k", "expected a comma-separated list of integers");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropgw: tropical super Gromov-Witten invariants (exact arithmetic)"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --pretty / --manifest appear after the subcommand
  app.set_version_flag("--version", std::string(tropgw_version()));

  bool pretty = false;
  std::string manifest_path;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.add_option("--manifest", manifest_path,
                 "write a reproducibility manifest (command, inputs, outputs) to this file");

  // enumerate-graphs
  auto* enumerate = app.add_subcommand("enumerate-graphs", "stable genus-0 dual graph types");
  int enum_n = 0;
  bool trivalent_only = false;
  enumerate->add_option("--n", enum_n, "number of marked legs")->required();
  enumerate->add_flag("--trivalent-only", trivalent_only, "only graphs with all valences 3");

  // psi-product
  auto* psi = app.add_subcommand("psi-product", "tropical psi-class intersection product");
  int psi_n = 0;
  std::string psi_k;
  bool psi_embed = false, psi_strict = false;
  psi->add_option("--n", psi_n, "number of marked legs")->required();
  psi->add_option("--k", psi_k, "comma-separated exponents k1,...,kN")->required();
  psi->add_flag("--embed", psi_embed, "include the weighted fan in Q^(n choose 2)");
  psi->add_flag("--strict-vertex-condition", psi_strict,
                "use the verbatim vertex rule K(V) = val(V) + 3 instead of val(V) = K(V) + 3");

  // sgw-point
  auto* point = app.add_subcommand("sgw-point", "super Gromov-Witten invariant of a point");
  int point_n = 0;
  bool show_terms = false;
  point->add_option("--n", point_n, "number of marked points")->required();
  point->add_flag("--show-terms", show_terms, "list per-composition contributions");

  // sgw-p1
  auto* p1 = app.add_subcommand("sgw-p1", "degree-1, 2-marked invariant of P1");
  bool audit = false;
  p1->add_flag("--audit", audit, "include the per-stratum Euler-series terms");

  // chern-tp1
  auto* chern = app.add_subcommand("chern-tp1", "c1(Trop(O(m))) against the fundamental cycle");
  int chern_m = 0;
  chern->add_option("--m", chern_m, "twist of the bundle")->required();

  // balance-check
  auto* balance = app.add_subcommand("balance-check", "balancing of a weighted fan");
  std::string balance_file;
  balance->add_option("--file", balance_file, "weighted fan as JSON")->required();

  // sections
  auto* sections = app.add_subcommand("sections", "affine-section test on a Trop(O(m)) chart");
  std::string chart, r_text;
  int sec_m = 0, sec_alpha = 0, sec_beta = 0;
  sections->add_option("--chart", chart, "chart id, e.g. U0y")->required();
  sections->add_option("--m", sec_m, "twist of the bundle")->required();
  sections->add_option("--alpha", sec_alpha, "x-slope")->required();
  sections->add_option("--beta", sec_beta, "y-slope")->required();
  sections->add_option("--r", r_text, "constant term, as p/q");

  // verify-all
  app.add_subcommand("verify-all", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : TROPGW_ERR_USAGE;
  }

  if (enumerate->parsed()) {
    return finish("enumerate-graphs", {{"n", enum_n}, {"trivalent_only", trivalent_only}},
                  Result(tropgw_enumerate_graphs(enum_n, trivalent_only)), pretty, manifest_path);
  }
  if (psi->parsed()) {
    std::vector<int> k;
    try {
      k = parse_int_list(psi_k);
    } catch (const CLI::Error& e) {
      std::cerr << e.what() << "\n";
      return TROPGW_ERR_USAGE;
    }
    return finish("psi-product",
                  {{"n", psi_n}, {"k", k}, {"embed", psi_embed}, {"strict", psi_strict}},
                  Result(tropgw_psi_product(psi_n, k.data(), k.size(), psi_embed, psi_strict)),
                  pretty, manifest_path);
  }
  if (point->parsed()) {
    return finish("sgw-point", {{"n", point_n}, {"show_terms", show_terms}},
                  Result(tropgw_sgw_point(point_n, show_terms)), pretty, manifest_path);
  }
  if (p1->parsed()) {
    return finish("sgw-p1", {{"audit", audit}}, Result(tropgw_sgw_p1(audit)), pretty,
                  manifest_path);
  }
  if (chern->parsed()) {
    return finish("chern-tp1", {{"m", chern_m}}, Result(tropgw_chern_tp1(chern_m)), pretty,
                  manifest_path);
  }
  if (balance->parsed()) {
    std::ifstream in(balance_file);
    if (!in) {
      std::cerr << "cannot read " << balance_file << "\n";
      return TROPGW_ERR_USAGE;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return finish("balance-check", {{"file", balance_file}},
                  Result(tropgw_balance_check(buffer.str().c_str())), pretty, manifest_path);
  }
  if (sections->parsed()) {
    return finish(
        "sections",
        {{"chart", chart}, {"m", sec_m}, {"alpha", sec_alpha}, {"beta", sec_beta}, {"r", r_text}},
        Result(tropgw_sections(chart.c_str(), sec_m, sec_alpha, sec_beta,
                               r_text.empty() ? nullptr : r_text.c_str())),
        pretty, manifest_path);
  }
  // verify-all
  return finish("verify-all", json::object(), Result(tropgw_verify_all()), pretty, manifest_path);
}
