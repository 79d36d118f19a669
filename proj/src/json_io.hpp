#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "dual_graph.hpp"
#include "fan.hpp"
#include "laurent.hpp"
#include "psi.hpp"
#include "sgw.hpp"

namespace tropgw::io {

using nlohmann::json;

// Scalar encodings: rationals as "p/q" (or "p"), Laurent polynomials as
// [{"coef": "p/q", "exp": e}] sorted by exponent.
json rational_to_json(const Rational& r);
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// {"n": int, "edges": [[v,w]], "legs": {"1": v, ...}}
json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const json& j);

// {"dim": d, "rays": [[int]], "lineality": [[int]], "cones":
//  [{"rays": [idx], "weight": int|null}]}
json cycle_to_json(const TropicalCycle& c);
TropicalCycle cycle_from_json(const json& j);

json psi_cycle_to_json(const PsiProductCycle& c, bool embed);

// Request handlers shared by the C API and the command line. Each returns
// the subcommand's canonical JSON document; errors surface as exceptions.
json handle_enumerate_graphs(int n, bool trivalent_only);
json handle_psi_product(int n, const std::vector<int>& k, bool embed, bool strict_vertex_rule);
json handle_sgw_point(int n, bool show_terms);
json handle_sgw_p1(bool audit);
json handle_chern_tp1(int m);
json handle_balance_check(const std::string& fan_json_text);
json handle_sections(const std::string& chart, int m, int alpha, int beta,
                     const std::string& r_text);
json handle_verify_all();

}  // namespace tropgw::io
