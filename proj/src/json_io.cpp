#include "json_io.hpp"

#include <limits>

#include "error.hpp"
#include "spinor.hpp"
#include "verify.hpp"
#include "version.hpp"

namespace tropgw::io {

namespace {

long long bigint_to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw DomainError("json: integer too large to serialize");
  return static_cast<long long>(v);
}

int json_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw UsageError(std::string("json: expected integer ") + what);
  return j.get<int>();
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

json laurent_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [exp, coef] : p.terms()) arr.push_back({{"exp", exp}, {"coef", coef.str()}});
  return arr;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("json: laurent polynomial must be an array");
  LaurentPoly p;
  for (const json& term : j)
    p += LaurentPoly::monomial(Rational::parse(term.at("coef").get<std::string>()),
                               json_int(term.at("exp"), "exponent"));
  return p;
}

json graph_to_json(const DualGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  json legs = json::object();
  for (int leg = 1; leg <= g.n(); ++leg) legs[std::to_string(leg)] = g.leg_vertex(leg);
  return json{{"n", g.n()}, {"edges", edges}, {"legs", legs}};
}

DualGraph graph_from_json(const json& j) {
  int n = json_int(j.at("n"), "n");
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw UsageError("json: edge must be a pair");
    int a = json_int(e[0], "edge endpoint"), b = json_int(e[1], "edge endpoint");
    edges.emplace_back(a, b);
    max_vertex = std::max({max_vertex, a, b});
  }
  std::vector<int> leg_vertex(n, -1);
  for (auto it = j.at("legs").begin(); it != j.at("legs").end(); ++it) {
    int leg = 0;
    try {
      leg = std::stoi(it.key());
    } catch (const std::exception&) {
      throw UsageError("json: leg labels must be integers");
    }
    if (leg < 1 || leg > n) throw UsageError("json: leg label out of range");
    leg_vertex[leg - 1] = json_int(it.value(), "leg vertex");
    max_vertex = std::max(max_vertex, leg_vertex[leg - 1]);
  }
  std::vector<std::vector<int>> vertex_legs(max_vertex + 1);
  for (int leg = 1; leg <= n; ++leg) {
    if (leg_vertex[leg - 1] < 0) throw UsageError("json: missing leg assignment");
    vertex_legs[leg_vertex[leg - 1]].push_back(leg);
  }
  return DualGraph::make(n, vertex_legs, edges);
}

json cycle_to_json(const TropicalCycle& c) {
  const Fan& fan = c.fan();
  json rays = json::array();
  for (const IVec& r : fan.rays()) {
    json row = json::array();
    for (const BigInt& x : r) row.push_back(bigint_to_ll(x));
    rays.push_back(row);
  }
  json lineality = json::array();
  for (const IVec& l : fan.lineality()) {
    json row = json::array();
    for (const BigInt& x : l) row.push_back(bigint_to_ll(x));
    lineality.push_back(row);
  }
  json cones = json::array();
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    json cone{{"rays", fan.cones()[i].rays}};
    long long w = c.weight_on(static_cast<int>(i));
    cone["weight"] = w == 0 ? json(nullptr) : json(w);
    cones.push_back(cone);
  }
  return json{{"dim", fan.ambient_dim()}, {"rays", rays}, {"lineality", lineality},
              {"cones", cones}};
}

TropicalCycle cycle_from_json(const json& j) {
  int dim = json_int(j.at("dim"), "ambient dimension");
  if (dim < 0) throw UsageError("json: negative ambient dimension");
  auto read_vectors = [&](const json& arr) {
    IMat out;
    for (const json& row : arr) {
      IVec v;
      for (const json& x : row) v.push_back(BigInt(json_int(x, "vector entry")));
      if (static_cast<int>(v.size()) != dim) throw UsageError("json: vector has wrong dimension");
      out.push_back(std::move(v));
    }
    return out;
  };
  Fan fan(dim, read_vectors(j.at("rays")),
          j.contains("lineality") ? read_vectors(j.at("lineality")) : IMat{});

  std::map<int, long long> weights;
  int cycle_dim = -1;
  if (!j.contains("cones")) throw UsageError("json: fan needs a cones array");
  for (const json& cone : j.at("cones")) {
    std::vector<int> ids;
    for (const json& x : cone.at("rays")) ids.push_back(json_int(x, "ray index"));
    int idx = fan.add_cone(ids);
    if (cone.contains("weight") && !cone.at("weight").is_null()) {
      long long w = cone.at("weight").get<long long>();
      if (w != 0) {
        int d = static_cast<int>(ids.size());
        if (cycle_dim >= 0 && cycle_dim != d)
          throw UsageError("json: weighted cones must share one dimension");
        cycle_dim = d;
        weights[idx] = w;
      }
    }
  }
  if (cycle_dim < 0) cycle_dim = 0;  // zero cycle
  return TropicalCycle(std::move(fan), cycle_dim, std::move(weights));
}

json psi_cycle_to_json(const PsiProductCycle& c, bool embed) {
  json facets = json::array();
  for (const auto& [g, w] : c.facets) facets.push_back({{"graph", graph_to_json(g)}, {"weight", w}});
  json out{{"n", c.n}, {"dim", c.dim}, {"facets", facets}};
  if (c.dim == 0) out["degree"] = c.total_weight();
  if (embed && c.dim >= 1) out["embedding"] = cycle_to_json(embed_cycle(c));
  return out;
}

json handle_enumerate_graphs(int n, bool trivalent_only) {
  const auto& graphs = graph_table(n).all;
  json arr = json::array();
  long long trivalent = 0;
  for (const DualGraph& g : graphs) {
    bool tri = g.is_trivalent();
    trivalent += tri;
    if (!trivalent_only || tri) arr.push_back(graph_to_json(g));
  }
  return json{{"count", arr.size()},
              {"graphs", arr},
              {"total", graphs.size()},
              {"trivalent", trivalent}};
}

json handle_psi_product(int n, const std::vector<int>& k, bool embed, bool strict_vertex_rule) {
  PsiProductCycle c = strict_vertex_rule ? psi_product_strict(n, k) : psi_product(n, k);
  return psi_cycle_to_json(c, embed);
}

json handle_sgw_point(int n, bool show_terms) {
  json out{{"n", n}, {"value", laurent_to_json(sgw_point(n))}};
  if (show_terms) {
    json terms = json::array();
    for (const auto& [k, value] : sgw_point_terms(n))
      terms.push_back({{"k", k}, {"contribution", laurent_to_json(value)}});
    out["terms"] = terms;
  }
  return out;
}

namespace {

const char* base_name(StratumBase base) {
  return base == StratumBase::affine ? "affine" : "p1_toroidal";
}

const char* kind_name(BundleKind kind) {
  switch (kind) {
    case BundleKind::s_u: return "S_U";
    case BundleKind::s_u_dual: return "S_U_dual";
    case BundleKind::trivial: return "trivial";
  }
  return "?";
}

}  // namespace

json handle_sgw_p1(bool audit) {
  SgwP1Result r = sgw_p1_deg1();
  json out{{"target", "P1"}, {"beta", "H"}, {"n", 2}, {"value", laurent_to_json(r.value)}};
  if (audit) {
    json strata = json::array();
    for (const StratumAudit& a : r.strata) {
      json splitting = json::array();
      for (const LineBundleModel& b : a.stratum.splitting)
        splitting.push_back({{"kind", kind_name(b.kind)}, {"m", b.chern_m}});
      json j_terms = json::array();
      for (const JTermResult& t : a.j_terms)
        j_terms.push_back({{"j", t.j},
                           {"kappa_exp", t.kappa_exp},
                           {"sign", t.sign},
                           {"cycle", cycle_to_json(t.cycle)}});
      strata.push_back({{"name", a.stratum.name},
                        {"graph", graph_to_json(a.stratum.graph)},
                        {"base", base_name(a.stratum.base)},
                        {"base_dim", a.stratum.base_dim},
                        {"splitting", splitting},
                        {"j_terms", j_terms}});
    }
    out["strata"] = strata;
  }
  return out;
}

json handle_chern_tp1(int m) {
  TropicalCycle result = chern_cap_tp1(m, p1_fundamental());
  json points = json::array();
  for (const auto& [cone_idx, w] : result.weights()) {
    (void)cone_idx;
    points.push_back({{"cone", "origin"}, {"weight", w}});
  }
  return json{{"cycle", {{"points", points}}}, {"m", m}};
}

json handle_balance_check(const std::string& fan_json_text) {
  json parsed = json::parse(fan_json_text, nullptr, false);
  if (parsed.is_discarded()) throw UsageError("balance-check: malformed JSON");
  TropicalCycle cycle = cycle_from_json(parsed);
  BalanceReport report = check_balancing(cycle);
  json violations = json::array();
  for (const BalanceViolation& v : report.violations) {
    json deficiency = json::array();
    for (const BigInt& x : v.deficiency) deficiency.push_back(bigint_to_ll(x));
    violations.push_back(
        {{"cone_rays", cycle.fan().cones()[v.tau_cone].rays}, {"deficiency", deficiency}});
  }
  return json{{"balanced", report.balanced}, {"violations", violations}};
}

json handle_sections(const std::string& chart_text, int m, int alpha, int beta,
                     const std::string& r_text) {
  Chart chart = parse_chart(chart_text);
  Rational r = r_text.empty() ? Rational(0) : Rational::parse(r_text);
  AffineCandidate cand{alpha, beta, r};
  SectionLattice lattice = section_lattice(chart, m);
  json lat{{"alpha", lattice.linked ? "-m*beta" : (lattice.alpha_free ? "any integer" : "0")},
           {"beta", lattice.linked ? "any integer" : (lattice.beta_free ? "any integer" : "0")},
           {"r", "any rational"},
           {"m_dependent", lattice.linked}};
  return json{{"chart", chart_name(chart)},
              {"m", m},
              {"candidate", {{"alpha", alpha}, {"beta", beta}, {"r", r.str()}}},
              {"is_section", is_section(cand, chart, m)},
              {"lattice", lat}};
}

json handle_verify_all() {
  json criteria = json::array();
  bool all = true;
  for (const auto& c : verify::run_all_criteria()) {
    criteria.push_back(
        {{"id", c.id}, {"description", c.description}, {"pass", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  return json{{"all_passed", all}, {"criteria", criteria}, {"version", TROPGW_VERSION_STRING}};
}

}  // namespace tropgw::io
