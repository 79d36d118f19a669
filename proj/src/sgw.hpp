#pragma once

#include <string>
#include <vector>

#include "dual_graph.hpp"
#include "fan.hpp"
#include "laurent.hpp"
#include "psi.hpp"

namespace tropgw {

enum class Target { point, p1 };

// Target + curve class data. c1_beta is the degree of c1(TX) on the class:
// 0 for a point, 2d for degree-d maps to P1.
struct TargetModel {
  Target target = Target::point;
  int c1_beta = 0;
  int n = 0;

  int susy_rank() const;  // c1_beta + n - 2
  int virdim() const;     // dim X + c1_beta + n - 3
};

int susy_rank(int n, int c1_beta);

enum class BundleKind { s_u, s_u_dual, trivial };

// One line-bundle factor of the stratum splitting. chern_m is the tropical
// first Chern degree on the stratum base: +1 for S_U on (P1, 2H), -1 for its
// dual, 0 on affine bases.
struct LineBundleModel {
  BundleKind kind = BundleKind::trivial;
  int chern_m = 0;
};

enum class StratumBase { affine, p1_toroidal };

// (n-2) copies of S_U plus c1_beta copies of its dual; on an affine base all
// factors trivialize.
std::vector<LineBundleModel> product_family_splitting(int n, int c1_beta, StratumBase base);

// Per-stratum data feeding the Euler-series evaluation.
struct StratumModel {
  std::string name;
  DualGraph graph;  // dual-graph type of the stratum (map graphs allowed)
  StratumBase base = StratumBase::affine;
  int base_dim = 0;
  std::vector<LineBundleModel> splitting;
};

// One term of the truncated inverse equivariant Euler series
//   sum_{j=0}^{base_dim} (-1)^j kappa^-(rank+j)
//     sum_{i_1+...+i_rank=j} c1(N_1)^{i_1} ... c1(N_rank)^{i_rank}.
// Truncating at j = base_dim is exact: higher caps land in negative dimension.
struct EulerTerm {
  int j = 0;
  int kappa_exp = 0;  // -(rank + j)
  int sign = 1;       // (-1)^j
  std::vector<std::vector<int>> tuples;  // exponent tuples of length rank
};

std::vector<EulerTerm> inverse_equivariant_euler(const std::vector<LineBundleModel>& splitting,
                                                 int base_dim);

// c1 of one factor capped against a cycle: zero for trivial factors,
// chern_cap_tp1 for the (P1, 2H) factors.
TropicalCycle cap_c1(const LineBundleModel& bundle, const TropicalCycle& cycle);

struct JTermResult {
  int j = 0;
  int kappa_exp = 0;
  int sign = 1;
  TropicalCycle cycle;  // sum over the term's exponent tuples of the caps
};

// Evaluates the series term by term against the stratum cycle alpha.
std::vector<JTermResult> evaluate_euler_series(const std::vector<LineBundleModel>& splitting,
                                               int base_dim, const TropicalCycle& alpha);

// Value of the W function: scalar and/or prefactor-tagged psi-product cycle.
struct EquivariantResult {
  struct CycleTerm {
    int kappa_exp = 0;
    Rational coef;
    PsiProductCycle cycle;
  };
  LaurentPoly value;
  std::vector<CycleTerm> cycle_terms;

  bool is_zero() const { return value.is_zero() && cycle_terms.empty(); }
};

// W(Gamma, k1..kn): with s = k_4 + ... + k_n,
//   s > n-3  ->  0,
//   s = n-3  ->  (-1)^(n-3)/2^(n-3) kappa^-(2n-5) * psi_degree,
//   s < n-3  ->  the same prefactor paired with the psi-product cycle.
// k_1..k_3 are stored but not consumed. n = 3 is the empty-product case.
EquivariantResult w_function(const DecoratedDualGraph& g);

// Super Gromov-Witten invariant of a point: the sum of W over decorated
// smooth graphs with k_4+...+k_n = n-3.
LaurentPoly sgw_point(int n);
std::vector<std::pair<std::vector<int>, LaurentPoly>> sgw_point_terms(int n);

struct StratumAudit {
  StratumModel stratum;
  std::vector<JTermResult> j_terms;
};

struct SgwP1Result {
  LaurentPoly value;
  std::vector<StratumAudit> strata;
};

// Degree-1, 2-marked invariant of P1: kappa^-4 together with the per-stratum
// Euler-series audit trail (smooth stratum with trivial splitting, boundary
// stratum with the O(-1) + O(-1) splitting on (P1, 2H)).
SgwP1Result sgw_p1_deg1();

// Target-checked entry: only (P1, c1 = 2, n = 2) ships with validated
// stratum data; anything else is an unsupported-target error.
SgwP1Result sgw_p1(const TargetModel& target);

enum class InvariantRegime { ordinary, super, zero };

// Classifies by comparing the total insertion degree with the virtual
// dimension: equal -> ordinary GW times a kappa power, below -> genuinely
// super, above -> zero.
InvariantRegime sgw_definition_check(const std::vector<int>& alpha_degrees,
                                     const TargetModel& target);

}  // namespace tropgw
