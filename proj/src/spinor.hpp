#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace tropgw {

// The ten charts covering the cone complex of Trop(O(m)) over the fan of P1:
// x runs along the base (with its two infinities), y along the fiber ray.
// Chart names pair an x-position in {-inf, -x, 0, x, inf} with a y-position
// in {inf, y}.
enum class Chart {
  minus_inf_inf,
  minus_x_inf,
  zero_inf,
  x_inf,
  inf_inf,
  minus_inf_y,
  minus_x_y,
  zero_y,
  x_y,
  inf_y,
};

const std::vector<Chart>& all_charts();
std::string chart_name(Chart c);        // e.g. "U0y", "U-xinf"
Chart parse_chart(const std::string&);  // throws UsageError on unknown names

// Candidate affine function alpha*x + beta*y + r (integer slopes, rational
// constant; candidates need not be sections).
struct AffineCandidate {
  int alpha = 0;
  int beta = 0;
  Rational r;
};

// Constraint set cutting out the affine sections on one chart. The constant
// r is free everywhere; on the linked chart the slopes satisfy
// alpha + m*beta = 0.
struct SectionLattice {
  bool alpha_free = false;
  bool beta_free = false;
  bool linked = false;  // alpha + m*beta = 0 (chart U0y)
  int m = 0;

  bool admits(int alpha, int beta) const;
};

SectionLattice section_lattice(Chart chart, int m);

bool is_section(const AffineCandidate& c, Chart chart, int m);

// Difference s2 - s1 on a chart; both must be sections (the result then lies
// in the same slope lattice automatically).
AffineCandidate torsor_difference(Chart chart, int m, const AffineCandidate& s1,
                                  const AffineCandidate& s2);

// Affine section of Trop(O(1)) on one P1-component, in that component's
// coordinate.
struct ComponentSection {
  int slope = 0;
  Rational constant;

  Rational eval(const Rational& x) const { return Rational(slope) * x + constant; }
};

struct NodeMatching {
  int comp_a = 0;
  Rational point_a;
  int comp_b = 0;
  Rational point_b;
};

// Per-component sections plus the node identifications of a genus-0 nodal
// curve; a tuple is a section of the tropical spinor sheaf iff matched values
// agree.
struct NodalSectionTuple {
  std::vector<ComponentSection> components;
  std::vector<NodeMatching> matchings;
};

// True iff every matched pair of node-preimage values agrees. Throws
// UsageError for matchings referencing missing components.
bool nodal_glue_check(const NodalSectionTuple& t);

// Componentwise difference s2 - s1 on a node neighborhood. Both tuples must
// satisfy the gluing condition (so the difference does too); otherwise the
// torsor condition fails and a DomainError is thrown.
std::vector<ComponentSection> torsor_difference(const NodalSectionTuple& s1,
                                                const NodalSectionTuple& s2);

}  // namespace tropgw
