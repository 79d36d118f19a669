#include "spinor.hpp"

#include <algorithm>

#include "error.hpp"

namespace tropgw {

const std::vector<Chart>& all_charts() {
  static const std::vector<Chart> charts = {
      Chart::minus_inf_inf, Chart::minus_x_inf, Chart::zero_inf, Chart::x_inf, Chart::inf_inf,
      Chart::minus_inf_y,   Chart::minus_x_y,   Chart::zero_y,   Chart::x_y,   Chart::inf_y,
  };
  return charts;
}

std::string chart_name(Chart c) {
  switch (c) {
    case Chart::minus_inf_inf: return "U-infinf";
    case Chart::minus_x_inf: return "U-xinf";
    case Chart::zero_inf: return "U0inf";
    case Chart::x_inf: return "Uxinf";
    case Chart::inf_inf: return "Uinfinf";
    case Chart::minus_inf_y: return "U-infy";
    case Chart::minus_x_y: return "U-xy";
    case Chart::zero_y: return "U0y";
    case Chart::x_y: return "Uxy";
    case Chart::inf_y: return "Uinfy";
  }
  throw UsageError("unknown chart");
}

Chart parse_chart(const std::string& name) {
  for (Chart c : all_charts())
    if (chart_name(c) == name) return c;
  throw UsageError("unknown chart '" + name + "'");
}

// Chart-by-chart constraints. Charts touching an infinite end of a
// coordinate force the corresponding slope to vanish; on U0y the fiber and
// base slopes are linked by the twist, alpha + m*beta = 0; near the
// zero-dimensional corners both slope lattices are free.
SectionLattice section_lattice(Chart chart, int m) {
  SectionLattice l;
  l.m = m;
  switch (chart) {
    case Chart::minus_inf_inf:
    case Chart::zero_inf:
    case Chart::inf_inf:
    case Chart::inf_y:
      break;  // alpha = beta = 0
    case Chart::minus_x_inf:
    case Chart::x_inf:
      l.alpha_free = true;
      break;
    case Chart::minus_inf_y:
      l.beta_free = true;
      break;
    case Chart::minus_x_y:
    case Chart::x_y:
      l.alpha_free = true;
      l.beta_free = true;
      break;
    case Chart::zero_y:
      l.linked = true;
      break;
  }
  return l;
}

bool SectionLattice::admits(int alpha, int beta) const {
  if (linked) return alpha + m * beta == 0;
  if (!alpha_free && alpha != 0) return false;
  if (!beta_free && beta != 0) return false;
  return true;
}

bool is_section(const AffineCandidate& c, Chart chart, int m) {
  return section_lattice(chart, m).admits(c.alpha, c.beta);
}

AffineCandidate torsor_difference(Chart chart, int m, const AffineCandidate& s1,
                                  const AffineCandidate& s2) {
  if (!is_section(s1, chart, m) || !is_section(s2, chart, m))
    throw DomainError("torsor_difference: inputs must be sections");
  return AffineCandidate{s2.alpha - s1.alpha, s2.beta - s1.beta, s2.r - s1.r};
}

bool nodal_glue_check(const NodalSectionTuple& t) {
  const int nc = static_cast<int>(t.components.size());
  for (const NodeMatching& nm : t.matchings) {
    if (nm.comp_a < 0 || nm.comp_a >= nc || nm.comp_b < 0 || nm.comp_b >= nc)
      throw UsageError("nodal_glue_check: matching references a missing component");
    if (t.components[nm.comp_a].eval(nm.point_a) != t.components[nm.comp_b].eval(nm.point_b))
      return false;
  }
  return true;
}

std::vector<ComponentSection> torsor_difference(const NodalSectionTuple& s1,
                                                const NodalSectionTuple& s2) {
  if (s1.components.size() != s2.components.size())
    throw UsageError("torsor_difference: component counts differ");
  auto same_matching = [](const NodeMatching& a, const NodeMatching& b) {
    return a.comp_a == b.comp_a && a.point_a == b.point_a && a.comp_b == b.comp_b &&
           a.point_b == b.point_b;
  };
  if (s1.matchings.size() != s2.matchings.size() ||
      !std::equal(s1.matchings.begin(), s1.matchings.end(), s2.matchings.begin(), same_matching))
    throw UsageError("torsor_difference: sections live on different nodal curves");
  if (!nodal_glue_check(s1) || !nodal_glue_check(s2))
    throw DomainError("torsor_difference: torsor condition fails (inputs do not glue)");
  std::vector<ComponentSection> diff;
  diff.reserve(s1.components.size());
  for (std::size_t i = 0; i < s1.components.size(); ++i)
    diff.push_back(ComponentSection{s2.components[i].slope - s1.components[i].slope,
                                    s2.components[i].constant - s1.components[i].constant});
  return diff;
}

}  // namespace tropgw
