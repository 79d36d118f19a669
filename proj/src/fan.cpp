#include "fan.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace tropgw {

namespace {

BigInt vec_gcd(const IVec& v) {
  BigInt g = 0;
  for (const BigInt& x : v) g = boost::multiprecision::gcd(g, abs(x));
  return g;
}

long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw DomainError("weight overflow");
  return static_cast<long long>(v);
}

}  // namespace

Fan::Fan(int ambient_dim, IMat rays, IMat lineality)
    : ambient_dim_(ambient_dim), rays_(std::move(rays)), lineality_(std::move(lineality)) {
  for (const IVec& r : rays_)
    if (static_cast<int>(r.size()) != ambient_dim_)
      throw UsageError("fan: ray has wrong dimension");
  for (const IVec& l : lineality_)
    if (static_cast<int>(l.size()) != ambient_dim_)
      throw UsageError("fan: lineality generator has wrong dimension");
}

int Fan::add_cone(std::vector<int> ray_ids) {
  std::sort(ray_ids.begin(), ray_ids.end());
  auto it = cone_index_.find(ray_ids);
  if (it != cone_index_.end()) return it->second;
  for (int id : ray_ids)
    if (id < 0 || id >= static_cast<int>(rays_.size()))
      throw UsageError("fan: cone references unknown ray");
  int idx = static_cast<int>(cones_.size());
  cones_.push_back(Cone{ray_ids});
  cone_index_.emplace(std::move(ray_ids), idx);
  return idx;
}

int Fan::find_cone(const std::vector<int>& ray_ids) const {
  std::vector<int> sorted(ray_ids);
  std::sort(sorted.begin(), sorted.end());
  auto it = cone_index_.find(sorted);
  return it == cone_index_.end() ? -1 : it->second;
}

std::vector<int> Fan::cones_of_ray_dim(int d) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].ray_dim() == d) out.push_back(static_cast<int>(i));
  return out;
}

IMat Fan::cone_ray_vectors(int cone_idx) const {
  IMat out;
  for (int id : cones_[cone_idx].rays) out.push_back(rays_[id]);
  return out;
}

bool Fan::cone_keys_equal(const Fan& other) const {
  if (cone_index_.size() != other.cone_index_.size()) return false;
  for (const auto& [key, idx] : cone_index_)
    if (!other.cone_index_.count(key)) return false;
  return true;
}

void Fan::validate() const {
  const int lin_rank = lat::rational_rank(lineality_);
  for (const IVec& r : rays_) {
    if (vec_gcd(r) != 1) throw DomainError("fan: rays must be primitive nonzero vectors");
  }
  for (const Cone& c : cones_) {
    for (std::size_t i = 1; i < c.rays.size(); ++i)
      if (c.rays[i - 1] >= c.rays[i]) throw DomainError("fan: cone rays must be strictly sorted");
    IMat span(lineality_);
    for (int id : c.rays) span.push_back(rays_[id]);
    if (lat::rational_rank(span) != lin_rank + c.ray_dim())
      throw DomainError("fan: cone rays dependent modulo lineality");
    // face closure: dropping any one ray must give a listed cone
    if (!c.rays.empty()) {
      for (std::size_t skip = 0; skip < c.rays.size(); ++skip) {
        std::vector<int> face;
        for (std::size_t i = 0; i < c.rays.size(); ++i)
          if (i != skip) face.push_back(c.rays[i]);
        if (find_cone(face) < 0) throw DomainError("fan: not closed under taking faces");
      }
    }
  }
}

TropicalCycle::TropicalCycle(Fan fan, int dim, std::map<int, long long> weights)
    : fan_(std::move(fan)), dim_(dim) {
  for (const auto& [cone_idx, w] : weights) {
    if (w == 0) continue;
    if (cone_idx < 0 || cone_idx >= static_cast<int>(fan_.cones().size()))
      throw UsageError("cycle: weight on unknown cone");
    if (fan_.cones()[cone_idx].ray_dim() != dim)
      throw UsageError("cycle: weighted cone has wrong dimension");
    weights_.emplace(cone_idx, w);
  }
}

long long TropicalCycle::weight_on(int cone_idx) const {
  auto it = weights_.find(cone_idx);
  return it == weights_.end() ? 0 : it->second;
}

std::map<std::vector<int>, long long> TropicalCycle::weights_by_rays() const {
  std::map<std::vector<int>, long long> out;
  for (const auto& [idx, w] : weights_) out.emplace(fan_.cones()[idx].rays, w);
  return out;
}

IVec primitive_normal(const Fan& fan, const Cone& sigma, const Cone& tau) {
  IMat sigma_rays, tau_rays;
  for (int id : sigma.rays) sigma_rays.push_back(fan.rays()[id]);
  for (int id : tau.rays) tau_rays.push_back(fan.rays()[id]);
  return lat::primitive_normal(fan.ambient_dim(), fan.lineality(), sigma_rays, tau_rays);
}

namespace {

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

BalanceReport check_balancing(const TropicalCycle& cycle) {
  cycle.fan().validate();
  BalanceReport report;
  const Fan& fan = cycle.fan();
  const int k = cycle.dim();
  if (cycle.is_zero() || k <= 0) return report;

  for (int tau_idx : fan.cones_of_ray_dim(k - 1)) {
    const Cone& tau = fan.cones()[tau_idx];
    IVec sum(fan.ambient_dim(), 0);
    bool any = false;
    for (const auto& [sigma_idx, w] : cycle.weights()) {
      const Cone& sigma = fan.cones()[sigma_idx];
      if (!is_subset(tau.rays, sigma.rays)) continue;
      any = true;
      lat::add_scaled(sum, primitive_normal(fan, sigma, tau), BigInt(w));
    }
    if (!any) continue;
    IMat span(fan.lineality());
    for (int id : tau.rays) span.push_back(fan.rays()[id]);
    if (!lat::in_rational_span(span, sum)) {
      report.balanced = false;
      report.violations.push_back(BalanceViolation{tau_idx, std::move(sum)});
    }
  }
  return report;
}

void PLFunction::set_form(int cone_idx, IVec covector, Rational constant) {
  if (cone_idx < 0 || cone_idx >= static_cast<int>(fan_.cones().size()))
    throw UsageError("pl function: unknown cone");
  if (static_cast<int>(covector.size()) != fan_.ambient_dim())
    throw UsageError("pl function: covector has wrong dimension");
  forms_[cone_idx] = Form{std::move(covector), std::move(constant)};
}

const IVec& PLFunction::covector(int cone_idx) const {
  auto it = forms_.find(cone_idx);
  if (it == forms_.end()) throw DomainError("pl function: no form on cone");
  return it->second.covector;
}

const Rational& PLFunction::constant(int cone_idx) const {
  auto it = forms_.find(cone_idx);
  if (it == forms_.end()) throw DomainError("pl function: no form on cone");
  return it->second.constant;
}

TropicalCycle divisor(const PLFunction& f, const TropicalCycle& cycle) {
  const Fan& fan = cycle.fan();
  if (!(f.fan() == fan)) throw UsageError("divisor: function lives on a different fan");
  BalanceReport input = check_balancing(cycle);
  if (!input.balanced) throw DomainError("divisor: input cycle is not balanced");

  const int k = cycle.dim();
  if (cycle.is_zero() || k <= 0) return zero_cycle(fan, k - 1);

  for (const auto& [sigma_idx, w] : cycle.weights()) {
    (void)w;
    if (!f.has_form(sigma_idx)) throw DomainError("divisor: function undefined on support");
  }

  // Continuity: forms agree on every shared face and on the lineality space,
  // and (all cones containing the origin) the constants all coincide.
  {
    const auto& ws = cycle.weights();
    for (auto it1 = ws.begin(); it1 != ws.end(); ++it1)
      for (auto it2 = std::next(it1); it2 != ws.end(); ++it2) {
        const Cone& c1 = fan.cones()[it1->first];
        const Cone& c2 = fan.cones()[it2->first];
        if (f.constant(it1->first) != f.constant(it2->first))
          throw DomainError("divisor: function is discontinuous (constants differ)");
        std::vector<int> shared;
        std::set_intersection(c1.rays.begin(), c1.rays.end(), c2.rays.begin(), c2.rays.end(),
                              std::back_inserter(shared));
        const IVec& w1 = f.covector(it1->first);
        const IVec& w2 = f.covector(it2->first);
        for (int id : shared)
          if (lat::dot(w1, fan.rays()[id]) != lat::dot(w2, fan.rays()[id]))
            throw DomainError("divisor: function is discontinuous across a face");
        for (const IVec& l : fan.lineality())
          if (lat::dot(w1, l) != lat::dot(w2, l))
            throw DomainError("divisor: function is discontinuous along lineality");
      }
  }

  std::map<int, long long> out;
  for (int tau_idx : fan.cones_of_ray_dim(k - 1)) {
    const Cone& tau = fan.cones()[tau_idx];
    BigInt total = 0;
    IVec sum(fan.ambient_dim(), 0);
    int first_sigma = -1;
    for (const auto& [sigma_idx, w] : cycle.weights()) {
      const Cone& sigma = fan.cones()[sigma_idx];
      if (!is_subset(tau.rays, sigma.rays)) continue;
      if (first_sigma < 0) first_sigma = sigma_idx;
      IVec u = primitive_normal(fan, sigma, tau);
      total += BigInt(w) * lat::dot(f.covector(sigma_idx), u);
      lat::add_scaled(sum, u, BigInt(w));
    }
    if (first_sigma < 0) continue;
    // The correction term uses any adjacent form: balancing puts the summed
    // normal in span(tau) + lineality, where all adjacent forms agree.
    total -= lat::dot(f.covector(first_sigma), sum);
    if (total != 0) out[tau_idx] = to_ll(total);
  }
  return TropicalCycle(fan, k - 1, std::move(out));
}

TropicalCycle add_cycles(const TropicalCycle& a, const TropicalCycle& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!(a.fan() == b.fan())) throw UsageError("add_cycles: fans differ");
  if (a.dim() != b.dim()) throw UsageError("add_cycles: dimensions differ");
  std::map<int, long long> weights = a.weights();
  for (const auto& [c, w] : b.weights()) {
    long long& slot = weights[c];
    slot += w;
    if (slot == 0) weights.erase(c);
  }
  return TropicalCycle(a.fan(), a.dim(), std::move(weights));
}

TropicalCycle zero_cycle(const Fan& fan, int dim) { return TropicalCycle(fan, dim, {}); }

Fan p1_fan() {
  Fan fan(1, IMat{{BigInt(1)}, {BigInt(-1)}}, IMat{});
  fan.add_cone({});
  fan.add_cone({0});
  fan.add_cone({1});
  return fan;
}

TropicalCycle p1_fundamental() {
  Fan fan = p1_fan();
  std::map<int, long long> w{{fan.find_cone({0}), 1}, {fan.find_cone({1}), 1}};
  return TropicalCycle(fan, 1, std::move(w));
}

TropicalCycle chern_cap_tp1(int m, const TropicalCycle& cycle) {
  if (!(cycle.fan() == p1_fan())) throw DomainError("chern_cap_tp1: expects the fan of P^1");
  if (cycle.dim() <= 0 || cycle.is_zero())
    return zero_cycle(cycle.fan(), cycle.dim() - 1);  // cap in excess codimension
  const Fan& fan = cycle.fan();
  PLFunction f(fan);
  f.set_form(fan.find_cone({0}), IVec{BigInt(0)});   // chart containing +infinity
  f.set_form(fan.find_cone({1}), IVec{BigInt(-m)});  // chart containing -infinity
  return divisor(f, cycle);
}

long long degree(const TropicalCycle& cycle) {
  if (cycle.dim() > 0) throw DomainError("degree: cycle has positive dimension");
  long long sum = 0;
  for (const auto& [cone, w] : cycle.weights()) {
    (void)cone;
    sum += w;
  }
  return sum;
}

}  // namespace tropgw
