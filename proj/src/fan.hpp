#pragma once

#include <map>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "rational.hpp"

namespace tropgw {

using lat::IMat;
using lat::IVec;

// A cone is the set of its ray indices (sorted); the origin cone is empty.
// Cones are simplicial modulo the lineality space, so faces are exactly the
// ray subsets.
struct Cone {
  std::vector<int> rays;
  int ray_dim() const { return static_cast<int>(rays.size()); }
};

class Fan {
 public:
  Fan() = default;
  Fan(int ambient_dim, IMat rays, IMat lineality);

  int ambient_dim() const { return ambient_dim_; }
  const IMat& rays() const { return rays_; }
  const IMat& lineality() const { return lineality_; }
  const std::vector<Cone>& cones() const { return cones_; }

  // Registers the cone (and nothing else); returns its index. Duplicate ray
  // sets collapse to the existing index.
  int add_cone(std::vector<int> ray_ids);
  int find_cone(const std::vector<int>& ray_ids) const;  // -1 when absent
  std::vector<int> cones_of_ray_dim(int d) const;

  // Throws DomainError when rays are zero/non-primitive, indices are out of
  // range, faces are missing, or a cone's rays are dependent mod lineality.
  void validate() const;

  IMat cone_ray_vectors(int cone_idx) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rays_ == b.rays_ &&
           a.lineality_ == b.lineality_ && a.cone_keys_equal(b);
  }

 private:
  bool cone_keys_equal(const Fan& other) const;

  int ambient_dim_ = 0;
  IMat rays_;
  IMat lineality_;
  std::vector<Cone> cones_;
  std::map<std::vector<int>, int> cone_index_;
};

// Weighted fan of pure dimension `dim` (ray dimension, i.e. not counting the
// lineality space). Zero weights are never stored; the zero cycle has an
// empty weight map and may carry dim -1 after a cap in excess codimension.
class TropicalCycle {
 public:
  TropicalCycle() = default;
  TropicalCycle(Fan fan, int dim, std::map<int, long long> weights);

  const Fan& fan() const { return fan_; }
  int dim() const { return dim_; }
  const std::map<int, long long>& weights() const { return weights_; }
  bool is_zero() const { return weights_.empty(); }
  long long weight_on(int cone_idx) const;

  // weights keyed by the cones' ray sets, independent of insertion order
  std::map<std::vector<int>, long long> weights_by_rays() const;

  friend bool operator==(const TropicalCycle& a, const TropicalCycle& b) {
    return a.fan_ == b.fan_ && a.weights_by_rays() == b.weights_by_rays() &&
           (a.is_zero() || b.is_zero() || a.dim_ == b.dim_);
  }

 private:
  Fan fan_;
  int dim_ = 0;
  std::map<int, long long> weights_;
};

struct BalanceViolation {
  int tau_cone;
  IVec deficiency;  // weighted sum of primitive normals at tau
};

struct BalanceReport {
  bool balanced = true;
  std::vector<BalanceViolation> violations;
};

// Balancing at every codimension-one cone, modulo the cone's span plus the
// lineality space. Validates the fan first.
BalanceReport check_balancing(const TropicalCycle& cycle);

// Lattice normal of sigma relative to its facet tau, through the fan's
// lineality space.
IVec primitive_normal(const Fan& fan, const Cone& sigma, const Cone& tau);

// Integer linear form per maximal (weighted) cone, plus a rational constant.
// Continuity across shared faces (and over the lineality space) is enforced
// when the function is used.
class PLFunction {
 public:
  explicit PLFunction(Fan fan) : fan_(std::move(fan)) {}
  void set_form(int cone_idx, IVec covector, Rational constant = Rational(0));
  const Fan& fan() const { return fan_; }
  bool has_form(int cone_idx) const { return forms_.count(cone_idx) > 0; }
  const IVec& covector(int cone_idx) const;
  const Rational& constant(int cone_idx) const;

 private:
  struct Form {
    IVec covector;
    Rational constant;
  };
  Fan fan_;
  std::map<int, Form> forms_;
};

// Weil divisor of f on the cycle: the codimension-one cycle whose weight at
// tau is  sum_sigma w(sigma) f_sigma(u_{sigma/tau}) - f_tau(sum_sigma
// w(sigma) u_{sigma/tau}).  Requires a balanced input.
TropicalCycle divisor(const PLFunction& f, const TropicalCycle& cycle);

TropicalCycle add_cycles(const TropicalCycle& a, const TropicalCycle& b);
TropicalCycle zero_cycle(const Fan& fan, int dim);

// The fan of P^1: ambient dimension 1, rays +1 and -1, and the origin.
Fan p1_fan();
TropicalCycle p1_fundamental();

// c1(Trop(O(m))) capped against a cycle on the fan of P^1, via the bending of the
// piecewise-linear function that is -m x on the chart containing -infinity
// and 0 on the other chart; the fundamental cycle caps to m times the origin.
TropicalCycle chern_cap_tp1(int m, const TropicalCycle& cycle);

// Sum of the weights of a zero-dimensional cycle.
long long degree(const TropicalCycle& cycle);

}  // namespace tropgw
