#pragma once

#include <map>
#include <vector>

#include "dual_graph.hpp"
#include "fan.hpp"

namespace tropgw {

// Weighted subcomplex of the moduli cone complex indexed by dual graphs.
// Facets of Psi_1^{k_1}...Psi_n^{k_n} are the graphs whose every vertex V
// satisfies val(V) = K(V) + 3 with K(V) the sum of exponents on its legs;
// the facet weight is prod_V K(V)! / prod_i k_i!.
struct PsiProductCycle {
  int n = 0;
  int dim = 0;  // n - 3 - sum(k); negative for the zero cycle
  std::map<DualGraph, long long> facets;

  bool is_zero() const { return facets.empty(); }
  long long total_weight() const;
};

// Exponent sums above n-3 yield the zero cycle (empty facet set).
PsiProductCycle psi_product(int n, const std::vector<int>& k);

// Variant applying the vertex rule val(V) + 3 = K(V) verbatim; exposed so the
// discrepancy with the rule above stays observable. Returns the empty cycle
// for every top-dimensional exponent vector at desk scale.
PsiProductCycle psi_product_strict(int n, const std::vector<int>& k);

// Psi_i: the single-class cycle, facets of dimension n-4 where leg i meets a
// vertex of valence exactly 4.
PsiProductCycle psi_class(int n, int i);

// Total weight of the zero-dimensional product; requires sum(k) = n-3.
long long psi_degree(int n, const std::vector<int>& k);

// Coordinates in Q^(n choose 2): entry (i<j) is the number of internal edges
// on the path between the vertices of legs i and j (unit edge lengths).
IVec distance_vector(const DualGraph& g);

// Image of a |-> (a_i + a_j): the lineality space of the embedded complex.
IMat distance_lineality(int n);

// The psi-product cycle as a weighted fan in Q^(n choose 2) modulo the
// lineality space: one ray per one-edge graph, one cone per facet graph,
// closed under edge contraction. Requires dim >= 1.
TropicalCycle embed_cycle(const PsiProductCycle& cycle);

}  // namespace tropgw
