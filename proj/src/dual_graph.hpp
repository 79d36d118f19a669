#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tropgw {

// Combinatorial type of a genus-0 curve with n labeled legs: a tree whose
// vertices carry the legs. Instances are kept in a canonical labeling
// (vertex 0 carries leg 1, remaining vertices follow in depth-first order
// with sibling subtrees ordered by their smallest leg), so equality of the
// stored data is isomorphism of leg-labeled graphs. For leg-labeled genus-0
// trees the automorphism group fixing the legs is trivial, which is what
// makes a single canonical representative per class possible.
class DualGraph {
 public:
  DualGraph() = default;

  // vertex_legs[v] lists the legs carried by vertex v; edges join vertex
  // indices. The legs must be exactly 1..n and the edges must form a tree.
  // Stability (valence >= 3 everywhere) is *not* required here; use
  // is_stable() or enumerate_dual_graphs for stable types.
  static DualGraph make(int n, const std::vector<std::vector<int>>& vertex_legs,
                        const std::vector<std::pair<int, int>>& edges);

  static DualGraph smooth(int n);  // single vertex carrying all legs

  int n() const { return n_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool is_smooth() const { return edges_.empty(); }

  int leg_vertex(int leg) const;          // 1-based leg label
  std::vector<int> legs_at(int v) const;  // sorted leg labels on vertex v
  int valence(int v) const;               // incident edges + legs
  bool is_stable() const;                 // every valence >= 3
  bool is_trivalent() const;              // every valence == 3

  DualGraph contract_edge(int edge_index) const;

  // Canonical textual encoding; doubles as a map/set key.
  std::string key() const;

  friend bool operator==(const DualGraph& a, const DualGraph& b) {
    return a.n_ == b.n_ && a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_ &&
           a.leg_vertex_ == b.leg_vertex_;
  }
  friend bool operator!=(const DualGraph& a, const DualGraph& b) { return !(a == b); }
  friend bool operator<(const DualGraph& a, const DualGraph& b) { return a.key() < b.key(); }

 private:
  static DualGraph canonical_from(int n, const std::vector<std::vector<int>>& vertex_legs,
                                  const std::vector<std::pair<int, int>>& edges);

  int n_ = 0;
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;  // (v, w) with v < w, sorted
  std::vector<int> leg_vertex_;             // leg i sits on leg_vertex_[i-1]
};

// Dual graph together with psi-exponents k_1..k_n on the legs.
struct DecoratedDualGraph {
  DualGraph graph;
  std::vector<int> k;
};

// Sum of k_i over the legs carried by vertex v.
int vertex_leg_exponent_sum(const DecoratedDualGraph& g, int v);

// All stable genus-0 dual graphs with legs 1..n, one canonical representative
// per isomorphism class, in a deterministic order. Throws for n < 3.
std::vector<DualGraph> enumerate_dual_graphs(int n);

// Number of graphs in enumerate_dual_graphs(n) with all valences equal to 3.
long long count_trivalent(int n);

// Cached enumeration, grouped by vertex count. by_vertex_count[v] indexes
// graphs with exactly v vertices (v >= 1).
struct GraphTable {
  std::vector<DualGraph> all;
  std::vector<std::vector<int>> by_vertex_count;
};
const GraphTable& graph_table(int n);

}  // namespace tropgw
