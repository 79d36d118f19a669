#include "dual_graph.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "error.hpp"

namespace tropgw {

DualGraph DualGraph::make(int n, const std::vector<std::vector<int>>& vertex_legs,
                          const std::vector<std::pair<int, int>>& edges) {
  const int nv = static_cast<int>(vertex_legs.size());
  if (n < 1 || nv < 1) throw UsageError("dual graph: need at least one leg and one vertex");
  if (static_cast<int>(edges.size()) != nv - 1)
    throw DomainError("dual graph: edge count must be vertex count - 1 (tree)");

  std::vector<int> seen(n + 1, 0);
  for (int v = 0; v < nv; ++v)
    for (int leg : vertex_legs[v]) {
      if (leg < 1 || leg > n || seen[leg]++) throw UsageError("dual graph: legs must be exactly 1..n");
    }
  for (int leg = 1; leg <= n; ++leg)
    if (!seen[leg]) throw UsageError("dual graph: legs must be exactly 1..n");

  std::vector<std::vector<int>> adj(nv);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= nv || b < 0 || b >= nv || a == b)
      throw UsageError("dual graph: bad edge endpoints");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // connectivity; with |E| = |V|-1 this makes the graph a tree
  std::vector<int> stack{0}, mark(nv, 0);
  mark[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!mark[w]) {
        mark[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != nv) throw DomainError("dual graph: not connected");

  return canonical_from(n, vertex_legs, edges);
}

DualGraph DualGraph::smooth(int n) {
  std::vector<int> legs(n);
  std::iota(legs.begin(), legs.end(), 1);
  return make(n, {legs}, {});
}

// Rebuilds the canonical labeling: root at the vertex carrying leg 1, then
// depth-first with children ordered by the smallest leg in their subtree
// (ties, which only occur for leg-less subtrees, broken by subtree size).
DualGraph DualGraph::canonical_from(int n, const std::vector<std::vector<int>>& vertex_legs,
                                    const std::vector<std::pair<int, int>>& in_edges) {
  const int nv = static_cast<int>(vertex_legs.size());
  std::vector<std::vector<int>> adj(nv);
  for (auto [a, b] : in_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  int root = 0;
  std::vector<int> min_leg(nv, INT_MAX);
  for (int v = 0; v < nv; ++v)
    for (int leg : vertex_legs[v]) {
      min_leg[v] = std::min(min_leg[v], leg);
      if (leg == 1) root = v;
    }

  // post-order pass: smallest leg and size of each rooted subtree
  std::vector<int> parent(nv, -1), order;
  order.reserve(nv);
  std::vector<int> stack{root};
  std::vector<char> visited(nv, 0);
  visited[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[v])
      if (!visited[w]) {
        visited[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<int> sub_min(min_leg), sub_size(nv, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent[v] >= 0) {
      sub_min[parent[v]] = std::min(sub_min[parent[v]], sub_min[v]);
      sub_size[parent[v]] += sub_size[v];
    }
  }

  // preorder relabeling with sorted children
  std::vector<int> new_id(nv, -1);
  int counter = 0;
  std::vector<int> dfs{root};
  while (!dfs.empty()) {
    int v = dfs.back();
    dfs.pop_back();
    new_id[v] = counter++;
    std::vector<int> children;
    for (int w : adj[v])
      if (w != parent[v]) children.push_back(w);
    std::sort(children.begin(), children.end(), [&](int a, int b) {
      if (sub_min[a] != sub_min[b]) return sub_min[a] < sub_min[b];
      return sub_size[a] < sub_size[b];
    });
    // push reversed so the smallest-key child is processed first
    for (auto it = children.rbegin(); it != children.rend(); ++it) dfs.push_back(*it);
  }

  DualGraph g;
  g.n_ = n;
  g.num_vertices_ = nv;
  g.leg_vertex_.assign(n, -1);
  for (int v = 0; v < nv; ++v)
    for (int leg : vertex_legs[v]) g.leg_vertex_[leg - 1] = new_id[v];
  g.edges_.reserve(in_edges.size());
  for (auto [a, b] : in_edges) {
    int x = new_id[a], y = new_id[b];
    g.edges_.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

int DualGraph::leg_vertex(int leg) const {
  if (leg < 1 || leg > n_) throw UsageError("dual graph: leg out of range");
  return leg_vertex_[leg - 1];
}

std::vector<int> DualGraph::legs_at(int v) const {
  std::vector<int> legs;
  for (int leg = 1; leg <= n_; ++leg)
    if (leg_vertex_[leg - 1] == v) legs.push_back(leg);
  return legs;
}

int DualGraph::valence(int v) const {
  if (v < 0 || v >= num_vertices_) throw UsageError("dual graph: vertex out of range");
  int val = 0;
  for (auto [a, b] : edges_) val += (a == v) + (b == v);
  for (int lv : leg_vertex_) val += (lv == v);
  return val;
}

bool DualGraph::is_stable() const {
  for (int v = 0; v < num_vertices_; ++v)
    if (valence(v) < 3) return false;
  return true;
}

bool DualGraph::is_trivalent() const {
  for (int v = 0; v < num_vertices_; ++v)
    if (valence(v) != 3) return false;
  return true;
}

DualGraph DualGraph::contract_edge(int edge_index) const {
  if (edge_index < 0 || edge_index >= num_edges())
    throw DomainError("contract_edge: no such edge");
  auto [keep, gone] = edges_[edge_index];

  std::vector<std::vector<int>> vertex_legs(num_vertices_ - 1);
  auto remap = [&](int v) {
    if (v == gone) return keep > gone ? keep - 1 : keep;
    return v > gone ? v - 1 : v;
  };
  for (int leg = 1; leg <= n_; ++leg) vertex_legs[remap(leg_vertex_[leg - 1])].push_back(leg);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < num_edges(); ++i) {
    if (i == edge_index) continue;
    edges.emplace_back(remap(edges_[i].first), remap(edges_[i].second));
  }
  return make(n_, vertex_legs, edges);
}

std::string DualGraph::key() const {
  std::string s = "n" + std::to_string(n_) + "v" + std::to_string(num_vertices_) + "|";
  for (auto [a, b] : edges_) s += std::to_string(a) + "-" + std::to_string(b) + ",";
  s += "|";
  for (int v : leg_vertex_) s += std::to_string(v) + ",";
  return s;
}

int vertex_leg_exponent_sum(const DecoratedDualGraph& g, int v) {
  if (static_cast<int>(g.k.size()) != g.graph.n())
    throw UsageError("decorated graph: k must have one entry per leg");
  if (v < 0 || v >= g.graph.num_vertices()) throw UsageError("decorated graph: vertex out of range");
  int sum = 0;
  for (int leg = 1; leg <= g.graph.n(); ++leg)
    if (g.graph.leg_vertex(leg) == v) sum += g.k[leg - 1];
  return sum;
}

}  // namespace tropgw
