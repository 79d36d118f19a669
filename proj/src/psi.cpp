#include "psi.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "error.hpp"

namespace tropgw {

namespace {

void validate_exponents(int n, const std::vector<int>& k) {
  if (n < 3) throw DomainError("psi: need n >= 3");
  if (static_cast<int>(k.size()) != n) throw UsageError("psi: k must have one entry per leg");
  for (int v : k)
    if (v < 0) throw DomainError("psi: exponents must be non-negative");
}

long long small_factorial(int v) {
  long long f = 1;
  for (int i = 2; i <= v; ++i) f *= i;
  return f;
}

// prod_V K(V)!/prod_{legs i at V} k_i!, an integer (product of multinomials).
long long facet_weight(const DualGraph& g, const std::vector<int>& k) {
  long long w = 1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int kv = 0;
    long long denom = 1;
    for (int leg : g.legs_at(v)) {
      kv += k[leg - 1];
      denom *= small_factorial(k[leg - 1]);
    }
    w *= small_factorial(kv) / denom;
  }
  return w;
}

PsiProductCycle product_with_rule(int n, const std::vector<int>& k, bool strict) {
  validate_exponents(n, k);
  int s = 0;
  for (int v : k) s += v;

  PsiProductCycle out;
  out.n = n;
  out.dim = n - 3 - s;
  if (out.dim < 0) return out;  // zero cycle

  auto satisfies = [&](const DualGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      int kv = 0;
      for (int leg : g.legs_at(v)) kv += k[leg - 1];
      if (strict ? (kv != g.valence(v) + 3) : (g.valence(v) != kv + 3)) return false;
    }
    return true;
  };

  if (!strict) {
    // Summing the vertex condition over the tree forces the vertex count:
    // n + 2(V-1) = sum val = sum K + 3V = s + 3V, so V = n - 2 - s. Only that
    // bucket can carry facets, and for V = 1 the bucket is the smooth graph.
    const int target_vertices = n - 2 - s;
    if (target_vertices < 1) return out;
    if (target_vertices == 1) {
      DualGraph g = DualGraph::smooth(n);
      if (satisfies(g)) out.facets.emplace(g, facet_weight(g, k));
      return out;
    }
    const GraphTable& table = graph_table(n);
    if (target_vertices < static_cast<int>(table.by_vertex_count.size()))
      for (int idx : table.by_vertex_count[target_vertices]) {
        const DualGraph& g = table.all[idx];
        if (satisfies(g)) out.facets.emplace(g, facet_weight(g, k));
      }
    return out;
  }

  // the verbatim rule admits no vertex-count shortcut; scan everything
  for (const DualGraph& g : graph_table(n).all)
    if (satisfies(g)) out.facets.emplace(g, facet_weight(g, k));
  return out;
}

}  // namespace

long long PsiProductCycle::total_weight() const {
  long long sum = 0;
  for (const auto& [g, w] : facets) {
    (void)g;
    sum += w;
  }
  return sum;
}

PsiProductCycle psi_product(int n, const std::vector<int>& k) {
  return product_with_rule(n, k, false);
}

PsiProductCycle psi_product_strict(int n, const std::vector<int>& k) {
  return product_with_rule(n, k, true);
}

PsiProductCycle psi_class(int n, int i) {
  if (n < 4) throw DomainError("psi_class: need n >= 4");
  if (i < 1 || i > n) throw UsageError("psi_class: leg out of range");
  std::vector<int> k(n, 0);
  k[i - 1] = 1;
  return psi_product(n, k);
}

long long psi_degree(int n, const std::vector<int>& k) {
  validate_exponents(n, k);
  int s = 0;
  for (int v : k) s += v;
  if (s != n - 3) throw DomainError("psi_degree: exponents must sum to n-3");
  return psi_product(n, k).total_weight();
}

IVec distance_vector(const DualGraph& g) {
  const int n = g.n();
  const int dim = n * (n - 1) / 2;
  IVec out(dim, 0);

  // BFS distances between vertices
  const int nv = g.num_vertices();
  std::vector<std::vector<int>> adj(nv);
  for (auto [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<int>> dist(nv, std::vector<int>(nv, -1));
  for (int s = 0; s < nv; ++s) {
    std::queue<int> q;
    q.push(s);
    dist[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
    }
  }

  int idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out[idx++] = dist[g.leg_vertex(i)][g.leg_vertex(j)];
  return out;
}

IMat distance_lineality(int n) {
  IMat out;
  for (int l = 1; l <= n; ++l) {
    IVec v(n * (n - 1) / 2, 0);
    int idx = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) v[idx++] = (i == l) + (j == l);
    out.push_back(std::move(v));
  }
  return out;
}

TropicalCycle embed_cycle(const PsiProductCycle& cycle) {
  if (cycle.dim < 1) throw DomainError("embed_cycle: nothing to embed (dimension < 1)");
  const int n = cycle.n;

  // Rays are the one-edge graphs reachable by contraction; a facet's cone is
  // spanned by the rays obtained by contracting all edges but one.
  std::map<DualGraph, int> ray_ids;
  IMat rays;
  std::map<DualGraph, std::vector<int>> cone_rays_of;

  std::function<const std::vector<int>&(const DualGraph&)> rays_of =
      [&](const DualGraph& g) -> const std::vector<int>& {
    auto it = cone_rays_of.find(g);
    if (it != cone_rays_of.end()) return it->second;
    std::vector<int> ids;
    if (g.num_edges() == 1) {
      auto rit = ray_ids.find(g);
      if (rit == ray_ids.end()) {
        rit = ray_ids.emplace(g, static_cast<int>(rays.size())).first;
        rays.push_back(distance_vector(g));
      }
      ids.push_back(rit->second);
    } else {
      // contracting edge e keeps the rays of every other edge
      for (int e = 0; e < g.num_edges(); ++e) {
        const std::vector<int>& sub = rays_of(g.contract_edge(e));
        for (int id : sub)
          if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
      }
    }
    std::sort(ids.begin(), ids.end());
    return cone_rays_of.emplace(g, std::move(ids)).first->second;
  };

  std::vector<std::pair<std::vector<int>, long long>> facet_cones;
  for (const auto& [g, w] : cycle.facets) facet_cones.emplace_back(rays_of(g), w);

  Fan fan(n * (n - 1) / 2, rays, distance_lineality(n));
  fan.add_cone({});
  // all faces: every subset of a facet's ray set is a contraction of it
  std::function<void(const std::vector<int>&)> add_faces = [&](const std::vector<int>& ids) {
    fan.add_cone(ids);
    if (ids.size() <= 1) return;
    for (std::size_t skip = 0; skip < ids.size(); ++skip) {
      std::vector<int> face;
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (i != skip) face.push_back(ids[i]);
      add_faces(face);
    }
  };
  for (const auto& [ids, w] : facet_cones) {
    (void)w;
    add_faces(ids);
  }

  std::map<int, long long> weights;
  for (const auto& [ids, w] : facet_cones) weights[fan.find_cone(ids)] = w;
  return TropicalCycle(std::move(fan), cycle.dim, std::move(weights));
}

}  // namespace tropgw
