#include <doctest.h>

#include <set>

#include "dual_graph.hpp"
#include "error.hpp"
#include "verify.hpp"

using namespace tropgw;

namespace {

// one-edge graph A | complement, n legs
DualGraph one_edge(int n, const std::vector<int>& side_a) {
  std::vector<std::vector<int>> legs(2);
  std::set<int> a(side_a.begin(), side_a.end());
  for (int leg = 1; leg <= n; ++leg) legs[a.count(leg) ? 0 : 1].push_back(leg);
  return DualGraph::make(n, legs, {{0, 1}});
}

long long double_factorial_odd(int m) {
  long long out = 1;
  for (int i = m; i >= 1; i -= 2) out *= i;
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK_THROWS_AS(enumerate_dual_graphs(2), DomainError);
  CHECK_THROWS_AS(enumerate_dual_graphs(10), DomainError);
  CHECK(enumerate_dual_graphs(3).size() == 1);
  CHECK(enumerate_dual_graphs(4).size() == 4);
  CHECK(enumerate_dual_graphs(5).size() == 26);

  // n=4: the smooth type plus the three one-edge splits
  auto graphs = enumerate_dual_graphs(4);
  std::set<std::string> keys;
  for (const auto& g : graphs) keys.insert(g.key());
  CHECK(keys.count(DualGraph::smooth(4).key()) == 1);
  CHECK(keys.count(one_edge(4, {1, 2}).key()) == 1);
  CHECK(keys.count(one_edge(4, {1, 3}).key()) == 1);
  CHECK(keys.count(one_edge(4, {1, 4}).key()) == 1);
  // leg-labeled splits are distinct types
  CHECK(one_edge(4, {1, 2}).key() != one_edge(4, {1, 3}).key());
  // ... but a split equals its complement
  CHECK(one_edge(4, {1, 2}) == one_edge(4, {3, 4}));
}

TEST_CASE("trivalent counts match the double factorial") {
  for (int n = 4; n <= 7; ++n) CHECK(count_trivalent(n) == double_factorial_odd(2 * n - 5));
}

TEST_CASE("structure counts by class") {
  for (int n = 4; n <= 6; ++n) {
    long long one_edge_count = 0;
    for (const auto& g : enumerate_dual_graphs(n)) {
      CHECK(g.num_edges() == g.num_vertices() - 1);
      CHECK(g.is_stable());
      one_edge_count += g.num_edges() == 1;
    }
    CHECK(one_edge_count == (1LL << (n - 1)) - n - 1);
  }
}

TEST_CASE("enumeration matches the brute-force generator") {
  for (int n = 3; n <= 6; ++n) {
    auto brute = verify::brute_force_dual_graphs(n);
    auto fast = enumerate_dual_graphs(n);
    REQUIRE(brute.size() == fast.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == fast[i]);
  }
}

TEST_CASE("contraction") {
  DualGraph g = one_edge(4, {1, 2});
  CHECK(g.contract_edge(0) == DualGraph::smooth(4));
  CHECK_THROWS_AS(DualGraph::smooth(4).contract_edge(0), DomainError);

  // contracting any edge of any n=5 graph lands back in the enumeration
  std::set<std::string> keys;
  for (const auto& h : enumerate_dual_graphs(5)) keys.insert(h.key());
  for (const auto& h : enumerate_dual_graphs(5))
    for (int e = 0; e < h.num_edges(); ++e) {
      DualGraph c = h.contract_edge(e);
      CHECK(keys.count(c.key()) == 1);
      CHECK(c.is_stable());
    }
}

TEST_CASE("valences and legs") {
  DualGraph g = one_edge(5, {1, 2});  // 12|345
  int v12 = g.leg_vertex(1);
  CHECK(g.leg_vertex(2) == v12);
  int v345 = g.leg_vertex(3);
  CHECK(g.valence(v12) == 3);
  CHECK(g.valence(v345) == 4);
  CHECK(g.legs_at(v345) == std::vector<int>{3, 4, 5});
}

TEST_CASE("vertex_leg_exponent_sum") {
  DecoratedDualGraph smooth{DualGraph::smooth(4), {0, 0, 0, 1}};
  CHECK(vertex_leg_exponent_sum(smooth, 0) == 1);

  DualGraph g = one_edge(5, {1, 2});
  DecoratedDualGraph dec{g, {1, 0, 0, 1, 1}};
  CHECK(vertex_leg_exponent_sum(dec, g.leg_vertex(3)) == 2);
  CHECK(vertex_leg_exponent_sum(dec, g.leg_vertex(1)) == 1);

  // vertex with no legs at all
  DualGraph map_graph = DualGraph::make(2, {{1, 2}, {}}, {{0, 1}});
  DecoratedDualGraph dec2{map_graph, {3, 4}};
  int legless = map_graph.leg_vertex(1) == 0 ? 1 : 0;
  CHECK(vertex_leg_exponent_sum(dec2, legless) == 0);
}

TEST_CASE("canonical form is representation independent") {
  // same tree entered with scrambled vertex order
  DualGraph a = DualGraph::make(5, {{1, 2}, {3, 4, 5}}, {{0, 1}});
  DualGraph b = DualGraph::make(5, {{3, 4, 5}, {1, 2}}, {{0, 1}});
  CHECK(a == b);

  DualGraph c = DualGraph::make(5, {{1}, {2, 3}, {4, 5}}, {{0, 1}, {0, 2}});
  DualGraph d = DualGraph::make(5, {{4, 5}, {1}, {2, 3}}, {{1, 2}, {1, 0}});
  CHECK(c == d);
}

TEST_CASE("make validates input") {
  CHECK_THROWS_AS(DualGraph::make(3, {{1, 2, 3}, {}}, {}), DomainError);          // forest
  CHECK_THROWS_AS(DualGraph::make(3, {{1, 2}, {3}}, {{0, 0}}), UsageError);       // loop edge
  CHECK_THROWS_AS(DualGraph::make(3, {{1, 2}, {2, 3}}, {{0, 1}}), UsageError);    // leg twice
  CHECK_THROWS_AS(DualGraph::make(4, {{1, 2}, {3}}, {{0, 1}}), UsageError);       // missing leg
}
