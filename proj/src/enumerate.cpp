#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "dual_graph.hpp"
#include "error.hpp"

namespace tropgw {

namespace {

struct Raw {
  std::vector<std::vector<int>> vertex_legs;
  std::vector<std::pair<int, int>> edges;
};

// All set partitions of `items` into blocks of size >= 2 (the empty partition
// when `items` is empty). The first remaining element anchors its block, so
// each partition is produced exactly once.
void partitions_min2(const std::vector<int>& items, std::vector<std::vector<int>>& current,
                     const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (items.empty()) {
    emit(current);
    return;
  }
  int anchor = items.front();
  std::vector<int> rest(items.begin() + 1, items.end());
  const int m = static_cast<int>(rest.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> block{anchor}, remaining;
    for (int i = 0; i < m; ++i)
      ((mask >> i) & 1 ? block : remaining).push_back(rest[i]);
    current.push_back(std::move(block));
    partitions_min2(remaining, current, emit);
    current.pop_back();
  }
}

// Every stable leg-labeled tree decomposes uniquely at the vertex carrying
// root_leg: the legs kept there, plus a partition of the remaining legs into
// the subtrees hanging off it. A subtree on leg set B is itself a stable tree
// on B plus one virtual leg (label 0) marking its attachment point, so the
// recursion needs no isomorphism rejection at all. Sub-enumerations recur
// across partitions, hence the cache (keyed by leg set; sub-calls are always
// rooted at the virtual leg 0).
std::map<std::vector<int>, std::unique_ptr<std::vector<Raw>>>& rooted_cache() {
  static std::map<std::vector<int>, std::unique_ptr<std::vector<Raw>>> cache;
  return cache;
}

const std::vector<Raw>* enum_rooted(const std::vector<int>& legs, int root_leg) {
  const bool cacheable = root_leg == 0;
  if (cacheable) {
    auto it = rooted_cache().find(legs);
    if (it != rooted_cache().end()) return it->second.get();
  }
  auto out = std::make_unique<std::vector<Raw>>();
  std::vector<int> others;
  for (int leg : legs)
    if (leg != root_leg) others.push_back(leg);
  const int m = static_cast<int>(others.size());

  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> kept{root_leg}, rest;
    for (int i = 0; i < m; ++i)
      ((mask >> i) & 1 ? kept : rest).push_back(others[i]);

    std::vector<std::vector<int>> blocks_buf;
    partitions_min2(rest, blocks_buf, [&](const std::vector<std::vector<int>>& blocks) {
      if (kept.size() + blocks.size() < 3) return;  // root vertex unstable

      std::vector<const std::vector<Raw>*> options;
      options.reserve(blocks.size());
      for (const auto& block : blocks) {
        std::vector<int> sub(block);
        sub.push_back(0);  // virtual attachment leg
        options.push_back(enum_rooted(sub, 0));
      }

      std::vector<std::size_t> pick(blocks.size(), 0);
      while (true) {
        Raw tree;
        tree.vertex_legs.push_back(kept);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          const Raw& sub = (*options[b])[pick[b]];
          const int offset = static_cast<int>(tree.vertex_legs.size());
          int attach = -1;
          for (std::size_t v = 0; v < sub.vertex_legs.size(); ++v) {
            std::vector<int> legs_here;
            for (int leg : sub.vertex_legs[v]) {
              if (leg == 0)
                attach = offset + static_cast<int>(v);
              else
                legs_here.push_back(leg);
            }
            tree.vertex_legs.push_back(std::move(legs_here));
          }
          for (auto [a, c] : sub.edges) tree.edges.emplace_back(a + offset, c + offset);
          tree.edges.emplace_back(0, attach);
        }
        out->push_back(std::move(tree));

        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
          if (++pick[b] < options[b]->size()) break;
          pick[b] = 0;
        }
        if (b == blocks.size()) break;  // covers blocks.empty(): one tree, no subtrees
      }
    });
  }
  const std::vector<Raw>* result = out.get();
  if (cacheable) {
    rooted_cache().emplace(legs, std::move(out));
  } else {
    static std::vector<std::unique_ptr<std::vector<Raw>>> toplevel_keepalive;
    toplevel_keepalive.push_back(std::move(out));
  }
  return result;
}

std::mutex& enum_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

std::vector<DualGraph> enumerate_dual_graphs(int n) {
  if (n < 3) throw DomainError("enumerate_dual_graphs: need n >= 3 (stability)");
  if (n > 9)
    throw DomainError("enumerate_dual_graphs: n > 9 unsupported (type count grows too fast)");
  std::lock_guard<std::mutex> lock(enum_mutex());
  std::vector<int> legs(n);
  for (int i = 0; i < n; ++i) legs[i] = i + 1;
  const std::vector<Raw>* raws = enum_rooted(legs, 1);
  std::vector<std::pair<std::string, DualGraph>> keyed;
  keyed.reserve(raws->size());
  for (const auto& raw : *raws) {
    DualGraph g = DualGraph::make(n, raw.vertex_legs, raw.edges);
    std::string k = g.key();
    keyed.emplace_back(std::move(k), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DualGraph> out;
  out.reserve(keyed.size());
  for (auto& [k, g] : keyed) out.push_back(std::move(g));
  return out;
}

long long count_trivalent(int n) {
  const GraphTable& table = graph_table(n);
  long long count = 0;
  for (const DualGraph& g : table.all) count += g.is_trivalent();
  return count;
}

const GraphTable& graph_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GraphTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto table = std::make_unique<GraphTable>();
    table->all = enumerate_dual_graphs(n);
    table->by_vertex_count.assign(n, {});  // at most n-2 vertices
    for (std::size_t i = 0; i < table->all.size(); ++i) {
      int v = table->all[i].num_vertices();
      if (v >= static_cast<int>(table->by_vertex_count.size()))
        table->by_vertex_count.resize(v + 1);
      table->by_vertex_count[v].push_back(static_cast<int>(i));
    }
    it = cache.emplace(n, std::move(table)).first;
  }
  return *it->second;
}

}  // namespace tropgw
