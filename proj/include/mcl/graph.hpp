#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mcl/error.hpp"

namespace mcl {

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..vertex_count-1. Self-loops and
/// parallel edges are allowed.
struct Graph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  static Graph from_edges(std::vector<Edge> edges) {
    Graph g;
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0) fail(ErrorCode::kInvalidArgument, "negative vertex label");
      g.vertex_count = std::max({g.vertex_count, e.u + 1, e.v + 1});
    }
    g.edges = std::move(edges);
    return g;
  }
};

/// Union-find with path halving; enough for rank queries on small graphs.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline bool is_connected(const Graph& g) {
  if (g.vertex_count <= 1) return true;
  DisjointSets sets(g.vertex_count);
  int components = g.vertex_count;
  for (const Edge& e : g.edges) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

inline Graph complete_graph(int v) {
  std::vector<Edge> edges;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) edges.push_back({a, b});
  Graph g = Graph::from_edges(std::move(edges));
  g.vertex_count = v;
  return g;
}

inline Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) edges.push_back({x, a + y});
  return Graph::from_edges(std::move(edges));
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int k = 0; k < 5; ++k) {
    edges.push_back({k, (k + 1) % 5});          // outer cycle
    edges.push_back({k, k + 5});                // spokes
    edges.push_back({5 + k, 5 + (k + 2) % 5});  // inner pentagram
  }
  return Graph::from_edges(std::move(edges));
}

/// One representative per isomorphism class of connected simple graphs on
/// exactly `v` vertices (v <= 6), each in its lexicographically smallest
/// edge-mask labeling.
inline std::vector<Graph> connected_graphs(int v) {
  if (v < 1 || v > 6) fail(ErrorCode::kOutOfRange, "connected_graphs supports 1..6 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) slots.emplace_back(a, b);
  const int m = static_cast<int>(slots.size());
  std::vector<int> slot_index(v * v, -1);
  for (int s = 0; s < m; ++s) {
    slot_index[slots[s].first * v + slots[s].second] = s;
    slot_index[slots[s].second * v + slots[s].first] = s;
  }
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    unsigned canonical = mask;
    for (const auto& p : perms) {
      unsigned image = 0;
      for (int s = 0; s < m; ++s) {
        if (mask >> s & 1u) image |= 1u << slot_index[p[slots[s].first] * v + p[slots[s].second]];
      }
      canonical = std::min(canonical, image);
      if (canonical < mask) break;
    }
    if (canonical != mask) continue;
    Graph g;
    g.vertex_count = v;
    for (int s = 0; s < m; ++s) {
      if (mask >> s & 1u) g.edges.push_back({slots[s].first, slots[s].second});
    }
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace mcl
