#pragma once

// The fixed collection of matroids the verification suite sweeps over.

#include <cstdint>
#include <string>
#include <vector>

#include "mcl/constructions.hpp"
#include "mcl/exact.hpp"
#include "mcl/graph.hpp"
#include "mcl/matroid.hpp"

namespace mcl {

enum class CorpusFamily { kUniform, kConfiguration, kSparsePaving, kGraphic };

struct CorpusEntry {
  std::string name;
  CorpusFamily family;
  Matroid matroid;
};

inline constexpr std::uint64_t kConfigurationSubsetLimit = 1'000'000;

/// (r, p) with r in 2..5, p in {2, 3, 5} and C(2 + p(r-1), r) <= 10^6.
inline std::vector<std::pair<int, int>> configuration_grid() {
  std::vector<std::pair<int, int>> grid;
  for (int r = 2; r <= 5; ++r) {
    for (int p : {2, 3, 5}) {
      if (binomial(configuration_size(r, p), r) <= kConfigurationSubsetLimit) grid.emplace_back(r, p);
    }
  }
  return grid;
}

struct SparsePavingParams {
  int n;
  int r;
  int target;
  std::uint64_t seed;
};

/// Fifty deterministic parameter sets with 4 <= n <= 8 and 2 <= r <= n-2.
inline std::vector<SparsePavingParams> sparse_paving_params() {
  std::vector<SparsePavingParams> out;
  for (int s = 0; s < 50; ++s) {
    const int n = 4 + s % 5;
    const int r = 2 + (s / 5) % (n - 3);
    const int target = 1 + (s * 3) % 8;
    out.push_back({n, r, target, static_cast<std::uint64_t>(s)});
  }
  return out;
}

inline std::vector<Graph> small_connected_graphs() {
  std::vector<Graph> out;
  for (int v = 2; v <= 5; ++v) {
    for (auto& g : connected_graphs(v)) out.push_back(std::move(g));
  }
  return out;
}

inline std::string graph_name(const Graph& g) {
  std::string s = "graph(V=" + std::to_string(g.vertex_count) + ";";
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(g.edges[k].u) + "-" + std::to_string(g.edges[k].v);
  }
  return s + ")";
}

/// Uniform U_{r,n} (n <= 7), the configurations M_{r,p} over F_p and Q,
/// fifty seeded sparse paving matroids, and the graphic matroids of all
/// connected graphs on 2..5 vertices up to isomorphism.
inline std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")", CorpusFamily::kUniform,
                     uniform_matroid(r, n)});
    }
  }
  for (auto [r, p] : configuration_grid()) {
    const std::string tag = "M(" + std::to_string(r) + "," + std::to_string(p) + ")";
    out.push_back({tag + " over F_" + std::to_string(p), CorpusFamily::kConfiguration,
                   linear_matroid(build_m_rp(r, p).matrix)});
    out.push_back({tag + " over Q", CorpusFamily::kConfiguration,
                   linear_matroid(build_m_rp_rational(r, p).matrix)});
  }
  for (const auto& sp : sparse_paving_params()) {
    auto sample = generate_sparse_paving(sp.n, sp.r, sp.target, sp.seed);
    out.push_back({"sparse_paving(n=" + std::to_string(sp.n) + ",r=" + std::to_string(sp.r) +
                       ",target=" + std::to_string(sp.target) + ",seed=" + std::to_string(sp.seed) + ")",
                   CorpusFamily::kSparsePaving, sample.matroid.matroid()});
  }
  for (const auto& g : small_connected_graphs()) {
    out.push_back({graph_name(g), CorpusFamily::kGraphic, graphic_matroid(g)});
  }
  return out;
}

}  // namespace mcl
