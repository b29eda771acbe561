#pragma once

// Exact basis counting by streamed r-subset enumeration, optionally split
// across worker threads, plus the Matrix-Tree spanning-tree count used as
// an independent oracle for graphic matroids.

#include <algorithm>
#include <array>
#include <exception>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcl/combinations.hpp"
#include "mcl/error.hpp"
#include "mcl/exact.hpp"
#include "mcl/graph.hpp"
#include "mcl/matroid.hpp"

namespace mcl {

/// Basis counts for a distinguished pair (i, j).
///   b_i_only  = bases containing i but not j
///   b_j_only  = bases containing j but not i
///   b_neither = bases avoiding both
struct BasisCounts {
  BigInt b;
  BigInt b_i;
  BigInt b_j;
  BigInt b_ij;
  BigInt b_i_only;
  BigInt b_j_only;
  BigInt b_neither;

  static BasisCounts from_partition(BigInt both, BigInt i_only, BigInt j_only, BigInt neither) {
    BasisCounts c;
    c.b_ij = std::move(both);
    c.b_i_only = std::move(i_only);
    c.b_j_only = std::move(j_only);
    c.b_neither = std::move(neither);
    c.b_i = c.b_ij + c.b_i_only;
    c.b_j = c.b_ij + c.b_j_only;
    c.b = c.b_ij + c.b_i_only + c.b_j_only + c.b_neither;
    return c;
  }

  bool consistent() const {
    return b == b_ij + b_i_only + b_j_only + b_neither && b_i == b_ij + b_i_only &&
           b_j == b_ij + b_j_only && b_ij >= 0 && b_i_only >= 0 && b_j_only >= 0 && b_neither >= 0;
  }

  friend bool operator==(const BasisCounts&, const BasisCounts&) = default;
};

struct CountOptions {
  int threads = 1;
  std::uint64_t enum_limit = 10'000'000;
  std::size_t rank_cache = 0;  // 0 disables memoization
};

struct EnumerationStats {
  std::uint64_t subsets_scanned = 0;
};

namespace detail {

class CachedOracle final : public RankOracle {
 public:
  CachedOracle(Matroid base, std::size_t capacity) : base_(std::move(base)), capacity_(capacity) {}
  int size() const override { return base_.size(); }
  int rank(Subset s) const override {
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find(s.bits());
      if (it != cache_.end()) return it->second;
    }
    int r = base_.rank(s);
    std::lock_guard lock(mutex_);
    if (cache_.size() < capacity_) cache_.emplace(s.bits(), r);
    return r;
  }
  std::string describe() const override { return base_.describe(); }

 private:
  Matroid base_;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, int> cache_;
};

}  // namespace detail

/// Memoizes rank queries by subset bitmask; at most `capacity` entries are
/// kept (first come, first kept).
inline Matroid with_rank_cache(const Matroid& m, std::size_t capacity) {
  return make_matroid<detail::CachedOracle>(m, capacity);
}

inline void check_enumeration_size(int n, int r, std::uint64_t limit) {
  BigInt total = binomial(n, r);
  if (total > limit) {
    fail(ErrorCode::kEnumerationLimit, "enumerating C(" + std::to_string(n) + "," + std::to_string(r) +
                                           ") = " + total.str() + " subsets exceeds the limit of " +
                                           std::to_string(limit));
  }
}

/// Runs `visit(acc, subset)` over all r-subsets of the ground set, one
/// accumulator per worker; workers take whole first-element buckets. The
/// accumulators are then folded with `merge(into, from)`, so any integer
/// tally is independent of the number of workers.
template <typename Acc, typename Make, typename Visit, typename Merge>
Acc enumerate_rank_subsets(const Matroid& m, const CountOptions& opts, Make make, Visit visit,
                           Merge merge, EnumerationStats* stats = nullptr) {
  const int n = m.size();
  const int r = m.rank();
  check_enumeration_size(n, r, opts.enum_limit);

  Acc total = make();
  if (r == 0) {
    visit(total, Subset());
    if (stats) stats->subsets_scanned = 1;
    return total;
  }
  const int buckets = n - r + 1;
  const int workers = std::clamp(opts.threads, 1, buckets);
  if (workers == 1) {
    for (int f = 0; f < buckets; ++f) {
      for_each_combination_from(n, r, f, [&](Subset s) { visit(total, s); });
    }
  } else {
    std::vector<Acc> partial;
    partial.reserve(workers);
    for (int w = 0; w < workers; ++w) partial.push_back(make());
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int f = next++; f < buckets; f = next++) {
            for_each_combination_from(n, r, f, [&](Subset s) { visit(partial[w], s); });
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    for (auto& p : partial) merge(total, p);
  }
  if (stats) stats->subsets_scanned = static_cast<std::uint64_t>(binomial(n, r));
  return total;
}

/// Number of bases; 1 for a rank-0 matroid (the empty basis).
inline BigInt count_bases(const Matroid& m, const CountOptions& opts = {},
                          EnumerationStats* stats = nullptr) {
  const int r = m.rank();
  Matroid oracle = opts.rank_cache > 0 ? with_rank_cache(m, opts.rank_cache) : m;
  CountOptions inner = opts;
  inner.rank_cache = 0;
  auto count = enumerate_rank_subsets<std::uint64_t>(
      oracle, inner, [] { return std::uint64_t{0}; },
      [&](std::uint64_t& acc, Subset s) {
        if (oracle.rank(s) == r) ++acc;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; }, stats);
  return BigInt(count);
}

/// One enumeration pass classifying every basis by its membership of i and j.
inline BasisCounts count_partition(const Matroid& m, ElementPair pair, const CountOptions& opts = {},
                                   EnumerationStats* stats = nullptr) {
  m.check_pair(pair);
  const int r = m.rank();
  Matroid oracle = opts.rank_cache > 0 ? with_rank_cache(m, opts.rank_cache) : m;
  CountOptions inner = opts;
  inner.rank_cache = 0;
  using Tally = std::array<std::uint64_t, 4>;  // both, i only, j only, neither
  Tally t = enumerate_rank_subsets<Tally>(
      oracle, inner, [] { return Tally{}; },
      [&](Tally& acc, Subset s) {
        if (oracle.rank(s) != r) return;
        const bool has_i = s.contains(pair.i);
        const bool has_j = s.contains(pair.j);
        ++acc[has_i ? (has_j ? 0 : 1) : (has_j ? 2 : 3)];
      },
      [](Tally& into, const Tally& from) {
        for (int k = 0; k < 4; ++k) into[k] += from[k];
      },
      stats);
  return BasisCounts::from_partition(BigInt(t[0]), BigInt(t[1]), BigInt(t[2]), BigInt(t[3]));
}

/// Per-element and per-pair basis counts from a single enumeration, so a
/// sweep over all pairs costs one pass.
class BasisTable {
 public:
  BasisTable(int n, std::uint64_t bases, std::vector<std::uint64_t> element,
             std::vector<std::uint64_t> pair)
      : n_(n), bases_(bases), element_(std::move(element)), pair_(std::move(pair)) {}

  int size() const { return n_; }
  BigInt bases() const { return BigInt(bases_); }
  BigInt containing(int e) const { return BigInt(element_[e]); }
  BigInt containing_both(int e, int f) const {
    return BigInt(pair_[static_cast<std::size_t>(e) * n_ + f]);
  }

  BasisCounts counts(ElementPair p) const {
    const std::uint64_t both = pair_[static_cast<std::size_t>(p.i) * n_ + p.j];
    const std::uint64_t i_only = element_[p.i] - both;
    const std::uint64_t j_only = element_[p.j] - both;
    const std::uint64_t neither = bases_ - element_[p.i] - element_[p.j] + both;
    return BasisCounts::from_partition(BigInt(both), BigInt(i_only), BigInt(j_only), BigInt(neither));
  }

 private:
  int n_;
  std::uint64_t bases_;
  std::vector<std::uint64_t> element_;
  std::vector<std::uint64_t> pair_;  // symmetric n x n
};

inline BasisTable basis_table(const Matroid& m, const CountOptions& opts = {},
                              EnumerationStats* stats = nullptr) {
  const int n = m.size();
  const int r = m.rank();
  Matroid oracle = opts.rank_cache > 0 ? with_rank_cache(m, opts.rank_cache) : m;
  CountOptions inner = opts;
  inner.rank_cache = 0;
  struct Tally {
    std::uint64_t bases = 0;
    std::vector<std::uint64_t> element;
    std::vector<std::uint64_t> pair;
  };
  const std::size_t un = static_cast<std::size_t>(n);
  Tally t = enumerate_rank_subsets<Tally>(
      oracle, inner, [&] { return Tally{0, std::vector<std::uint64_t>(un), std::vector<std::uint64_t>(un * un)}; },
      [&](Tally& acc, Subset s) {
        if (oracle.rank(s) != r) return;
        ++acc.bases;
        int members[Subset::kMaxElements];
        int k = 0;
        s.for_each([&](int e) { members[k++] = e; });
        for (int a = 0; a < k; ++a) {
          ++acc.element[members[a]];
          for (int b = a + 1; b < k; ++b) {
            ++acc.pair[members[a] * un + members[b]];
            ++acc.pair[members[b] * un + members[a]];
          }
        }
      },
      [](Tally& into, const Tally& from) {
        into.bases += from.bases;
        for (std::size_t e = 0; e < into.element.size(); ++e) into.element[e] += from.element[e];
        for (std::size_t e = 0; e < into.pair.size(); ++e) into.pair[e] += from.pair[e];
      },
      stats);
  return BasisTable(n, t.bases, std::move(t.element), std::move(t.pair));
}

inline constexpr int kMaxMaterializedElements = 16;

/// Debug helper: the bases themselves, in lexicographic order.
inline std::vector<Subset> enumerate_bases(const Matroid& m) {
  if (m.size() > kMaxMaterializedElements) {
    fail(ErrorCode::kInvalidArgument, "basis materialization is limited to n <= 16");
  }
  std::vector<Subset> out;
  const int r = m.rank();
  for_each_combination(m.size(), r, [&](Subset s) {
    if (m.rank(s) == r) out.push_back(s);
  });
  return out;
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
inline BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Kirchhoff: number of spanning trees = any cofactor of the Laplacian.
/// Self-loops do not contribute; parallel edges do.
inline BigInt count_spanning_trees_matrix_tree(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::kDisconnectedGraph, "graph is not connected");
  const int v = g.vertex_count;
  if (v <= 1) return 1;
  std::vector<std::vector<BigInt>> lap(v - 1, std::vector<BigInt>(v - 1, 0));
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.u < v - 1) lap[e.u][e.u] += 1;
    if (e.v < v - 1) lap[e.v][e.v] += 1;
    if (e.u < v - 1 && e.v < v - 1) {
      lap[e.u][e.v] -= 1;
      lap[e.v][e.u] -= 1;
    }
  }
  return integer_determinant(std::move(lap));
}

}  // namespace mcl
