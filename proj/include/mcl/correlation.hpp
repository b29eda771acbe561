#pragma once

// Correlation constant beta and alpha-ratio of element pairs, with the
// four-way classification relating them.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mcl/counting.hpp"
#include "mcl/error.hpp"
#include "mcl/exact.hpp"
#include "mcl/matroid.hpp"

namespace mcl {

enum class CorrelationCase { kPositive, kUncorrelated, kNegative, kZero, kDegenerate };

constexpr std::string_view to_string(CorrelationCase c) {
  switch (c) {
    case CorrelationCase::kPositive: return "POSITIVE";
    case CorrelationCase::kUncorrelated: return "UNCORRELATED";
    case CorrelationCase::kNegative: return "NEGATIVE";
    case CorrelationCase::kZero: return "ZERO";
    case CorrelationCase::kDegenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

/// b * b_ij / (b_i * b_j).
inline Ratio beta_from_counts(const BasisCounts& c) {
  if (c.b_i == 0 || c.b_j == 0) fail(ErrorCode::kLoopElement, "an element of the pair lies in no basis");
  return ratio_of(c.b * c.b_ij, c.b_i * c.b_j);
}

/// b^{ij} * b_ij / (b_i^j * b_j^i), or nothing when the denominator vanishes.
inline std::optional<Ratio> alpha_from_counts(const BasisCounts& c) {
  if (c.b_i_only == 0 || c.b_j_only == 0) return std::nullopt;
  return ratio_of(c.b_neither * c.b_ij, c.b_i_only * c.b_j_only);
}

/// beta rewritten over the four partition counts:
///   (b^{ij} b_ij + s b_ij) / (b_i^j b_j^i + s b_ij),  s = b_i^j + b_j^i + b_ij.
inline Ratio beta_from_partition(const BasisCounts& c) {
  BigInt s = c.b_i_only + c.b_j_only + c.b_ij;
  return ratio_of(c.b_neither * c.b_ij + s * c.b_ij, c.b_i_only * c.b_j_only + s * c.b_ij);
}

/// The nonnegative factor F with beta - alpha = F * (1 - beta); requires
/// alpha to be defined.
inline Ratio trichotomy_factor(const BasisCounts& c) {
  if (c.b_i_only == 0 || c.b_j_only == 0) fail(ErrorCode::kDegeneratePair, "alpha is undefined");
  return ratio_of((c.b_i_only + c.b_j_only + c.b_ij) * c.b_ij, c.b_i_only * c.b_j_only);
}

/// Which of the four relations between alpha and beta holds, if any.
inline std::optional<CorrelationCase> relation_of(const Ratio& alpha, const Ratio& beta) {
  const Ratio one(1);
  const Ratio zero(0);
  if (alpha > beta && beta > one) return CorrelationCase::kPositive;
  if (alpha == one && beta == one) return CorrelationCase::kUncorrelated;
  if (zero < alpha && alpha < beta && beta < one) return CorrelationCase::kNegative;
  if (alpha == zero && beta == zero) return CorrelationCase::kZero;
  return std::nullopt;
}

inline Ratio beta_pair(const Matroid& m, ElementPair pair, const CountOptions& opts = {}) {
  m.check_pair(pair);
  if (is_loop(m, pair.i) || is_loop(m, pair.j)) {
    fail(ErrorCode::kLoopElement, "beta is undefined for loops");
  }
  return beta_from_counts(count_partition(m, pair, opts));
}

inline void require_valid_pair(const Matroid& m, ElementPair pair) {
  if (!is_valid_pair(m, pair)) {
    fail(ErrorCode::kInvalidPair, "pair (" + std::to_string(pair.i) + "," + std::to_string(pair.j) +
                                      ") contains a loop or coloop, or is parallel");
  }
}

inline Ratio alpha_pair(const Matroid& m, ElementPair pair, const CountOptions& opts = {}) {
  require_valid_pair(m, pair);
  auto alpha = alpha_from_counts(count_partition(m, pair, opts));
  if (!alpha) fail(ErrorCode::kDegeneratePair, "b_i^j * b_j^i vanishes");
  return *alpha;
}

struct CorrelationReport {
  ElementPair pair;
  BasisCounts counts;
  std::optional<Ratio> alpha;
  Ratio beta;
  CorrelationCase label = CorrelationCase::kDegenerate;
};

/// Label of a non-loop, non-parallel pair: DEGENERATE when alpha is
/// undefined (a coloop is involved), ZERO when b_ij = 0, otherwise the side
/// of 1 on which beta lies. Pairs with b^{ij} = 0 < b_ij have
/// 0 = alpha < beta < 1 and are labelled NEGATIVE even though relation_of()
/// matches none of its four strict relations for them.
inline CorrelationCase correlation_case(const BasisCounts& c) {
  auto alpha = alpha_from_counts(c);
  if (!alpha) return CorrelationCase::kDegenerate;
  if (c.b_ij == 0) return CorrelationCase::kZero;
  const Ratio beta = beta_from_counts(c);
  if (beta > Ratio(1)) return CorrelationCase::kPositive;
  if (beta == Ratio(1)) return CorrelationCase::kUncorrelated;
  return CorrelationCase::kNegative;
}

inline CorrelationReport report_from_counts(ElementPair pair, BasisCounts counts) {
  CorrelationReport rep;
  rep.pair = pair;
  rep.beta = beta_from_counts(counts);
  rep.alpha = alpha_from_counts(counts);
  rep.label = correlation_case(counts);
  rep.counts = std::move(counts);
  return rep;
}

inline void require_classifiable(const Matroid& m, ElementPair pair) {
  m.check_pair(pair);
  if (is_loop(m, pair.i) || is_loop(m, pair.j) || is_parallel(m, pair.i, pair.j)) {
    fail(ErrorCode::kInvalidPair, "classification needs two non-loop, non-parallel elements");
  }
}

inline CorrelationReport correlation_report(const Matroid& m, ElementPair pair,
                                            const CountOptions& opts = {}) {
  require_classifiable(m, pair);
  return report_from_counts(pair, count_partition(m, pair, opts));
}

inline CorrelationCase classify_pair(const Matroid& m, ElementPair pair, const CountOptions& opts = {}) {
  return correlation_report(m, pair, opts).label;
}

struct Extremum {
  Ratio value;
  ElementPair pair;
};

/// Maximum of beta over unordered pairs of distinct non-loops; ties go to
/// the lexicographically smallest pair.
inline Extremum beta_max(const Matroid& m, const BasisTable& table) {
  std::optional<Extremum> best;
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    if (is_loop(m, i)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (is_loop(m, j)) continue;
      Ratio beta = beta_from_counts(table.counts({i, j}));
      if (!best || beta > best->value) best = Extremum{std::move(beta), {i, j}};
    }
  }
  if (!best) fail(ErrorCode::kNoEligiblePair, "fewer than two non-loop elements");
  return *best;
}

inline Extremum beta_max(const Matroid& m, const CountOptions& opts = {}) {
  return beta_max(m, basis_table(m, opts));
}

/// Maximum of alpha over valid pairs (no loops, coloops or parallel pairs).
inline Extremum alpha_max(const Matroid& m, const BasisTable& table) {
  std::optional<Extremum> best;
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!is_valid_pair(m, {i, j})) continue;
      auto alpha = alpha_from_counts(table.counts({i, j}));
      if (!alpha) continue;
      if (!best || *alpha > best->value) best = Extremum{std::move(*alpha), {i, j}};
    }
  }
  if (!best) fail(ErrorCode::kNoEligiblePair, "no valid pair of elements");
  return *best;
}

inline Extremum alpha_max(const Matroid& m, const CountOptions& opts = {}) {
  return alpha_max(m, basis_table(m, opts));
}

struct UniformRatios {
  Ratio alpha;
  Ratio beta;
};

/// alpha and beta of any pair of U_{r,n}, for 1 < r < n.
inline UniformRatios uniform_closed_form(int r, int n) {
  if (r <= 1 || r >= n) {
    fail(ErrorCode::kOutOfRange, "closed form needs 1 < r < n, got r=" + std::to_string(r) +
                                     " n=" + std::to_string(n));
  }
  return {ratio_of(BigInt(r - 1) * (n - r - 1), BigInt(r) * (n - r)),
          ratio_of(BigInt(n) * (r - 1), BigInt(r) * (n - 1))};
}

struct ConvergenceTrace {
  std::vector<std::pair<int, Ratio>> betas;  // (k, beta(M_k))
  Ratio limit;                               // alpha
};

/// beta of the k-fold parallel extension for k = 1..k_max, from the counts
/// of the original matroid:
///   (k^2 b^{ij} b_ij + t_k b_ij) / (k^2 b_i^j b_j^i + t_k b_ij),
///   t_k = k b_i^j + k b_j^i + b_ij.
inline ConvergenceTrace beta_parallel_sequence(const BasisCounts& c, int k_max) {
  if (k_max < 1) fail(ErrorCode::kInvalidArgument, "k_max must be >= 1");
  auto alpha = alpha_from_counts(c);
  if (!alpha) fail(ErrorCode::kDegeneratePair, "b_i^j * b_j^i vanishes");
  ConvergenceTrace trace;
  trace.limit = *alpha;
  const BigInt cross = c.b_neither * c.b_ij;
  const BigInt split = c.b_i_only * c.b_j_only;
  for (int k = 1; k <= k_max; ++k) {
    const BigInt kk = BigInt(k) * k;
    const BigInt t = BigInt(k) * c.b_i_only + BigInt(k) * c.b_j_only + c.b_ij;
    trace.betas.emplace_back(k, ratio_of(kk * cross + t * c.b_ij, kk * split + t * c.b_ij));
  }
  return trace;
}

/// 2(r-1)^2 b_i b_j b_ij - r(r-1) b b_ij^2 for a rank-r matroid.
inline BigInt hr_expression(const BasisCounts& c, int r) {
  if (r < 2) fail(ErrorCode::kOutOfRange, "expression needs rank >= 2");
  const BigInt rm1 = r - 1;
  return 2 * rm1 * rm1 * c.b_i * c.b_j * c.b_ij - BigInt(r) * rm1 * c.b * c.b_ij * c.b_ij;
}

inline BigInt hr_expression(const Matroid& m, ElementPair pair, const CountOptions& opts = {}) {
  return hr_expression(count_partition(m, pair, opts), m.rank());
}

/// Upper bound 2(r-1)/r on beta of any rank-r matroid.
inline Ratio correlation_upper_bound(int r) {
  if (r < 1) fail(ErrorCode::kOutOfRange, "rank must be >= 1");
  return ratio_of(BigInt(2) * (r - 1), BigInt(r));
}

}  // namespace mcl
