#include <gtest/gtest.h>

#include "mcl/corpus.hpp"
#include "mcl/mcl.hpp"
#include "oracles.hpp"

using namespace mcl;

namespace {

Matroid m_rp(int r, int p) { return linear_matroid(build_m_rp(r, p).matrix); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mcl::Error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Beta, FromRawCounts) {
  EXPECT_EQ(ratio_of(48 * 12, 20 * 28).str(), "36/35");
  EXPECT_EQ(ratio_of(0, 5).str(), "0/1");
  EXPECT_EQ(ratio_of(-4, -6).str(), "2/3");
}

TEST(Beta, KnownPairs) {
  EXPECT_EQ(beta_pair(m_rp(4, 2), {0, 1}).str(), "36/35");
  EXPECT_EQ(beta_pair(m_rp(5, 2), {0, 1}).str(), "34/33");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) EXPECT_EQ(beta_pair(uniform_matroid(2, 4), {i, j}).str(), "2/3");
  EXPECT_EQ(code_of([] { beta_pair(uniform_matroid(0, 3), {0, 1}); }), ErrorCode::kLoopElement);
}

TEST(Alpha, KnownPairs) {
  EXPECT_EQ(alpha_pair(m_rp(5, 2), {0, 1}).str(), "8/7");
  EXPECT_EQ(alpha_pair(m_rp(4, 2), {0, 1}).str(), "9/8");
  EXPECT_EQ(alpha_pair(uniform_matroid(2, 4), {0, 3}).str(), "1/4");
  // Coloop pair, loop pair, parallel pair.
  EXPECT_EQ(code_of([] { alpha_pair(uniform_matroid(3, 3), {0, 1}); }), ErrorCode::kInvalidPair);
  EXPECT_EQ(code_of([] { alpha_pair(uniform_matroid(0, 3), {0, 1}); }), ErrorCode::kInvalidPair);
  Matroid par = graphic_matroid(std::vector<Edge>{{0, 1}, {0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(code_of([&] { alpha_pair(par, {0, 1}); }), ErrorCode::kInvalidPair);
}

TEST(Alpha, UniformU36FrozenFromEnumeration) {
  // Enumeration gives b^{ij} b_ij / (b_i^j b_j^i) = 4*4 / (6*6).
  BasisCounts c = count_partition(uniform_matroid(3, 6), {0, 1});
  EXPECT_EQ(c.b_ij, 4);
  EXPECT_EQ(c.b_i_only, 6);
  EXPECT_EQ(c.b_neither, 4);
  EXPECT_EQ(alpha_from_counts(c)->str(), "4/9");
  EXPECT_EQ(beta_from_counts(c).str(), "4/5");
}

TEST(UniformClosedForm, MatchesEnumeration) {
  EXPECT_EQ(uniform_closed_form(2, 4).alpha.str(), "1/4");
  EXPECT_EQ(uniform_closed_form(2, 4).beta.str(), "2/3");
  EXPECT_EQ(uniform_closed_form(3, 6).alpha.str(), "4/9");
  EXPECT_EQ(uniform_closed_form(3, 6).beta.str(), "4/5");
  for (int n = 3; n <= 9; ++n) {
    for (int r = 2; r < n; ++r) {
      BasisCounts c = count_partition(uniform_matroid(r, n), {0, n - 1});
      UniformRatios u = uniform_closed_form(r, n);
      EXPECT_EQ(u.beta, beta_from_counts(c)) << r << "," << n;
      EXPECT_EQ(u.alpha, *alpha_from_counts(c)) << r << "," << n;
    }
  }
  for (auto [r, n] : {std::pair{1, 4}, {0, 4}, {4, 4}, {5, 4}}) {
    EXPECT_EQ(code_of([&] { uniform_closed_form(r, n); }), ErrorCode::kOutOfRange);
  }
}

TEST(Classify, Examples) {
  CorrelationReport rep = correlation_report(m_rp(5, 2), {0, 1});
  EXPECT_EQ(rep.label, CorrelationCase::kPositive);
  EXPECT_EQ(rep.alpha->str(), "8/7");
  EXPECT_EQ(rep.beta.str(), "34/33");
  EXPECT_EQ(classify_pair(uniform_matroid(2, 4), {0, 1}), CorrelationCase::kNegative);
  Matroid sum = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
  EXPECT_EQ(classify_pair(sum, {0, 2}), CorrelationCase::kUncorrelated);
  // b_ij = 0 only happens for parallel pairs, which classify_pair rejects;
  // the label itself is still defined on raw counts.
  EXPECT_EQ(correlation_case(BasisCounts::from_partition(0, 1, 1, 1)), CorrelationCase::kZero);
  EXPECT_EQ(code_of([] { classify_pair(uniform_matroid(1, 3), {0, 1}); }), ErrorCode::kInvalidPair);
  EXPECT_EQ(classify_pair(uniform_matroid(3, 3), {0, 1}), CorrelationCase::kDegenerate);
  EXPECT_EQ(code_of([] { classify_pair(uniform_matroid(0, 3), {0, 1}); }), ErrorCode::kInvalidPair);
}

TEST(Classify, RelationMatchesLabelWhenAlphaPositive) {
  for (const auto& entry : standard_corpus()) {
    const Matroid& m = entry.matroid;
    if (m.size() > 12) continue;
    BasisTable t = basis_table(m);
    for (int i = 0; i < m.size(); ++i) {
      for (int j = i + 1; j < m.size(); ++j) {
        if (!is_valid_pair(m, {i, j})) continue;
        BasisCounts c = t.counts({i, j});
        auto alpha = alpha_from_counts(c);
        ASSERT_TRUE(alpha);
        // The sign identity holds for every valid pair.
        EXPECT_EQ(beta_from_counts(c) - *alpha, trichotomy_factor(c) * (Ratio(1) - beta_from_counts(c)));
        EXPECT_EQ(beta_from_partition(c), beta_from_counts(c));
        if (c.b_neither == 0 && c.b_ij > 0) continue;  // 0 = alpha < beta < 1, matches no relation
        auto rel = relation_of(*alpha, beta_from_counts(c));
        ASSERT_TRUE(rel) << entry.name << " " << i << "," << j;
        EXPECT_EQ(*rel, correlation_case(c));
      }
    }
  }
}

TEST(Classify, BoundaryPairWithNoNeitherBases) {
  // U(2,3): every 2-subset is a basis, so no basis avoids both 0 and 1.
  BasisCounts c = count_partition(uniform_matroid(2, 3), {0, 1});
  EXPECT_EQ(c.b_neither, 0);
  EXPECT_EQ(alpha_from_counts(c)->str(), "0/1");
  EXPECT_EQ(beta_from_counts(c).str(), "3/4");
  EXPECT_FALSE(relation_of(*alpha_from_counts(c), beta_from_counts(c)));
  EXPECT_EQ(correlation_case(c), CorrelationCase::kNegative);
}

TEST(Extrema, BetaAndAlphaMax) {
  EXPECT_EQ(beta_max(m_rp(4, 2)).value.str(), "36/35");
  EXPECT_EQ(beta_max(uniform_matroid(3, 5)).value.str(), "5/6");
  EXPECT_EQ(beta_max(uniform_matroid(2, 4)).value.str(), "2/3");
  Extremum cross = beta_max(direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2)));
  EXPECT_EQ(cross.value.str(), "1/1");
  EXPECT_EQ(cross.pair.i, 0);
  EXPECT_EQ(cross.pair.j, 2);
  EXPECT_EQ(alpha_max(m_rp(5, 2)).value.str(), "8/7");
  EXPECT_EQ(code_of([] { beta_max(uniform_matroid(0, 3)); }), ErrorCode::kNoEligiblePair);
  EXPECT_EQ(code_of([] { alpha_max(uniform_matroid(3, 3)); }), ErrorCode::kNoEligiblePair);
}

TEST(Convergence, ParallelSequence) {
  BasisCounts c = count_partition(m_rp(5, 2), {0, 1});
  ConvergenceTrace t = beta_parallel_sequence(c, 6);
  ASSERT_EQ(t.betas.size(), 6u);
  EXPECT_EQ(t.betas[0].second.str(), "34/33");
  EXPECT_EQ(t.betas[1].second.str(), "19/18");
  EXPECT_EQ(t.limit.str(), "8/7");
  for (std::size_t k = 1; k < t.betas.size(); ++k) {
    EXPECT_LT(t.betas[k - 1].second, t.betas[k].second);
    EXPECT_LT(t.betas[k].second, t.limit);
  }
  ConvergenceTrace u = beta_parallel_sequence(count_partition(uniform_matroid(2, 4), {0, 1}), 4);
  EXPECT_EQ(u.betas[0].second.str(), "2/3");
  EXPECT_EQ(u.limit.str(), "1/4");
  for (std::size_t k = 1; k < u.betas.size(); ++k) EXPECT_GT(u.betas[k - 1].second, u.betas[k].second);
  EXPECT_EQ(code_of([&] { beta_parallel_sequence(c, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { beta_parallel_sequence(count_partition(uniform_matroid(3, 3), {0, 1}), 2); }),
            ErrorCode::kDegeneratePair);
}

TEST(Convergence, KOneEqualsBeta) {
  Matroid m = graphic_matroid(complete_graph(4));
  BasisCounts c = count_partition(m, {0, 5});
  EXPECT_EQ(beta_parallel_sequence(c, 1).betas.front().second, beta_pair(m, {0, 5}));
}

TEST(Convergence, FormulaMatchesPhysicalExtension) {
  for (const Matroid& m : {uniform_matroid(2, 3), uniform_matroid(2, 4), m_rp(3, 2), m_rp(4, 2)}) {
    BasisCounts c = count_partition(m, {0, 1});
    ConvergenceTrace t = beta_parallel_sequence(c, 3);
    for (int k = 1; k <= 3; ++k) {
      auto ext = parallel_extend(m, {0, 1}, k);
      oracle::Counts o = oracle::brute_counts(ext.matroid, 0, 1);
      EXPECT_EQ(t.betas[k - 1].second, ratio_of(BigInt(o.b) * o.both, BigInt(o.both + o.i_only) * (o.both + o.j_only)))
          << m.describe() << " k=" << k;
    }
  }
}

TEST(HrExpression, Values) {
  EXPECT_EQ(hr_expression(uniform_matroid(2, 4), {0, 1}), 6);
  EXPECT_EQ(correlation_upper_bound(5).str(), "8/5");
  EXPECT_EQ(correlation_upper_bound(4).str(), "3/2");
  EXPECT_EQ(code_of([] { hr_expression(BasisCounts{}, 1); }), ErrorCode::kOutOfRange);
}

TEST(Bounds, BetaMaxBelowUpperBound) {
  for (const auto& entry : standard_corpus()) {
    if (entry.matroid.rank() < 1 || entry.matroid.size() > 12) continue;
    try {
      EXPECT_LE(beta_max(entry.matroid).value, correlation_upper_bound(entry.matroid.rank())) << entry.name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNoEligiblePair);
    }
  }
}
