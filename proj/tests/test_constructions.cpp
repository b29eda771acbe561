#include <gtest/gtest.h>

#include "mcl/corpus.hpp"
#include "mcl/mcl.hpp"
#include "oracles.hpp"

using namespace mcl;

namespace {

std::vector<BigInt> partition(const BasisCounts& c) { return {c.b_ij, c.b_i_only, c.b_j_only, c.b_neither}; }

}  // namespace

TEST(Configuration, Layout) {
  auto c = build_m_rp(2, 2);
  EXPECT_EQ(format_matrix(c.matrix), "field 2\ndims 2 4\n1 0 0 1\n0 1 1 1\n");
  EXPECT_EQ(configuration_size(5, 3), 14);
  EXPECT_EQ(build_m_rp(5, 3).matrix.cols(), 14);
  EXPECT_EQ(configuration_column(3, 2, 0), 2);
  EXPECT_EQ(configuration_column(3, 3, 1), 6);
  EXPECT_EQ(count_bases(linear_matroid(build_m_rp(4, 2).matrix)), 48);
  EXPECT_THROW(build_m_rp(4, 4), Error);
  EXPECT_THROW(build_m_rp(1, 2), Error);
  EXPECT_THROW(build_m_rp_rational(3, 1), Error);
  EXPECT_FALSE(build_m_rp_rational(3, 4).prime_modulus);
  EXPECT_TRUE(build_m_rp_rational(3, 5).prime_modulus);
}

TEST(ClosedForms, Instances) {
  using P = std::vector<BigInt>;
  EXPECT_EQ(partition(closed_form_counts(4, 2, ConfigurationField::kPrime)), (P{12, 8, 16, 12}));
  BasisCounts c52 = closed_form_counts(5, 2, ConfigurationField::kPrime);
  EXPECT_EQ(partition(c52), (P{32, 16, 56, 32}));
  EXPECT_EQ(c52.b, 136);
  EXPECT_EQ(partition(closed_form_counts(3, 2, ConfigurationField::kPrime)), (P{4, 4, 4, 4}));
  BasisCounts q52 = closed_form_counts(5, 2, ConfigurationField::kRational);
  EXPECT_EQ(partition(q52), (P{32, 16, 63, 32}));
  EXPECT_EQ(alpha_from_counts(q52)->str(), "64/63");
  EXPECT_EQ(closed_form_counts(4, 2, ConfigurationField::kRational).b_j_only, 19);
  EXPECT_THROW(closed_form_counts(4, 4, ConfigurationField::kPrime), Error);
}

TEST(ClosedForms, MatchEnumerationOverPrimeField) {
  for (auto [r, p] : configuration_grid()) {
    BasisCounts brute = count_partition(linear_matroid(build_m_rp(r, p).matrix), {0, 1});
    EXPECT_EQ(brute, closed_form_counts(r, p, ConfigurationField::kPrime)) << r << "," << p;
  }
}

TEST(ClosedForms, MatchEnumerationOverRationals) {
  for (auto [r, p] : configuration_grid()) {
    BasisCounts brute = count_partition(linear_matroid(build_m_rp_rational(r, p).matrix), {0, 1});
    EXPECT_EQ(brute, closed_form_counts(r, p, ConfigurationField::kRational)) << r << "," << p;
  }
}

TEST(ClosedForms, RationalFormulaHoldsForCompositeP) {
  for (int p : {4, 6}) {
    for (int r = 2; r <= 4; ++r) {
      auto conf = build_m_rp_rational(r, p);
      if (mcl::binomial(conf.matrix.cols(), r) > 1'000'000) continue;
      BasisCounts brute = count_partition(linear_matroid(conf.matrix), {0, 1});
      EXPECT_EQ(brute, closed_form_counts(r, p, ConfigurationField::kRational)) << r << "," << p;
    }
  }
}

TEST(ClosedForms, RationalAgreesWithIndependentScan) {
  oracle::Counts o = oracle::brute_counts(linear_matroid(build_m_rp_rational(5, 2).matrix), 0, 1);
  EXPECT_EQ(o.both, 32);
  EXPECT_EQ(o.i_only, 16);
  EXPECT_EQ(o.j_only, 63);
  EXPECT_EQ(o.neither, 32);
}

TEST(AlphaClosedForm, Values) {
  EXPECT_EQ(alpha_closed_form(5).str(), "8/7");
  EXPECT_EQ(alpha_closed_form(4).str(), "9/8");
  EXPECT_EQ(alpha_closed_form(3).str(), "1/1");
  for (auto [r, p] : configuration_grid()) {
    EXPECT_EQ(alpha_pair(linear_matroid(build_m_rp(r, p).matrix), {0, 1}), alpha_closed_form(r)) << r << "," << p;
  }
}

TEST(AlphaClosedForm, UniqueMaximumAtFive) {
  for (int r = 2; r <= 40; ++r) {
    if (r != 5) EXPECT_LT(alpha_closed_form(r), alpha_closed_form(5)) << r;
  }
}

TEST(AlphaClosedForm, RationalGapShrinksWithP) {
  for (int r : {3, 4, 5}) {
    std::optional<Ratio> previous;
    for (int p : {2, 3, 5, 7, 11}) {
      Ratio gap = alpha_closed_form(r) - *alpha_from_counts(closed_form_counts(r, p, ConfigurationField::kRational));
      EXPECT_GT(gap, Ratio(0)) << r << "," << p;
      if (previous) EXPECT_LT(gap, *previous) << r << "," << p;
      previous = gap;
    }
  }
}

TEST(Classification, ByRank) {
  for (auto [r, p] : configuration_grid()) {
    Matroid m = linear_matroid(build_m_rp(r, p).matrix);
    CorrelationCase label = classify_pair(m, {0, 1});
    if (r >= 4) EXPECT_EQ(label, CorrelationCase::kPositive) << r << "," << p;
    if (r == 3) EXPECT_EQ(label, CorrelationCase::kUncorrelated) << r << "," << p;
  }
}

TEST(SparsePavingGenerator, Examples) {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    auto u = generate_sparse_paving(6, 3, 0, seed);
    EXPECT_TRUE(u.matroid.circuits().empty());
    EXPECT_EQ(count_bases(u.matroid.matroid()), 20);
  }
  auto two = generate_sparse_paving(6, 3, 2, 1);
  EXPECT_EQ(two.matroid.circuits().size(), 2u);
  EXPECT_LE(beta_max(two.matroid.matroid()).value, Ratio(1));
  auto r2 = generate_sparse_paving(4, 2, 3, 0);
  ASSERT_EQ(r2.matroid.circuits().size(), 2u);
  EXPECT_TRUE((r2.matroid.circuits()[0] & r2.matroid.circuits()[1]).empty());
  EXPECT_EQ(r2.requested, 3);
  EXPECT_THROW(generate_sparse_paving(4, 4, 1, 0), Error);
  EXPECT_THROW(generate_sparse_paving(4, 2, -1, 0), Error);
}

TEST(SparsePavingGenerator, DeterministicAndValid) {
  for (const auto& params : sparse_paving_params()) {
    auto a = generate_sparse_paving(params.n, params.r, params.target, params.seed);
    auto b = generate_sparse_paving(params.n, params.r, params.target, params.seed);
    EXPECT_EQ(a.matroid.circuits(), b.matroid.circuits());
    EXPECT_TRUE(is_sparse_paving(a.matroid));
    EXPECT_LE(a.matroid.circuits().size(), static_cast<std::size_t>(params.target));
  }
}

TEST(SparsePavingGenerator, FrozenSample) {
  auto s = generate_sparse_paving(7, 3, 5, 42);
  // Frozen from the first run; guards the shuffle against silent changes.
  EXPECT_EQ(circuits_to_json(s.matroid).dump(),
            R"({"n":7,"r":3,"circuits":[[0,1,4],[2,4,6],[0,2,3],[1,3,6],[1,2,5]]})");
}
