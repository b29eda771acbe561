#include <gtest/gtest.h>

#include "mcl/mcl.hpp"

using namespace mcl;

namespace {

std::vector<std::pair<std::string, Matroid>> samples() {
  std::vector<std::pair<std::string, Matroid>> out;
  out.emplace_back("U(2,4)", uniform_matroid(2, 4));
  out.emplace_back("U(3,5)", uniform_matroid(3, 5));
  out.emplace_back("U(0,3)", uniform_matroid(0, 3));
  out.emplace_back("M42", linear_matroid(build_m_rp(4, 2).matrix));
  out.emplace_back("M33Q", linear_matroid(build_m_rp_rational(3, 3).matrix));
  out.emplace_back("K4", graphic_matroid(complete_graph(4)));
  out.emplace_back("loopy", graphic_matroid(std::vector<Edge>{{0, 1}, {1, 1}, {0, 1}, {1, 2}}));
  out.emplace_back("sum", direct_sum(uniform_matroid(1, 2), uniform_matroid(2, 3)));
  out.emplace_back("sp", sparse_paving_from_circuits(6, 3, {Subset::of({0, 1, 2}), Subset::of({3, 4, 5})}).matroid());
  return out;
}

bool all_subsets_satisfy(const Matroid& m, auto&& pred) {
  const int n = m.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Subset s;
    for (int e = 0; e < n; ++e)
      if ((bits >> e) & 1) s = s.with(e);
    if (!pred(s)) return false;
  }
  return true;
}

}  // namespace

TEST(RankAxioms, HoldOnSamples) {
  for (const auto& [name, m] : samples()) {
    SCOPED_TRACE(name);
    const int n = m.size();
    EXPECT_TRUE(all_subsets_satisfy(m, [&](Subset s) {
      const int r = m.rank(s);
      if (r < 0 || r > s.size()) return false;
      for (int e = 0; e < n; ++e) {
        if (s.contains(e)) continue;
        const int re = m.rank(s.with(e));
        if (re < r || re > r + 1) return false;  // unit increase
        for (int f = e + 1; f < n; ++f) {
          if (s.contains(f)) continue;
          // local submodularity
          if (re == r && m.rank(s.with(f)) == r && m.rank(s.with(e).with(f)) != r) return false;
        }
      }
      return true;
    }));
    EXPECT_EQ(m.rank(), m.rank(m.ground_set()));
  }
}

TEST(BasisExchange, HoldsOnSamples) {
  for (const auto& [name, m] : samples()) {
    SCOPED_TRACE(name);
    auto bases = enumerate_bases(m);
    ASSERT_FALSE(bases.empty());
    for (Subset a : bases) {
      for (Subset b : bases) {
        (a - b).for_each([&](int x) {
          bool found = false;
          (b - a).for_each([&](int y) {
            if (m.rank(a.without(x).with(y)) == m.rank()) found = true;
          });
          EXPECT_TRUE(found) << a.str() << " " << b.str() << " " << x;
        });
      }
    }
  }
}

TEST(Uniform, RankAndErrors) {
  Matroid u = uniform_matroid(2, 5);
  EXPECT_EQ(u.rank(Subset::of({0, 1, 2})), 2);
  EXPECT_EQ(u.rank(Subset::of({3})), 1);
  EXPECT_THROW(uniform_matroid(6, 5), Error);
  EXPECT_THROW(uniform_matroid(-1, 5), Error);
  EXPECT_THROW(uniform_matroid(1, 65), Error);
}

TEST(Graphic, LoopsAndParallels) {
  Matroid g = graphic_matroid(std::vector<Edge>{{0, 1}, {1, 1}, {0, 1}, {1, 2}});
  EXPECT_TRUE(is_loop(g, 1));
  EXPECT_FALSE(is_loop(g, 0));
  EXPECT_TRUE(is_parallel(g, 0, 2));
  EXPECT_TRUE(is_coloop(g, 3));
  EXPECT_FALSE(is_coloop(g, 0));
  EXPECT_FALSE(is_valid_pair(g, {0, 2}));
  EXPECT_FALSE(is_valid_pair(g, {0, 3}));
  EXPECT_THROW(graphic_matroid(std::vector<Edge>{}), Error);
}

TEST(Minors, DeleteAndContractCommute) {
  for (const auto& [name, m] : samples()) {
    SCOPED_TRACE(name);
    const int n = m.size();
    for (int e = 0; e < n; ++e) {
      for (int f = 0; f < n; ++f) {
        if (e == f || is_loop(m, e)) continue;
        // M / e \ f versus M \ f / e, compared on every subset of the rest.
        Minor ce = contraction(m, e);
        Minor a = deletion(ce.matroid, ce.old_to_new[f]);
        Minor df = deletion(m, f);
        if (is_loop(df.matroid, df.old_to_new[e])) continue;
        Minor b = contraction(df.matroid, df.old_to_new[e]);
        ASSERT_EQ(a.matroid.size(), b.matroid.size());
        EXPECT_TRUE(all_subsets_satisfy(a.matroid, [&](Subset s) { return a.matroid.rank(s) == b.matroid.rank(s); }));
      }
    }
  }
}

TEST(Minors, ContractionDefinition) {
  Matroid m = linear_matroid(build_m_rp(3, 2).matrix);
  Minor c = contraction(m, 0);
  EXPECT_EQ(c.matroid.size(), m.size() - 1);
  EXPECT_EQ(c.matroid.rank(), m.rank() - 1);
  EXPECT_EQ(c.old_to_new[0], -1);
  EXPECT_EQ(c.old_to_new[1], 0);
  for (int x = 1; x < m.size(); ++x) {
    EXPECT_EQ(c.matroid.rank(Subset::of({c.old_to_new[x]})), m.rank(Subset::of({0, x})) - 1);
  }
  Matroid loopy = graphic_matroid(std::vector<Edge>{{0, 0}, {0, 1}});
  try {
    contraction(loopy, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLoopContraction);
  }
}

TEST(ParallelExtension, KOneIsIdentity) {
  for (const auto& [name, m] : samples()) {
    SCOPED_TRACE(name);
    if (m.size() < 2) continue;
    auto ext = parallel_extend(m, {0, 1}, 1);
    EXPECT_TRUE(all_subsets_satisfy(m, [&](Subset s) { return ext.matroid.rank(s) == m.rank(s); }));
  }
}

TEST(ParallelExtension, LayoutAndRank) {
  Matroid m = uniform_matroid(2, 4);
  auto ext = parallel_extend(m, {1, 3}, 3);
  EXPECT_EQ(ext.matroid.size(), 8);
  EXPECT_EQ(ext.origin, (std::vector<int>{1, 3, 0, 0, 0, 2, 2, 2}));
  EXPECT_TRUE(is_parallel(ext.matroid, 2, 4));
  EXPECT_FALSE(is_parallel(ext.matroid, 0, 1));
  EXPECT_EQ(ext.matroid.rank(), 2);
  try {
    parallel_extend(m, {0, 1}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidMultiplicity);
  }
}

TEST(DirectSum, RanksAdd) {
  Matroid a = uniform_matroid(1, 2);
  Matroid b = graphic_matroid(complete_graph(3));
  Matroid s = direct_sum(a, b);
  EXPECT_EQ(s.size(), 5);
  EXPECT_EQ(s.rank(), 3);
  EXPECT_EQ(s.rank(Subset::of({0, 1, 2})), 2);
  EXPECT_EQ(count_bases(s), 2 * 3);
}

TEST(SparsePaving, CircuitList) {
  EXPECT_TRUE(is_sparse_paving(3, {Subset::of({0, 1, 2}), Subset::of({0, 3, 4})}));
  EXPECT_FALSE(is_sparse_paving(3, {Subset::of({0, 1, 2}), Subset::of({0, 1, 3})}));
  auto m = sparse_paving_from_circuits(5, 3, {Subset::of({0, 1, 2})});
  EXPECT_EQ(m.rank(Subset::of({0, 1, 2})), 2);
  EXPECT_EQ(m.rank(Subset::of({0, 1, 2, 3})), 3);
  EXPECT_EQ(m.rank(Subset::of({0, 1})), 2);
  EXPECT_EQ(count_bases(m.matroid()), 10 - 1);
  for (auto bad : {std::pair{0, 4}, std::pair{4, 4}}) {
    try {
      sparse_paving_from_circuits(bad.second, bad.first, {});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidRank);
    }
  }
}

TEST(Pairs, ValidationErrors) {
  Matroid m = uniform_matroid(2, 4);
  EXPECT_THROW(m.check_pair({0, 0}), Error);
  EXPECT_THROW(m.check_pair({0, 4}), Error);
  EXPECT_THROW(m.check_element(-1), Error);
  EXPECT_NO_THROW(m.check_pair({3, 0}));
}
