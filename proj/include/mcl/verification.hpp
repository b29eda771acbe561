#pragma once

// The reproduction checks: every worked value and checkable claim about
// alpha and beta, each evaluated exactly and reported as one row.

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mcl/constructions.hpp"
#include "mcl/corpus.hpp"
#include "mcl/correlation.hpp"
#include "mcl/counting.hpp"
#include "mcl/matroid.hpp"

namespace mcl {

struct CheckResult {
  std::string id;     // criterion number, e.g. "4" or "9c"
  std::string key;    // stable short name
  std::string title;
  std::string expected;
  std::string computed;
  bool passed = false;
  double millis = 0.0;
  std::vector<std::string> details;  // first few violations, if any
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

constexpr std::size_t kMaxDetails = 8;

/// Collects violations; the check passes iff none were recorded.
class Violations {
 public:
  void add(std::string what) {
    ++count_;
    if (items_.size() < kMaxDetails) items_.push_back(std::move(what));
  }
  std::size_t count() const { return count_; }
  std::vector<std::string> take() { return std::move(items_); }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> items_;
};

inline std::string pair_str(ElementPair p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

inline std::string counts_str(const BasisCounts& c) {
  return "b=" + c.b.str() + " b_i=" + c.b_i.str() + " b_j=" + c.b_j.str() + " b_ij=" + c.b_ij.str() +
         " b_i^j=" + c.b_i_only.str() + " b_j^i=" + c.b_j_only.str() + " b^ij=" + c.b_neither.str();
}

inline std::string partition_str(const BasisCounts& c) {
  return "(" + c.b_ij.str() + "," + c.b_i_only.str() + "," + c.b_j_only.str() + "," + c.b_neither.str() + ")";
}

}  // namespace detail

/// A corpus matroid with its single-pass basis table.
struct AnalyzedMatroid {
  std::string name;
  CorpusFamily family;
  Matroid matroid;
  BasisTable table;
  std::vector<bool> loop;
  std::vector<bool> coloop;

  bool parallel(int e, int f) const {
    return !loop[e] && !loop[f] && matroid.rank(Subset().with(e).with(f)) == 1;
  }
  bool simple() const {
    for (int e = 0; e < matroid.size(); ++e) {
      if (loop[e]) return false;
      for (int f = e + 1; f < matroid.size(); ++f) {
        if (parallel(e, f)) return false;
      }
    }
    return true;
  }
};

inline AnalyzedMatroid analyze(const CorpusEntry& entry, const CountOptions& opts) {
  const Matroid& m = entry.matroid;
  std::vector<bool> loop(m.size()), coloop(m.size());
  for (int e = 0; e < m.size(); ++e) {
    loop[e] = is_loop(m, e);
    coloop[e] = is_coloop(m, e);
  }
  return {entry.name, entry.family, m, basis_table(m, opts), std::move(loop), std::move(coloop)};
}

inline std::vector<AnalyzedMatroid> analyze_all(const std::vector<CorpusEntry>& corpus,
                                                const CountOptions& opts) {
  std::vector<AnalyzedMatroid> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) out.push_back(analyze(e, opts));
  return out;
}

/// Graphic matroids checked for negative correlation: all connected graphs
/// on 2..5 vertices, plus K_5, K_{3,3} and the Petersen graph.
inline std::vector<std::pair<std::string, Graph>> graph_test_set() {
  std::vector<std::pair<std::string, Graph>> out;
  for (auto& g : small_connected_graphs()) out.emplace_back(graph_name(g), std::move(g));
  out.emplace_back("K5", complete_graph(5));
  out.emplace_back("K3,3", complete_bipartite_graph(3, 3));
  out.emplace_back("Petersen", petersen_graph());
  return out;
}

inline std::vector<CorpusEntry> graph_corpus(const std::vector<std::pair<std::string, Graph>>& graphs) {
  std::vector<CorpusEntry> out;
  for (const auto& [name, g] : graphs) out.push_back({name, CorpusFamily::kGraphic, graphic_matroid(g)});
  return out;
}

inline CheckResult check_seymour_welsh(const CountOptions& opts) {
  CheckResult res{"1", "seymour-welsh", "beta(M_{4,2}) by enumeration of C(8,4) = 70 subsets",
                  "b=48 b_i=20 b_j=28 b_ij=12 beta=36/35 in < 10 ms", "", false, 0, {}};
  detail::Stopwatch clock;
  auto conf = build_m_rp(4, 2);
  Matroid m = linear_matroid(conf.matrix);
  EnumerationStats stats;
  BasisCounts c = count_partition(m, conf.pair, opts, &stats);
  Ratio beta = beta_from_counts(c);
  res.millis = clock.millis();
  std::ostringstream out;
  out << "b=" << c.b << " b_i=" << c.b_i << " b_j=" << c.b_j << " b_ij=" << c.b_ij << " beta=" << beta
      << " subsets=" << stats.subsets_scanned << " in " << res.millis << " ms";
  res.computed = out.str();
  res.passed = c.b == 48 && c.b_i == 20 && c.b_j == 28 && c.b_ij == 12 && beta == ratio_of(36, 35) &&
               stats.subsets_scanned == 70 && res.millis < 10.0;
  return res;
}

inline CheckResult check_optimal_alpha(const CountOptions& opts) {
  CheckResult res{"2", "optimal-alpha", "alpha(M_{5,p}) = 8/7: closed form for p in {2,3,5}, enumeration for p in {2,3}",
                  "8/7 everywhere in < 1 s", "", false, 0, {}};
  detail::Stopwatch clock;
  const Ratio target = ratio_of(8, 7);
  detail::Violations bad;
  std::string computed;
  if (alpha_closed_form(5) != target) bad.add("alpha_closed_form(5) = " + alpha_closed_form(5).str());
  for (int p : {2, 3, 5}) {
    auto closed = alpha_from_counts(closed_form_counts(5, p, ConfigurationField::kPrime));
    computed += "p=" + std::to_string(p) + " closed=" + (closed ? closed->str() : "undefined");
    if (!closed || *closed != target) bad.add("closed form at p=" + std::to_string(p));
    if (p != 5) {
      auto conf = build_m_rp(5, p);
      Ratio brute = alpha_pair(linear_matroid(conf.matrix), conf.pair, opts);
      computed += " enumerated=" + brute.str();
      if (brute != target) bad.add("enumeration at p=" + std::to_string(p) + " gave " + brute.str());
    }
    computed += "; ";
  }
  res.millis = clock.millis();
  if (res.millis >= 1000.0) bad.add("runtime " + std::to_string(res.millis) + " ms");
  res.computed = computed + "in " + std::to_string(res.millis) + " ms";
  res.passed = bad.count() == 0;
  res.details = bad.take();
  return res;
}

inline CheckResult check_closed_forms(const CountOptions& opts) {
  CheckResult res{"3", "closed-form-agreement",
                  "closed-form counts equal enumeration on M_{r,p}, r in 2..5, p in {2,3,5}, over F_p and Q",
                  "", "", false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  int cases = 0;
  for (auto [r, p] : configuration_grid()) {
    auto fp = build_m_rp(r, p);
    BasisCounts enumerated = count_partition(linear_matroid(fp.matrix), fp.pair, opts);
    BasisCounts closed = closed_form_counts(r, p, ConfigurationField::kPrime);
    ++cases;
    if (enumerated != closed) {
      bad.add("F_" + std::to_string(p) + " r=" + std::to_string(r) + ": enumerated " +
              detail::partition_str(enumerated) + " closed " + detail::partition_str(closed));
    }
    auto q = build_m_rp_rational(r, p);
    BasisCounts enumerated_q = count_partition(linear_matroid(q.matrix), q.pair, opts);
    BasisCounts closed_q = closed_form_counts(r, p, ConfigurationField::kRational);
    ++cases;
    if (enumerated_q != closed_q) {
      bad.add("Q p=" + std::to_string(p) + " r=" + std::to_string(r) + ": enumerated " +
              detail::partition_str(enumerated_q) + " closed " + detail::partition_str(closed_q));
    }
  }
  res.millis = clock.millis();
  res.expected = std::to_string(cases) + " of " + std::to_string(cases) + " configurations agree";
  res.computed = std::to_string(cases - bad.count()) + " of " + std::to_string(cases) + " agree";
  res.passed = bad.count() == 0;
  res.details = bad.take();
  return res;
}

inline CheckResult check_convergence(const CountOptions& opts) {
  CheckResult res{"4", "parallel-convergence",
                  "beta of k-fold parallel extensions of M_{5,2}, k = 1..6, converges to alpha",
                  "strictly increasing, beta_1=34/33, beta_2=19/18, limit 8/7, k=2,3 match enumeration, < 30 s",
                  "", false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  auto conf = build_m_rp(5, 2);
  Matroid m = linear_matroid(conf.matrix);
  BasisCounts counts = count_partition(m, conf.pair, opts);
  ConvergenceTrace trace = beta_parallel_sequence(counts, 6);
  std::string seq;
  for (std::size_t k = 0; k < trace.betas.size(); ++k) {
    seq += (k ? ", " : "") + trace.betas[k].second.str();
    if (k > 0 && !(trace.betas[k].second > trace.betas[k - 1].second)) {
      bad.add("not strictly increasing at k=" + std::to_string(k + 1));
    }
  }
  if (trace.betas[0].second != ratio_of(34, 33)) bad.add("beta_1 = " + trace.betas[0].second.str());
  if (trace.betas[0].second != beta_from_counts(counts)) bad.add("beta_1 differs from beta of M_{5,2}");
  if (trace.betas[1].second != ratio_of(19, 18)) bad.add("beta_2 = " + trace.betas[1].second.str());
  if (trace.limit != ratio_of(8, 7)) bad.add("limit = " + trace.limit.str());
  std::string brute_note;
  for (int k : {2, 3}) {
    auto ext = parallel_extend(m, conf.pair, k);
    Ratio brute = beta_from_counts(count_partition(ext.matroid, ext.pair, opts));
    brute_note += " k=" + std::to_string(k) + "(n=" + std::to_string(ext.matroid.size()) + "):" + brute.str();
    if (brute != trace.betas[k - 1].second) {
      bad.add("k=" + std::to_string(k) + " enumeration " + brute.str() + " vs formula " +
              trace.betas[k - 1].second.str());
    }
  }
  res.millis = clock.millis();
  if (res.millis >= 30000.0) bad.add("runtime " + std::to_string(res.millis) + " ms");
  res.computed = "[" + seq + "] -> " + trace.limit.str() + "; enumerated" + brute_note;
  res.passed = bad.count() == 0;
  res.details = bad.take();
  return res;
}

inline CheckResult check_trichotomy(const std::vector<AnalyzedMatroid>& corpus) {
  CheckResult res{"5", "trichotomy",
                  "every non-loop, non-parallel pair with alpha defined satisfies exactly one of the four "
                  "relations, and beta - alpha = F (1 - beta)",
                  "", "", false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  std::size_t pairs = 0, degenerate = 0, boundary = 0;
  std::size_t tally[4] = {0, 0, 0, 0};
  const Ratio one(1), zero(0);
  for (const auto& a : corpus) {
    const int n = a.matroid.size();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (a.loop[i] || a.loop[j] || a.parallel(i, j)) continue;
        BasisCounts c = a.table.counts({i, j});
        Ratio beta = beta_from_counts(c);
        if (beta != beta_from_partition(c)) bad.add(a.name + " " + detail::pair_str({i, j}) + ": rewritten beta differs");
        auto alpha = alpha_from_counts(c);
        if (!alpha) {
          ++degenerate;
          continue;
        }
        ++pairs;
        const bool cases[4] = {*alpha > beta && beta > one, *alpha == one && beta == one,
                               zero < *alpha && *alpha < beta && beta < one, *alpha == zero && beta == zero};
        int holding = 0;
        for (int k = 0; k < 4; ++k) {
          if (cases[k]) {
            ++holding;
            ++tally[k];
          }
        }
        if (holding != 1) {
          if (c.b_neither == 0 && c.b_ij > 0) ++boundary;
          bad.add(a.name + " " + detail::pair_str({i, j}) + ": " + std::to_string(holding) +
                  " relations hold (alpha=" + alpha->str() + ", beta=" + beta.str() + ")");
        }
        Ratio factor = trichotomy_factor(c);
        if (factor < zero || beta - *alpha != factor * (one - beta)) {
          bad.add(a.name + " " + detail::pair_str({i, j}) + ": sign identity fails");
        }
      }
    }
  }
  res.millis = clock.millis();
  res.expected = "exactly one relation and the identity for every pair";
  res.computed = std::to_string(pairs) + " pairs over " + std::to_string(corpus.size()) +
                 " matroids: positive=" + std::to_string(tally[0]) + " uncorrelated=" + std::to_string(tally[1]) +
                 " negative=" + std::to_string(tally[2]) + " zero=" + std::to_string(tally[3]) +
                 "; degenerate (coloop) pairs skipped=" + std::to_string(degenerate) +
                 "; violations=" + std::to_string(bad.count()) + " (of which " + std::to_string(boundary) +
                 " have b^ij = 0 < b_ij, i.e. 0 = alpha < beta < 1)";
  res.passed = bad.count() == 0 && pairs > 0;
  res.details = bad.take();
  return res;
}

inline CheckResult check_direct_sums(const CountOptions& opts) {
  CheckResult res{"6", "direct-sums",
                  "U(2,4)+U(2,5) and M_{4,2}+U(1,2): same-summand pairs keep summand values, "
                  "cross pairs have alpha = beta = 1",
                  "", "", false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  std::size_t same = 0, cross = 0;
  auto run = [&](const std::string& name, const Matroid& left, const Matroid& right) {
    Matroid sum = direct_sum(left, right);
    auto whole = analyze({name, CorpusFamily::kUniform, sum}, opts);
    auto a = analyze({"left", CorpusFamily::kUniform, left}, opts);
    auto b = analyze({"right", CorpusFamily::kUniform, right}, opts);
    const int n1 = left.size();
    for (int i = 0; i < sum.size(); ++i) {
      for (int j = i + 1; j < sum.size(); ++j) {
        if (whole.loop[i] || whole.loop[j]) continue;
        BasisCounts c = whole.table.counts({i, j});
        const bool valid = !whole.coloop[i] && !whole.coloop[j] && !whole.parallel(i, j);
        const bool same_side = (i < n1) == (j < n1);
        if (same_side) {
          ++same;
          const AnalyzedMatroid& part = i < n1 ? a : b;
          const int off = i < n1 ? 0 : n1;
          BasisCounts pc = part.table.counts({i - off, j - off});
          if (beta_from_counts(c) != beta_from_counts(pc)) {
            bad.add(name + " " + detail::pair_str({i, j}) + ": beta differs from summand");
          }
          if (valid && alpha_from_counts(c) != alpha_from_counts(pc)) {
            bad.add(name + " " + detail::pair_str({i, j}) + ": alpha differs from summand");
          }
        } else {
          ++cross;
          if (beta_from_counts(c) != Ratio(1)) bad.add(name + " " + detail::pair_str({i, j}) + ": beta != 1");
          if (valid) {
            auto alpha = alpha_from_counts(c);
            if (!alpha || *alpha != Ratio(1)) bad.add(name + " " + detail::pair_str({i, j}) + ": alpha != 1");
          }
        }
      }
    }
  };
  run("U(2,4)+U(2,5)", uniform_matroid(2, 4), uniform_matroid(2, 5));
  run("M(4,2)+U(1,2)", linear_matroid(build_m_rp(4, 2).matrix), uniform_matroid(1, 2));
  res.millis = clock.millis();
  res.expected = "no mismatches";
  res.computed = std::to_string(same) + " same-summand and " + std::to_string(cross) +
                 " cross pairs; mismatches=" + std::to_string(bad.count());
  res.passed = bad.count() == 0;
  res.details = bad.take();
  return res;
}

inline CheckResult check_sparse_paving(const std::vector<AnalyzedMatroid>& corpus) {
  CheckResult res{"7", "sparse-paving", "beta_max <= 1 and alpha_max <= 1 on every generated sparse paving matroid",
                  "", "", false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  std::size_t checked = 0;
  std::optional<Ratio> worst_beta, worst_alpha;
  for (const auto& a : corpus) {
    if (a.family != CorpusFamily::kSparsePaving) continue;
    ++checked;
    Extremum beta = beta_max(a.matroid, a.table);
    if (beta.value > Ratio(1)) bad.add(a.name + ": beta_max = " + beta.value.str());
    if (!worst_beta || beta.value > *worst_beta) worst_beta = beta.value;
    Extremum alpha = alpha_max(a.matroid, a.table);
    if (alpha.value > Ratio(1)) bad.add(a.name + ": alpha_max = " + alpha.value.str());
    if (!worst_alpha || alpha.value > *worst_alpha) worst_alpha = alpha.value;
  }
  res.millis = clock.millis();
  res.expected = "all 50 instances <= 1";
  res.computed = std::to_string(checked) + " instances; largest beta_max=" +
                 (worst_beta ? worst_beta->str() : "-") + ", largest alpha_max=" +
                 (worst_alpha ? worst_alpha->str() : "-");
  res.passed = bad.count() == 0 && checked == 50;
  res.details = bad.take();
  return res;
}

inline CheckResult check_graph_correlation(const std::vector<std::pair<std::string, Graph>>& raw,
                                           const std::vector<AnalyzedMatroid>& graphs) {
  CheckResult res{"8", "graph-negative-correlation",
                  "beta <= 1 for every edge pair of every connected graph on <= 5 vertices, K5, K3,3, "
                  "Petersen; enumeration agrees with Matrix-Tree",
                  "", "", false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  std::size_t pairs = 0;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const auto& a = graphs[g];
    BigInt trees = count_spanning_trees_matrix_tree(raw[g].second);
    if (trees != a.table.bases()) {
      bad.add(a.name + ": enumeration " + a.table.bases().str() + " vs Matrix-Tree " + trees.str());
    }
    const int n = a.matroid.size();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ++pairs;
        Ratio beta = beta_from_counts(a.table.counts({i, j}));
        if (beta > Ratio(1)) bad.add(a.name + " " + detail::pair_str({i, j}) + ": beta = " + beta.str());
      }
    }
  }
  res.millis = clock.millis();
  res.expected = "no edge pair with beta > 1; tree counts agree";
  res.computed = std::to_string(graphs.size()) + " graphs, " + std::to_string(pairs) +
                 " edge pairs; violations=" + std::to_string(bad.count());
  res.passed = bad.count() == 0 && graphs.size() == raw.size();
  res.details = bad.take();
  return res;
}

inline CheckResult check_beta_bound(const std::vector<const AnalyzedMatroid*>& corpus) {
  CheckResult res{"9a", "beta-upper-bound", "beta_max <= 2(r-1)/r for every corpus matroid of rank r", "", "",
                  false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  std::size_t checked = 0;
  for (const auto* a : corpus) {
    int non_loops = 0;
    for (bool l : a->loop) non_loops += l ? 0 : 1;
    if (non_loops < 2) continue;
    ++checked;
    Extremum best = beta_max(a->matroid, a->table);
    Ratio bound = correlation_upper_bound(a->matroid.rank());
    if (best.value > bound) bad.add(a->name + ": beta_max " + best.value.str() + " > " + bound.str());
  }
  res.millis = clock.millis();
  res.expected = "no matroid above its bound";
  res.computed = std::to_string(checked) + " matroids checked; violations=" + std::to_string(bad.count());
  res.passed = bad.count() == 0;
  res.details = bad.take();
  return res;
}

inline CheckResult check_lower_bound_witness(const CountOptions& opts) {
  CheckResult res{"9b", "lower-bound-witness",
                  "M_{5,2} is positively correlated with alpha = 8/7 > 1, the value its parallel extensions approach",
                  "alpha 8/7, POSITIVE", "", false, 0, {}};
  detail::Stopwatch clock;
  auto conf = build_m_rp(5, 2);
  Matroid m = linear_matroid(conf.matrix);
  CorrelationReport rep = correlation_report(m, conf.pair, opts);
  Extremum best_alpha = alpha_max(m, opts);
  res.millis = clock.millis();
  res.computed = "alpha " + (rep.alpha ? rep.alpha->str() : std::string("undefined")) + ", beta " +
                 rep.beta.str() + ", " + std::string(to_string(rep.label)) + ", alpha_max " + best_alpha.value.str();
  res.passed = rep.alpha && *rep.alpha == ratio_of(8, 7) && rep.label == CorrelationCase::kPositive &&
               best_alpha.value >= ratio_of(8, 7);
  return res;
}

inline CheckResult check_hr_positivity(const std::vector<const AnalyzedMatroid*>& corpus) {
  CheckResult res{"9c", "hr-positivity",
                  "2(r-1)^2 b_i b_j b_ij - r(r-1) b b_ij^2 > 0 for every pair with b_ij > 0 of every simple "
                  "corpus matroid",
                  "", "", false, 0, {}};
  detail::Stopwatch clock;
  detail::Violations bad;
  std::size_t pairs = 0, zero_cases = 0, negative_cases = 0;
  for (const auto* a : corpus) {
    const int r = a->matroid.rank();
    if (r < 2 || !a->simple()) continue;
    const int n = a->matroid.size();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        BasisCounts c = a->table.counts({i, j});
        if (c.b_ij == 0) continue;
        ++pairs;
        BigInt value = hr_expression(c, r);
        if (value <= 0) {
          (value == 0 ? zero_cases : negative_cases) += 1;
          bad.add(a->name + " " + detail::pair_str({i, j}) + ": value " + value.str() + ", beta " +
                  beta_from_counts(c).str() + (a->coloop[i] || a->coloop[j] ? " (coloop pair)" : ""));
        }
      }
    }
  }
  res.millis = clock.millis();
  res.expected = "strictly positive for every such pair";
  res.computed = std::to_string(pairs) + " pairs; zero=" + std::to_string(zero_cases) +
                 " negative=" + std::to_string(negative_cases);
  res.passed = bad.count() == 0 && pairs > 0;
  res.details = bad.take();
  return res;
}

/// Runs every check in order. `progress` (optional) is called after each.
inline std::vector<CheckResult> run_verification(
    const CountOptions& opts = {}, const std::function<void(const CheckResult&)>& progress = {}) {
  std::vector<CheckResult> results;
  auto record = [&](CheckResult r) {
    if (progress) progress(r);
    results.push_back(std::move(r));
  };
  record(check_seymour_welsh(opts));
  record(check_optimal_alpha(opts));
  record(check_closed_forms(opts));
  record(check_convergence(opts));
  auto corpus = analyze_all(standard_corpus(), opts);
  record(check_trichotomy(corpus));
  record(check_direct_sums(opts));
  record(check_sparse_paving(corpus));
  auto graph_set = graph_test_set();
  auto graphs = analyze_all(graph_corpus(graph_set), opts);
  record(check_graph_correlation(graph_set, graphs));
  std::vector<const AnalyzedMatroid*> everything;
  for (const auto& a : corpus) everything.push_back(&a);
  for (std::size_t g = graphs.size() - 2; g < graphs.size(); ++g) everything.push_back(&graphs[g]);
  record(check_beta_bound(everything));
  record(check_lower_bound_witness(opts));
  record(check_hr_positivity(everything));
  return results;
}

}  // namespace mcl
