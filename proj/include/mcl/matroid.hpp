#pragma once

// Matroids as rank oracles, and the constructions the rest of the library
// builds on: linear, uniform, graphic, direct sums, parallel extensions,
// minors and circuit-list (sparse paving) matroids.

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcl/error.hpp"
#include "mcl/graph.hpp"
#include "mcl/linalg.hpp"
#include "mcl/subset.hpp"

namespace mcl {

struct ElementPair {
  int i = 0;
  int j = 1;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
  friend auto operator<=>(const ElementPair&, const ElementPair&) = default;
};

/// Rank function interface implemented by every construction.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int size() const = 0;
  virtual int rank(Subset s) const = 0;
  virtual std::string describe() const = 0;
};

/// Immutable, cheaply copyable handle to a rank oracle on [0, n).
class Matroid {
 public:
  explicit Matroid(std::shared_ptr<const RankOracle> oracle) : oracle_(std::move(oracle)) {
    n_ = oracle_->size();
    check_ground_size(n_);
    r_ = oracle_->rank(Subset::full(n_));
  }

  int size() const { return n_; }
  int rank() const { return r_; }
  int rank(Subset s) const { return oracle_->rank(s); }
  Subset ground_set() const { return Subset::full(n_); }
  std::string describe() const { return oracle_->describe(); }

  void check_element(int e) const {
    if (e < 0 || e >= n_) {
      fail(ErrorCode::kOutOfRange,
           "element " + std::to_string(e) + " outside ground set of size " + std::to_string(n_));
    }
  }
  void check_pair(ElementPair p) const {
    check_element(p.i);
    check_element(p.j);
    if (p.i == p.j) fail(ErrorCode::kInvalidArgument, "pair elements must differ");
  }

 private:
  std::shared_ptr<const RankOracle> oracle_;
  int n_ = 0;
  int r_ = 0;
};

template <typename Oracle, typename... Args>
Matroid make_matroid(Args&&... args) {
  return Matroid(std::make_shared<const Oracle>(std::forward<Args>(args)...));
}

namespace detail {

template <typename Field>
class LinearOracle final : public RankOracle {
 public:
  explicit LinearOracle(Matrix<Field> m) : m_(std::move(m)) {}
  int size() const override { return m_.cols(); }
  int rank(Subset s) const override { return mcl::rank(m_, s); }
  std::string describe() const override {
    return "linear(" + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) + " over " +
           (m_.field().tag() == "Q" ? std::string("Q") : "F_" + m_.field().tag()) + ")";
  }

 private:
  Matrix<Field> m_;
};

class UniformOracle final : public RankOracle {
 public:
  UniformOracle(int r, int n) : r_(r), n_(n) {}
  int size() const override { return n_; }
  int rank(Subset s) const override { return std::min(s.size(), r_); }
  std::string describe() const override {
    return "U(" + std::to_string(r_) + "," + std::to_string(n_) + ")";
  }

 private:
  int r_;
  int n_;
};

class GraphicOracle final : public RankOracle {
 public:
  explicit GraphicOracle(Graph g) : g_(std::move(g)) {}
  int size() const override { return static_cast<int>(g_.edges.size()); }
  int rank(Subset s) const override {
    DisjointSets sets(g_.vertex_count);
    int r = 0;
    s.for_each([&](int e) {
      if (sets.unite(g_.edges[e].u, g_.edges[e].v)) ++r;
    });
    return r;
  }
  std::string describe() const override {
    return "graphic(V=" + std::to_string(g_.vertex_count) + ", E=" + std::to_string(g_.edges.size()) + ")";
  }

 private:
  Graph g_;
};

class DirectSumOracle final : public RankOracle {
 public:
  DirectSumOracle(Matroid a, Matroid b) : a_(std::move(a)), b_(std::move(b)) {}
  int size() const override { return a_.size() + b_.size(); }
  int rank(Subset s) const override {
    const int n1 = a_.size();
    Subset left = s & Subset::full(n1);
    Subset right(n1 >= 64 ? 0 : s.bits() >> n1);
    return a_.rank(left) + b_.rank(right);
  }
  std::string describe() const override { return a_.describe() + " (+) " + b_.describe(); }

 private:
  Matroid a_;
  Matroid b_;
};

/// Relabels elements through `origin` (new index -> base index); several
/// new elements may share an origin, which makes them parallel copies.
class PullbackOracle final : public RankOracle {
 public:
  PullbackOracle(Matroid base, std::vector<int> origin, std::string label)
      : base_(std::move(base)), origin_(std::move(origin)), label_(std::move(label)) {}
  int size() const override { return static_cast<int>(origin_.size()); }
  int rank(Subset s) const override {
    Subset mapped;
    s.for_each([&](int e) { mapped = mapped.with(origin_[e]); });
    return base_.rank(mapped);
  }
  std::string describe() const override { return label_; }

 private:
  Matroid base_;
  std::vector<int> origin_;
  std::string label_;
};

/// rk'(S) = rk(S u C) - rk(C), with S relabeled into the base ground set.
class ContractionOracle final : public RankOracle {
 public:
  ContractionOracle(Matroid base, std::vector<int> origin, Subset contracted)
      : base_(std::move(base)), origin_(std::move(origin)), contracted_(contracted) {
    contracted_rank_ = base_.rank(contracted_);
  }
  int size() const override { return static_cast<int>(origin_.size()); }
  int rank(Subset s) const override {
    Subset mapped = contracted_;
    s.for_each([&](int e) { mapped = mapped.with(origin_[e]); });
    return base_.rank(mapped) - contracted_rank_;
  }
  std::string describe() const override {
    return base_.describe() + " / " + contracted_.str();
  }

 private:
  Matroid base_;
  std::vector<int> origin_;
  Subset contracted_;
  int contracted_rank_ = 0;
};

}  // namespace detail

template <typename Field>
Matroid linear_matroid(const Matrix<Field>& m) {
  return make_matroid<detail::LinearOracle<Field>>(m);
}

inline Matroid linear_matroid(const FieldMatrix& m) {
  return std::visit([](const auto& mat) { return linear_matroid(mat); }, m);
}

inline Matroid uniform_matroid(int r, int n) {
  check_ground_size(n);
  if (r < 0 || r > n) {
    fail(ErrorCode::kInvalidRank,
         "uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
  return make_matroid<detail::UniformOracle>(r, n);
}

/// Cycle matroid of a graph: edges are the elements, forests the
/// independent sets.
inline Matroid graphic_matroid(const Graph& g) {
  if (g.edges.empty()) fail(ErrorCode::kInvalidArgument, "graphic matroid needs at least one edge");
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count || e.v >= g.vertex_count) {
      fail(ErrorCode::kInvalidArgument, "edge endpoint outside vertex range");
    }
  }
  return make_matroid<detail::GraphicOracle>(g);
}

inline Matroid graphic_matroid(std::vector<Edge> edges) {
  return graphic_matroid(Graph::from_edges(std::move(edges)));
}

/// The elements of `b` follow those of `a`.
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  check_ground_size(a.size() + b.size());
  return make_matroid<detail::DirectSumOracle>(a, b);
}

struct ParallelExtension {
  Matroid matroid;
  ElementPair pair;         // always (0, 1)
  std::vector<int> origin;  // new element -> original element
};

/// Adds k-1 parallel copies of every element other than the pair. Layout:
/// the pair sits at 0 and 1, then each remaining original element t (in
/// increasing order, as the s-th such element) owns the block
/// [2 + s*k, 2 + (s+1)*k).
inline ParallelExtension parallel_extend(const Matroid& m, ElementPair pair, int k) {
  m.check_pair(pair);
  if (k < 1) fail(ErrorCode::kInvalidMultiplicity, "multiplicity k must be >= 1, got " + std::to_string(k));
  const int n = m.size();
  check_ground_size(k * (n - 2) + 2);
  std::vector<int> origin{pair.i, pair.j};
  for (int t = 0; t < n; ++t) {
    if (t == pair.i || t == pair.j) continue;
    for (int c = 0; c < k; ++c) origin.push_back(t);
  }
  std::string label = m.describe() + " with " + std::to_string(k) + "-fold parallel classes";
  Matroid extended = make_matroid<detail::PullbackOracle>(m, origin, std::move(label));
  return {std::move(extended), ElementPair{0, 1}, std::move(origin)};
}

/// A minor together with the relabeling old index -> new index (-1 for the
/// removed element). Remaining elements keep their relative order.
struct Minor {
  Matroid matroid;
  std::vector<int> old_to_new;
};

namespace detail {
inline std::pair<std::vector<int>, std::vector<int>> remove_index(int n, int e) {
  std::vector<int> origin;
  std::vector<int> old_to_new(n, -1);
  for (int t = 0; t < n; ++t) {
    if (t == e) continue;
    old_to_new[t] = static_cast<int>(origin.size());
    origin.push_back(t);
  }
  return {std::move(origin), std::move(old_to_new)};
}
}  // namespace detail

inline Minor deletion(const Matroid& m, int e) {
  m.check_element(e);
  auto [origin, old_to_new] = detail::remove_index(m.size(), e);
  std::string label = m.describe() + " \\ " + std::to_string(e);
  return {make_matroid<detail::PullbackOracle>(m, std::move(origin), std::move(label)),
          std::move(old_to_new)};
}

inline bool is_loop(const Matroid& m, int e) {
  m.check_element(e);
  return m.rank(Subset().with(e)) == 0;
}

inline bool is_coloop(const Matroid& m, int e) {
  m.check_element(e);
  return m.rank(m.ground_set().without(e)) == m.rank() - 1;
}

inline bool is_parallel(const Matroid& m, int e, int f) {
  m.check_pair({e, f});
  return !is_loop(m, e) && !is_loop(m, f) && m.rank(Subset().with(e).with(f)) == 1;
}

inline Minor contraction(const Matroid& m, int e) {
  m.check_element(e);
  if (is_loop(m, e)) fail(ErrorCode::kLoopContraction, "cannot contract loop " + std::to_string(e));
  auto [origin, old_to_new] = detail::remove_index(m.size(), e);
  return {make_matroid<detail::ContractionOracle>(m, std::move(origin), Subset().with(e)),
          std::move(old_to_new)};
}

/// Validity for the alpha-ratio: neither element is a loop or a coloop, and
/// the two are not parallel.
inline bool is_valid_pair(const Matroid& m, ElementPair p) {
  m.check_pair(p);
  return !is_loop(m, p.i) && !is_loop(m, p.j) && !is_coloop(m, p.i) && !is_coloop(m, p.j) &&
         !is_parallel(m, p.i, p.j);
}

/// True iff any two listed r-sets differ in at least two elements (share at
/// most r-2), which is exactly when every listed set is a genuine circuit of
/// the induced sparse paving matroid.
inline bool is_sparse_paving(int r, const std::vector<Subset>& circuits) {
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      if ((circuits[a] & circuits[b]).size() > r - 2) return false;
    }
  }
  return true;
}

/// Rank-r matroid on [0, n) whose non-bases among the r-sets are exactly the
/// listed circuits.
class CircuitListMatroid {
 public:
  CircuitListMatroid(int n, int r, std::vector<Subset> circuits)
      : n_(n), r_(r), circuits_(std::move(circuits)) {
    check_ground_size(n);
    if (r <= 0 || r >= n) {
      fail(ErrorCode::kInvalidRank,
           "sparse paving needs 0 < r < n, got r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
    for (Subset c : circuits_) {
      if (c.size() != r || !c.is_subset_of(Subset::full(n))) {
        fail(ErrorCode::kInvalidArgument, "circuit " + c.str() + " is not an r-subset of [0, n)");
      }
    }
    if (!mcl::is_sparse_paving(r, circuits_)) {
      fail(ErrorCode::kNotSparsePaving, "two listed circuits share r-1 or more elements");
    }
    lookup_ = circuits_;
    std::sort(lookup_.begin(), lookup_.end());
  }

  int size() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Subset>& circuits() const { return circuits_; }

  int rank(Subset s) const {
    const int k = s.size();
    if (k < r_) return k;
    if (k == r_ && std::binary_search(lookup_.begin(), lookup_.end(), s)) return r_ - 1;
    return r_;
  }

  Matroid matroid() const;

 private:
  int n_;
  int r_;
  std::vector<Subset> circuits_;
  std::vector<Subset> lookup_;
};

namespace detail {
class CircuitListOracle final : public RankOracle {
 public:
  explicit CircuitListOracle(CircuitListMatroid m) : m_(std::move(m)) {}
  int size() const override { return m_.size(); }
  int rank(Subset s) const override { return m_.rank(s); }
  std::string describe() const override {
    return "sparse_paving(n=" + std::to_string(m_.size()) + ", r=" + std::to_string(m_.rank()) +
           ", circuits=" + std::to_string(m_.circuits().size()) + ")";
  }

 private:
  CircuitListMatroid m_;
};
}  // namespace detail

inline Matroid CircuitListMatroid::matroid() const {
  return make_matroid<detail::CircuitListOracle>(*this);
}

inline CircuitListMatroid sparse_paving_from_circuits(int n, int r, std::vector<Subset> circuits) {
  return CircuitListMatroid(n, r, std::move(circuits));
}

inline bool is_sparse_paving(const CircuitListMatroid& m) {
  return is_sparse_paving(m.rank(), m.circuits());
}

}  // namespace mcl
