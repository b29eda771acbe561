#pragma once

// Dense matrices over F_p or Q with exact column-rank queries.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcl/error.hpp"
#include "mcl/exact.hpp"
#include "mcl/subset.hpp"

namespace mcl {

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= kMaxPrimeModulus) {
      fail(ErrorCode::kNotPrime, std::to_string(p) + " is not a supported prime modulus");
    }
  }

  std::uint32_t modulus() const { return p_; }
  std::string tag() const { return std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type from_integer(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type from_ratio(const Ratio& v) const {
    value_type den = from_integer(v.denominator());
    if (den == 0) {
      fail(ErrorCode::kParseError,
           "denominator of " + v.str() + " vanishes modulo " + std::to_string(p_));
    }
    return mul(from_integer(v.numerator()), inv(den));
  }

  value_type sub(value_type a, value_type b) const { return (a + std::uint64_t{p_} - b) % p_; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const { return inverse_mod(a, p_); }

  std::string format(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = Ratio;

  std::string tag() const { return "Q"; }

  value_type zero() const { return Ratio(0); }
  value_type one() const { return Ratio(1); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }

  value_type from_integer(const BigInt& v) const { return Ratio(v); }
  value_type from_ratio(const Ratio& v) const { return v; }

  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return Ratio(1) / a; }

  std::string format(const value_type& a) const {
    return a.denominator() == 1 ? a.numerator().str() : a.str();
  }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Row-major dense matrix; the columns are the vectors of a configuration.
template <typename Field>
class Matrix {
 public:
  using value_type = typename Field::value_type;

  Matrix(Field field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols) {
    check_dims();
    entries_.assign(static_cast<std::size_t>(rows) * cols, field_.zero());
  }
  Matrix(Field field, int rows, int cols, std::vector<value_type> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims();
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
      fail(ErrorCode::kInvalidArgument, "entry count does not match dimensions");
    }
  }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const value_type& at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, value_type v) { entries_[index(r, c)] = std::move(v); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_dims() const {
    if (rows_ <= 0 || cols_ <= 0) fail(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  Field field_;
  int rows_;
  int cols_;
  std::vector<value_type> entries_;
};

using PrimeMatrix = Matrix<PrimeField>;
using RationalMatrix = Matrix<RationalField>;
using FieldMatrix = std::variant<PrimeMatrix, RationalMatrix>;

/// Strictly increasing column indices, validated against a column count.
class ColumnSubset {
 public:
  ColumnSubset() = default;
  ColumnSubset(std::vector<int> indices, int column_count) : indices_(std::move(indices)) {
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (indices_[k] < 0 || indices_[k] >= column_count) {
        fail(ErrorCode::kOutOfRange, "column index " + std::to_string(indices_[k]) + " out of range");
      }
      if (k > 0 && indices_[k] <= indices_[k - 1]) {
        fail(ErrorCode::kInvalidArgument, "column indices must be strictly increasing");
      }
    }
  }
  ColumnSubset(Subset s, int column_count) : ColumnSubset(s.elements(), column_count) {}

  std::span<const int> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

 private:
  std::vector<int> indices_;
};

namespace detail {

/// Rank of the rows x k block `work` (column-major, k columns) by forward
/// elimination. Destroys `work`.
template <typename Field>
int eliminate_rank(const Field& field, std::vector<typename Field::value_type>& work, int rows,
                   int k) {
  auto cell = [&](int r, int c) -> typename Field::value_type& {
    return work[static_cast<std::size_t>(c) * rows + r];
  };
  int rank = 0;
  for (int c = 0; c < k && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!field.is_zero(cell(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int cc = c; cc < k; ++cc) std::swap(cell(pivot, cc), cell(rank, cc));
    }
    auto pivot_inv = field.inv(cell(rank, c));
    for (int r = rank + 1; r < rows; ++r) {
      if (field.is_zero(cell(r, c))) continue;
      auto factor = field.mul(cell(r, c), pivot_inv);
      for (int cc = c; cc < k; ++cc) {
        cell(r, cc) = field.sub(cell(r, cc), field.mul(factor, cell(rank, cc)));
      }
    }
    ++rank;
  }
  return rank;
}

template <typename Field>
int rank_of_columns(const Matrix<Field>& m, std::span<const int> cols) {
  if (cols.empty()) return 0;
  thread_local std::vector<typename Field::value_type> work;
  const int rows = m.rows();
  const int k = static_cast<int>(cols.size());
  work.resize(static_cast<std::size_t>(rows) * k);
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < rows; ++r) work[static_cast<std::size_t>(c) * rows + r] = m.at(r, cols[c]);
  }
  return eliminate_rank(m.field(), work, rows, k);
}

}  // namespace detail

template <typename Field>
int rank(const Matrix<Field>& m, const ColumnSubset& cols) {
  if (!cols.indices().empty() && cols.indices().back() >= m.cols()) {
    fail(ErrorCode::kOutOfRange, "column subset exceeds matrix width");
  }
  return detail::rank_of_columns(m, cols.indices());
}

/// Hot path used by linear matroids; `cols` must be within [0, m.cols()).
template <typename Field>
int rank(const Matrix<Field>& m, Subset cols) {
  int idx[Subset::kMaxElements];
  int k = 0;
  cols.for_each([&](int e) { idx[k++] = e; });
  return detail::rank_of_columns(m, std::span<const int>(idx, k));
}

template <typename Field>
bool is_independent(const Matrix<Field>& m, const ColumnSubset& cols) {
  return rank(m, cols) == static_cast<int>(cols.size());
}

inline int rank(const FieldMatrix& m, const ColumnSubset& cols) {
  return std::visit([&](const auto& mat) { return rank(mat, cols); }, m);
}

inline bool is_independent(const FieldMatrix& m, const ColumnSubset& cols) {
  return std::visit([&](const auto& mat) { return is_independent(mat, cols); }, m);
}

inline int column_count(const FieldMatrix& m) {
  return std::visit([](const auto& mat) { return mat.cols(); }, m);
}

inline int row_count(const FieldMatrix& m) {
  return std::visit([](const auto& mat) { return mat.rows(); }, m);
}

}  // namespace mcl
