#pragma once

// The positively correlated vector configurations M_{r,p}, their basis
// counts in closed form, and a seeded sparse paving generator.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mcl/combinations.hpp"
#include "mcl/counting.hpp"
#include "mcl/error.hpp"
#include "mcl/exact.hpp"
#include "mcl/linalg.hpp"
#include "mcl/matroid.hpp"

namespace mcl {

template <typename Field>
struct Configuration {
  Matrix<Field> matrix;
  ElementPair pair;  // (e_1, v) = (0, 1)
  bool prime_modulus = true;
};

/// Number of vectors in M_{r,p}.
constexpr int configuration_size(int r, int p) { return 2 + p * (r - 1); }

/// Column index of k*e_1 + e_l (2 <= l <= r, 0 <= k < p).
constexpr int configuration_column(int p, int l, int k) { return 2 + (l - 2) * p + k; }

namespace detail {

template <typename Field>
Matrix<Field> configuration_matrix(Field field, int r, int p) {
  const int n = configuration_size(r, p);
  check_ground_size(n);
  Matrix<Field> m(field, r, n);
  m.set(0, 0, field.one());
  for (int l = 2; l <= r; ++l) m.set(l - 1, 1, field.one());
  for (int l = 2; l <= r; ++l) {
    for (int k = 0; k < p; ++k) {
      const int col = configuration_column(p, l, k);
      m.set(0, col, field.from_integer(k));
      m.set(l - 1, col, field.one());
    }
  }
  return m;
}

inline void check_configuration_rank(int r) {
  if (r < 2) fail(ErrorCode::kOutOfRange, "configuration rank must be >= 2, got " + std::to_string(r));
}

}  // namespace detail

/// Columns over F_p: e_1, v = e_2 + ... + e_r, then k*e_1 + e_l ordered by
/// (l, k).
inline Configuration<PrimeField> build_m_rp(int r, int p) {
  detail::check_configuration_rank(r);
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  PrimeField field(static_cast<std::uint32_t>(p));
  return {detail::configuration_matrix(field, r, p), ElementPair{0, 1}, true};
}

/// Same columns with integer entries over Q. Any p >= 2 is accepted;
/// `prime_modulus` records whether p is actually prime.
inline Configuration<RationalField> build_m_rp_rational(int r, int p) {
  detail::check_configuration_rank(r);
  if (p < 2) fail(ErrorCode::kOutOfRange, "p must be >= 2, got " + std::to_string(p));
  return {detail::configuration_matrix(RationalField{}, r, p), ElementPair{0, 1},
          is_prime(static_cast<std::uint64_t>(p))};
}

enum class ConfigurationField { kPrime, kRational };

/// Basis counts of the distinguished pair (e_1, v), without enumeration:
///   b_ij      = (r-1) p^{r-2}
///   b_i^j     = p^{r-1}
///   b^{ij}    = (r-1) C(p,2) p^{r-2}
///   b_j^i     = (p-1) p^{r-2} + (r-1)(r-2) C(p,2) p^{r-3}     over F_p
///             = p^{r-1} - 1   + (r-1)(r-2) C(p,2) p^{r-3}     over Q
/// The first term of b_j^i counts transversals k_2..k_r whose sum is
/// nonzero; only its characteristic dependence differs between the fields.
inline BasisCounts closed_form_counts(int r, int p, ConfigurationField field) {
  detail::check_configuration_rank(r);
  if (p < 2) fail(ErrorCode::kOutOfRange, "p must be >= 2, got " + std::to_string(p));
  if (field == ConfigurationField::kPrime && !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  const BigInt P = p;
  const BigInt pairs = P * (P - 1) / 2;
  const BigInt pr1 = ipow(P, r - 1);
  const BigInt pr2 = ipow(P, r - 2);
  const BigInt doubled = r >= 3 ? BigInt(r - 1) * (r - 2) * pairs * ipow(P, r - 3) : BigInt(0);

  BigInt both = BigInt(r - 1) * pr2;
  BigInt i_only = pr1;
  BigInt neither = BigInt(r - 1) * pairs * pr2;
  BigInt transversals = field == ConfigurationField::kPrime ? BigInt((P - 1) * pr2) : BigInt(pr1 - 1);
  BigInt j_only = transversals + doubled;
  return BasisCounts::from_partition(std::move(both), std::move(i_only), std::move(j_only),
                                     std::move(neither));
}

/// alpha of (e_1, v) in M_{r,p} over F_p: (r-1)^2 / (2 + (r-1)(r-2)).
inline Ratio alpha_closed_form(int r) {
  detail::check_configuration_rank(r);
  return ratio_of(BigInt(r - 1) * (r - 1), BigInt(2) + BigInt(r - 1) * (r - 2));
}

struct SparsePavingSample {
  CircuitListMatroid matroid;
  int requested = 0;
};

namespace detail {

/// Uniform draw from [0, bound) by rejection; fixed across standard
/// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace detail

inline constexpr std::uint64_t kMaxSparsePavingCandidates = 2'000'000;

/// Greedily picks up to `target` r-subsets pairwise sharing at most r-2
/// elements, scanning a seeded shuffle of all r-subsets.
inline SparsePavingSample generate_sparse_paving(int n, int r, int target, std::uint64_t seed) {
  check_ground_size(n);
  if (r <= 0 || r >= n) {
    fail(ErrorCode::kOutOfRange, "sparse paving needs 0 < r < n, got r=" + std::to_string(r) +
                                     " n=" + std::to_string(n));
  }
  if (target < 0) fail(ErrorCode::kOutOfRange, "circuit target must be >= 0");
  if (binomial(n, r) > kMaxSparsePavingCandidates) {
    fail(ErrorCode::kOutOfRange, "too many candidate r-subsets to shuffle");
  }
  std::vector<Subset> candidates;
  for_each_combination(n, r, [&](Subset s) { candidates.push_back(s); });
  std::mt19937_64 rng(seed);
  for (std::size_t k = candidates.size(); k > 1; --k) {
    std::swap(candidates[k - 1], candidates[detail::bounded_draw(rng, k)]);
  }
  std::vector<Subset> chosen;
  for (Subset c : candidates) {
    if (static_cast<int>(chosen.size()) >= target) break;
    bool compatible = true;
    for (Subset d : chosen) {
      if ((c & d).size() > r - 2) {
        compatible = false;
        break;
      }
    }
    if (compatible) chosen.push_back(c);
  }
  return {CircuitListMatroid(n, r, std::move(chosen)), target};
}

}  // namespace mcl
