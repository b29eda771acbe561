#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mcl/error.hpp"

namespace mcl {

/// Subset of a ground set [0, n) with n <= 64, stored as a bitmask.
class Subset {
 public:
  static constexpr int kMaxElements = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  static Subset of(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }
  /// All of [0, n).
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr Subset with(int e) const { return Subset(bits_ | (std::uint64_t{1} << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(std::uint64_t{1} << e)); }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  /// Calls f(e) for each member in increasing order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(std::countr_zero(rest));
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int e) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    });
    return s + "}";
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

inline void check_ground_size(int n) {
  if (n < 0 || n > Subset::kMaxElements) {
    fail(ErrorCode::kOutOfRange,
         "ground set size " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace mcl
