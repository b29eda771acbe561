#pragma once

// Exact arithmetic: unbounded integers, reduced rationals and prime fields.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "mcl/error.hpp"

namespace mcl {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorCode::kParseError, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) fail(ErrorCode::kParseError, "bad integer '" + s + "'");
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') fail(ErrorCode::kParseError, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long t = 1; t <= k; ++t) {
    result *= n - k + t;
    result /= t;
  }
  return result;
}

/// A rational number kept in lowest terms with a positive denominator, so
/// that structural equality is value equality.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of arithmetic types
  Ratio(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) fail(ErrorCode::kZeroDenominator, "ratio with zero denominator");
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  /// "num/den", always with an explicit denominator.
  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// Accepts "a", "a/b" with optional sign; the result is reduced.
  static Ratio parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Ratio(parse_bigint(text));
    return Ratio(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
  }

  Ratio& operator+=(const Ratio& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Ratio& operator-=(const Ratio& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Ratio& operator*=(const Ratio& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Ratio& operator/=(const Ratio& o) {
    if (o.num_ == 0) fail(ErrorCode::kZeroDenominator, "division by zero ratio");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(Ratio a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Ratio ratio_of(BigInt num, BigInt den) { return Ratio(std::move(num), std::move(den)); }

/// Deterministic primality by trial division; moduli here are small.
constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

inline constexpr std::uint32_t kMaxPrimeModulus = 1u << 31;

/// Element of F_p. The modulus travels with the value so mixed-field
/// arithmetic is caught instead of silently producing garbage.
class PrimeFieldElement {
 public:
  PrimeFieldElement(long long value, std::uint32_t modulus) : modulus_(modulus) {
    if (!is_prime(modulus) || modulus >= kMaxPrimeModulus) {
      fail(ErrorCode::kNotPrime, std::to_string(modulus) + " is not a supported prime modulus");
    }
    long long r = value % static_cast<long long>(modulus);
    residue_ = static_cast<std::uint32_t>(r < 0 ? r + modulus : r);
  }

  std::uint32_t residue() const { return residue_; }
  std::uint32_t modulus() const { return modulus_; }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    return from_residue((std::uint64_t{a.residue_} + b.residue_) % a.modulus_, a.modulus_);
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    return from_residue((std::uint64_t{a.residue_} + a.modulus_ - b.residue_) % a.modulus_,
                        a.modulus_);
  }
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    return from_residue((std::uint64_t{a.residue_} * b.residue_) % a.modulus_, a.modulus_);
  }
  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

 private:
  friend PrimeFieldElement ff_inv(const PrimeFieldElement& a);

  static PrimeFieldElement from_residue(std::uint64_t residue, std::uint32_t modulus) {
    PrimeFieldElement e;
    e.residue_ = static_cast<std::uint32_t>(residue);
    e.modulus_ = modulus;
    return e;
  }
  static void check_same(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus_ != b.modulus_) fail(ErrorCode::kInvalidArgument, "mixed prime field moduli");
  }
  PrimeFieldElement() = default;

  std::uint32_t residue_ = 0;
  std::uint32_t modulus_ = 2;
};

/// Inverse of a nonzero residue mod p via the extended Euclidean algorithm.
inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) fail(ErrorCode::kZeroInverse, "zero has no inverse modulo " + std::to_string(p));
  std::int64_t old_r = a % p, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  std::int64_t x = old_s % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(x < 0 ? x + p : x);
}

inline PrimeFieldElement ff_inv(const PrimeFieldElement& a) {
  return PrimeFieldElement::from_residue(inverse_mod(a.residue_, a.modulus_), a.modulus_);
}

}  // namespace mcl
