#pragma once

#include <cstdint>
#include <string>

namespace svet {

/// Exact dyadic rational: numerator / 2^exponent.
///
/// Kept in canonical form (odd numerator whenever the exponent is positive,
/// zero stored as 0/2^0), so equality is plain field comparison. This is the
/// scalar type for polynomial coefficients and for every probability produced
/// by deterministic strategies and their mixtures; it never rounds.
class ExactScalar {
 public:
  constexpr ExactScalar() = default;

  static ExactScalar integer(std::int64_t n) { return ExactScalar(n, 0); }
  static ExactScalar dyadic(std::int64_t numerator, std::uint32_t exponent) {
    return ExactScalar(numerator, exponent);
  }
  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return integer(1); }
  /// 2^e for -62 <= e <= 62.
  static ExactScalar pow2(int e);

  std::int64_t numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  ExactScalar abs() const { return num_ < 0 ? -*this : *this; }
  ExactScalar halved() const { return ExactScalar(num_, exp_ + 1); }

  double to_double() const;
  /// Decimal rational string: "0", "2", "-1/4", "7/4".
  std::string to_string() const;

  ExactScalar operator-() const { return ExactScalar(-num_, exp_); }
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs) { return *this += -rhs; }
  ExactScalar& operator*=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b);
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b);
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return b < a; }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return b <= a; }

 private:
  ExactScalar(std::int64_t num, std::uint32_t exp) : num_(num), exp_(exp) { normalize(); }
  void normalize();

  std::int64_t num_ = 0;
  std::uint32_t exp_ = 0;
};

}  // namespace svet
