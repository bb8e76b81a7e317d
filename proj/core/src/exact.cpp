#include "svet/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace svet {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("ExactScalar numerator overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

void ExactScalar::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

ExactScalar ExactScalar::pow2(int e) {
  if (e > 62 || e < -62) throw std::overflow_error("ExactScalar::pow2 exponent out of range");
  if (e >= 0) return integer(std::int64_t(1) << e);
  return dyadic(1, static_cast<std::uint32_t>(-e));
}

double ExactScalar::to_double() const {
  return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_));
}

std::string ExactScalar::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  if (exp_ > 62) throw std::overflow_error("ExactScalar denominator too large to print");
  return std::to_string(num_) + "/" + std::to_string(std::int64_t(1) << exp_);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  const std::uint32_t e = exp_ > rhs.exp_ ? exp_ : rhs.exp_;
  if (e - exp_ > 62 || e - rhs.exp_ > 62)
    throw std::overflow_error("ExactScalar exponent spread too large");
  const __int128 a = static_cast<__int128>(num_) << (e - exp_);
  const __int128 b = static_cast<__int128>(rhs.num_) << (e - rhs.exp_);
  num_ = narrow(a + b);
  exp_ = e;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  num_ = narrow(static_cast<__int128>(num_) * rhs.num_);
  exp_ += rhs.exp_;
  normalize();
  return *this;
}

bool operator<(const ExactScalar& a, const ExactScalar& b) {
  // a/2^ea < b/2^eb  <=>  a * 2^eb < b * 2^ea
  const __int128 lhs = static_cast<__int128>(a.num_) << b.exp_;
  const __int128 rhs = static_cast<__int128>(b.num_) << a.exp_;
  return lhs < rhs;
}

bool operator<=(const ExactScalar& a, const ExactScalar& b) { return !(b < a); }

}  // namespace svet
