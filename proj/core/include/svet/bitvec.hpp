#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace svet {

inline constexpr int kMinParties = 2;
inline constexpr int kMaxParties = 12;

/// Joint measurement settings, one bit per party. Party i (1-based) lives at
/// bit i-1, so the packed word doubles as a dense table index.
struct InputVector {
  int m = 0;
  std::uint32_t bits = 0;

  InputVector(int m_, std::uint32_t bits_);
  bool bit(int party) const { return (bits >> (party - 1)) & 1u; }
};

/// Joint outcomes, packed like InputVector. The signed form A_i = (-1)^{a_i}
/// is available through signed_outcomes / outcomes_from_signed.
struct OutcomeVector {
  int m = 0;
  std::uint32_t bits = 0;

  OutcomeVector(int m_, std::uint32_t bits_);
  bool bit(int party) const { return (bits >> (party - 1)) & 1u; }
};

/// Sum of all outcome bits mod 2.
int parity(const OutcomeVector& a);

/// Per-party signed outcomes, each +1 or -1.
std::vector<int> signed_outcomes(const OutcomeVector& a);
OutcomeVector outcomes_from_signed(std::span<const int> values);

}  // namespace svet
