#include "svet/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace svet {

namespace {

void check(int m, std::uint32_t bits) {
  if (m < kMinParties || m > kMaxParties)
    throw std::invalid_argument("party count must be in [2, 12]");
  if (bits >> m)
    throw std::invalid_argument("bit word has bits beyond the party count");
}

}  // namespace

InputVector::InputVector(int m_, std::uint32_t bits_) : m(m_), bits(bits_) {
  check(m, bits);
}

OutcomeVector::OutcomeVector(int m_, std::uint32_t bits_) : m(m_), bits(bits_) {
  check(m, bits);
}

int parity(const OutcomeVector& a) { return std::popcount(a.bits) & 1; }

std::vector<int> signed_outcomes(const OutcomeVector& a) {
  std::vector<int> out(static_cast<std::size_t>(a.m));
  for (int i = 1; i <= a.m; ++i) out[i - 1] = a.bit(i) ? -1 : 1;
  return out;
}

OutcomeVector outcomes_from_signed(std::span<const int> values) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 1 && values[i] != -1)
      throw std::invalid_argument("signed outcomes must be +1 or -1");
    if (values[i] == -1) bits |= std::uint32_t(1) << i;
  }
  return OutcomeVector(static_cast<int>(values.size()), bits);
}

}  // namespace svet
