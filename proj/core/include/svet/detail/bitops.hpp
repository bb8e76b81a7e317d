#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace svet::detail {

/// Packs the bits of x selected by mask into a contiguous low-order word
/// (software PEXT); bit k of the result is x's bit at the k-th lowest set
/// position of mask.
std::uint32_t extract_bits(std::uint32_t x, std::uint32_t mask);

/// 2^16-entry popcount lookup. The enumeration hot loops go through this
/// instead of std::popcount so the build does not depend on the POPCNT ISA
/// extension being compiled in.
const std::uint8_t* popcount16_table();

inline int popcount64(std::uint64_t v) {
  const std::uint8_t* t = popcount16_table();
  return t[v & 0xffffu] + t[(v >> 16) & 0xffffu] + t[(v >> 32) & 0xffffu] +
         t[(v >> 48) & 0xffffu];
}

/// All submasks of mask (including 0 and mask itself) in ascending numeric
/// order.
std::vector<std::uint32_t> submasks(std::uint32_t mask);

/// Big-endian hex of an nbits-wide little-endian word array, zero-padded to
/// ceil(nbits/4) digits.
std::string bits_to_hex(const std::vector<std::uint64_t>& words, std::size_t nbits);
std::vector<std::uint64_t> hex_to_bits(std::string_view hex, std::size_t nbits);

}  // namespace svet::detail
