#include "svet/detail/bitops.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace svet::detail {

std::uint32_t extract_bits(std::uint32_t x, std::uint32_t mask) {
  std::uint32_t out = 0;
  int k = 0;
  while (mask != 0) {
    const int pos = std::countr_zero(mask);
    out |= ((x >> pos) & 1u) << k;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

const std::uint8_t* popcount16_table() {
  static const std::array<std::uint8_t, 65536> table = [] {
    std::array<std::uint8_t, 65536> t{};
    for (std::uint32_t v = 1; v < t.size(); ++v) t[v] = t[v >> 1] + (v & 1u);
    return t;
  }();
  return table.data();
}

std::vector<std::uint32_t> submasks(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t(1) << std::popcount(mask));
  std::uint32_t sub = mask;
  for (;;) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  // collected descending; flip to ascending
  for (std::size_t i = 0, j = out.size() - 1; i < j; ++i, --j) std::swap(out[i], out[j]);
  return out;
}

std::string bits_to_hex(const std::vector<std::uint64_t>& words, std::size_t nbits) {
  const std::size_t digits = (nbits + 3) / 4;
  std::string out(digits, '0');
  static const char* hexdig = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    const std::size_t bit = d * 4;
    const std::size_t w = bit >> 6;
    unsigned nibble = 0;
    if (w < words.size()) nibble = (words[w] >> (bit & 63u)) & 0xfu;
    out[digits - 1 - d] = hexdig[nibble];
  }
  return out;
}

std::vector<std::uint64_t> hex_to_bits(std::string_view hex, std::size_t nbits) {
  const std::size_t nwords = (nbits + 63) / 64;
  std::vector<std::uint64_t> out(nwords, 0);
  if (hex.empty()) throw std::invalid_argument("empty hex string");
  std::size_t bit = 0;
  for (std::size_t i = hex.size(); i-- > 0;) {
    const char c = hex[i];
    unsigned v;
    if (c >= '0' && c <= '9') v = unsigned(c - '0');
    else if (c >= 'a' && c <= 'f') v = unsigned(c - 'a') + 10;
    else if (c >= 'A' && c <= 'F') v = unsigned(c - 'A') + 10;
    else throw std::invalid_argument("invalid hex digit");
    if (bit >= nbits) {
      if (v != 0) throw std::invalid_argument("hex value wider than the bit field");
      continue;
    }
    // bit is a multiple of 4, so a nibble never straddles a word boundary
    out[bit >> 6] |= std::uint64_t(v) << (bit & 63u);
    bit += 4;
  }
  // trailing bits beyond nbits must be clear
  const std::size_t tail = nbits & 63u;
  if (tail != 0 && (out[nwords - 1] >> tail) != 0)
    throw std::invalid_argument("hex value wider than the bit field");
  return out;
}

}  // namespace svet::detail
