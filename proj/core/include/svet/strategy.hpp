#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svet/coeffs.hpp"
#include "svet/exact.hpp"
#include "svet/graph.hpp"
#include "svet/table.hpp"

namespace svet {

inline constexpr int kDefaultDimCap = 24;
inline constexpr std::uint64_t kDefaultBruteCap = std::uint64_t(1) << 24;

/// Enumeration work would exceed the configured cap.
class capacity_error : public std::runtime_error {
 public:
  capacity_error(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what), required_(required), cap_(cap) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// A partially paired graph was passed where a totally paired one is needed.
class pp_graph_error : public std::runtime_error {
 public:
  explicit pp_graph_error(std::pair<int, int> witness);

  std::pair<int, int> witness() const { return witness_; }

 private:
  std::pair<int, int> witness_;
};

/// Truth table over a k-bit domain, bit idx = output on restricted input idx.
class BitTable {
 public:
  BitTable() = default;
  explicit BitTable(int arity);

  int arity() const { return arity_; }
  std::size_t size() const { return std::size_t(1) << arity_; }
  bool get(std::uint32_t idx) const {
    return (words_[idx >> 6] >> (idx & 63u)) & 1u;
  }
  void set(std::uint32_t idx, bool v);
  void flip(std::uint32_t idx) { words_[idx >> 6] ^= std::uint64_t(1) << (idx & 63u); }
  void flip_all();

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::string to_hex() const;
  static BitTable from_hex(int arity, std::string_view hex);

  bool operator==(const BitTable&) const = default;

 private:
  int arity_ = 0;
  std::vector<std::uint64_t> words_ = {0};
};

/// An extreme point of the correlation polytope compatible with a graph:
/// party i's output is a truth table over the inputs in Dep(i) only, packed
/// ascending. The restricted domain enforces the dependence structurally.
struct DeterministicStrategy {
  CommGraph graph{2};
  std::vector<std::uint16_t> dep;  // Dep(i) mask per party
  std::vector<BitTable> tables;    // arity = popcount(dep[i])

  int m() const { return graph.m(); }
  int output(int party, std::uint32_t x_word) const;
  std::uint32_t outputs_word(std::uint32_t x_word) const;

  bool operator==(const DeterministicStrategy&) const = default;
};

/// All-zero-output strategy on g.
DeterministicStrategy make_strategy(const CommGraph& g);

/// Builds the strategy whose party-i output is the XOR of the given monomials
/// (bit masks over parties; 0 is the constant 1). Every monomial must sit
/// inside Dep(i).
DeterministicStrategy strategy_from_monomials(
    const CommGraph& g, const std::vector<std::vector<std::uint16_t>>& monomials);

/// Global parity c(x) = sum_i a_i(x) mod 2 as a 2^m-bit word, bit position =
/// x word.
class ParityFunction {
 public:
  ParityFunction() = default;
  explicit ParityFunction(int m);
  ParityFunction(int m, std::vector<std::uint64_t> words);

  int m() const { return m_; }
  std::size_t bit_count() const { return std::size_t(1) << m_; }
  bool bit(std::uint32_t x) const { return (words_[x >> 6] >> (x & 63u)) & 1u; }
  void set_bit(std::uint32_t x, bool v);
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::string to_hex() const;

  bool operator==(const ParityFunction&) const = default;

 private:
  int m_ = 0;
  std::vector<std::uint64_t> words_ = {0};
};

ParityFunction induced_parity(const DeterministicStrategy& s);
/// Indicator word of x -> prod_{t in T} x_t, i.e. bit x set iff T subset x.
ParityFunction monomial_word(int m, std::uint16_t monomial);

/// Monomial basis of the parity functions achievable on a graph: every
/// T with T subset Dep(i) for some i (the empty monomial is the constant).
/// The achievable global parities are exactly the GF(2) span of this basis.
struct ParitySubspace {
  int m = 0;
  std::vector<std::uint16_t> monomials;  // sorted ascending

  int dimension() const { return static_cast<int>(monomials.size()); }
};

ParitySubspace parity_basis(const CommGraph& g);

struct GraphMaximum {
  ExactScalar value;
  ParityFunction best_parity;
  DeterministicStrategy witness;
};

/// Exact maximum of sum_x coeff(x) (-1)^{c(x)} over the parity functions c
/// achievable on g, computed as a nearest-codeword search: the value is
/// |coeff| * (support - 2 * min Hamming distance from the coefficient sign
/// word to the span, masked to the support). Ties between equally good parity
/// functions break toward the numerically smallest word; the witness assigns
/// each monomial of the winner to the lowest covering party.
/// Throws capacity_error when the basis dimension exceeds dim_cap.
GraphMaximum max_over_graph(const CommGraph& g, const CoefficientTable& coeffs,
                            int dim_cap = kDefaultDimCap);

/// Independent oracle: enumerates every deterministic strategy on g and
/// maximizes the polynomial value directly. Throws capacity_error when the
/// strategy count prod_i 2^{2^{|Dep(i)|}} exceeds cap.
ExactScalar brute_force_max(const CommGraph& g, const CoefficientTable& coeffs,
                            std::uint64_t cap = kDefaultBruteCap);

/// For a totally paired graph, the explicit strategy whose global parity is
/// sum_{i<j} x_i x_j + (q+1) sum_i x_i + (q^2-q)/2: each pair monomial goes
/// to the lowest covering party, the linear terms (when q+1 is odd) to the
/// parties themselves, the constant to party 1. Attains the algebraic
/// maximum 2^{m-q}. Throws pp_graph_error on PP input.
DeterministicStrategy tp_strategy(const CommGraph& g);

/// Exact delta table: P(a|x) = 1 iff a = a(x).
CorrelationTable strategy_to_table(const DeterministicStrategy& s);

/// sum_x coeff(x) (-1)^{sum_i a_i(x)}; equals evaluate(strategy_to_table(s))
/// exactly.
ExactScalar eval_strategy(const DeterministicStrategy& s, const CoefficientTable& coeffs);

}  // namespace svet
