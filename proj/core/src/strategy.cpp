#include "svet/strategy.hpp"

#include <bit>
#include <stdexcept>

#include "svet/detail/bitops.hpp"

namespace svet {

pp_graph_error::pp_graph_error(std::pair<int, int> witness)
    : std::runtime_error("graph is partially paired: no party sees both x" +
                         std::to_string(witness.first) + " and x" +
                         std::to_string(witness.second)),
      witness_(witness) {}

BitTable::BitTable(int arity) : arity_(arity) {
  if (arity < 0 || arity > 12) throw std::invalid_argument("table arity out of range");
  words_.assign((size() + 63) / 64, 0);
}

void BitTable::set(std::uint32_t idx, bool v) {
  const std::uint64_t bit = std::uint64_t(1) << (idx & 63u);
  if (v)
    words_[idx >> 6] |= bit;
  else
    words_[idx >> 6] &= ~bit;
}

void BitTable::flip_all() {
  for (auto& w : words_) w = ~w;
  const std::size_t tail = size() & 63u;
  if (tail != 0) words_.back() &= (std::uint64_t(1) << tail) - 1;
}

std::string BitTable::to_hex() const { return detail::bits_to_hex(words_, size()); }

BitTable BitTable::from_hex(int arity, std::string_view hex) {
  BitTable t(arity);
  t.words_ = detail::hex_to_bits(hex, t.size());
  return t;
}

int DeterministicStrategy::output(int party, std::uint32_t x_word) const {
  return tables[party - 1].get(detail::extract_bits(x_word, dep[party - 1]));
}

std::uint32_t DeterministicStrategy::outputs_word(std::uint32_t x_word) const {
  std::uint32_t a = 0;
  for (int i = 0; i < m(); ++i)
    a |= std::uint32_t(tables[i].get(detail::extract_bits(x_word, dep[i]))) << i;
  return a;
}

DeterministicStrategy make_strategy(const CommGraph& g) {
  DeterministicStrategy s{g, {}, {}};
  const DependencyProfile prof = dependency_sets(g);
  s.dep = prof.dep;
  s.tables.reserve(static_cast<std::size_t>(g.m()));
  for (int i = 0; i < g.m(); ++i) s.tables.emplace_back(std::popcount(s.dep[i]));
  return s;
}

DeterministicStrategy strategy_from_monomials(
    const CommGraph& g, const std::vector<std::vector<std::uint16_t>>& monomials) {
  if (monomials.size() != static_cast<std::size_t>(g.m()))
    throw std::invalid_argument("need one monomial list per party");
  DeterministicStrategy s = make_strategy(g);
  for (int i = 0; i < g.m(); ++i) {
    const std::uint16_t dep = s.dep[i];
    BitTable& table = s.tables[i];
    for (const std::uint16_t mono : monomials[i]) {
      if (mono & ~dep)
        throw std::invalid_argument("monomial reaches outside the party's dependency set");
      // the monomial in restricted coordinates
      const std::uint32_t local = detail::extract_bits(mono, dep);
      const std::uint32_t n = std::uint32_t(1) << table.arity();
      for (std::uint32_t r = 0; r < n; ++r)
        if ((r & local) == local) table.flip(r);
    }
  }
  return s;
}

ParityFunction::ParityFunction(int m) : m_(m) {
  words_.assign((bit_count() + 63) / 64, 0);
}

ParityFunction::ParityFunction(int m, std::vector<std::uint64_t> words)
    : m_(m), words_(std::move(words)) {
  if (words_.size() != (bit_count() + 63) / 64)
    throw std::invalid_argument("parity word has the wrong length");
}

void ParityFunction::set_bit(std::uint32_t x, bool v) {
  const std::uint64_t bit = std::uint64_t(1) << (x & 63u);
  if (v)
    words_[x >> 6] |= bit;
  else
    words_[x >> 6] &= ~bit;
}

std::string ParityFunction::to_hex() const {
  return detail::bits_to_hex(words_, bit_count());
}

ParityFunction induced_parity(const DeterministicStrategy& s) {
  ParityFunction c(s.m());
  const std::uint32_t n = std::uint32_t(1) << s.m();
  for (std::uint32_t x = 0; x < n; ++x)
    c.set_bit(x, std::popcount(s.outputs_word(x)) & 1);
  return c;
}

ParityFunction monomial_word(int m, std::uint16_t monomial) {
  ParityFunction c(m);
  const std::uint32_t n = std::uint32_t(1) << m;
  for (std::uint32_t x = 0; x < n; ++x)
    if ((x & monomial) == monomial) c.set_bit(x, true);
  return c;
}

ParitySubspace parity_basis(const CommGraph& g) {
  const DependencyProfile prof = dependency_sets(g);
  std::vector<bool> seen(std::size_t(1) << g.m(), false);
  for (int i = 0; i < g.m(); ++i)
    for (const std::uint32_t sub : detail::submasks(prof.dep[i])) seen[sub] = true;
  ParitySubspace out;
  out.m = g.m();
  for (std::uint32_t t = 0; t < seen.size(); ++t)
    if (seen[t]) out.monomials.push_back(static_cast<std::uint16_t>(t));
  return out;
}

DeterministicStrategy tp_strategy(const CommGraph& g) {
  const Classification cls = classify(g);
  if (cls.is_pp()) throw pp_graph_error(cls.witness);
  const int m = g.m();
  const int q = (m + 1) / 2;
  std::vector<std::vector<std::uint16_t>> monomials(static_cast<std::size_t>(m));
  for (const PairCover& pc : cls.covering) {
    monomials[pc.k - 1].push_back(
        std::uint16_t((std::uint16_t(1) << (pc.i - 1)) | (std::uint16_t(1) << (pc.j - 1))));
  }
  if ((q + 1) % 2 != 0) {
    for (int i = 0; i < m; ++i)
      monomials[i].push_back(std::uint16_t(std::uint16_t(1) << i));
  }
  if ((q * (q - 1) / 2) % 2 != 0) monomials[0].push_back(0);
  return strategy_from_monomials(g, monomials);
}

CorrelationTable strategy_to_table(const DeterministicStrategy& s) {
  CorrelationTable t = CorrelationTable::zeros(s.m(), TableRep::Exact);
  const std::uint32_t n = std::uint32_t(1) << s.m();
  for (std::uint32_t x = 0; x < n; ++x)
    t.set(x, s.outputs_word(x), ExactScalar::one());
  return t;
}

ExactScalar eval_strategy(const DeterministicStrategy& s, const CoefficientTable& coeffs) {
  if (s.m() != coeffs.m)
    throw std::invalid_argument("strategy and coefficients disagree on the party count");
  const std::uint32_t n = std::uint32_t(1) << s.m();
  ExactScalar acc = ExactScalar::zero();
  for (std::uint32_t x = 0; x < n; ++x) {
    const ExactScalar& c = coeffs.at(x);
    if (c.is_zero()) continue;
    if (std::popcount(s.outputs_word(x)) & 1)
      acc -= c;
    else
      acc += c;
  }
  return acc;
}

}  // namespace svet
