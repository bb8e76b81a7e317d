#include "svet/nosignal.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "svet/detail/bitops.hpp"

namespace svet {

namespace {

// subset masks ordered by ascending size, then ascending mask value
std::vector<std::uint32_t> ordered_subsets(int m) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;
  for (int size = 1; size < m; ++size)
    for (std::uint32_t s = 1; s < full; ++s)
      if (std::popcount(s) == size) out.push_back(s);
  return out;
}

}  // namespace

std::vector<int> SignallingReport::subset_parties() const {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i)
    if ((subset >> (i - 1)) & 1u) out.push_back(i);
  return out;
}

std::string SignallingReport::describe() const {
  std::string parties;
  for (const int p : subset_parties()) {
    if (!parties.empty()) parties += ",";
    parties += std::to_string(p);
  }
  return "settings of parties {" + parties + "} shift a complementary marginal by " +
         std::to_string(magnitude) + " between x=" + std::to_string(x_first) +
         " and x=" + std::to_string(x_second);
}

std::optional<SignallingReport> check_nosignalling(const CorrelationTable& table,
                                                   double tol) {
  const int m = table.m();
  if (m > 8)
    throw std::invalid_argument("the subset scan is limited to m <= 8");
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;

  for (const std::uint32_t s : ordered_subsets(m)) {
    const std::uint32_t comp = full & ~s;
    const std::vector<std::uint32_t> s_words = detail::submasks(s);
    const std::vector<std::uint32_t> comp_words = detail::submasks(comp);
    for (const std::uint32_t xc : comp_words) {
      for (const std::uint32_t ac : comp_words) {
        bool have_ref = false;
        double ref = 0.0;
        ExactScalar ref_exact;
        std::uint32_t x_ref = 0;
        for (const std::uint32_t xs : s_words) {
          const std::uint32_t x = xc | xs;
          double marg;
          ExactScalar marg_exact;
          if (table.exact()) {
            for (const std::uint32_t as : s_words)
              marg_exact += table.exact_value(x, ac | as);
            marg = marg_exact.to_double();
          } else {
            marg = 0.0;
            for (const std::uint32_t as : s_words) marg += table.value(x, ac | as);
          }
          if (!have_ref) {
            have_ref = true;
            ref = marg;
            ref_exact = marg_exact;
            x_ref = x;
            continue;
          }
          const double diff = table.exact()
                                  ? (marg_exact - ref_exact).to_double()
                                  : marg - ref;
          if (std::abs(diff) > tol) {
            SignallingReport rep;
            rep.m = m;
            rep.subset = static_cast<std::uint16_t>(s);
            rep.fixed_outcomes = ac;
            rep.x_first = x_ref;
            rep.x_second = x;
            rep.marginal_first = ref;
            rep.marginal_second = marg;
            rep.magnitude = std::abs(diff);
            return rep;
          }
        }
      }
    }
  }
  return std::nullopt;
}

CorrelationTable parity_mixture(const DeterministicStrategy& s) {
  const int m = s.m();
  CorrelationTable t = CorrelationTable::zeros(m, TableRep::Exact);
  const ExactScalar p = ExactScalar::dyadic(1, static_cast<std::uint32_t>(m - 1));
  const std::uint32_t n = std::uint32_t(1) << m;
  for (std::uint32_t x = 0; x < n; ++x) {
    const int base_parity = std::popcount(s.outputs_word(x)) & 1;
    for (std::uint32_t a = 0; a < n; ++a)
      if ((std::popcount(a) & 1) == base_parity) t.set(x, a, p);
  }
  return t;
}

CorrelationTable mixture_from_weights(const MixtureSpec& spec) {
  if (spec.components.empty())
    throw std::invalid_argument("mixture needs at least one component");
  const int m = spec.components.front().strategy.m();
  ExactScalar total;
  for (const MixtureComponent& c : spec.components) {
    if (c.strategy.m() != m)
      throw std::invalid_argument("mixture components disagree on the party count");
    if (c.weight.sign() < 0)
      throw std::invalid_argument("mixture weights must be nonnegative");
    total += c.weight;
  }
  if (!(total == ExactScalar::one()))
    throw std::invalid_argument("mixture weights must sum to one, got " +
                                total.to_string());
  CorrelationTable t = CorrelationTable::zeros(m, TableRep::Exact);
  const std::uint32_t n = std::uint32_t(1) << m;
  for (const MixtureComponent& c : spec.components) {
    if (c.weight.is_zero()) continue;
    for (std::uint32_t x = 0; x < n; ++x)
      t.add(x, c.strategy.outputs_word(x), c.weight);
  }
  return t;
}

DeterministicStrategy shift_strategy(const DeterministicStrategy& s, std::uint32_t b) {
  DeterministicStrategy out = s;
  for (int i = 0; i < s.m(); ++i)
    if ((b >> i) & 1u) out.tables[i].flip_all();
  return out;
}

}  // namespace svet
