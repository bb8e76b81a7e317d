#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svet/exact.hpp"
#include "svet/strategy.hpp"
#include "svet/table.hpp"

namespace svet {

struct MixtureComponent {
  ExactScalar weight;
  DeterministicStrategy strategy;
};

/// Convex combination of deterministic strategies. Weights are dyadic
/// rationals, so every derived table is exact.
struct MixtureSpec {
  std::vector<MixtureComponent> components;
};

/// First no-signalling violation found: varying the settings of `subset`
/// moves the marginal of the complementary outcomes `fixed_outcomes` between
/// settings x_first and x_second (which differ only inside the subset).
struct SignallingReport {
  int m = 0;
  std::uint16_t subset = 0;          // parties whose settings vary
  std::uint32_t fixed_outcomes = 0;  // outcome bits on the complement
  std::uint32_t x_first = 0;
  std::uint32_t x_second = 0;
  double marginal_first = 0.0;
  double marginal_second = 0.0;
  double magnitude = 0.0;

  std::vector<int> subset_parties() const;
  std::string describe() const;
};

/// Checks that for every nonempty proper subset S of parties and every fixed
/// complementary outcome block, the marginal sum_{a_S} P(a|x) does not depend
/// on x_S (within tol; exact tables with tol 0 are compared exactly). Scans
/// subsets by ascending size then ascending mask and reports the first
/// violation. Requires m <= 8.
std::optional<SignallingReport> check_nosignalling(const CorrelationTable& table,
                                                   double tol = 0.0);

/// Uniform mixture of a strategy with all 2^{m-1} even-parity output shifts,
/// in closed form: P(a|x) = 2^{-(m-1)} when parity(a) = parity(a0(x)), else
/// 0. No-signalling, with every k-party-summed marginal equal to 2^{k-m},
/// while the polynomial value of the base strategy is preserved.
CorrelationTable parity_mixture(const DeterministicStrategy& s);

/// P(a|x) = sum_mu p(mu) P^mu(a|x). Weights must be nonnegative and sum to
/// one exactly; all components must share m.
CorrelationTable mixture_from_weights(const MixtureSpec& spec);

/// s with b XOR-ed into the outputs (b as packed party bits).
DeterministicStrategy shift_strategy(const DeterministicStrategy& s, std::uint32_t b);

}  // namespace svet
