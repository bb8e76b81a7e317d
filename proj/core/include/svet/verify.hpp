#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "svet/coeffs.hpp"
#include "svet/exact.hpp"

namespace svet {

/// Attached to the reported lhv attainment value, which is a computed fact:
/// the theory row only upper-bounds it.
inline constexpr const char* kLhvAttainmentNote =
    "computed attainment, paper gives upper bound only";

/// One verification row per party count: theory bounds next to computed
/// attainments for the empty (lhv) graph, the separable bipartition catalog,
/// the totally paired construction, and the quantum optimizer.
struct VerifyRow {
  int m = 0;
  int q = 0;
  TheoryBounds bounds;
  ExactScalar lhv_max;
  ExactScalar separable_max;
  bool separable_complete = true;  // false if some split exceeded the dim cap
  ExactScalar tp_attained;
  double quantum_value = 0.0;
  bool quantum_converged = false;
  bool pass = false;
};

std::vector<VerifyRow> verify_rows(int m_min, int m_max,
                                   std::uint64_t seed = 1,
                                   int restarts = 32,
                                   int dim_cap = 24);

/// JSON report shared by the CLI and the acceptance suite.
std::string verify_report_json(const std::vector<VerifyRow>& rows, std::uint64_t seed);

}  // namespace svet
