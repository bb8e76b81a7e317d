#pragma once

#include <cstdint>
#include <vector>

#include "svet/exact.hpp"
#include "svet/table.hpp"

namespace svet {

enum class PolyKind { MerminF, SvetlichnyMu };
enum class CoeffMethod { Closed, Recursive };
enum class MerminMethod { SingleStep, DoubleStep };

/// Coefficient table of a Mermin or Svetlichny polynomial: at(x) is the exact
/// weight of the signed product A_1^{x_1}...A_m^{x_m}. Nonzero entries all
/// share one magnitude (2^-q for Svetlichny with q = ceil(m/2), 2^-floor(m/2)
/// for Mermin), so a table is fully described by a sign word and a support
/// word; the maximization kernels work on those.
struct CoefficientTable {
  int m = 0;
  PolyKind kind = PolyKind::SvetlichnyMu;
  int q = 0;
  std::vector<ExactScalar> values;  // indexed by the x word

  const ExactScalar& at(std::uint32_t x) const { return values[x]; }
  /// Common |value| over the nonzero entries.
  ExactScalar magnitude() const;
  /// bit x set iff at(x) < 0
  std::vector<std::uint64_t> sign_word() const;
  /// bit x set iff at(x) != 0
  std::vector<std::uint64_t> support_word() const;

  bool operator==(const CoefficientTable&) const = default;
};

/// Mermin coefficients F_m grown from F_2(x1,x2) = 1/2 (-1)^{x1 x2} by the
/// one-party extension step. DoubleStep extends two parties at a time (even m
/// only); it exists as an independent construction for cross-checks.
CoefficientTable mermin_coeffs(int m, MerminMethod method = MerminMethod::SingleStep);

/// Svetlichny coefficients mu_m. Closed evaluates the sign exponent
/// sum_{i<j} x_i x_j + (q+1) sum_i x_i + (q^2-q)/2 directly; Recursive goes
/// through the Mermin recursion plus the odd-m symmetrisation
/// mu_m = (F_m(x) + F_m(xbar)) / 2. The two must produce identical tables.
CoefficientTable svetlichny_coeffs(int m, CoeffMethod method = CoeffMethod::Closed);

/// <S_m> = sum_{x,a} coeff(x) (-1)^{sum_i a_i} P(a|x).
double evaluate(const CorrelationTable& table, const CoefficientTable& coeffs);
/// Same sum in exact arithmetic; requires an exact table.
ExactScalar evaluate_exact(const CorrelationTable& table, const CoefficientTable& coeffs);

struct TheoryBounds {
  double lhv_separable = 0;
  double quantum = 0;
  double algebraic = 0;
};

/// (2^{m-q-1}, 2^{m-q-1/2}, 2^{m-q}) with q = ceil(m/2).
TheoryBounds theory_bounds(int m);

}  // namespace svet
