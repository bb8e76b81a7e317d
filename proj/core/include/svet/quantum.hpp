#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "svet/bitvec.hpp"
#include "svet/coeffs.hpp"
#include "svet/table.hpp"

namespace svet {

inline constexpr std::uint64_t kDefaultQuantumSeed = 1;
inline constexpr int kDefaultRestarts = 32;

/// Per-party, per-setting measurement directions on the Bloch equator
/// (azimuthal angles phi), optionally with polar angles theta for general
/// directions. Equatorial observables cos(phi) sigma_x + sin(phi) sigma_y
/// suffice to reach the quantum maximum on the GHZ state.
struct AngleSet {
  int m = 0;
  std::vector<std::array<double, 2>> phi;    // [party][setting]
  std::vector<std::array<double, 2>> theta;  // empty => all theta = pi/2

  bool equatorial() const { return theta.empty(); }
  double phi_of(int party, int setting) const { return phi[party][setting]; }
  double theta_of(int party, int setting) const;

  static AngleSet zeros(int m);
};

struct StateVector {
  int m = 0;
  std::vector<std::complex<double>> amps;
};

/// (|0...0> + |1...1>) / sqrt(2) on m qubits, 2 <= m <= 10.
StateVector ghz(int m);

/// E(x) = <GHZ| tensor_i O_i^{x_i} |GHZ>. Equatorial sets use the closed form
/// cos(sum_i phi_i^{x_i}); general sets go through the tensor contraction.
double correlator(const AngleSet& angles, const InputVector& x);
/// Always evaluates by full tensor contraction (the cross-check route).
double correlator_contraction(const AngleSet& angles, const InputVector& x);

/// sum_x coeff(x) E(x).
double quantum_value(const AngleSet& angles, const CoefficientTable& coeffs);

/// Full outcome distribution P(a|x) of projective measurements along the
/// given directions on the GHZ state; m <= 8. Floating representation.
CorrelationTable measurement_table(const AngleSet& angles);

struct OptimizeResult {
  AngleSet angles;
  double value = 0.0;
  double target = 0.0;  // 2^{m-q-1/2}
  bool converged = false;
};

/// Multi-start coordinate ascent over the measurement angles against the
/// Svetlichny polynomial: one analytic start (phi_i^1 - phi_i^0 = pi/2,
/// common offset aligned with the coefficient phase sum) plus `restarts`
/// random starts drawn from the seed. Each coordinate is maximized by a
/// coarse scan followed by golden-section refinement. Non-convergence is a
/// result, not an error: converged is false and value carries the best found.
OptimizeResult optimize_angles(int m, int restarts = kDefaultRestarts,
                               double tol = 1e-6,
                               std::uint64_t seed = kDefaultQuantumSeed,
                               bool general = false);

}  // namespace svet
