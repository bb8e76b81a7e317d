#include "svet/quantum.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace svet {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_state_m(int m, int hi) {
  if (m < 2 || m > hi)
    throw std::invalid_argument("party count must be in [2, " + std::to_string(hi) + "]");
}

struct Mat2 {
  cd a00, a01, a10, a11;
};

// direction (theta, phi) on the Bloch sphere as a +-1-valued observable
Mat2 observable(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  return {cd(ct, 0.0), st * std::exp(cd(0.0, -phi)), st * std::exp(cd(0.0, phi)),
          cd(-ct, 0.0)};
}

// rows are the conjugated +1 / -1 eigenvectors of observable(theta, phi);
// applying it maps eigenbasis amplitudes onto computational basis slots
Mat2 measurement_rotation(double theta, double phi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cd em = std::exp(cd(0.0, -phi));
  return {cd(c, 0.0), s * em, cd(s, 0.0), -c * em};
}

void apply_gate(std::vector<cd>& amps, int qubit, const Mat2& u) {
  const std::size_t stride = std::size_t(1) << qubit;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t k = 0; k < stride; ++k) {
      const cd a0 = amps[base + k];
      const cd a1 = amps[base + k + stride];
      amps[base + k] = u.a00 * a0 + u.a01 * a1;
      amps[base + k + stride] = u.a10 * a0 + u.a11 * a1;
    }
  }
}

double objective(const AngleSet& angles, const std::vector<double>& coeff) {
  const int m = angles.m;
  const std::uint32_t n = std::uint32_t(1) << m;
  double acc = 0.0;
  if (angles.equatorial()) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (coeff[x] == 0.0) continue;
      double phase = 0.0;
      for (int i = 0; i < m; ++i) phase += angles.phi[i][(x >> i) & 1u];
      acc += coeff[x] * std::cos(phase);
    }
    return acc;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coeff[x] == 0.0) continue;
    acc += coeff[x] * correlator_contraction(angles, InputVector(m, x));
  }
  return acc;
}

// coarse scan plus golden-section refinement of a single angle; periodic
// coordinates may refine past the scan edges, clamped ones (theta) may not
template <typename F>
double line_max(F&& f, double lo, double hi, bool clamp, double* best_arg) {
  constexpr int kCoarse = 16;
  constexpr double kInvPhi = 0.6180339887498949;
  double arg = lo, val = f(lo);
  const double step = (hi - lo) / kCoarse;
  for (int k = 1; k <= kCoarse; ++k) {
    const double t = lo + k * step;
    const double v = f(t);
    if (v > val) {
      val = v;
      arg = t;
    }
  }
  double a = arg - step, b = arg + step;
  if (clamp) {
    a = a < lo ? lo : a;
    b = b > hi ? hi : b;
  }
  double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-11) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  const double mid = (a + b) / 2;
  const double vm = f(mid);
  if (vm > val) {
    val = vm;
    arg = mid;
  }
  *best_arg = arg;
  return val;
}

double wrap_angle(double phi) {
  const double tau = 2 * kPi;
  phi -= tau * std::floor(phi / tau);
  return phi >= tau ? 0.0 : phi;
}

double coordinate_ascent(AngleSet& angles, const std::vector<double>& coeff,
                         bool general) {
  double cur = objective(angles, coeff);
  for (int pass = 0; pass < 60; ++pass) {
    const double before = cur;
    for (int i = 0; i < angles.m; ++i) {
      for (int b = 0; b < 2; ++b) {
        {
          double arg;
          const double v = line_max(
              [&](double t) {
                angles.phi[i][b] = t;
                return objective(angles, coeff);
              },
              0.0, 2 * kPi, false, &arg);
          angles.phi[i][b] = wrap_angle(arg);
          cur = v;
        }
        if (general) {
          double arg;
          const double v = line_max(
              [&](double t) {
                angles.theta[i][b] = t;
                return objective(angles, coeff);
              },
              0.0, kPi, true, &arg);
          angles.theta[i][b] = arg;
          cur = v;
        }
      }
    }
    if (cur - before < 1e-13) break;
  }
  return cur;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double AngleSet::theta_of(int party, int setting) const {
  return theta.empty() ? kPi / 2 : theta[party][setting];
}

AngleSet AngleSet::zeros(int m) {
  AngleSet a;
  a.m = m;
  a.phi.assign(static_cast<std::size_t>(m), {0.0, 0.0});
  return a;
}

StateVector ghz(int m) {
  check_state_m(m, 10);
  StateVector psi;
  psi.m = m;
  psi.amps.assign(std::size_t(1) << m, cd(0.0, 0.0));
  const double r = 1.0 / std::numbers::sqrt2;
  psi.amps.front() = cd(r, 0.0);
  psi.amps.back() = cd(r, 0.0);
  return psi;
}

double correlator_contraction(const AngleSet& angles, const InputVector& x) {
  if (angles.m != x.m)
    throw std::invalid_argument("angle set and input disagree on the party count");
  StateVector psi = ghz(angles.m);
  std::vector<cd> work = psi.amps;
  for (int i = 0; i < angles.m; ++i) {
    const int setting = (x.bits >> i) & 1u;
    apply_gate(work, i, observable(angles.theta_of(i, setting), angles.phi_of(i, setting)));
  }
  cd inner(0.0, 0.0);
  for (std::size_t k = 0; k < work.size(); ++k) inner += std::conj(psi.amps[k]) * work[k];
  return inner.real();
}

double correlator(const AngleSet& angles, const InputVector& x) {
  if (!angles.equatorial()) return correlator_contraction(angles, x);
  if (angles.m != x.m)
    throw std::invalid_argument("angle set and input disagree on the party count");
  double phase = 0.0;
  for (int i = 0; i < angles.m; ++i) phase += angles.phi[i][(x.bits >> i) & 1u];
  return std::cos(phase);
}

double quantum_value(const AngleSet& angles, const CoefficientTable& coeffs) {
  if (angles.m != coeffs.m)
    throw std::invalid_argument("angle set and coefficients disagree on the party count");
  const std::uint32_t n = std::uint32_t(1) << coeffs.m;
  double acc = 0.0;
  for (std::uint32_t x = 0; x < n; ++x) {
    const double c = coeffs.at(x).to_double();
    if (c == 0.0) continue;
    acc += c * correlator(angles, InputVector(coeffs.m, x));
  }
  return acc;
}

CorrelationTable measurement_table(const AngleSet& angles) {
  const int m = angles.m;
  check_state_m(m, 8);
  CorrelationTable t = CorrelationTable::zeros(m, TableRep::Floating);
  const StateVector psi = ghz(m);
  const std::uint32_t n = std::uint32_t(1) << m;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::vector<cd> work = psi.amps;
    for (int i = 0; i < m; ++i) {
      const int setting = (x >> i) & 1u;
      apply_gate(work, i,
                 measurement_rotation(angles.theta_of(i, setting),
                                      angles.phi_of(i, setting)));
    }
    for (std::uint32_t a = 0; a < n; ++a) t.set(x, a, std::norm(work[a]));
  }
  return t;
}

OptimizeResult optimize_angles(int m, int restarts, double tol, std::uint64_t seed,
                               bool general) {
  check_state_m(m, 8);
  const CoefficientTable mu = svetlichny_coeffs(m);
  const std::uint32_t n = std::uint32_t(1) << m;
  std::vector<double> coeff(n);
  for (std::uint32_t x = 0; x < n; ++x) coeff[x] = mu.at(x).to_double();

  // Analytic start: with phi_i^1 = phi_i^0 + pi/2 the objective collapses to
  // Re(e^{i sigma} Z) with Z = sum_x mu(x) i^{|x|}; align sigma with -arg(Z).
  cd z(0.0, 0.0);
  for (std::uint32_t x = 0; x < n; ++x) {
    static constexpr std::array<cd, 4> kI{cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    z += coeff[x] * kI[std::popcount(x) & 3];
  }
  const double sigma = -std::arg(z);

  std::vector<AngleSet> starts;
  AngleSet analytic = AngleSet::zeros(m);
  for (int i = 0; i < m; ++i)
    analytic.phi[i] = {wrap_angle(sigma / m), wrap_angle(sigma / m + kPi / 2)};
  if (general) analytic.theta.assign(static_cast<std::size_t>(m), {kPi / 2, kPi / 2});
  starts.push_back(analytic);

  std::mt19937_64 rng(seed);
  for (int r = 0; r < restarts; ++r) {
    AngleSet a = AngleSet::zeros(m);
    for (int i = 0; i < m; ++i)
      a.phi[i] = {2 * kPi * uniform01(rng), 2 * kPi * uniform01(rng)};
    if (general) {
      a.theta.resize(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i)
        a.theta[i] = {kPi * uniform01(rng), kPi * uniform01(rng)};
    }
    starts.push_back(std::move(a));
  }

  OptimizeResult out;
  out.target = std::ldexp(std::numbers::sqrt2, m - mu.q - 1);
  bool first = true;
  for (AngleSet& start : starts) {
    const double v = coordinate_ascent(start, coeff, general);
    if (first || v > out.value) {
      out.value = v;
      out.angles = start;
      first = false;
    }
  }
  out.converged = out.value >= out.target - tol;
  return out;
}

}  // namespace svet
