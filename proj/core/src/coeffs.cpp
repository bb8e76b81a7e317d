#include "svet/coeffs.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "svet/bitvec.hpp"

namespace svet {

namespace {

void check_m(int m) {
  if (m < kMinParties || m > kMaxParties)
    throw std::invalid_argument("party count must be in [2, 12]");
}

int ceil_half(int m) { return (m + 1) / 2; }

// F_2(x1, x2) = 1/2 (-1)^{x1 x2}
std::vector<ExactScalar> base_f2() {
  const ExactScalar half = ExactScalar::dyadic(1, 1);
  return {half, half, half, -half};
}

// F_{m+1}(x, y) = 1/2 [ F_m(x) + (-1)^y F_m(xbar) ]
std::vector<ExactScalar> extend_one(const std::vector<ExactScalar>& f) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  const std::uint32_t mask = n - 1;
  std::vector<ExactScalar> out(2 * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const ExactScalar& a = f[x];
    const ExactScalar& b = f[~x & mask];
    out[x] = (a + b).halved();
    out[x | n] = (a - b).halved();
  }
  return out;
}

// F_{m+2}(x, p) = 1/2 [ F_m(x) (F_2(p) + F_2(pbar)) + F_m(xbar) (F_2(p) - F_2(pbar)) ]
std::vector<ExactScalar> extend_two(const std::vector<ExactScalar>& f) {
  const std::vector<ExactScalar> f2 = base_f2();
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  const std::uint32_t mask = n - 1;
  std::vector<ExactScalar> out(4 * n);
  for (std::uint32_t p = 0; p < 4; ++p) {
    const ExactScalar plus = f2[p] + f2[p ^ 3u];
    const ExactScalar minus = f2[p] - f2[p ^ 3u];
    for (std::uint32_t x = 0; x < n; ++x) {
      out[(p << std::countr_zero(n)) | x] =
          (f[x] * plus + f[~x & mask] * minus).halved();
    }
  }
  return out;
}

}  // namespace

ExactScalar CoefficientTable::magnitude() const {
  for (const ExactScalar& v : values)
    if (!v.is_zero()) return v.abs();
  return ExactScalar::zero();
}

std::vector<std::uint64_t> CoefficientTable::sign_word() const {
  std::vector<std::uint64_t> w((values.size() + 63) / 64, 0);
  for (std::size_t x = 0; x < values.size(); ++x)
    if (values[x].sign() < 0) w[x >> 6] |= std::uint64_t(1) << (x & 63u);
  return w;
}

std::vector<std::uint64_t> CoefficientTable::support_word() const {
  std::vector<std::uint64_t> w((values.size() + 63) / 64, 0);
  for (std::size_t x = 0; x < values.size(); ++x)
    if (!values[x].is_zero()) w[x >> 6] |= std::uint64_t(1) << (x & 63u);
  return w;
}

CoefficientTable mermin_coeffs(int m, MerminMethod method) {
  check_m(m);
  std::vector<ExactScalar> f = base_f2();
  if (method == MerminMethod::SingleStep) {
    for (int k = 2; k < m; ++k) f = extend_one(f);
  } else {
    if (m % 2 != 0)
      throw std::invalid_argument("double-step construction handles even party counts only");
    for (int k = 2; k < m; k += 2) f = extend_two(f);
  }
  return CoefficientTable{m, PolyKind::MerminF, ceil_half(m), std::move(f)};
}

CoefficientTable svetlichny_coeffs(int m, CoeffMethod method) {
  check_m(m);
  const int q = ceil_half(m);
  if (method == CoeffMethod::Closed) {
    const std::uint32_t n = std::uint32_t(1) << m;
    std::vector<ExactScalar> values(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      const long w = std::popcount(x);
      // sum_{i<j} x_i x_j collapses to w(w-1)/2 on bit vectors; all three
      // terms stay in plain integers until the final mod-2 reduction.
      const long e = w * (w - 1) / 2 + (q + 1) * w + long(q) * (q - 1) / 2;
      values[x] = ExactScalar::dyadic((e & 1) ? -1 : 1, static_cast<std::uint32_t>(q));
    }
    return CoefficientTable{m, PolyKind::SvetlichnyMu, q, std::move(values)};
  }
  CoefficientTable f = mermin_coeffs(m);
  if (m % 2 == 0)
    return CoefficientTable{m, PolyKind::SvetlichnyMu, q, std::move(f.values)};
  const std::uint32_t n = std::uint32_t(1) << m;
  const std::uint32_t mask = n - 1;
  std::vector<ExactScalar> values(n);
  for (std::uint32_t x = 0; x < n; ++x)
    values[x] = (f.values[x] + f.values[~x & mask]).halved();
  return CoefficientTable{m, PolyKind::SvetlichnyMu, q, std::move(values)};
}

double evaluate(const CorrelationTable& table, const CoefficientTable& coeffs) {
  if (table.m() != coeffs.m)
    throw std::invalid_argument("table and coefficients disagree on the party count");
  if (table.exact()) return evaluate_exact(table, coeffs).to_double();
  const std::uint32_t n = std::uint32_t(1) << table.m();
  double acc = 0.0;
  for (std::uint32_t x = 0; x < n; ++x) {
    const double c = coeffs.at(x).to_double();
    if (c == 0.0) continue;
    double signed_sum = 0.0;
    for (std::uint32_t a = 0; a < n; ++a) {
      const double p = table.value(x, a);
      signed_sum += (std::popcount(a) & 1) ? -p : p;
    }
    acc += c * signed_sum;
  }
  return acc;
}

ExactScalar evaluate_exact(const CorrelationTable& table, const CoefficientTable& coeffs) {
  if (table.m() != coeffs.m)
    throw std::invalid_argument("table and coefficients disagree on the party count");
  if (!table.exact())
    throw std::invalid_argument("exact evaluation needs an exact table");
  const std::uint32_t n = std::uint32_t(1) << table.m();
  ExactScalar acc = ExactScalar::zero();
  for (std::uint32_t x = 0; x < n; ++x) {
    const ExactScalar& c = coeffs.at(x);
    if (c.is_zero()) continue;
    ExactScalar signed_sum = ExactScalar::zero();
    for (std::uint32_t a = 0; a < n; ++a) {
      const ExactScalar& p = table.exact_value(x, a);
      if (p.is_zero()) continue;
      if (std::popcount(a) & 1)
        signed_sum -= p;
      else
        signed_sum += p;
    }
    acc += c * signed_sum;
  }
  return acc;
}

TheoryBounds theory_bounds(int m) {
  check_m(m);
  const int q = ceil_half(m);
  TheoryBounds b;
  b.lhv_separable = std::ldexp(1.0, m - q - 1);
  b.quantum = std::ldexp(std::numbers::sqrt2, m - q - 1);
  b.algebraic = std::ldexp(1.0, m - q);
  return b;
}

}  // namespace svet
