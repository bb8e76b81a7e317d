#include <doctest.h>

#include <bit>

#include "svet/coeffs.hpp"
#include "svet/strategy.hpp"
#include "test_helpers.hpp"

using namespace svet;

namespace {

const ExactScalar kHalf = ExactScalar::dyadic(1, 1);
const ExactScalar kQuarter = ExactScalar::dyadic(1, 2);

// x word packs (x1, x2, ...) with x1 at bit 0
std::uint32_t word(std::initializer_list<int> xs) {
  std::uint32_t w = 0;
  int i = 0;
  for (const int x : xs) w |= std::uint32_t(x) << i++;
  return w;
}

}  // namespace

TEST_CASE("two-party Mermin base case") {
  const CoefficientTable f2 = mermin_coeffs(2);
  CHECK(f2.at(word({0, 0})) == kHalf);
  CHECK(f2.at(word({1, 0})) == kHalf);
  CHECK(f2.at(word({0, 1})) == kHalf);
  CHECK(f2.at(word({1, 1})) == -kHalf);
}

TEST_CASE("three-party Mermin table") {
  // from the odd-extension factor: F3 = 1/2 F2(x1,x2) (1 + (-1)^{x1+x2+x3+1})
  const CoefficientTable f3 = mermin_coeffs(3);
  CHECK(f3.at(word({0, 0, 0})) == ExactScalar::zero());
  CHECK(f3.at(word({0, 0, 1})) == kHalf);
  CHECK(f3.at(word({1, 0, 0})) == kHalf);
  CHECK(f3.at(word({0, 1, 0})) == kHalf);
  CHECK(f3.at(word({1, 1, 0})) == ExactScalar::zero());
  CHECK(f3.at(word({1, 0, 1})) == ExactScalar::zero());
  CHECK(f3.at(word({0, 1, 1})) == ExactScalar::zero());
  CHECK(f3.at(word({1, 1, 1})) == -kHalf);
}

TEST_CASE("four-party Svetlichny signs") {
  const CoefficientTable mu = svetlichny_coeffs(4);
  CHECK(mu.at(word({0, 0, 0, 0})) == -kQuarter);
  CHECK(mu.at(word({0, 0, 0, 1})) == kQuarter);
  // negatives sit exactly at these six words
  for (std::uint32_t x = 0; x < 16; ++x) {
    const bool neg = x == 0 || x == 7 || x == 11 || x == 13 || x == 14 || x == 15;
    CHECK(mu.at(x) == (neg ? -kQuarter : kQuarter));
  }
}

TEST_CASE("three-party Svetlichny from the recursion") {
  const CoefficientTable mu = svetlichny_coeffs(3, CoeffMethod::Recursive);
  CHECK(mu.at(word({0, 0, 0})) == -kQuarter);
  CHECK(mu == svetlichny_coeffs(3, CoeffMethod::Closed));
}

TEST_CASE("closed and recursive constructions agree entry-exact") {
  for (int m = 2; m <= 12; ++m)
    CHECK(svetlichny_coeffs(m, CoeffMethod::Closed) ==
          svetlichny_coeffs(m, CoeffMethod::Recursive));
}

TEST_CASE("single-step and double-step Mermin constructions agree") {
  for (int m = 4; m <= 12; m += 2)
    CHECK(mermin_coeffs(m, MerminMethod::SingleStep) ==
          mermin_coeffs(m, MerminMethod::DoubleStep));
  CHECK_THROWS_AS(mermin_coeffs(5, MerminMethod::DoubleStep), std::invalid_argument);
}

TEST_CASE("Svetlichny magnitudes are uniform") {
  for (int m = 2; m <= 12; ++m) {
    const CoefficientTable mu = svetlichny_coeffs(m);
    const ExactScalar expect = ExactScalar::dyadic(1, std::uint32_t(mu.q));
    for (const ExactScalar& v : mu.values) CHECK(v.abs() == expect);
  }
}

TEST_CASE("odd Mermin tables vanish exactly where the parity factor does") {
  for (int m = 3; m <= 11; m += 2) {
    const int k = m / 2;
    const CoefficientTable f = mermin_coeffs(m);
    const ExactScalar mag = ExactScalar::dyadic(1, std::uint32_t(k));
    for (std::uint32_t x = 0; x < (1u << m); ++x) {
      const int total = std::popcount(x) + k;  // sum_{i<=2k} x_i + x_{2k+1} + k
      if (total & 1) {
        CHECK(f.at(x) == ExactScalar::zero());
      } else {
        CHECK(f.at(x).abs() == mag);
      }
    }
  }
}

TEST_CASE("even-m flip identity") {
  for (int m = 2; m <= 12; m += 2) {
    const CoefficientTable f = mermin_coeffs(m);
    const std::uint32_t mask = (1u << m) - 1;
    for (std::uint32_t x = 0; x <= mask; ++x) {
      const int s = std::popcount(x) + m / 2;
      const ExactScalar lhs = (s & 1) ? -f.at(x) : f.at(x);
      CHECK(lhs == f.at(~x & mask));
    }
  }
}

TEST_CASE("odd-m factorisation against the even table below") {
  for (int m = 3; m <= 11; m += 2) {
    const CoefficientTable f = mermin_coeffs(m);
    const CoefficientTable g = mermin_coeffs(m - 1);
    const int k = m / 2;
    const std::uint32_t low_mask = (1u << (m - 1)) - 1;
    for (std::uint32_t x = 0; x < (1u << m); ++x) {
      const std::uint32_t low = x & low_mask;
      const int factor_exp = std::popcount(low) + int((x >> (m - 1)) & 1u) + k;
      const ExactScalar expect =
          (factor_exp & 1) ? ExactScalar::zero() : g.at(low);
      CHECK(f.at(x) == expect);
    }
  }
}

TEST_CASE("four-party closed exponent matches the quadratic form") {
  const CoefficientTable mu = svetlichny_coeffs(4);
  for (std::uint32_t x = 0; x < 16; ++x) {
    int pairs = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        pairs += int((x >> i) & 1u) * int((x >> j) & 1u);
    const int e = pairs + std::popcount(x) + 1;
    CHECK(mu.at(x) == ((e & 1) ? -kQuarter : kQuarter));
  }
}

TEST_CASE("theory bounds") {
  const TheoryBounds b2 = theory_bounds(2);
  CHECK(b2.lhv_separable == 1.0);
  CHECK(b2.quantum == doctest::Approx(1.4142135623730951).epsilon(1e-15));
  CHECK(b2.algebraic == 2.0);
  const TheoryBounds b3 = theory_bounds(3);
  CHECK(b3.lhv_separable == 1.0);
  CHECK(b3.quantum == doctest::Approx(1.4142135623730951).epsilon(1e-15));
  CHECK(b3.algebraic == 2.0);
  const TheoryBounds b4 = theory_bounds(4);
  CHECK(b4.lhv_separable == 2.0);
  CHECK(b4.quantum == doctest::Approx(2.8284271247461903).epsilon(1e-15));
  CHECK(b4.algebraic == 4.0);
  CHECK_THROWS_AS(theory_bounds(1), std::invalid_argument);
  CHECK_THROWS_AS(theory_bounds(13), std::invalid_argument);
}

TEST_CASE("uniform tables score zero") {
  for (int m = 2; m <= 5; ++m) {
    const CoefficientTable mu = svetlichny_coeffs(m);
    CHECK(evaluate_exact(CorrelationTable::uniform(m), mu) == ExactScalar::zero());
  }
}

TEST_CASE("coefficient sum at m=4 is one") {
  // the sixteen signed quarters come out 10 positive, 6 negative
  const CoefficientTable mu = svetlichny_coeffs(4);
  ExactScalar sum;
  for (const ExactScalar& v : mu.values) sum += v;
  CHECK(sum == ExactScalar::one());
  const DeterministicStrategy all_zero = make_strategy(empty_graph(4));
  CHECK(eval_strategy(all_zero, mu) == ExactScalar::one());
}

TEST_CASE("evaluate rejects dimension mismatch") {
  CHECK_THROWS_AS(evaluate(CorrelationTable::uniform(3), svetlichny_coeffs(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_exact(CorrelationTable::uniform(3), svetlichny_coeffs(4)),
                  std::invalid_argument);
}

TEST_CASE("coefficient construction rejects out-of-range m") {
  CHECK_THROWS_AS(mermin_coeffs(1), std::invalid_argument);
  CHECK_THROWS_AS(svetlichny_coeffs(13), std::invalid_argument);
}
