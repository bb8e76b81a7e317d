#include <doctest.h>

#include <bit>
#include <random>

#include "svet/coeffs.hpp"
#include "svet/strategy.hpp"
#include "test_helpers.hpp"

using namespace svet;
using svet::testing::explicit_tp4_strategy;
using svet::testing::graph_from_code;
using svet::testing::nonseparable_pp3_graph;
using svet::testing::random_graph;
using svet::testing::random_strategy;

namespace {

std::uint64_t strategy_count(const CommGraph& g) {
  const DependencyProfile prof = dependency_sets(g);
  std::uint64_t exp = 0;
  for (int i = 0; i < g.m(); ++i) exp += std::uint64_t(1) << std::popcount(prof.dep[i]);
  return exp > 62 ? ~std::uint64_t(0) : std::uint64_t(1) << exp;
}

}  // namespace

TEST_CASE("parity basis dimensions") {
  CHECK(parity_basis(empty_graph(4)).monomials ==
        std::vector<std::uint16_t>{0b0000, 0b0001, 0b0010, 0b0100, 0b1000});
  CHECK(parity_basis(catalog("fig1_iii")).dimension() == 12);
  CHECK(parity_basis(complete_graph(4)).dimension() == 16);
}

TEST_CASE("worked four-party maxima") {
  const CoefficientTable mu = svetlichny_coeffs(4);
  CHECK(max_over_graph(catalog("fig1_iii"), mu).value == ExactScalar::integer(2));
  CHECK(max_over_graph(catalog("fig1_iva"), mu).value == ExactScalar::integer(4));
  CHECK(max_over_graph(catalog("fig1_ivb"), mu).value == ExactScalar::integer(4));
  CHECK(max_over_graph(empty_graph(4), mu).value == ExactScalar::one());
  CHECK(max_over_graph(catalog("fig1_iia"), mu).value ==
        brute_force_max(catalog("fig1_iia"), mu));
}

TEST_CASE("three-party PP example peaks at one") {
  const CoefficientTable mu = svetlichny_coeffs(3);
  const CommGraph g = nonseparable_pp3_graph();
  CHECK(max_over_graph(g, mu).value == ExactScalar::one());
  CHECK(brute_force_max(g, mu) == ExactScalar::one());
}

TEST_CASE("witness strategies reproduce the reported maximum") {
  std::mt19937_64 rng(404);
  const int checked[] = {2, 3, 4, 5};
  for (const int m : checked) {
    const CoefficientTable mu = svetlichny_coeffs(m);
    for (int trial = 0; trial < 30; ++trial) {
      const CommGraph g = random_graph(rng, m, 0.3);
      GraphMaximum best;
      try {
        best = max_over_graph(g, mu);
      } catch (const capacity_error&) {
        continue;
      }
      CHECK(induced_parity(best.witness) == best.best_parity);
      CHECK(eval_strategy(best.witness, mu) == best.value);
    }
  }
}

TEST_CASE("brute force agrees with the subspace search on small graphs") {
  const CoefficientTable mu3 = svetlichny_coeffs(3);
  for (std::uint64_t code = 0; code < 64; ++code) {
    const CommGraph g = graph_from_code(3, code);
    CHECK(brute_force_max(g, mu3) == max_over_graph(g, mu3).value);
  }
  const CoefficientTable mu2 = svetlichny_coeffs(2);
  for (std::uint64_t code = 0; code < 4; ++code) {
    const CommGraph g = graph_from_code(2, code);
    CHECK(brute_force_max(g, mu2) == max_over_graph(g, mu2).value);
  }
}

TEST_CASE("two-party complete graph reaches the algebraic maximum") {
  const CoefficientTable mu = svetlichny_coeffs(2);
  CHECK(brute_force_max(complete_graph(2), mu) == ExactScalar::integer(2));
  CHECK(max_over_graph(complete_graph(2), mu).value == ExactScalar::integer(2));
}

TEST_CASE("explicit four-party strategy") {
  const DeterministicStrategy s = explicit_tp4_strategy();
  const CoefficientTable mu = svetlichny_coeffs(4);
  CHECK(eval_strategy(s, mu) == ExactScalar::integer(4));
  CHECK(evaluate_exact(strategy_to_table(s), mu) == ExactScalar::integer(4));
  // outputs at x = (0,0,0,0): a4 carries the constant
  CHECK(s.outputs_word(0) == 0b1000);
  // the constructed witness on the same graph induces the same parity
  const DeterministicStrategy constructed = tp_strategy(catalog("fig1_ivb"));
  CHECK(induced_parity(constructed) == induced_parity(s));
}

TEST_CASE("tp_strategy attains the algebraic maximum") {
  const CoefficientTable mu3 = svetlichny_coeffs(3);
  CHECK(eval_strategy(tp_strategy(complete_graph(3)), mu3) == ExactScalar::integer(2));
  const CoefficientTable mu4 = svetlichny_coeffs(4);
  CHECK(eval_strategy(tp_strategy(catalog("fig1_iva")), mu4) == ExactScalar::integer(4));
  CHECK(eval_strategy(tp_strategy(catalog("fig1_ivb")), mu4) == ExactScalar::integer(4));

  // on fig1_iva every pair monomial lands on party 1
  const DeterministicStrategy s = tp_strategy(catalog("fig1_iva"));
  for (int i = 2; i <= 4; ++i) {
    // remaining parties keep only their own linear term: a_i = x_i
    CHECK(s.tables[i - 1].to_hex() == "2");
  }
}

TEST_CASE("tp_strategy rejects PP graphs with the witness attached") {
  try {
    tp_strategy(catalog("fig1_iii"));
    FAIL("expected pp_graph_error");
  } catch (const pp_graph_error& e) {
    CHECK(e.witness() == std::pair<int, int>(3, 4));
  }
}

TEST_CASE("strategy tables are delta columns") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + int(rng() % 3);
    const DeterministicStrategy s = random_strategy(rng, random_graph(rng, m, 0.4));
    const CorrelationTable t = strategy_to_table(s);
    CHECK(!validate_table(t, 0.0).has_value());
    for (std::uint32_t x = 0; x < (1u << m); ++x) {
      int ones = 0;
      for (std::uint32_t a = 0; a < (1u << m); ++a)
        if (!t.exact_value(x, a).is_zero()) {
          ++ones;
          CHECK(a == s.outputs_word(x));
          CHECK(t.exact_value(x, a) == ExactScalar::one());
        }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("identity-output strategy maps a-word to x-word") {
  DeterministicStrategy s = make_strategy(empty_graph(2));
  for (auto& table : s.tables) table.set(1, true);  // a_i = x_i
  const CorrelationTable t = strategy_to_table(s);
  for (std::uint32_t x = 0; x < 4; ++x)
    CHECK(t.exact_value(x, x) == ExactScalar::one());
}

TEST_CASE("eval_strategy equals the table evaluation exactly") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + int(rng() % 4);
    const CoefficientTable mu = svetlichny_coeffs(m);
    const DeterministicStrategy s = random_strategy(rng, random_graph(rng, m, 0.4));
    CHECK(eval_strategy(s, mu) == evaluate_exact(strategy_to_table(s), mu));
  }
}

TEST_CASE("flipping one party's outputs negates the value") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + int(rng() % 4);
    const CoefficientTable mu = svetlichny_coeffs(m);
    DeterministicStrategy s = random_strategy(rng, random_graph(rng, m, 0.4));
    const ExactScalar before = eval_strategy(s, mu);
    s.tables[std::size_t(rng() % m)].flip_all();
    CHECK(eval_strategy(s, mu) == -before);
  }
}

TEST_CASE("CHSH-form bound by exhaustion") {
  // |sum_{u,v} (-1)^{uv + h(u+v) + b1(u) + b2(v)}| <= 2 for all choices
  for (int b1 = 0; b1 < 4; ++b1) {
    for (int b2 = 0; b2 < 4; ++b2) {
      for (int h = 0; h < 2; ++h) {
        int sum = 0;
        for (int u = 0; u < 2; ++u)
          for (int v = 0; v < 2; ++v) {
            const int e = u * v + h * (u + v) + ((b1 >> u) & 1) + ((b2 >> v) & 1);
            sum += (e & 1) ? -1 : 1;
          }
        CHECK(sum <= 2);
        CHECK(sum >= -2);
      }
    }
  }
}

TEST_CASE("value dichotomy: the algebraic maximum is reached exactly on TP graphs") {
  for (const int m : {3, 4}) {
    const CoefficientTable mu = svetlichny_coeffs(m);
    const ExactScalar algebraic = ExactScalar::pow2(m - mu.q);
    const int edge_slots = m * (m - 1);
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << edge_slots); ++code) {
      const CommGraph g = graph_from_code(m, code);
      const bool reaches = max_over_graph(g, mu).value == algebraic;
      CHECK(reaches == classify(g).is_tp());
    }
  }
}

TEST_CASE("sampled PP graphs respect the bound at m=4 and m=5") {
  std::mt19937_64 rng(808);
  for (const int m : {4, 5}) {
    const CoefficientTable mu = svetlichny_coeffs(m);
    const ExactScalar bound = ExactScalar::pow2(m - mu.q - 1);
    int found = 0;
    while (found < 200) {
      const CommGraph g = random_graph(rng, m, 0.3);
      if (!classify(g).is_pp()) continue;
      ++found;
      CHECK(max_over_graph(g, mu).value <= bound);
    }
  }
}

TEST_CASE("adding an edge never lowers the maximum") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 120; ++trial) {
    const int m = 3 + int(rng() % 2);
    const CoefficientTable mu = svetlichny_coeffs(m);
    CommGraph g = random_graph(rng, m, 0.25);
    const ExactScalar before = max_over_graph(g, mu).value;
    const int from = 1 + int(rng() % m);
    int to = 1 + int(rng() % m);
    if (to == from) to = to % m + 1;
    g.add_edge(from, to);
    CHECK(before <= max_over_graph(g, mu).value);
  }
}

TEST_CASE("caps surface as capacity errors") {
  const CoefficientTable mu6 = svetlichny_coeffs(6);
  try {
    max_over_graph(complete_graph(6), mu6);
    FAIL("expected capacity_error");
  } catch (const capacity_error& e) {
    CHECK(e.required() == 64);
    CHECK(e.cap() == 24);
    CHECK(std::string(e.what()).find("64") != std::string::npos);
  }
  const CoefficientTable mu4 = svetlichny_coeffs(4);
  CHECK_THROWS_AS(brute_force_max(complete_graph(4), mu4), capacity_error);
  // fig1_iii wants 2^32 strategies, above the default cap
  CHECK_THROWS_AS(brute_force_max(catalog("fig1_iii"), mu4), capacity_error);
}

TEST_CASE("oracle equivalence across every small-strategy-space graph at m=4") {
  const CoefficientTable mu = svetlichny_coeffs(4);
  std::mt19937_64 rng(1010);
  int compared = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const CommGraph g = random_graph(rng, 4, 0.25);
    if (strategy_count(g) > (std::uint64_t(1) << 20)) continue;
    ++compared;
    CHECK(brute_force_max(g, mu, std::uint64_t(1) << 20) ==
          max_over_graph(g, mu).value);
  }
  CHECK(compared > 50);
}

TEST_CASE("bit tables round-trip through hex") {
  std::mt19937_64 rng(1111);
  for (int arity = 0; arity <= 8; ++arity) {
    for (int trial = 0; trial < 20; ++trial) {
      BitTable t(arity);
      for (std::uint32_t i = 0; i < t.size(); ++i) t.set(i, rng() & 1u);
      CHECK(BitTable::from_hex(arity, t.to_hex()) == t);
    }
  }
  CHECK_THROWS_AS(BitTable::from_hex(1, "zz"), std::invalid_argument);
  CHECK_THROWS_AS(BitTable::from_hex(1, "5"), std::invalid_argument);
}

TEST_CASE("strategy_from_monomials rejects unreachable monomials") {
  CHECK_THROWS_AS(
      strategy_from_monomials(empty_graph(3), {{0b011}, {}, {}}),
      std::invalid_argument);
}
