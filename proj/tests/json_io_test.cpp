#include <doctest.h>

#include <random>

#include "svet/json_io.hpp"
#include "svet/nosignal.hpp"
#include "svet/quantum.hpp"
#include "test_helpers.hpp"

using namespace svet;
using svet::testing::explicit_tp4_strategy;
using svet::testing::random_graph;
using svet::testing::random_strategy;

TEST_CASE("graph JSON round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const CommGraph g = random_graph(rng, 2 + int(rng() % 6), 0.4);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
}

TEST_CASE("graph JSON ignores self-loops with a warning") {
  std::vector<std::string> warnings;
  const CommGraph g =
      graph_from_json(R"({"m":3,"edges":[[1,2],[2,2],[3,1]]})", &warnings);
  CHECK(g == CommGraph(3, {{1, 2}, {3, 1}}));
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("self-loop") != std::string::npos);
}

TEST_CASE("graph JSON rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json("not json"), io_error);
  CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), io_error);
  CHECK_THROWS_AS(graph_from_json(R"({"m":3,"edges":[[0,1]]})"), io_error);
  CHECK_THROWS_AS(graph_from_json(R"({"m":3,"edges":[[1,4]]})"), io_error);
  CHECK_THROWS_AS(graph_from_json(R"({"m":13,"edges":[]})"), io_error);
  CHECK_THROWS_AS(graph_from_json(R"({"m":3,"edges":[[1]]})"), io_error);
}

TEST_CASE("exact table JSON round trip") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 15; ++trial) {
    const int m = 2 + int(rng() % 3);
    const CorrelationTable t =
        parity_mixture(random_strategy(rng, random_graph(rng, m, 0.4)));
    CHECK(table_from_json(table_to_json(t)) == t);
  }
}

TEST_CASE("floating table JSON round trips bit-exactly") {
  std::mt19937_64 rng(23);
  AngleSet a = AngleSet::zeros(3);
  for (int i = 0; i < 3; ++i)
    a.phi[i] = {double(rng() % 1000) / 300.0, double(rng() % 1000) / 300.0};
  const CorrelationTable t = measurement_table(a);
  const CorrelationTable back = table_from_json(table_to_json(t));
  REQUIRE(back.rep() == TableRep::Floating);
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t outcome = 0; outcome < 8; ++outcome)
      CHECK(back.value(x, outcome) == t.value(x, outcome));
}

TEST_CASE("table JSON rejects malformed input") {
  CHECK_THROWS_AS(table_from_json(R"({"m":2})"), io_error);
  CHECK_THROWS_AS(table_from_json(R"({"m":2,"entries":[[0,0,1,0],[0,0,1,0]]})"),
                  io_error);
  CHECK_THROWS_AS(table_from_json(R"({"m":2,"entries":[[0,4,1,0]]})"), io_error);
  CHECK_THROWS_AS(table_from_json(R"({"m":2,"entries":[[0,0,0.5],[0,1,1,1]]})"),
                  io_error);
  CHECK_THROWS_AS(table_from_json(R"({"m":2,"entries":[[0,0,1,-1]]})"), io_error);
}

TEST_CASE("strategy JSON round trip") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const DeterministicStrategy s =
        random_strategy(rng, random_graph(rng, 2 + int(rng() % 5), 0.4));
    CHECK(strategy_from_json(strategy_to_json(s)) == s);
  }
  const DeterministicStrategy s = explicit_tp4_strategy();
  CHECK(strategy_from_json(strategy_to_json(s)) == s);
}

TEST_CASE("strategy JSON rejects malformed input") {
  CHECK_THROWS_AS(strategy_from_json(R"({"m":2,"tables":{}})"), io_error);
  CHECK_THROWS_AS(strategy_from_json(
                      R"({"m":2,"tables":{"1":{"dep":[2],"bits":"0"},
                          "2":{"dep":[2],"bits":"0"}}})"),
                  io_error);  // party 1's dep must contain 1
  CHECK_THROWS_AS(strategy_from_json(
                      R"({"m":2,"tables":{"1":{"dep":[1],"bits":"f"},
                          "2":{"dep":[2],"bits":"0"}}})"),
                  io_error);  // bits wider than the table
}

TEST_CASE("coefficient JSON shape") {
  const std::string text = coeffs_to_json(svetlichny_coeffs(2));
  CHECK(text.find("\"m\":2") != std::string::npos);
  CHECK(text.find("\"q\":1") != std::string::npos);
  CHECK(text.find("[3,-1,1]") != std::string::npos);  // mu(1,1) = -1/2
}
