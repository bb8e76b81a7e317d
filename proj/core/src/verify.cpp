#include "svet/verify.hpp"

#include <cstdio>

#include <json.hpp>

#include "svet/graph.hpp"
#include "svet/quantum.hpp"
#include "svet/strategy.hpp"

namespace svet {

namespace {

using ordered_json = nlohmann::ordered_json;

// maximum over every two-block bipartition graph whose basis fits the cap
ExactScalar separable_catalog_max(int m, const CoefficientTable& mu, int dim_cap,
                                  bool* complete) {
  ExactScalar best;
  bool have = false;
  *complete = true;
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;
  // fix party 1 in the first block to walk each bipartition once
  for (std::uint32_t block = 1; block < full; block += 2) {
    CommGraph g(m);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        const bool bi = (block >> (i - 1)) & 1u;
        const bool bj = (block >> (j - 1)) & 1u;
        if (bi == bj) g.add_edge(i, j);
      }
    }
    try {
      const ExactScalar v = max_over_graph(g, mu, dim_cap).value;
      if (!have || best < v) {
        best = v;
        have = true;
      }
    } catch (const capacity_error&) {
      *complete = false;
    }
  }
  return best;
}

}  // namespace

std::vector<VerifyRow> verify_rows(int m_min, int m_max, std::uint64_t seed,
                                   int restarts, int dim_cap) {
  std::vector<VerifyRow> rows;
  for (int m = m_min; m <= m_max; ++m) {
    VerifyRow row;
    row.m = m;
    row.q = (m + 1) / 2;
    row.bounds = theory_bounds(m);
    // a failing sub-step marks the row failed; later rows still run
    try {
      const CoefficientTable mu = svetlichny_coeffs(m);
      row.lhv_max = max_over_graph(empty_graph(m), mu, dim_cap).value;
      row.separable_max =
          separable_catalog_max(m, mu, dim_cap, &row.separable_complete);
      row.tp_attained = eval_strategy(tp_strategy(complete_graph(m)), mu);
      const double qtol = m <= 4 ? 1e-6 : 1e-5;
      const OptimizeResult opt = optimize_angles(m, restarts, qtol, seed);
      row.quantum_value = opt.value;
      row.quantum_converged = opt.converged;

      const ExactScalar lhv_bound = ExactScalar::pow2(m - row.q - 1);
      const ExactScalar algebraic = ExactScalar::pow2(m - row.q);
      row.pass = row.lhv_max <= lhv_bound && row.separable_max <= lhv_bound &&
                 row.tp_attained == algebraic && row.quantum_converged &&
                 row.quantum_value <= row.bounds.quantum + 1e-9;
    } catch (const std::exception&) {
      row.pass = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string verify_report_json(const std::vector<VerifyRow>& rows, std::uint64_t seed) {
  ordered_json out;
  out["seed"] = seed;
  out["rows"] = ordered_json::array();
  for (const VerifyRow& r : rows) {
    ordered_json row;
    row["m"] = r.m;
    row["q"] = r.q;
    row["bounds"] = {{"lhv_separable", r.bounds.lhv_separable},
                     {"quantum", r.bounds.quantum},
                     {"algebraic", r.bounds.algebraic}};
    row["lhv_graph_max"] = {{"value", r.lhv_max.to_string()},
                            {"note", kLhvAttainmentNote}};
    row["separable_catalog_max"] = {{"value", r.separable_max.to_string()},
                                    {"all_splits_within_cap", r.separable_complete}};
    row["tp_attained"] = r.tp_attained.to_string();
    row["quantum"] = {{"value", r.quantum_value}, {"converged", r.quantum_converged}};
    row["pass"] = r.pass;
    out["rows"].push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

}  // namespace svet
