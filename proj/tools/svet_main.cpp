// svet: exact Svetlichny/Mermin coefficient tables, communication-pattern
// classification, graph-constrained maximization, no-signalling mixtures and
// GHZ measurement optimization, as machine-readable reports.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "svet/coeffs.hpp"
#include "svet/graph.hpp"
#include "svet/json_io.hpp"
#include "svet/nosignal.hpp"
#include "svet/quantum.hpp"
#include "svet/strategy.hpp"
#include "svet/verify.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw svet::io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "@name" resolves through the built-in catalog; anything else is a file path
svet::CommGraph load_graph(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    try {
      return svet::catalog(arg.substr(1));
    } catch (const std::invalid_argument& e) {
      throw svet::io_error(e.what());
    }
  }
  std::vector<std::string> warnings;
  svet::CommGraph g = svet::graph_from_json(read_file(arg), &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

void emit(const std::string& text) { std::cout << text; }

void emit_json(const ordered_json& j) { emit(j.dump(2) + "\n"); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0')
    throw svet::io_error(std::string(name) + " must be an unsigned integer");
  return parsed;
}

ordered_json strategy_json(const svet::DeterministicStrategy& s) {
  return ordered_json::parse(svet::strategy_to_json(s));
}

ordered_json classification_json(const svet::CommGraph& g) {
  const svet::Classification cls = svet::classify(g);
  ordered_json out;
  out["class"] = cls.is_pp() ? "PP" : "TP";
  if (cls.is_pp()) {
    out["witness"] = {cls.witness.first, cls.witness.second};
  } else {
    ordered_json cover = ordered_json::array();
    for (const svet::PairCover& pc : cls.covering) cover.push_back({pc.i, pc.j, pc.k});
    out["witness"] = std::move(cover);
  }
  out["separable"] = svet::is_separable(g);
  return out;
}

int run_coeffs(int m, const std::string& kind, const std::string& method,
               const std::string& format) {
  const svet::CoefficientTable table =
      kind == "mermin"
          ? svet::mermin_coeffs(m)
          : svet::svetlichny_coeffs(m, method == "recursive"
                                           ? svet::CoeffMethod::Recursive
                                           : svet::CoeffMethod::Closed);
  if (format == "csv") {
    std::string out = "x_word,numerator,exponent\n";
    for (std::size_t x = 0; x < table.values.size(); ++x) {
      out += std::to_string(x) + "," + std::to_string(table.values[x].numerator()) +
             "," + std::to_string(table.values[x].exponent()) + "\n";
    }
    emit(out);
  } else {
    emit_json(ordered_json::parse(svet::coeffs_to_json(table)));
  }
  return 0;
}

int run_classify(const std::string& graph_arg, const std::string& format) {
  const svet::CommGraph g = load_graph(graph_arg);
  const ordered_json out = classification_json(g);
  if (format == "csv") {
    std::string witness;
    if (out["class"] == "PP") {
      witness = std::to_string(out["witness"][0].get<int>()) + "-" +
                std::to_string(out["witness"][1].get<int>());
    }
    emit("class,witness,separable\n" + out["class"].get<std::string>() + "," +
         witness + "," + (out["separable"].get<bool>() ? "true" : "false") + "\n");
  } else {
    emit_json(out);
  }
  return 0;
}

int run_maximize(const std::string& graph_arg, bool oracle, int dim_cap,
                 std::uint64_t brute_cap, const std::string& format) {
  const svet::CommGraph g = load_graph(graph_arg);
  const svet::CoefficientTable mu = svet::svetlichny_coeffs(g.m());
  const svet::GraphMaximum best = svet::max_over_graph(g, mu, dim_cap);
  std::optional<svet::ExactScalar> oracle_value;
  if (oracle) oracle_value = svet::brute_force_max(g, mu, brute_cap);

  if (format == "csv") {
    std::string out = "value,class,best_parity";
    if (oracle) out += ",oracle_value,oracle_agrees";
    out += "\n" + best.value.to_string() + "," +
           (svet::classify(g).is_pp() ? "PP" : "TP") + "," + best.best_parity.to_hex();
    if (oracle) {
      out += "," + oracle_value->to_string() + "," +
             (*oracle_value == best.value ? "true" : "false");
    }
    emit(out + "\n");
  } else {
    ordered_json out;
    out["value"] = best.value.to_string();
    out["class"] = svet::classify(g).is_pp() ? "PP" : "TP";
    out["best_parity"] = best.best_parity.to_hex();
    out["strategy"] = strategy_json(best.witness);
    if (oracle) {
      out["oracle_value"] = oracle_value->to_string();
      out["oracle_agrees"] = *oracle_value == best.value;
    }
    emit_json(out);
  }
  return 0;
}

int run_mixture(const std::string& strategy_arg, const std::string& graph_arg,
                const std::string& format) {
  svet::DeterministicStrategy s{svet::CommGraph(2), {}, {}};
  if (!strategy_arg.empty()) {
    s = svet::strategy_from_json(read_file(strategy_arg));
  } else {
    s = svet::tp_strategy(load_graph(graph_arg));
  }
  const svet::CorrelationTable mix = svet::parity_mixture(s);
  const bool ns = !svet::check_nosignalling(mix, 0.0).has_value();
  const svet::ExactScalar value =
      svet::evaluate_exact(mix, svet::svetlichny_coeffs(s.m()));
  if (format == "csv") {
    emit("nosignalling,svetlichny_value\n" + std::string(ns ? "true" : "false") +
         "," + value.to_string() + "\n");
  } else {
    ordered_json out;
    out["table"] = ordered_json::parse(svet::table_to_json(mix));
    out["nosignalling"] = ns;
    out["svetlichny_value"] = value.to_string();
    emit_json(out);
  }
  return 0;
}

int run_nosignal(const std::string& table_path, std::optional<double> tol,
                 const std::string& format) {
  const svet::CorrelationTable table = svet::table_from_json(read_file(table_path));
  const double effective_tol = tol ? *tol : (table.exact() ? 0.0 : 1e-10);
  const auto report = svet::check_nosignalling(table, effective_tol);
  if (format == "csv") {
    if (!report) {
      emit("ok,subset,x_first,x_second,magnitude\ntrue,,,,\n");
    } else {
      std::string parties;
      for (const int p : report->subset_parties()) {
        if (!parties.empty()) parties += ";";
        parties += std::to_string(p);
      }
      char mag[32];
      std::snprintf(mag, sizeof mag, "%.17g", report->magnitude);
      emit("ok,subset,x_first,x_second,magnitude\nfalse," + csv_escape(parties) +
           "," + std::to_string(report->x_first) + "," +
           std::to_string(report->x_second) + "," + mag + "\n");
    }
  } else {
    ordered_json out;
    out["ok"] = !report.has_value();
    out["tol"] = effective_tol;
    if (report) {
      ordered_json r;
      r["subset"] = report->subset_parties();
      ordered_json fixed = ordered_json::array();
      for (int p = 1; p <= report->m; ++p) {
        if ((report->subset >> (p - 1)) & 1u) continue;
        fixed.push_back({p, int((report->fixed_outcomes >> (p - 1)) & 1u)});
      }
      r["fixed_outcomes"] = std::move(fixed);
      r["x_first"] = report->x_first;
      r["x_second"] = report->x_second;
      r["marginal_first"] = report->marginal_first;
      r["marginal_second"] = report->marginal_second;
      r["magnitude"] = report->magnitude;
      out["report"] = std::move(r);
    }
    emit_json(out);
  }
  return 0;
}

int run_quantum(int m, int restarts, std::uint64_t seed, std::optional<double> tol,
                bool general, const std::string& format) {
  const double effective_tol = tol ? *tol : (m <= 4 ? 1e-6 : 1e-5);
  const svet::OptimizeResult r =
      svet::optimize_angles(m, restarts, effective_tol, seed, general);
  if (format == "csv") {
    char line[256];
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%s,%llu\n", m, r.value, r.target,
                  r.converged ? "true" : "false",
                  static_cast<unsigned long long>(seed));
    emit("m,value,target,converged,seed\n" + std::string(line));
  } else {
    ordered_json out;
    out["m"] = m;
    out["value"] = r.value;
    out["target"] = r.target;
    ordered_json angles = ordered_json::array();
    for (int i = 0; i < m; ++i)
      angles.push_back({r.angles.phi[i][0], r.angles.phi[i][1]});
    out["angles"] = std::move(angles);
    if (general) {
      ordered_json thetas = ordered_json::array();
      for (int i = 0; i < m; ++i)
        thetas.push_back({r.angles.theta[i][0], r.angles.theta[i][1]});
      out["thetas"] = std::move(thetas);
    }
    out["converged"] = r.converged;
    out["seed"] = seed;
    out["restarts"] = restarts;
    emit_json(out);
  }
  return 0;
}

int run_verify(int m_min, int m_max, std::uint64_t seed, int restarts, int dim_cap,
               const std::string& format) {
  const std::vector<svet::VerifyRow> rows =
      svet::verify_rows(m_min, m_max, seed, restarts, dim_cap);
  if (format == "csv") {
    std::string out =
        "m,lhv_separable_bound,quantum_bound,algebraic_bound,lhv_max,"
        "separable_max,tp_attained,quantum_value,quantum_converged,pass\n";
    for (const svet::VerifyRow& r : rows) {
      char line[512];
      std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%s,%s,%s,%.17g,%s,%s\n",
                    r.m, r.bounds.lhv_separable, r.bounds.quantum, r.bounds.algebraic,
                    r.lhv_max.to_string().c_str(), r.separable_max.to_string().c_str(),
                    r.tp_attained.to_string().c_str(), r.quantum_value,
                    r.quantum_converged ? "true" : "false", r.pass ? "true" : "false");
      out += line;
    }
    emit(out);
  } else {
    emit(svet::verify_report_json(rows, seed));
  }
  bool all_pass = true;
  for (const svet::VerifyRow& r : rows) all_pass = all_pass && r.pass;
  return all_pass ? 0 : 1;
}

void emit_error(const char* type, const std::string& message,
                const ordered_json& extra = {}) {
  ordered_json err;
  err["error"]["type"] = type;
  err["error"]["message"] = message;
  for (const auto& [k, v] : extra.items()) err["error"][k] = v;
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Svetlichny polynomial and communication-pattern toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  int dim_cap = svet::kDefaultDimCap;
  std::uint64_t brute_cap = svet::kDefaultBruteCap;
  try {
    dim_cap = static_cast<int>(env_u64("SVET_DIM_CAP", svet::kDefaultDimCap));
    brute_cap = env_u64("SVET_BRUTE_CAP", svet::kDefaultBruteCap);
  } catch (const svet::io_error& e) {
    emit_error("io", e.what());
    return 2;
  }

  // coeffs
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Exact coefficient table");
  int coeffs_m = 0;
  std::string coeffs_kind = "svet", coeffs_method = "closed";
  coeffs_cmd->add_option("--m", coeffs_m, "Party count")->required()->check(CLI::Range(2, 12));
  coeffs_cmd->add_option("--kind", coeffs_kind, "Polynomial family")
      ->check(CLI::IsMember({"mermin", "svet"}))
      ->capture_default_str();
  coeffs_cmd->add_option("--method", coeffs_method, "Construction route")
      ->check(CLI::IsMember({"closed", "recursive"}))
      ->capture_default_str();

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "PP/TP classification");
  std::string classify_graph;
  classify_cmd->add_option("--graph", classify_graph, "Graph file or @catalog name")
      ->required();

  // maximize
  auto* maximize_cmd =
      app.add_subcommand("maximize", "Exact maximum over a graph's strategies");
  std::string maximize_graph;
  bool maximize_oracle = false;
  maximize_cmd->add_option("--graph", maximize_graph, "Graph file or @catalog name")
      ->required();
  maximize_cmd->add_flag("--oracle", maximize_oracle,
                         "Also run the strategy-enumeration oracle");
  maximize_cmd->add_option("--dim-cap", dim_cap, "Parity subspace dimension cap");
  maximize_cmd->add_option("--brute-cap", brute_cap, "Strategy enumeration cap");

  // mixture
  auto* mixture_cmd =
      app.add_subcommand("mixture", "Parity mixture of a deterministic strategy");
  std::string mixture_strategy, mixture_graph;
  auto* opt_strategy =
      mixture_cmd->add_option("--strategy", mixture_strategy, "Strategy file");
  mixture_cmd
      ->add_option("--graph", mixture_graph,
                   "TP graph file or @catalog name; mixes its constructed strategy")
      ->excludes(opt_strategy);

  // nosignal
  auto* nosignal_cmd = app.add_subcommand("nosignal", "No-signalling check");
  std::string nosignal_table;
  double nosignal_tol = -1.0;
  bool nosignal_tol_set = false;
  nosignal_cmd->add_option("--table", nosignal_table, "Correlation table file")
      ->required();
  nosignal_cmd->add_option("--tol", nosignal_tol, "Marginal tolerance")
      ->each([&](const std::string&) { nosignal_tol_set = true; });

  // quantum
  auto* quantum_cmd = app.add_subcommand("quantum", "GHZ measurement optimization");
  int quantum_m = 0, quantum_restarts = svet::kDefaultRestarts;
  std::uint64_t quantum_seed = svet::kDefaultQuantumSeed;
  double quantum_tol = -1.0;
  bool quantum_tol_set = false, quantum_general = false;
  quantum_cmd->add_option("--m", quantum_m, "Party count")->required()->check(CLI::Range(2, 8));
  quantum_cmd->add_option("--restarts", quantum_restarts, "Random restarts")
      ->check(CLI::Range(0, 10000))
      ->capture_default_str();
  quantum_cmd->add_option("--seed", quantum_seed, "Random seed")->capture_default_str();
  quantum_cmd->add_option("--tol", quantum_tol, "Convergence tolerance")
      ->each([&](const std::string&) { quantum_tol_set = true; });
  quantum_cmd->add_flag("--general", quantum_general,
                        "Optimize over full Bloch directions (m <= 4)");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Bounds, attainments and optimizer per m");
  int verify_min = 2, verify_max = 6, verify_restarts = svet::kDefaultRestarts;
  std::uint64_t verify_seed = svet::kDefaultQuantumSeed;
  verify_cmd->add_option("--m-min", verify_min, "First party count")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  verify_cmd->add_option("--m-max", verify_max, "Last party count")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--restarts", verify_restarts, "Optimizer restarts")
      ->capture_default_str();
  verify_cmd->add_option("--dim-cap", dim_cap, "Parity subspace dimension cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*coeffs_cmd) return run_coeffs(coeffs_m, coeffs_kind, coeffs_method, format);
    if (*classify_cmd) return run_classify(classify_graph, format);
    if (*maximize_cmd)
      return run_maximize(maximize_graph, maximize_oracle, dim_cap, brute_cap, format);
    if (*mixture_cmd) {
      if (mixture_strategy.empty() && mixture_graph.empty())
        throw svet::io_error("mixture needs --strategy or --graph");
      return run_mixture(mixture_strategy, mixture_graph, format);
    }
    if (*nosignal_cmd)
      return run_nosignal(nosignal_table,
                          nosignal_tol_set ? std::optional<double>(nosignal_tol)
                                           : std::nullopt,
                          format);
    if (*quantum_cmd)
      return run_quantum(quantum_m, quantum_restarts, quantum_seed,
                         quantum_tol_set ? std::optional<double>(quantum_tol)
                                         : std::nullopt,
                         quantum_general, format);
    if (*verify_cmd) {
      if (verify_min > verify_max) throw svet::io_error("--m-min exceeds --m-max");
      return run_verify(verify_min, verify_max, verify_seed, verify_restarts, dim_cap,
                        format);
    }
  } catch (const svet::pp_graph_error& e) {
    emit_error("domain", e.what(),
               {{"witness", {e.witness().first, e.witness().second}}});
    return 1;
  } catch (const svet::capacity_error& e) {
    emit_error("domain", e.what(),
               {{"required", e.required()}, {"cap", e.cap()}});
    return 1;
  } catch (const svet::io_error& e) {
    emit_error("io", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    emit_error("domain", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
  return 0;
}
