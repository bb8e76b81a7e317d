#include "svet/json_io.hpp"

#include <bit>
#include <cinttypes>
#include <cstdio>
#include <map>

#include <json.hpp>

namespace svet {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse(std::string_view text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string(what) + ": " + e.what());
  }
}

int get_m(const ordered_json& j, const char* what) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
    throw io_error(std::string(what) + ": missing integer field \"m\"");
  const int m = j["m"].get<int>();
  if (m < 2 || m > 12)
    throw io_error(std::string(what) + ": party count must be in [2, 12]");
  return m;
}

std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string graph_to_json(const CommGraph& g) {
  ordered_json j;
  j["m"] = g.m();
  j["edges"] = ordered_json::array();
  for (const auto& [from, to] : g.edges()) j["edges"].push_back({from, to});
  return j.dump();
}

CommGraph graph_from_json(std::string_view text, std::vector<std::string>* warnings) {
  const ordered_json j = parse(text, "graph");
  const int m = get_m(j, "graph");
  CommGraph g(m);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw io_error("graph: missing array field \"edges\"");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw io_error("graph: every edge must be an [i, j] integer pair");
    const int from = e[0].get<int>();
    const int to = e[1].get<int>();
    if (from < 1 || from > m || to < 1 || to > m)
      throw io_error("graph: edge party index out of range");
    if (from == to) {
      if (warnings)
        warnings->push_back("ignored self-loop [" + std::to_string(from) + ", " +
                            std::to_string(to) + "]; self-dependence is implicit");
      continue;
    }
    g.add_edge(from, to);
  }
  return g;
}

std::string table_to_json(const CorrelationTable& table) {
  // built by hand so floating entries carry exactly 17 significant digits
  std::string out = "{\"m\":" + std::to_string(table.m()) + ",\"entries\":[";
  const std::uint32_t n = std::uint32_t(1) << table.m();
  bool first = true;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t a = 0; a < n; ++a) {
      if (table.exact()) {
        const ExactScalar& p = table.exact_value(x, a);
        if (p.is_zero()) continue;
        if (!first) out += ",";
        out += "[" + std::to_string(x) + "," + std::to_string(a) + "," +
               std::to_string(p.numerator()) + "," + std::to_string(p.exponent()) + "]";
      } else {
        const double p = table.value(x, a);
        if (p == 0.0) continue;
        if (!first) out += ",";
        out += "[" + std::to_string(x) + "," + std::to_string(a) + "," +
               format_double17(p) + "]";
      }
      first = false;
    }
  }
  out += "]}";
  return out;
}

CorrelationTable table_from_json(std::string_view text) {
  const ordered_json j = parse(text, "table");
  const int m = get_m(j, "table");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw io_error("table: missing array field \"entries\"");
  const auto& entries = j["entries"];
  bool exact = true;
  for (const auto& e : entries) {
    if (!e.is_array() || (e.size() != 3 && e.size() != 4))
      throw io_error("table: entries must be [x, a, num, exp] or [x, a, value]");
    if (e.size() == 3) exact = false;
  }
  CorrelationTable t =
      CorrelationTable::zeros(m, exact ? TableRep::Exact : TableRep::Floating);
  const std::uint32_t n = std::uint32_t(1) << m;
  std::vector<bool> seen(std::size_t(1) << (2 * m), false);
  for (const auto& e : entries) {
    if (exact != (e.size() == 4))
      throw io_error("table: exact and floating entries cannot be mixed");
    if (!e[0].is_number_integer() || !e[1].is_number_integer())
      throw io_error("table: x and a words must be integers");
    const std::int64_t x = e[0].get<std::int64_t>();
    const std::int64_t a = e[1].get<std::int64_t>();
    if (x < 0 || a < 0 || x >= n || a >= n)
      throw io_error("table: entry word out of range");
    const std::size_t idx = t.index(std::uint32_t(x), std::uint32_t(a));
    if (seen[idx]) throw io_error("table: duplicate entry");
    seen[idx] = true;
    if (exact) {
      if (!e[2].is_number_integer() || !e[3].is_number_integer())
        throw io_error("table: exact entries need integer numerator and exponent");
      const std::int64_t exp = e[3].get<std::int64_t>();
      if (exp < 0 || exp > 62) throw io_error("table: exponent out of range");
      t.set(std::uint32_t(x), std::uint32_t(a),
            ExactScalar::dyadic(e[2].get<std::int64_t>(), std::uint32_t(exp)));
    } else {
      if (!e[2].is_number()) throw io_error("table: floating entry needs a number");
      t.set(std::uint32_t(x), std::uint32_t(a), e[2].get<double>());
    }
  }
  return t;
}

std::string strategy_to_json(const DeterministicStrategy& s) {
  ordered_json j;
  j["m"] = s.m();
  ordered_json tables = ordered_json::object();
  for (int i = 1; i <= s.m(); ++i) {
    ordered_json entry;
    entry["dep"] = ordered_json::array();
    for (int p = 1; p <= s.m(); ++p)
      if ((s.dep[i - 1] >> (p - 1)) & 1u) entry["dep"].push_back(p);
    entry["bits"] = s.tables[i - 1].to_hex();
    tables[std::to_string(i)] = std::move(entry);
  }
  j["tables"] = std::move(tables);
  return j.dump();
}

DeterministicStrategy strategy_from_json(std::string_view text) {
  const ordered_json j = parse(text, "strategy");
  const int m = get_m(j, "strategy");
  if (!j.contains("tables") || !j["tables"].is_object())
    throw io_error("strategy: missing object field \"tables\"");
  std::vector<std::uint16_t> dep(static_cast<std::size_t>(m), 0);
  std::vector<std::string> bits(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const std::string key = std::to_string(i);
    if (!j["tables"].contains(key))
      throw io_error("strategy: missing table for party " + key);
    const auto& entry = j["tables"][key];
    if (!entry.is_object() || !entry.contains("dep") || !entry.contains("bits") ||
        !entry["dep"].is_array() || !entry["bits"].is_string())
      throw io_error("strategy: party " + key + " needs \"dep\" and \"bits\"");
    std::uint16_t mask = 0;
    for (const auto& p : entry["dep"]) {
      if (!p.is_number_integer()) throw io_error("strategy: dep entries must be integers");
      const int v = p.get<int>();
      if (v < 1 || v > m) throw io_error("strategy: dep party index out of range");
      mask |= std::uint16_t(1) << (v - 1);
    }
    if (!((mask >> (i - 1)) & 1u))
      throw io_error("strategy: party " + key + "'s dependency set must contain itself");
    dep[i - 1] = mask;
    bits[i - 1] = entry["bits"].get<std::string>();
  }
  CommGraph g(m);
  for (int i = 1; i <= m; ++i)
    for (int p = 1; p <= m; ++p)
      if (p != i && ((dep[i - 1] >> (p - 1)) & 1u)) g.add_edge(p, i);
  DeterministicStrategy s = make_strategy(g);
  for (int i = 0; i < m; ++i) {
    try {
      s.tables[i] = BitTable::from_hex(s.tables[i].arity(), bits[i]);
    } catch (const std::invalid_argument& e) {
      throw io_error("strategy: party " + std::to_string(i + 1) + " bits: " + e.what());
    }
  }
  return s;
}

std::string coeffs_to_json(const CoefficientTable& coeffs) {
  ordered_json j;
  j["m"] = coeffs.m;
  j["q"] = coeffs.q;
  j["values"] = ordered_json::array();
  for (std::size_t x = 0; x < coeffs.values.size(); ++x) {
    const ExactScalar& v = coeffs.values[x];
    j["values"].push_back({x, v.numerator(), v.exponent()});
  }
  return j.dump();
}

}  // namespace svet
