#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "svet/coeffs.hpp"
#include "svet/graph.hpp"
#include "svet/strategy.hpp"
#include "svet/table.hpp"

namespace svet {

/// Malformed or semantically invalid serialized input.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"m": int, "edges": [[i, j], ...]} with 1-based indices, [i, j] = i -> j.
std::string graph_to_json(const CommGraph& g);
/// Self-loop edges are accepted and dropped; each adds a note to *warnings.
CommGraph graph_from_json(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// {"m": int, "entries": [[x, a, numerator, exponent], ...]} for exact
/// tables; floating tables use [[x, a, value], ...] with 17 significant
/// digits. Zero entries are omitted.
std::string table_to_json(const CorrelationTable& table);
CorrelationTable table_from_json(std::string_view text);

/// {"m": int, "tables": {"1": {"dep": [...], "bits": hex}, ...}}; the graph
/// is implied by the dependency lists.
std::string strategy_to_json(const DeterministicStrategy& s);
DeterministicStrategy strategy_from_json(std::string_view text);

/// {"m": int, "q": int, "values": [[x, numerator, exponent], ...]} sorted by
/// x ascending.
std::string coeffs_to_json(const CoefficientTable& coeffs);

}  // namespace svet
