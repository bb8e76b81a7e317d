#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svet/exact.hpp"

namespace svet {

enum class TableRep { Exact, Floating };

inline constexpr double kDefaultTableTol = 1e-12;

/// Dense conditional distribution P(a|x) over all 2^m setting words and 2^m
/// outcome words; entry (x, a) lives at index (x << m) | a. Exact tables hold
/// dyadic rationals (deterministic strategies, mixtures), floating tables
/// hold doubles (quantum statistics).
class CorrelationTable {
 public:
  static CorrelationTable zeros(int m, TableRep rep);
  /// Exact table with every entry 2^-m.
  static CorrelationTable uniform(int m);
  /// No size check; lets tests build structurally broken tables.
  static CorrelationTable from_raw(int m, TableRep rep,
                                   std::vector<ExactScalar> exact_entries,
                                   std::vector<double> float_entries);

  int m() const { return m_; }
  TableRep rep() const { return rep_; }
  bool exact() const { return rep_ == TableRep::Exact; }
  std::size_t entry_count() const;
  std::size_t index(std::uint32_t x, std::uint32_t a) const {
    return (std::size_t(x) << m_) | a;
  }

  double value(std::uint32_t x, std::uint32_t a) const;
  const ExactScalar& exact_value(std::uint32_t x, std::uint32_t a) const;

  void set(std::uint32_t x, std::uint32_t a, const ExactScalar& p);
  void set(std::uint32_t x, std::uint32_t a, double p);
  void add(std::uint32_t x, std::uint32_t a, const ExactScalar& p);

  bool operator==(const CorrelationTable&) const = default;

 private:
  CorrelationTable(int m, TableRep rep) : m_(m), rep_(rep) {}

  int m_ = 0;
  TableRep rep_ = TableRep::Exact;
  std::vector<ExactScalar> exact_;
  std::vector<double> float_;
};

struct TableViolation {
  enum class Kind { Structure, Positivity, Normalisation };

  Kind kind = Kind::Structure;
  std::uint32_t x = 0;
  std::uint32_t a = 0;     // meaningful for Positivity
  double magnitude = 0.0;  // offending entry, or |column sum - 1|

  std::string describe() const;
};

/// Checks entry count, positivity and per-setting normalisation. Scan order:
/// structure first, then for each x ascending all outcomes (positivity)
/// followed by that setting's normalisation sum; the first failure wins.
/// Exact entries are judged exactly for positivity; tol bounds |sum - 1| and
/// how negative a floating entry may be.
std::optional<TableViolation> validate_table(const CorrelationTable& table,
                                             double tol = kDefaultTableTol);

}  // namespace svet
