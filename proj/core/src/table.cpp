#include "svet/table.hpp"

#include <stdexcept>

#include "svet/bitvec.hpp"

namespace svet {

namespace {

void check_m(int m) {
  if (m < kMinParties || m > kMaxParties)
    throw std::invalid_argument("party count must be in [2, 12]");
}

}  // namespace

CorrelationTable CorrelationTable::zeros(int m, TableRep rep) {
  check_m(m);
  CorrelationTable t(m, rep);
  const std::size_t n = std::size_t(1) << (2 * m);
  if (rep == TableRep::Exact)
    t.exact_.assign(n, ExactScalar::zero());
  else
    t.float_.assign(n, 0.0);
  return t;
}

CorrelationTable CorrelationTable::uniform(int m) {
  CorrelationTable t = zeros(m, TableRep::Exact);
  const ExactScalar p = ExactScalar::dyadic(1, static_cast<std::uint32_t>(m));
  for (auto& e : t.exact_) e = p;
  return t;
}

CorrelationTable CorrelationTable::from_raw(int m, TableRep rep,
                                            std::vector<ExactScalar> exact_entries,
                                            std::vector<double> float_entries) {
  check_m(m);
  CorrelationTable t(m, rep);
  t.exact_ = std::move(exact_entries);
  t.float_ = std::move(float_entries);
  return t;
}

std::size_t CorrelationTable::entry_count() const {
  return exact() ? exact_.size() : float_.size();
}

double CorrelationTable::value(std::uint32_t x, std::uint32_t a) const {
  return exact() ? exact_[index(x, a)].to_double() : float_[index(x, a)];
}

const ExactScalar& CorrelationTable::exact_value(std::uint32_t x, std::uint32_t a) const {
  if (!exact()) throw std::invalid_argument("table is not exact");
  return exact_[index(x, a)];
}

void CorrelationTable::set(std::uint32_t x, std::uint32_t a, const ExactScalar& p) {
  if (!exact()) throw std::invalid_argument("table is not exact");
  exact_[index(x, a)] = p;
}

void CorrelationTable::set(std::uint32_t x, std::uint32_t a, double p) {
  if (exact()) throw std::invalid_argument("table is exact");
  float_[index(x, a)] = p;
}

void CorrelationTable::add(std::uint32_t x, std::uint32_t a, const ExactScalar& p) {
  if (!exact()) throw std::invalid_argument("table is not exact");
  exact_[index(x, a)] += p;
}

std::string TableViolation::describe() const {
  switch (kind) {
    case Kind::Structure:
      return "structure: entry count " + std::to_string(static_cast<long long>(magnitude)) +
             " does not match 2^(2m)";
    case Kind::Positivity:
      return "positivity: P(a=" + std::to_string(a) + "|x=" + std::to_string(x) +
             ") = " + std::to_string(magnitude);
    case Kind::Normalisation:
      return "normalisation: column x=" + std::to_string(x) + " off by " +
             std::to_string(magnitude);
  }
  return {};
}

std::optional<TableViolation> validate_table(const CorrelationTable& table, double tol) {
  const int m = table.m();
  const std::size_t want = std::size_t(1) << (2 * m);
  if (table.entry_count() != want) {
    return TableViolation{TableViolation::Kind::Structure, 0, 0,
                          static_cast<double>(table.entry_count())};
  }
  const std::uint32_t n = std::uint32_t(1) << m;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (table.exact()) {
      ExactScalar sum = ExactScalar::zero();
      for (std::uint32_t a = 0; a < n; ++a) {
        const ExactScalar& p = table.exact_value(x, a);
        if (p.sign() < 0)
          return TableViolation{TableViolation::Kind::Positivity, x, a, p.to_double()};
        sum += p;
      }
      const double off = (sum - ExactScalar::one()).to_double();
      if (off > tol || off < -tol)
        return TableViolation{TableViolation::Kind::Normalisation, x, 0, off};
    } else {
      double sum = 0.0;
      for (std::uint32_t a = 0; a < n; ++a) {
        const double p = table.value(x, a);
        if (p < -tol)
          return TableViolation{TableViolation::Kind::Positivity, x, a, p};
        sum += p;
      }
      const double off = sum - 1.0;
      if (off > tol || off < -tol)
        return TableViolation{TableViolation::Kind::Normalisation, x, 0, off};
    }
  }
  return std::nullopt;
}

}  // namespace svet
