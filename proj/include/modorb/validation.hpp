#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modorb/modular_datum.hpp"
#include "modorb/scalar.hpp"

namespace modorb {

struct CheckResult {
  std::string name;
  bool passed = false;
  Real residual = 0;  // worst deviation seen by the check
  std::string detail;
};

// Named check results. The overall verdict passes iff every check passes.
class ValidationReport {
 public:
  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  void append(const ValidationReport& other);

  bool passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(std::string_view name) const;

 private:
  std::vector<CheckResult> checks_;
};

// Checks, in order: unitarity, symmetry, vacuum_row_positive,
// charge_conjugation (S^2 a permutation), modular_relation ((ST)^3 = S^2)
// and verlinde_integrality. Never throws on a well-formed datum.
ValidationReport validate_modular_datum(const ModularDatum& d, const Tolerances& tol = {});

}  // namespace modorb
