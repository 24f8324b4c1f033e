#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modorb/phase.hpp"
#include "modorb/rational.hpp"
#include "modorb/scalar.hpp"

namespace modorb {

struct ModuleInfo {
  std::string label;
  Rational h;  // conformal weight (or weight mod 1 for derived data)
};

// Central charge, irreducible modules and S-matrix of a rational VOA.
// Construction checks shape only: S square of the module count, unique labels,
// vacuum at index 0 with weight 0, finite entries. The matrix identities are
// checked separately by validate_modular_datum.
class ModularDatum {
 public:
  ModularDatum(Rational central_charge, std::vector<ModuleInfo> modules, ComplexMatrix s_matrix);

  const Rational& central_charge() const { return central_charge_; }
  const std::vector<ModuleInfo>& modules() const { return modules_; }
  const ComplexMatrix& s_matrix() const { return s_; }
  std::size_t rank() const { return modules_.size(); }

 private:
  Rational central_charge_;
  std::vector<ModuleInfo> modules_;
  ComplexMatrix s_;
};

// Diagonal of T: exp(2 pi i (h_i - c/24)).
std::vector<Phase> t_matrix(const ModularDatum& d);

// Dense diagonal matrix with the given phases.
ComplexMatrix diagonal_matrix(const std::vector<Phase>& phases);

// N[i][j][m], flattened row-major.
class FusionTensor {
 public:
  FusionTensor() = default;
  explicit FusionTensor(std::size_t rank) : rank_(rank), n_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t m) const {
    return n_[(i * rank_ + j) * rank_ + m];
  }
  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t m) {
    return n_[(i * rank_ + j) * rank_ + m];
  }

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> n_;
};

struct FusionResult {
  FusionTensor tensor;     // coefficients rounded to the nearest integer
  Real max_residual = 0;   // largest distance of a raw coefficient from its rounding
  bool nonnegative = true;
};

// Verlinde formula N_ij^m = sum_l S_il S_jl conj(S_ml) / S_0l.
// Throws InputError when some |S_0l| < min_vacuum_entry.
FusionResult verlinde_fusion(const ModularDatum& d, Real min_vacuum_entry = 1e-12L);

struct QuantumDimensions {
  std::vector<Real> dims;  // S_0i / S_00, dims[0] == 1 exactly
  Real global = 0;         // sum of dims squared
};

QuantumDimensions quantum_dimensions(const ModularDatum& d);

}  // namespace modorb
