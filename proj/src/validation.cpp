#include "modorb/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace modorb {

void ValidationReport::append(const ValidationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool ValidationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string fmt(Real x) {
  std::ostringstream os;
  os.precision(6);
  os << static_cast<double>(x);
  return os.str();
}

CheckResult check_unitarity(const ComplexMatrix& s, Real eps) {
  const auto n = s.rows();
  const Real r = max_abs(s * s.adjoint() - ComplexMatrix::Identity(n, n));
  return {"unitarity", r <= eps, r, "max |S S^dagger - I|"};
}

CheckResult check_symmetry(const ComplexMatrix& s, Real eps) {
  const Real r = max_abs(s - s.transpose());
  return {"symmetry", r <= eps, r, "max |S - S^T|"};
}

CheckResult check_vacuum_row(const ComplexMatrix& s, Real eps) {
  Real r = 0;
  Real smallest = s(0, 0).real();
  for (Eigen::Index l = 0; l < s.cols(); ++l) {
    const auto x = s(0, l);
    r = std::max({r, std::abs(x.imag()), -x.real()});
    smallest = std::min(smallest, x.real());
  }
  return {"vacuum_row_positive", r <= eps && smallest > eps, r, "min Re S_0l = " + fmt(smallest)};
}

CheckResult check_charge_conjugation(const ComplexMatrix& s, Real eps) {
  const ComplexMatrix c = s * s;
  const auto n = c.rows();
  Real r = 0;
  bool permutation = true;
  std::vector<int> col_hits(static_cast<std::size_t>(n), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    int row_hits = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Real to_zero = std::abs(c(i, j));
      const Real to_one = std::abs(c(i, j) - Complex(1, 0));
      r = std::max(r, std::min(to_zero, to_one));
      if (to_one < to_zero) {
        ++row_hits;
        ++col_hits[static_cast<std::size_t>(j)];
      }
    }
    permutation = permutation && row_hits == 1;
  }
  for (int hits : col_hits) permutation = permutation && hits == 1;
  const bool vacuum_fixed = std::abs(c(0, 0) - Complex(1, 0)) <= eps;
  std::string detail = "max distance of S^2 entries from {0,1}";
  if (!permutation) detail += "; S^2 is not a permutation pattern";
  if (!vacuum_fixed) detail += "; vacuum is not self-conjugate";
  return {"charge_conjugation", r <= eps && permutation && vacuum_fixed, r, detail};
}

CheckResult check_modular_relation(const ModularDatum& d, Real eps) {
  const auto& s = d.s_matrix();
  const ComplexMatrix st = s * diagonal_matrix(t_matrix(d));
  const ComplexMatrix lhs = st * st * st;
  const ComplexMatrix rhs = s * s;
  const Real r = max_abs(lhs - rhs);
  std::string detail = "max |(ST)^3 - S^2|";
  if (r > eps) {
    // Least-squares scalar z with (ST)^3 ~ z S^2, to expose a pure global phase.
    Complex num = 0;
    Real den = 0;
    for (Eigen::Index i = 0; i < rhs.rows(); ++i) {
      for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
        num += std::conj(rhs(i, j)) * lhs(i, j);
        den += std::norm(rhs(i, j));
      }
    }
    if (den > 0) {
      const Complex z = num / den;
      const Real turns = std::arg(z) / (2 * std::numbers::pi_v<Real>);
      detail += "; best scalar fit |z| = " + fmt(std::abs(z)) + ", arg(z)/2pi = " + fmt(turns) +
                ", residual after fit = " + fmt(max_abs(lhs - z * rhs));
    }
  }
  return {"modular_relation", r <= eps, r, detail};
}

CheckResult check_verlinde(const ModularDatum& d, const Tolerances& tol) {
  const auto& s = d.s_matrix();
  for (Eigen::Index l = 0; l < s.cols(); ++l) {
    if (std::abs(s(0, l)) <= tol.eps) {
      return {"verlinde_integrality", false, std::numeric_limits<Real>::infinity(),
              "S_0," + std::to_string(l) + " vanishes"};
    }
  }
  const auto fusion = verlinde_fusion(d, tol.eps);
  std::string detail = "max distance of N_ij^m from integers";
  if (!fusion.nonnegative) detail += "; negative coefficient";
  return {"verlinde_integrality", fusion.max_residual <= tol.eps_int && fusion.nonnegative,
          fusion.max_residual, detail};
}

}  // namespace

ValidationReport validate_modular_datum(const ModularDatum& d, const Tolerances& tol) {
  const auto& s = d.s_matrix();
  ValidationReport report;
  report.add(check_unitarity(s, tol.eps));
  report.add(check_symmetry(s, tol.eps));
  report.add(check_vacuum_row(s, tol.eps));
  report.add(check_charge_conjugation(s, tol.eps));
  report.add(check_modular_relation(d, tol.eps));
  report.add(check_verlinde(d, tol));
  return report;
}

}  // namespace modorb
