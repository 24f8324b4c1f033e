#include "modorb/modular_datum.hpp"

#include <cmath>
#include <set>

#include "modorb/error.hpp"

namespace modorb {

ModularDatum::ModularDatum(Rational central_charge, std::vector<ModuleInfo> modules,
                           ComplexMatrix s_matrix)
    : central_charge_(central_charge), modules_(std::move(modules)), s_(std::move(s_matrix)) {
  if (modules_.empty()) throw InputError("a modular datum needs at least the vacuum module");
  const auto n = static_cast<Eigen::Index>(modules_.size());
  if (s_.rows() != n || s_.cols() != n) {
    throw InputError("dimension mismatch: " + std::to_string(modules_.size()) + " modules but S is " +
                     std::to_string(s_.rows()) + "x" + std::to_string(s_.cols()));
  }
  std::set<std::string> seen;
  for (const auto& m : modules_) {
    if (!seen.insert(m.label).second) throw InputError("duplicate module label \"" + m.label + "\"");
  }
  if (modules_.front().h != Rational(0)) {
    throw InputError("vacuum weight must be 0, got " + to_string(modules_.front().h));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(s_(i, j).real()) || !std::isfinite(s_(i, j).imag())) {
        throw InputError("non-finite S entry");
      }
    }
  }
}

std::vector<Phase> t_matrix(const ModularDatum& d) {
  const Rational shift = d.central_charge() / Rational(24);
  std::vector<Phase> t;
  t.reserve(d.rank());
  for (const auto& m : d.modules()) t.emplace_back(m.h - shift);
  return t;
}

ComplexMatrix diagonal_matrix(const std::vector<Phase>& phases) {
  const auto n = static_cast<Eigen::Index>(phases.size());
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) t(i, i) = phases[static_cast<std::size_t>(i)].value();
  return t;
}

FusionResult verlinde_fusion(const ModularDatum& d, Real min_vacuum_entry) {
  const auto& s = d.s_matrix();
  const auto n = static_cast<Eigen::Index>(d.rank());
  for (Eigen::Index l = 0; l < n; ++l) {
    if (std::abs(s(0, l)) < min_vacuum_entry) {
      throw InputError("S_0," + std::to_string(l) + " is numerically zero; datum is not valid");
    }
  }

  FusionResult out{FusionTensor(d.rank()), 0, true};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index m = 0; m < n; ++m) {
        Complex sum = 0;
        for (Eigen::Index l = 0; l < n; ++l) sum += s(i, l) * s(j, l) * std::conj(s(m, l)) / s(0, l);
        const Real rounded = std::round(sum.real());
        out.max_residual = std::max(out.max_residual, std::abs(sum - Complex(rounded, 0)));
        if (rounded < 0) out.nonnegative = false;
        out.tensor(i, j, m) = static_cast<std::int64_t>(rounded);
      }
    }
  }
  return out;
}

QuantumDimensions quantum_dimensions(const ModularDatum& d) {
  const auto& s = d.s_matrix();
  QuantumDimensions q;
  q.dims.reserve(d.rank());
  q.dims.push_back(1);
  for (Eigen::Index i = 1; i < static_cast<Eigen::Index>(d.rank()); ++i) {
    q.dims.push_back((s(0, i) / s(0, 0)).real());
  }
  for (Real x : q.dims) q.global += x * x;
  return q;
}

}  // namespace modorb
