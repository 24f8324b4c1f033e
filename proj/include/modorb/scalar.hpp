#pragma once

#include <complex>

#include <Eigen/Dense>

namespace modorb {

using Real = long double;
using Complex = std::complex<Real>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// eps gates the matrix identities, eps_int gates rounding of fusion coefficients.
struct Tolerances {
  Real eps = 1e-9L;
  Real eps_int = 1e-6L;
};

// Largest entrywise modulus; 0 for an empty matrix.
Real max_abs(const ComplexMatrix& m);

// Parses a decimal string ("0.7071", "-1e-3") into a finite Real.
// Throws InputError on trailing garbage, NaN or infinity.
Real parse_real(const std::string& text);

}  // namespace modorb
