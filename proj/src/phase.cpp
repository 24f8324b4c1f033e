#include "modorb/phase.hpp"

#include <cmath>
#include <numbers>

namespace modorb {

Complex Phase::value() const {
  // Quarter turns are returned exactly so that real entries stay real.
  const auto den = angle_.denominator();
  const auto num = angle_.numerator();
  if (den == 1) return {1, 0};
  if (den == 2) return {-1, 0};
  if (den == 4) return num == 1 ? Complex{0, 1} : Complex{0, -1};
  const Real theta = 2 * std::numbers::pi_v<Real> * static_cast<Real>(num) / static_cast<Real>(den);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace modorb
