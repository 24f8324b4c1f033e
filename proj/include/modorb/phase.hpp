#pragma once

#include <cstdint>

#include "modorb/rational.hpp"
#include "modorb/scalar.hpp"

namespace modorb {

// The unit complex number exp(2 pi i angle), with the angle held exactly
// and reduced into [0, 1).
class Phase {
 public:
  Phase() = default;
  explicit Phase(const Rational& angle) : angle_(mod1(angle)) {}

  const Rational& angle() const { return angle_; }
  Complex value() const;

  Phase operator*(const Phase& other) const { return Phase(angle_ + other.angle_); }
  Phase pow(std::int64_t n) const { return Phase(angle_ * Rational(n)); }
  Phase conj() const { return Phase(-angle_); }

  bool operator==(const Phase& other) const { return angle_ == other.angle_; }

 private:
  Rational angle_{0};
};

}  // namespace modorb
