#include "modorb/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "modorb/error.hpp"

namespace modorb {

Real max_abs(const ComplexMatrix& m) {
  Real worst = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j)));
  }
  return worst;
}

Real parse_real(const std::string& text) {
  if (text.empty()) throw InputError("empty decimal string");
  char* end = nullptr;
  const Real value = std::strtold(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(value)) {
    throw InputError("invalid decimal \"" + text + "\"");
  }
  return value;
}

}  // namespace modorb
