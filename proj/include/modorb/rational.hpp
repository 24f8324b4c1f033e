#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace modorb {

// Exact rational in lowest terms with positive denominator. Central charges,
// conformal weights and phase angles all live here.
using Rational = boost::rational<std::int64_t>;

// Parses "p", "-p", "p/q". Throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Representative of q modulo 1 in [0, 1).
Rational mod1(const Rational& q);

long double to_real(const Rational& q);

}  // namespace modorb
