#include "modorb/rational.hpp"

#include <charconv>

#include "modorb/error.hpp"

namespace modorb {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid rational \"" + std::string(whole) + "\"");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto whole = trim(text);
  const auto slash = whole.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(whole, whole));
  const auto num = parse_int(trim(whole.substr(0, slash)), whole);
  const auto den = parse_int(trim(whole.substr(slash + 1)), whole);
  if (den == 0) throw InputError("zero denominator in \"" + std::string(whole) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational mod1(const Rational& q) {
  const auto den = q.denominator();
  auto num = q.numerator() % den;
  if (num < 0) num += den;
  return Rational(num, den);
}

long double to_real(const Rational& q) {
  return static_cast<long double>(q.numerator()) / static_cast<long double>(q.denominator());
}

}  // namespace modorb
