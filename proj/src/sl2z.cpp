#include "modorb/sl2z.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "modorb/error.hpp"

namespace modorb {
namespace {

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw InputError("SL2(Z) arithmetic overflow");
  }
  return static_cast<std::int64_t>(x);
}

// Floor division for c != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t c) {
  std::int64_t q = a / c;
  if ((a % c != 0) && ((a < 0) != (c < 0))) --q;
  return q;
}

}  // namespace

SL2Matrix::SL2Matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1) throw InputError("matrix " + to_string(*this) + " does not have determinant 1");
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& r) const {
  using W = __int128;
  return {narrow(W(a_) * r.a_ + W(b_) * r.c_), narrow(W(a_) * r.b_ + W(b_) * r.d_),
          narrow(W(c_) * r.a_ + W(d_) * r.c_), narrow(W(c_) * r.b_ + W(d_) * r.d_)};
}

std::string to_string(const SL2Matrix& m) {
  std::ostringstream os;
  os << "(" << m.a() << "," << m.b() << ";" << m.c() << "," << m.d() << ")";
  return os.str();
}

GeneratorWord::GeneratorWord(const std::vector<GeneratorToken>& tokens) {
  for (const auto& t : tokens) push_back(t);
}

void GeneratorWord::push_back(const GeneratorToken& token) {
  if (token.kind == GeneratorToken::Kind::kT) {
    if (token.power == 0) return;
    if (!tokens_.empty() && tokens_.back().kind == GeneratorToken::Kind::kT) {
      tokens_.back().power += token.power;
      if (tokens_.back().power == 0) tokens_.pop_back();
      return;
    }
  }
  tokens_.push_back(token);
}

std::string to_string(const GeneratorWord& w) {
  if (w.size() == 0) return "[]";
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    const auto& t = w.tokens()[i];
    if (t.kind == GeneratorToken::Kind::kS) {
      os << "S";
    } else {
      os << "T^" << t.power;
    }
  }
  os << "]";
  return os.str();
}

SL2Matrix evaluate_word_int(const GeneratorWord& w) {
  SL2Matrix m = SL2Matrix::identity();
  for (const auto& t : w.tokens()) {
    m = m * (t.kind == GeneratorToken::Kind::kS ? SL2Matrix::s() : SL2Matrix::t(t.power));
  }
  return m;
}

GeneratorWord decompose_to_generators(const SL2Matrix& m) {
  // Peel m = T^q S m' with m' = S^-1 T^-q m until the lower-left entry is 0.
  std::int64_t a = m.a(), b = m.b(), c = m.c(), d = m.d();
  GeneratorWord w;
  while (c != 0) {
    // Nearest quotient keeps |a - q c| <= |c|/2, so there are O(log |c|) steps.
    std::int64_t q = floor_div(a, c);
    if (2 * std::abs(a - q * c) > std::abs(c)) ++q;
    a -= q * c;
    b -= q * d;
    w.push_back(GeneratorToken::t(q));
    w.push_back(GeneratorToken::s());
    const std::int64_t a2 = c, b2 = d;
    c = -a;
    d = -b;
    a = a2;
    b = b2;
  }
  // Upper triangular: a = d = +-1.
  if (a == 1) {
    w.push_back(GeneratorToken::t(b));
  } else {
    w.push_back(GeneratorToken::s());
    w.push_back(GeneratorToken::s());
    w.push_back(GeneratorToken::t(-b));
  }
  return w;
}

ComplexMatrix rho_of_word(const GeneratorWord& w, const ModularDatum& d) {
  const auto n = static_cast<Eigen::Index>(d.rank());
  const auto t = t_matrix(d);
  ComplexMatrix out = ComplexMatrix::Identity(n, n);
  for (const auto& token : w.tokens()) {
    if (token.kind == GeneratorToken::Kind::kS) {
      out = out * d.s_matrix();
    } else {
      // Right multiplication by a diagonal scales columns.
      for (Eigen::Index j = 0; j < n; ++j) {
        out.col(j) *= t[static_cast<std::size_t>(j)].pow(token.power).value();
      }
    }
  }
  return out;
}

ComplexMatrix rho_of(const SL2Matrix& m, const ModularDatum& d) {
  return rho_of_word(decompose_to_generators(m), d);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

TwistedTransform build_A(std::int64_t k, std::int64_t r, std::int64_t s) {
  if (!is_prime(k)) throw InputError("k must be prime, got " + std::to_string(k));
  if (r <= 0 || r >= k || s <= 0 || s >= k) {
    throw InputError("r and s must lie in (0, k); got r=" + std::to_string(r) + ", s=" + std::to_string(s));
  }
  auto mod = [k](std::int64_t x) { return ((x % k) + k) % k; };
  for (std::int64_t a = 1; a < k; ++a) {
    if (mod(s - r * a) != 0) continue;
    for (std::int64_t b = 1; b < k; ++b) {
      if (mod(-r - s * b) != 0) continue;
      return {a, b, SL2Matrix(k, -b, -a, (1 + a * b) / k)};
    }
  }
  // Unreachable for prime k: r and s are units mod k.
  throw InputError("no solution of the twisted congruences");
}

}  // namespace modorb
