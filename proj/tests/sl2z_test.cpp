#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <map>
#include <random>

#include "modorb/error.hpp"
#include "modorb/sl2z.hpp"
#include "test_support.hpp"

namespace modorb {
namespace {

using Kind = GeneratorToken::Kind;

GeneratorWord random_word(std::mt19937_64& rng, int max_len, int max_power) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> power(-max_power, max_power);
  GeneratorWord w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    if (coin(rng)) {
      w.push_back(GeneratorToken::s());
    } else {
      w.push_back(GeneratorToken::t(power(rng)));
    }
  }
  return w;
}

std::int64_t max_entry(const SL2Matrix& m) {
  return std::max({std::abs(m.a()), std::abs(m.b()), std::abs(m.c()), std::abs(m.d())});
}

// Nearest-integer continued fraction: a second factorization that shares no
// code with decompose_to_generators.
GeneratorWord centered_word(const SL2Matrix& m) {
  std::int64_t a = m.a(), b = m.b(), c = m.c(), d = m.d();
  std::vector<GeneratorToken> tokens;
  while (c != 0) {
    const auto q = static_cast<std::int64_t>(std::llround(static_cast<long double>(a) / static_cast<long double>(c)));
    tokens.push_back(GeneratorToken::t(q));
    tokens.push_back(GeneratorToken::s());
    const auto na = a - q * c, nb = b - q * d;
    a = c;
    b = d;
    c = -na;
    d = -nb;
  }
  if (a == 1) {
    tokens.push_back(GeneratorToken::t(b));
  } else {
    // -T^{-b} = S^2 T^{-b}; write S^2 as (ST)^3 to vary the word further.
    for (int i = 0; i < 3; ++i) {
      tokens.push_back(GeneratorToken::s());
      tokens.push_back(GeneratorToken::t(1));
    }
    tokens.push_back(GeneratorToken::t(-b));
  }
  return GeneratorWord(tokens);
}

TEST(GeneratorWord, MergesAdjacentTPowers) {
  GeneratorWord w({GeneratorToken::t(2), GeneratorToken::t(-2), GeneratorToken::s(), GeneratorToken::t(0),
                   GeneratorToken::t(3), GeneratorToken::t(1)});
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w.tokens()[0].kind, Kind::kS);
  EXPECT_EQ(w.tokens()[1], GeneratorToken::t(4));
  EXPECT_EQ(to_string(w), "[S, T^4]");
}

TEST(EvaluateWord, Generators) {
  EXPECT_EQ(evaluate_word_int(GeneratorWord({GeneratorToken::s()})), SL2Matrix(0, -1, 1, 0));
  EXPECT_EQ(evaluate_word_int(GeneratorWord({GeneratorToken::t(3)})), SL2Matrix(1, 3, 0, 1));
  EXPECT_EQ(evaluate_word_int(GeneratorWord({GeneratorToken::s(), GeneratorToken::s()})), SL2Matrix(-1, 0, 0, -1));
  EXPECT_EQ(evaluate_word_int(GeneratorWord()), SL2Matrix::identity());
}

TEST(SL2Matrix, RejectsWrongDeterminantAndOverflow) {
  EXPECT_THROW(SL2Matrix(1, 1, 1, 1), InputError);
  EXPECT_THROW(SL2Matrix(2, 0, 0, 1), InputError);
  const SL2Matrix big(1, std::int64_t{1} << 62, 0, 1);
  EXPECT_THROW(big * big, InputError);
}

TEST(Decompose, SimpleMatrices) {
  EXPECT_EQ(decompose_to_generators(SL2Matrix::s()), GeneratorWord({GeneratorToken::s()}));
  EXPECT_EQ(decompose_to_generators(SL2Matrix::t(1)), GeneratorWord({GeneratorToken::t(1)}));
  EXPECT_EQ(decompose_to_generators(SL2Matrix(-1, 0, 0, -1)), GeneratorWord({GeneratorToken::s(), GeneratorToken::s()}));
  EXPECT_EQ(decompose_to_generators(SL2Matrix::identity()).size(), 0u);
  const SL2Matrix m(2, -1, -1, 1);
  EXPECT_EQ(evaluate_word_int(decompose_to_generators(m)), m);
}

TEST(Decompose, RoundTripOnRandomWords) {
  std::mt19937_64 rng(20261016);
  int checked = 0;
  while (checked < 1000) {
    const auto m = evaluate_word_int(random_word(rng, 40, 5));
    if (max_entry(m) > 1000000) continue;
    const auto w = decompose_to_generators(m);
    ASSERT_EQ(evaluate_word_int(w), m) << to_string(m) << " -> " << to_string(w);
    // Each step costs at most two tokens and halves |c|.
    const double bound = 2 * (std::log2(static_cast<double>(max_entry(m)) + 1) + 2) + 3;
    EXPECT_LE(static_cast<double>(w.size()), bound);
    ++checked;
  }
}

TEST(Decompose, AdjacentEntriesStayShort) {
  // Plain floor quotients take about n steps on (n, -1; -(n-1), 1).
  const SL2Matrix m(1000, -1, -999, 1);
  const auto w = decompose_to_generators(m);
  EXPECT_EQ(evaluate_word_int(w), m);
  EXPECT_LE(w.size(), 27u);
}

TEST(Decompose, CenteredOracleAgreesOnIntegers) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto m = evaluate_word_int(random_word(rng, 12, 3));
    EXPECT_EQ(evaluate_word_int(centered_word(m)), m);
  }
}

TEST(Rho, IdentityAndS) {
  const auto d = testing::ising();
  EXPECT_LT(max_abs(rho_of(SL2Matrix::identity(), d) - ComplexMatrix::Identity(3, 3)), 1e-18L);
  EXPECT_LT(max_abs(rho_of(SL2Matrix::s(), d) - d.s_matrix()), 1e-18L);
}

TEST(Rho, IndependentOfFactorization) {
  const auto d = testing::ising();
  const SL2Matrix m(2, -1, -1, 1);
  const auto w1 = decompose_to_generators(m);
  const auto w2 = centered_word(m);
  ASSERT_NE(w1, w2);
  EXPECT_LT(max_abs(rho_of_word(w1, d) - rho_of_word(w2, d)), 1e-15L);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto n = evaluate_word_int(random_word(rng, 10, 3));
    EXPECT_LT(max_abs(rho_of(n, d) - rho_of_word(centered_word(n), d)), 1e-12L) << to_string(n);
  }
}

TEST(Rho, HomomorphismOnRandomPairs) {
  for (const auto& d : {testing::ising(), testing::fibonacci()}) {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 100; ++i) {
      const auto m1 = evaluate_word_int(random_word(rng, 8, 2));
      const auto m2 = evaluate_word_int(random_word(rng, 8, 2));
      EXPECT_LT(max_abs(rho_of(m1 * m2, d) - rho_of(m1, d) * rho_of(m2, d)), 1e-9L);
    }
  }
}

// Brute force over 0 < a, b < k.
std::pair<std::int64_t, std::int64_t> congruence_oracle(std::int64_t k, std::int64_t r, std::int64_t s) {
  for (std::int64_t a = 1; a < k; ++a)
    for (std::int64_t b = 1; b < k; ++b)
      if ((s - r * a) % k == 0 && ((-r - s * b) % k + k) % k == 0) return {a, b};
  return {0, 0};
}

TEST(BuildA, SmallCases) {
  const auto t21 = build_A(2, 1, 1);
  EXPECT_EQ(t21.a, 1);
  EXPECT_EQ(t21.b, 1);
  EXPECT_EQ(t21.matrix, SL2Matrix(2, -1, -1, 1));

  const auto t312 = build_A(3, 1, 2);
  EXPECT_EQ(t312.a, 2);
  EXPECT_EQ(t312.b, 1);
  EXPECT_EQ(t312.matrix, SL2Matrix(3, -1, -2, 1));

  const auto t322 = build_A(3, 2, 2);
  EXPECT_EQ(t322.a, 1);
  EXPECT_EQ(t322.b, 2);
  EXPECT_EQ(t322.matrix, SL2Matrix(3, -2, -1, 1));
}

TEST(BuildA, MatchesOracleAndDivisibility) {
  for (std::int64_t k : {2, 3, 5, 7, 11, 13}) {
    for (std::int64_t r = 1; r < k; ++r) {
      for (std::int64_t s = 1; s < k; ++s) {
        const auto t = build_A(k, r, s);
        EXPECT_EQ(std::make_pair(t.a, t.b), congruence_oracle(k, r, s));
        EXPECT_EQ((1 + t.a * t.b) % k, 0);
      }
    }
  }
}

TEST(BuildA, RejectsBadArguments) {
  EXPECT_THROW(build_A(4, 1, 1), InputError);
  EXPECT_THROW(build_A(3, 0, 1), InputError);
  EXPECT_THROW(build_A(3, 1, 3), InputError);
}

TEST(IsPrime, SmallNumbers) {
  std::vector<int> primes;
  for (int n = -2; n < 30; ++n)
    if (is_prime(n)) primes.push_back(n);
  EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

}  // namespace
}  // namespace modorb
