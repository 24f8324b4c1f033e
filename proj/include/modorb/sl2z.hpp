#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modorb/modular_datum.hpp"
#include "modorb/scalar.hpp"

namespace modorb {

// Integer 2x2 matrix (a b; c d) with ad - bc = 1.
class SL2Matrix {
 public:
  // Throws InputError if the determinant is not 1 or overflows.
  SL2Matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static SL2Matrix identity() { return {1, 0, 0, 1}; }
  static SL2Matrix s() { return {0, -1, 1, 0}; }
  static SL2Matrix t(std::int64_t n = 1) { return {1, n, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  // Throws InputError on 64-bit overflow.
  SL2Matrix operator*(const SL2Matrix& rhs) const;
  bool operator==(const SL2Matrix&) const = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

std::string to_string(const SL2Matrix& m);

// A token of a generator word: S, or T^power with power != 0.
struct GeneratorToken {
  enum class Kind { kS, kT };
  Kind kind = Kind::kS;
  std::int64_t power = 0;

  static GeneratorToken s() { return {Kind::kS, 0}; }
  static GeneratorToken t(std::int64_t n) { return {Kind::kT, n}; }
  bool operator==(const GeneratorToken&) const = default;
};

// Word in S and T^n. Adjacent T tokens are merged and T^0 dropped on
// construction, so the stored form is canonical in that sense.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(const std::vector<GeneratorToken>& tokens);

  void push_back(const GeneratorToken& token);
  const std::vector<GeneratorToken>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool operator==(const GeneratorWord&) const = default;

 private:
  std::vector<GeneratorToken> tokens_;
};

std::string to_string(const GeneratorWord& w);

// Left-to-right product of the generator matrices.
SL2Matrix evaluate_word_int(const GeneratorWord& w);

// Euclidean reduction of the first column. The word length is
// O(log max |entry|); -I comes out as [S, S].
GeneratorWord decompose_to_generators(const SL2Matrix& m);

// Image of a word under the representation with rho(S) = S-matrix of d and
// rho(T) = diag(t_matrix(d)).
ComplexMatrix rho_of_word(const GeneratorWord& w, const ModularDatum& d);

// rho evaluated through decompose_to_generators.
ComplexMatrix rho_of(const SL2Matrix& m, const ModularDatum& d);

bool is_prime(std::int64_t n);

struct TwistedTransform {
  std::int64_t a = 0;
  std::int64_t b = 0;
  SL2Matrix matrix = SL2Matrix::identity();  // (k, -b; -a, (1 + ab)/k)
};

// Finds 0 < a, b < k with s = r a and -r = s b (mod k) by direct search.
// Throws InputError unless k is prime and 0 < r, s < k.
TwistedTransform build_A(std::int64_t k, std::int64_t r, std::int64_t s);

}  // namespace modorb
