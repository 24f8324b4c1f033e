#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "modorb/scalar.hpp"
#include "modorb/validation.hpp"

// Restricted S-matrix of an orbifold V^G, evaluated from explicit orbit,
// stabilizer, character and twisted-sector S data.
namespace modorb::restricted {

using Element = std::vector<std::int64_t>;

// Z_{n_1} x ... x Z_{n_r}; elements are residue tuples.
class FiniteAbelianGroup {
 public:
  // Throws InputError if a factor is not positive.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t order() const;

  Element identity() const { return Element(factors_.size(), 0); }
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  bool contains(const Element& x) const;
  // Throws InputError when x is not a reduced element of the group.
  void require(const Element& x, const std::string& what) const;
  std::vector<Element> elements() const;

 private:
  std::vector<std::int64_t> factors_;
};

std::string to_string(const Element& x);

// Irreducible (possibly projective) characters of a stabilizer H. Column c
// of every row is the value on elements[c].
struct CharacterTable {
  std::vector<Element> elements;
  std::vector<std::vector<Complex>> rows;
  std::vector<std::int64_t> dims;  // dim W_lambda per row

  // Throws InputError if x is not one of the elements.
  Complex value(std::size_t row, const Element& x) const;
};

struct OrbitSpec {
  std::string label;
  Element twist;  // g_i; must lie in the stabilizer
  CharacterTable characters;  // characters.elements is the stabilizer G_{M^i}
};

using BlockKey = std::tuple<std::size_t, std::size_t, Element>;

struct RestrictedInput {
  FiniteAbelianGroup group{{1}};
  std::vector<OrbitSpec> orbits;  // orbit 0 is the vacuum V
  // C_{i,j}; an absent or empty entry means the block contributes 0.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Element>> transversals;
  // S_{M^i, M^j o kappa} keyed by (i, j, kappa).
  std::map<BlockKey, Complex> blocks;
};

// Character orthogonality, sum of squared dims = |H|, twist in stabilizer,
// stabilizer closed under the group law, element validity, and equality of
// block entries whose kappas differ by an element of G_{M^i}.
ValidationReport validate_group_data(const RestrictedInput& input, const Tolerances& tol = {});

struct RestrictedSMatrix {
  std::vector<std::pair<std::size_t, std::size_t>> index;  // (orbit, character row)
  ComplexMatrix s;
};

// S_{(i,lambda),(j,mu)} = 1/|G_{M^i}| sum_{kappa in C_ij} S_{M^i, M^j o kappa}
//   conj(lambda(kappa^-1 g_j kappa)) mu(kappa g_i^-1 kappa^-1).
// Throws InputError when a block entry for some kappa in C_{i,j} is missing.
RestrictedSMatrix assemble_restricted_S(const RestrictedInput& input);

// Vacuum rows from the closed form 1/|G_{M^j}| S_{V,M^j} lambda(g_j^-1) dim W_mu.
ComplexMatrix vacuum_rows(const RestrictedInput& input);

// Largest entrywise difference between the assemblies of two inputs that
// differ only in the choice of transversals.
Real transversal_discrepancy(const RestrictedInput& first, const RestrictedInput& second);

// Holomorphic V with abelian G: one twisted module V(g) per element.
struct HolomorphicInput {
  FiniteAbelianGroup group{{1}};
  std::vector<Element> twists;                        // g_i
  std::vector<CharacterTable> characters;             // over C_G(g_i) = G
  std::map<std::pair<std::size_t, std::size_t>, Complex> s;  // S_{V(g_i), V(g_j)}
};

// 1/|G| S_{V(g),V(h)} conj(lambda(h)) mu(g^-1), evaluated through
// assemble_restricted_S.
RestrictedSMatrix holomorphic_assemble(const HolomorphicInput& input);

}  // namespace modorb::restricted
