#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "modorb/modular_datum.hpp"
#include "modorb/phase.hpp"
#include "modorb/rational.hpp"
#include "modorb/scalar.hpp"
#include "modorb/validation.hpp"

// Modular data of the cyclic permutation orbifold (V^{tensor k})^{Z_k}, k prime,
// where Z_k is generated by the k-cycle (1 2 ... k).
namespace modorb::perm {

// M^{i_1} x ... x M^{i_k} for a non-constant tuple, stored as the
// lexicographically minimal rotation of its Z_k orbit.
struct OffDiagonal {
  std::vector<int> tuple;
  bool operator==(const OffDiagonal&) const = default;
};

// Eigenspace of g on (M^i)^{tensor k} where g acts as exp(-2 pi i a / k).
struct Diagonal {
  int i = 0;
  int a = 0;
  bool operator==(const Diagonal&) const = default;
};

// Eigenspace of g on the g^r-twisted module built from M^i, g acting as
// exp(-2 pi i a / k).
struct Twisted {
  int r = 1;
  int i = 0;
  int a = 0;
  bool operator==(const Twisted&) const = default;
};

using OrbifoldModuleLabel = std::variant<OffDiagonal, Diagonal, Twisted>;

// "offdiag", "diag" or "twisted".
std::string label_kind(const OrbifoldModuleLabel& label);

// Human-readable label built from the module labels of V.
std::string describe(const OrbifoldModuleLabel& label, const ModularDatum& v);

// Sign of the eigenvalue-residue rule for twisted components: the lowest
// graded degree of Twisted(r, i, a) is m0/k with m0 = (-+ a r) mod k.
enum class ResidueConvention { kMinus, kPlus };

std::string to_string(ResidueConvention c);
ResidueConvention parse_convention(const std::string& text);

struct OrbifoldModule {
  OrbifoldModuleLabel label;
  Rational weight_mod1;
};

// Lexicographically minimal rotation.
std::vector<int> canonical_rotation(const std::vector<int>& tuple);

// ((p+1)^k - (p+1))/k + (p+1) k + (p+1) k (k-1) with p+1 = rank.
std::size_t orbifold_module_count(std::size_t rank, int k);

// Ordering: Diagonal(0,0); remaining Diagonal by (i,a); OffDiagonal by tuple;
// Twisted by (r,i,a). Throws InputError unless k is prime.
std::vector<OrbifoldModule> enumerate_orbifold_modules(
    const ModularDatum& v, int k, ResidueConvention convention = ResidueConvention::kMinus);

// B^{r,s}: entry (j, i) is the S-matrix entry between the g^r-twisted module
// of M^j and the g^s-twisted module of M^i.
ComplexMatrix twisted_block_S(const ModularDatum& v, int k, int r, int s);

// S-matrix of the orbifold over enumerate_orbifold_modules order.
ComplexMatrix assemble_orbifold_S(const ModularDatum& v, int k);

// T-matrix of the orbifold; the central charge is k c.
std::vector<Phase> orbifold_T(const ModularDatum& v, int k,
                              ResidueConvention convention = ResidueConvention::kMinus);

struct OrbifoldDatum {
  ModularDatum datum;  // module weights are weights mod 1
  std::vector<OrbifoldModuleLabel> labels;
  int k = 2;
  std::size_t source_rank = 0;
  ResidueConvention convention = ResidueConvention::kMinus;
  ValidationReport report;
};

OrbifoldDatum build_orbifold_datum(const ModularDatum& v, int k,
                                   ResidueConvention convention = ResidueConvention::kMinus,
                                   const Tolerances& tol = {});

// Builds with the default convention; if that fails validation, retries with
// the flipped one and returns whichever passes (or the default if neither).
OrbifoldDatum build_orbifold_datum_auto(const ModularDatum& v, int k, const Tolerances& tol = {});

}  // namespace modorb::perm
