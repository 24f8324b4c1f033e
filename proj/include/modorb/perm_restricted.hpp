#pragma once

#include <cstddef>
#include <vector>

#include "modorb/modular_datum.hpp"
#include "modorb/restricted_smatrix.hpp"

namespace modorb::perm {

// Orbit, stabilizer, character and block data for G = Z_k acting on V^{tensor k},
// in the form consumed by restricted::assemble_restricted_S.
struct PermutationRestrictedData {
  restricted::RestrictedInput input;
  // Row x of the restricted matrix corresponds to row orbifold_index[x] of
  // assemble_orbifold_S.
  std::vector<std::size_t> orbifold_index;
};

// Orbits: one per constant tuple (stabilizer Z_k, twist 1), one per
// non-constant tuple orbit (trivial stabilizer), one per g^r-twisted module
// (stabilizer Z_k, twist g^r). With alternate_transversals the singleton
// transversals use g instead of 1 wherever both are valid.
PermutationRestrictedData permutation_restricted_input(const ModularDatum& v, int k,
                                                       bool alternate_transversals = false);

}  // namespace modorb::perm
