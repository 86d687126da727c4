#pragma once

#include "lwood/decomposition.hpp"
#include "lwood/partition.hpp"
#include "lwood/root_system.hpp"

#include <map>
#include <memory>

namespace lwood {

/// Formal character: Dynkin-label weight -> multiplicity. Virtual
/// characters (negative entries) are allowed as intermediate values.
using Character = Decomposition<Dynkin>;

/// Largest irreducible dimension weight_multiplicities will expand.
/// Default 10^6; the environment variable LWOOD_DIM_BOUND overrides it.
BigInt dimension_bound();

/// Multiplicities of the dominant weights of V_lambda (Freudenthal).
/// Memoized per (root system, lambda); safe to call concurrently.
std::shared_ptr<const std::map<Dynkin, BigInt>> dominant_multiplicities(const RootSystem& rs,
                                                                         const Dynkin& lambda);

/// Full weight diagram of V_lambda. Throws ScaleError above the dimension bound.
Character weight_multiplicities(const RootSystem& rs, const Dynkin& lambda);

/// Full character of a nonnegative combination of irreducibles.
Character character_of(const RootSystem& rs, const Decomposition<Dynkin>& reps);

/// Inverse of character_of: peels off the highest weight (largest in
/// simple-root coordinates) until nothing is left. Throws
/// NotACharacterError when a multiplicity goes negative or the input is
/// not Weyl-invariant.
Decomposition<Dynkin> decompose_character(const RootSystem& rs, const Character& chi);

Character multiply(const Character& a, const Character& b);
/// Adams operation: every weight scaled by k.
Character adams(const Character& chi, int k);
/// Sum of multiplicities.
BigInt degree(const Character& chi);

struct SchurLimits {
  int max_size = 8;
  int max_base_dim = 60;
};

/// Character of S_lambda applied to the (possibly virtual) representation
/// with character `base`: Newton's identities give h_k (or e_k), then the
/// Jacobi-Trudi determinant (dual form when l(lambda) > lambda_1).
Character schur_character(const RootSystem& rs, const Character& base, const Partition& lambda,
                          SchurLimits limits = {});

/// V_a (x) V_b by the Brauer-Klimyk rule.
Decomposition<Dynkin> tensor_product(const RootSystem& rs, const Dynkin& a, const Dynkin& b);
Decomposition<Dynkin> tensor_product(const RootSystem& rs, const Decomposition<Dynkin>& a,
                                     const Decomposition<Dynkin>& b);

/// Dimension of a decomposition over dominant weights.
BigInt total_dim(const RootSystem& rs, const Decomposition<Dynkin>& reps);

}  // namespace lwood
