#pragma once

#include "lwood/decomposition.hpp"
#include "lwood/partition.hpp"

namespace lwood {

/// c^lambda_{mu,nu}: number of LR skew tableaux of shape lambda/mu and
/// content nu (column-strict, rows weakly increasing, reverse reading word
/// a lattice word). Memoized; safe to call concurrently.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// S_{lambda/mu} = sum_nu c^lambda_{mu,nu} S_nu. Empty when mu is not
/// contained in lambda.
Decomposition<Partition> skew_schur_expand(const SkewShape& shape);

/// S_mu (x) S_nu = sum_lambda c^lambda_{mu,nu} S_lambda, keeping only
/// lambda with at most max_length parts (negative: no limit).
Decomposition<Partition> lr_product(const Partition& mu, const Partition& nu, int max_length = -1);

}  // namespace lwood
