#pragma once

#include "lwood/decomposition.hpp"
#include "lwood/partition.hpp"

namespace lwood {

enum class Form { Alternating, Symmetric };

/// Brute-force Schur decomposition of Lambda^k(Lambda^2 E) (alternating) or
/// Lambda^k(Sym^2 E) (symmetric), dim E = dim_e. Expands the character as a
/// polynomial in dim_e variables and peels off Schur polynomials from the
/// lexicographically highest dominant monomial down.
///
/// Bounds: 1 <= dim_e <= 8, 0 <= k <= 6; otherwise ScaleError. A nonzero
/// remainder raises ConsistencyError.
Decomposition<Partition> plethysm_wedge_power(int k, Form form, int dim_e);

const char* to_string(Form form);

}  // namespace lwood
