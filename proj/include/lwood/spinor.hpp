#pragma once

#include "lwood/graded_term.hpp"
#include "lwood/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lwood {

/// B: the spinor module of B_n. Dplus / Dminus: the half-spinor modules
/// M_+ / M_- of D_n. Dfull: M_+ (+) M_-.
enum class SpinorFamily { B, Dplus, Dminus, Dfull };

const char* to_string(SpinorFamily family);
SpinorFamily parse_spinor_family(std::string_view text);

/// Self-transpose partitions inside the n x n square.
std::vector<Partition> self_transpose_in_square(int n);

/// Minimal free resolution of the Littlewood spinor module:
/// F_i = sum over self-transpose lambda in (n^n) with
/// i = (|lambda| + rank lambda)/2 of S_lambda E (x) spin module, twisted by
/// A(-|lambda|). One term per (i, j), ordered by i then j. The spin module
/// is Delta for B and Dfull, and for Dplus Delta_+ when rank lambda is even
/// and Delta_- when odd (reversed for Dminus). Requires 1 <= n <= 8.
std::vector<GradedTerm> spinor_complex(SpinorFamily family, int n);

struct SpinorReport {
  bool pass = false;
  std::string case_name;
  BigInt lhs;  // sum_i (-1)^i sum_mu dim S_{lambda/mu} V * dim(spin module)
  BigInt rhs;  // dim V_{lambda+delta} (both constituents for Dfull)
};

/// Dimension-level Euler characteristic of the S_lambda E isotypic
/// component of the spinor resolution. Requires l(lambda) <= n.
SpinorReport verify_spinor_identity(SpinorFamily family, int n, const Partition& lambda);

}  // namespace lwood
