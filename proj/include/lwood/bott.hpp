#pragma once

#include "lwood/partition.hpp"
#include "lwood/root_system.hpp"
#include "lwood/weight.hpp"

#include <optional>
#include <string>

namespace lwood {

/// Either all cohomology vanishes, or it is concentrated in one degree
/// with the given dominant highest weight.
struct BottOutcome {
  bool vanishes = true;
  int degree = 0;
  Dynkin weight;

  static BottOutcome vanishing() { return {}; }
  static BottOutcome cohomology(int degree, Dynkin weight) { return {false, degree, std::move(weight)}; }
  bool operator==(const BottOutcome&) const = default;
};

/// s_i . lambda = s_i(lambda + rho) - rho, i in 1..rank.
Dynkin shifted_reflection(const RootSystem& rs, int i, const Dynkin& lambda);
/// Same, keeping the coordinate system of the input.
Weight shifted_reflection(int i, const Weight& lambda);

/// Bott's algorithm: reflect lambda + rho at the smallest simple index with
/// a negative coordinate until dominant (degree = number of steps), or
/// report vanishing when a coordinate becomes zero.
BottOutcome bott(const RootSystem& rs, const Dynkin& lambda);
BottOutcome bott(const Weight& lambda);

/// lambda + rho lies on a reflection hyperplane. Types A-D test the epsilon
/// coordinates (equal entries, entries equal up to sign, zero entries in
/// B and C); other types test every positive coroot.
bool is_singular(const RootSystem& rs, const Dynkin& lambda);
bool is_singular_epsilon(const RootSystem& rs, const std::vector<HalfInt>& shifted);

enum class SpinLabel { DeltaPlus, DeltaMinus, Delta };
enum class SpinComponent { Plus, Minus };

const char* to_string(SpinLabel label);

struct SpinCohomology {
  bool vanishes = true;
  int degree = 0;
  SpinLabel label = SpinLabel::Delta;
  bool operator==(const SpinCohomology&) const = default;
};

/// Closed form for the spinor-twisted line bundles on the two components
/// of the orthogonal Grassmannian (type D_n): nonzero iff lambda is
/// self-transpose, in degree (|lambda| - rank)/2. On X_+ the module is
/// Delta_+ for even rank and Delta_- for odd rank; swapped on X_-.
/// Requires lambda inside the n x n square.
SpinCohomology spin_cohomology_D(int n, const Partition& lambda, SpinComponent component);

/// Type B_n analogue: nonzero iff lambda is in Q_1, in degree |lambda|/2,
/// with module Delta. Requires l(lambda) <= n.
SpinCohomology spin_cohomology_B(int n, const Partition& lambda);

/// The D_n weight fed to Bott for spin_cohomology_D: on X_+ it is
/// (-lambda_n, ..., -lambda_1) + delta_+, on X_- its image under the
/// outer automorphism, (-lambda_n, ..., -lambda_2, lambda_1) + delta_-.
std::vector<HalfInt> spin_weight_D(int n, const Partition& lambda, SpinComponent component);
/// (-lambda_n + 1/2, ..., -lambda_1 + 1/2) for B_n.
std::vector<HalfInt> spin_weight_B(int n, const Partition& lambda);

/// Which spin module a dominant weight is, if any.
std::optional<SpinLabel> spin_label_of(const RootSystem& rs, const Dynkin& weight);

}  // namespace lwood
