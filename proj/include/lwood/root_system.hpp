#pragma once

#include "lwood/bigint.hpp"
#include "lwood/halfint.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lwood {

enum class LieType { A, B, C, D, E, F, G };

/// Weight in fundamental-weight coordinates (Dynkin labels).
using Dynkin = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

char type_letter(LieType type);
LieType parse_lie_type(char letter);

/// Result of moving a weight into the dominant chamber by the dot action.
struct DotResult {
  int length;     // number of simple reflections used
  Dynkin weight;  // w . lambda, dominant
};

/// Finite root system of a simple type in Bourbaki numbering. Immutable;
/// obtain instances through `get`, which caches one per (type, rank).
///
/// Weights are Dynkin labels throughout. For types A-D an epsilon
/// coordinate system is also available:
///   A_n  a_i = x_i - x_{i+1}                     (n+1 coordinates)
///   B_n  a_i = x_i - x_{i+1}, a_n = 2 x_n
///   C_n  a_i = x_i - x_{i+1}, a_n = x_n
///   D_n  a_i = x_i - x_{i+1} (i < n), a_n = x_{n-1} + x_n
class RootSystem {
 public:
  /// Supported: A_n (n>=1), B_n (n>=1), C_n (n>=1), D_n (n>=2), E_6..8,
  /// F_4, G_2; all with rank <= 8. Throws std::invalid_argument otherwise.
  static std::shared_ptr<const RootSystem> get(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// a_ij = <alpha_i, alpha_j^vee>; row i is alpha_i in Dynkin labels.
  const IntMatrix& cartan() const { return cartan_; }
  /// Squared lengths of the simple roots, shortest = 2.
  const std::vector<int>& root_lengths() const { return lengths_; }

  /// Positive roots in simple-root coordinates, ordered by height.
  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
  /// The same roots as Dynkin labels.
  const std::vector<Dynkin>& positive_roots_dynkin() const { return roots_dynkin_; }
  /// Coroots alpha^vee in simple-coroot coordinates.
  const std::vector<std::vector<int>>& positive_coroots() const { return coroots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }

  Dynkin rho() const { return Dynkin(rank_, 1); }
  Dynkin zero() const { return Dynkin(rank_, 0); }
  Dynkin fundamental(int i) const;  // 1-based

  /// <lambda, alpha^vee> for the k-th positive root.
  int coroot_pairing(const Dynkin& lambda, std::size_t k) const;
  /// Scaled invariant form; only ratios are meaningful.
  long long inner(const Dynkin& a, const Dynkin& b) const;

  bool is_dominant(const Dynkin& lambda) const;
  void check_weight(const Dynkin& lambda) const;

  /// Simple reflection s_i (1-based), linear action.
  Dynkin reflect(int i, const Dynkin& lambda) const;
  /// s_i . lambda = s_i(lambda + rho) - rho.
  Dynkin shifted_reflect(int i, const Dynkin& lambda) const;
  /// Dominant conjugate under the linear action.
  Dynkin dominant_conjugate(const Dynkin& lambda) const;
  /// Reflects lambda + rho at the smallest negative simple coordinate until
  /// it is dominant; nullopt when lambda + rho is singular.
  std::optional<DotResult> dot_dominant(const Dynkin& lambda) const;
  /// lambda + rho lies on a reflection hyperplane (tested on all roots).
  bool is_singular(const Dynkin& lambda) const;

  /// Simple-root coordinates of a weight scaled by det(cartan) so they are
  /// integers. Lexicographic order on these refines the dominance order.
  std::vector<long long> root_coordinates_scaled(const Dynkin& lambda) const;
  long long cartan_determinant() const { return det_; }

  /// Weyl dimension formula.
  BigInt dim(const Dynkin& lambda) const;

  /// Orbit of a weight under the Weyl group.
  std::vector<Dynkin> orbit(const Dynkin& lambda) const;

  bool has_epsilon() const { return type_ <= LieType::D; }
  int epsilon_dim() const { return type_ == LieType::A ? rank_ + 1 : rank_; }
  /// Throws std::invalid_argument when the coordinates are not a weight.
  Dynkin from_epsilon(const std::vector<HalfInt>& x) const;
  /// For type A the last coordinate is normalized to 0.
  std::vector<HalfInt> to_epsilon(const Dynkin& lambda) const;

  RootSystem(LieType type, int rank);

 private:
  LieType type_;
  int rank_;
  IntMatrix cartan_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> roots_;
  std::vector<Dynkin> roots_dynkin_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::vector<long long>> gram_;          // scaled (omega_i, omega_j)
  std::vector<std::vector<long long>> inverse_scaled_;  // det * (A^T)^{-1}
  long long det_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace lwood
