#pragma once

#include "lwood/root_system.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lwood {

/// The (G, V, dim E) settings of the Littlewood-type varieties Y in
/// Hom(E, V). The *_1 cases are affine cones over highest weight orbits
/// (dim E = 1).
enum class CaseFamily { SpC, SOB, OD, G2, F4_6, F4_3, E6_5, E6_3, E7_6, E8_7, F4_1, E6_1, E8_1 };

struct GroupCase {
  CaseFamily family = CaseFamily::G2;
  int n = 0;  // rank parameter of the classical families

  static GroupCase symplectic(int n) { return {CaseFamily::SpC, n}; }
  static GroupCase odd_orthogonal(int n) { return {CaseFamily::SOB, n}; }
  static GroupCase even_orthogonal(int n) { return {CaseFamily::OD, n}; }
  static GroupCase exceptional(CaseFamily family) { return {family, 0}; }

  int dim_e() const;
  int dim_v() const;
  RootSystemPtr root_system() const;
  /// Highest weight of V.
  Dynkin vector_weight() const;
  bool classical() const { return family == CaseFamily::SpC || family == CaseFamily::SOB || family == CaseFamily::OD; }
  /// Every S_lambda E occurs in K[Y] with a single irreducible V_[lambda].
  bool spherical() const { return family != CaseFamily::F4_6; }
  /// "SpC3", "G2", "E6_3".
  std::string name() const;

  bool operator==(const GroupCase&) const = default;
};

/// Parses the names produced by GroupCase::name ("SpC3", "SOB2", "OD4",
/// "G2", "F4_6", "E8_7", ...).
GroupCase parse_group_case(std::string_view text);

/// All exceptional cases, in declaration order.
std::vector<GroupCase> exceptional_cases();

}  // namespace lwood
