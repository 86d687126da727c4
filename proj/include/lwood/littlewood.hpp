#pragma once

#include "lwood/decomposition.hpp"
#include "lwood/graded_term.hpp"
#include "lwood/group_case.hpp"
#include "lwood/partition.hpp"
#include "lwood/weight.hpp"

#include <string>
#include <vector>

namespace lwood {

/// [lambda] for a spherical case, as a dominant weight of G. Classical
/// cases read lambda as epsilon coordinates (for OD with l(lambda) = n this
/// is the "+" constituent of the O(2n) module). Requires
/// l(lambda) <= dim E; F4_6 is not spherical and is rejected.
Weight bracket_weight(const GroupCase& c, const Partition& lambda);
Dynkin bracket_dynkin(const GroupCase& c, const Partition& lambda);

/// The G-module paired with S_lambda E in K[Y]: V_[lambda] for spherical
/// cases (both constituents for OD with l(lambda) = n), and for F4_6 the
/// sum over mu of gamma_{lambda,mu} copies of
/// V_((|lambda|-|mu|)/2, mu_3, mu_2-mu_3, mu_1-mu_2), with gamma the
/// GL(6) -> Sp(6) branching computed by the character oracle.
Decomposition<Dynkin> ring_component(const GroupCase& c, const Partition& lambda);

enum class ClassicalFamily { B, C, D };

const char* to_string(ClassicalFamily family);
ClassicalFamily parse_classical_family(std::string_view text);

/// Littlewood complex C(lambda): C_i = sum over mu |- 2i in Q_{-1} (type C)
/// or Q_1 (types B, D) of S_{lambda/mu} V, one term per i = 0..|lambda|/2
/// with internal degree 2i. Labels are (lambda, S_nu V).
std::vector<GradedTerm> littlewood_complex(ClassicalFamily family, const Partition& lambda);

/// Sp(m) (m even) or O(m).
struct IsoGroup {
  enum class Kind { Sp, O };
  Kind kind = Kind::Sp;
  int m = 2;

  static IsoGroup sp(int m) { return {Kind::Sp, m}; }
  static IsoGroup o(int m) { return {Kind::O, m}; }
  int rank() const { return m / 2; }
  std::string name() const;
};

/// The isometry group of V for a family of rank n.
IsoGroup iso_group(ClassicalFamily family, int n);
IsoGroup parse_iso_group(std::string_view text);

enum class BranchMethod { Littlewood, Oracle };

/// Restriction of S_lambda(C^m) to Sp(m) / O(m), as multiplicities of the
/// irreducibles [mu]. Littlewood's rule: mult(mu) = sum over beta of
/// c^lambda_{mu,beta}, beta with even columns (Sp) or even rows (O).
/// The oracle expands the character of S_lambda V on the root system and
/// decomposes it (for O(2n), [mu] with l(mu) = n is the pair V_mu + V_sigma(mu)).
/// Throws StableRangeError unless l(lambda) <= m/2.
Decomposition<Partition> branch_gl_to_iso(const Partition& lambda, IsoGroup target,
                                          BranchMethod method = BranchMethod::Littlewood);

/// Dimension of the irreducible [mu] of Sp(m) / O(m).
BigInt iso_dimension(const Partition& mu, IsoGroup target);

struct LittlewoodReport {
  bool pass = false;
  std::string case_name;
  Decomposition<Partition> lhs;  // sum_i (-1)^i restriction of C(lambda)_i
  Decomposition<Partition> rhs;  // {lambda: 1}
};

/// Euler characteristic of C(lambda) restricted to the isometry group of
/// V (dim V = 2n+1, 2n, 2n for B, C, D) against [lambda]. Throws
/// StableRangeError unless l(lambda) <= n.
LittlewoodReport verify_littlewood_identity(ClassicalFamily family, const Partition& lambda, int n,
                                            BranchMethod method = BranchMethod::Littlewood);

}  // namespace lwood
