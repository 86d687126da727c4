#pragma once

#include "lwood/bott.hpp"
#include "lwood/decomposition.hpp"
#include "lwood/partition.hpp"
#include "lwood/root_system.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace lwood {

/// Group-side label of a term:
///   Partition  a Schur functor S_nu V of the defining representation,
///   Dynkin     an irreducible V_mu by its highest weight (empty vector for
///              the trivial module of no group),
///   SpinLabel  a spin module.
using GLabel = std::variant<Partition, Dynkin, SpinLabel>;

/// S_lambda E (x) (group label).
using TermLabel = std::pair<Partition, GLabel>;

/// One graded piece of a complex of free modules: homological index i,
/// twist A(-j), and the equivariant multiplicity space.
struct GradedTerm {
  int i = 0;
  int j = 0;
  Decomposition<TermLabel> content;

  bool operator==(const GradedTerm&) const = default;
};

std::string to_string(const GLabel& label);
std::string to_string(const TermLabel& label);
/// "i=1 j=2: (1,1)x[1,0] + (2)x[0,0]"; an empty term prints "0".
std::string to_string(const GradedTerm& term);

/// Union of the contents of all pieces with homological index i.
Decomposition<TermLabel> content_at(const std::vector<GradedTerm>& terms, int i);

/// Dimension of a labelled term: S_lambda E with dim E = dim_e, the group
/// side through `g_dim`.
struct TermDims {
  int dim_e = 1;
  std::function<BigInt(const GLabel&)> g_dim;

  BigInt operator()(const TermLabel& label) const;
};

/// Dimensions for labels of the given root system; Partition labels are
/// GL(dim_v) Schur functors, spin labels use the spin module dimensions.
TermDims term_dims(int dim_e, RootSystemPtr rs, int dim_v);

}  // namespace lwood
