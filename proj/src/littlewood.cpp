#include "lwood/littlewood.hpp"

#include "lwood/character.hpp"
#include "lwood/errors.hpp"
#include "lwood/littlewood_richardson.hpp"
#include "lwood/qsets.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace lwood {

namespace {

void check_length(const GroupCase& c, const Partition& lambda) {
  if (lambda.length() > c.dim_e())
    throw std::invalid_argument("partition " + to_string(lambda) + " has more than dim E = " +
                                std::to_string(c.dim_e()) + " parts for " + c.name());
}

Dynkin classical_bracket(const RootSystem& rs, const Partition& lambda) {
  std::vector<HalfInt> eps(rs.rank(), HalfInt(0));
  for (int k = 0; k < lambda.length(); ++k) eps[k] = HalfInt(lambda[k]);
  return rs.from_epsilon(eps);
}

Dynkin exceptional_bracket(CaseFamily family, const Partition& l) {
  switch (family) {
    case CaseFamily::G2: return {l[0] - l[1], l[1]};
    case CaseFamily::F4_3: return {0, l[2], l[1] - l[2], l[0] - l[1]};
    case CaseFamily::E6_5: return {l[0] - l[1], l[3] - l[4], l[1] - l[2], l[2] - l[3], l[3] + l[4], 0};
    case CaseFamily::E6_3: return {l[0] - l[1], 0, l[1] - l[2], l[2], 0, 0};
    case CaseFamily::E7_6: return {0, l[4] - l[5], l[4] + l[5], l[3] - l[4], l[2] - l[3], l[1] - l[2], l[0] - l[1]};
    case CaseFamily::E8_7:
      return {0, l[5] - l[6], l[5] + l[6], l[4] - l[5], l[3] - l[4], l[2] - l[3], l[1] - l[2], l[0] - l[1]};
    case CaseFamily::F4_1: return {0, 0, 0, l[0]};
    case CaseFamily::E6_1: return {l[0], 0, 0, 0, 0, 0};
    case CaseFamily::E8_1: return {0, 0, 0, 0, 0, 0, 0, l[0]};
    default: throw std::invalid_argument("no bracket map for this case");
  }
}

RootSystemPtr oracle_root_system(IsoGroup g) {
  const int n = g.rank();
  if (g.kind == IsoGroup::Kind::Sp) {
    if (g.m % 2 != 0 || n < 1) throw std::invalid_argument("Sp(m) needs even m >= 2");
    return RootSystem::get(LieType::C, n);
  }
  if (g.m % 2 == 1 && n >= 1) return RootSystem::get(LieType::B, n);
  if (g.m % 2 == 0 && n >= 2) return RootSystem::get(LieType::D, n);
  throw std::invalid_argument("no character oracle for " + g.name());
}

Partition partition_from_epsilon(const std::vector<HalfInt>& eps) {
  std::vector<int> parts;
  for (const auto& h : eps) parts.push_back(std::abs(h.to_int()));
  return Partition(parts);
}

// Decomposes S_lambda(C^m) restricted to the root system of the group, with
// no stable-range assumption. For O(2n) the two constituents of [mu],
// l(mu) = n, are merged.
Decomposition<Partition> oracle_branch(const Partition& lambda, IsoGroup g) {
  if (lambda.empty()) return {{Partition{}, 1}};
  auto rs = oracle_root_system(g);
  std::vector<HalfInt> e1(rs->rank(), HalfInt(0));
  e1[0] = HalfInt(1);
  const Character base = weight_multiplicities(*rs, rs->from_epsilon(e1));
  SchurLimits limits;
  limits.max_base_dim = std::max(limits.max_base_dim, g.m);
  const auto dec = decompose_character(*rs, schur_character(*rs, base, lambda, limits));
  Decomposition<Partition> out;
  const int n = rs->rank();
  for (const auto& [d, mult] : dec) {
    const auto eps = rs->to_epsilon(d);
    if (rs->type() == LieType::D && eps.back() < HalfInt(0)) {
      Dynkin partner = d;
      std::swap(partner[n - 2], partner[n - 1]);
      if (dec.at(partner) != mult) throw ConsistencyError("O(2n) constituents with unequal multiplicity");
      continue;
    }
    out.add(partition_from_epsilon(eps), mult);
  }
  return out;
}

Decomposition<Partition> littlewood_rule(const Partition& lambda, IsoGroup g) {
  Decomposition<Partition> out;
  for (const Partition& mu : subpartitions(lambda)) {
    const int d = lambda.size() - mu.size();
    for (const Partition& beta : partitions_of(d)) {
      const Partition& rows = g.kind == IsoGroup::Kind::Sp ? transpose(beta) : beta;
      if (!std::all_of(rows.parts().begin(), rows.parts().end(), [](int p) { return p % 2 == 0; })) continue;
      out.add(mu, lr_coefficient(lambda, mu, beta));
    }
  }
  return out;
}

}  // namespace

Dynkin bracket_dynkin(const GroupCase& c, const Partition& lambda) {
  check_length(c, lambda);
  if (!c.spherical()) throw std::invalid_argument(c.name() + " is not spherical; use ring_component");
  if (c.classical()) return classical_bracket(*c.root_system(), lambda);
  return exceptional_bracket(c.family, lambda);
}

Weight bracket_weight(const GroupCase& c, const Partition& lambda) {
  return Weight::fundamental(*c.root_system(), bracket_dynkin(c, lambda));
}

Decomposition<Dynkin> ring_component(const GroupCase& c, const Partition& lambda) {
  check_length(c, lambda);
  Decomposition<Dynkin> out;
  if (c.family == CaseFamily::F4_6) {
    for (const auto& [mu, gamma] : oracle_branch(lambda, IsoGroup::sp(6)))
      out.add({(lambda.size() - mu.size()) / 2, mu[2], mu[1] - mu[2], mu[0] - mu[1]}, gamma);
    return out;
  }
  Dynkin d = bracket_dynkin(c, lambda);
  out.add(d, 1);
  if (c.family == CaseFamily::OD && lambda.length() == c.n && lambda[c.n - 1] > 0) {
    std::swap(d[c.n - 2], d[c.n - 1]);
    out.add(d, 1);
  }
  return out;
}

const char* to_string(ClassicalFamily family) {
  switch (family) {
    case ClassicalFamily::B: return "B";
    case ClassicalFamily::C: return "C";
    case ClassicalFamily::D: return "D";
  }
  return "?";
}

ClassicalFamily parse_classical_family(std::string_view text) {
  if (text == "B") return ClassicalFamily::B;
  if (text == "C") return ClassicalFamily::C;
  if (text == "D") return ClassicalFamily::D;
  throw std::invalid_argument("family must be B, C or D");
}

std::vector<GradedTerm> littlewood_complex(ClassicalFamily family, const Partition& lambda) {
  const QVariant q = family == ClassicalFamily::C ? QVariant::Minus : QVariant::Plus;
  std::vector<GradedTerm> out;
  for (int i = 0; 2 * i <= lambda.size(); ++i) {
    GradedTerm t{i, 2 * i, {}};
    for (const Partition& mu : enumerate_q(q, 2 * i)) {
      if (!lambda.contains(mu)) continue;
      for (const auto& [nu, c] : skew_schur_expand({lambda, mu})) t.content.add({lambda, GLabel{nu}}, c);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string IsoGroup::name() const {
  return std::string(kind == Kind::Sp ? "Sp(" : "O(") + std::to_string(m) + ")";
}

IsoGroup iso_group(ClassicalFamily family, int n) {
  switch (family) {
    case ClassicalFamily::B: return IsoGroup::o(2 * n + 1);
    case ClassicalFamily::C: return IsoGroup::sp(2 * n);
    case ClassicalFamily::D: return IsoGroup::o(2 * n);
  }
  throw std::invalid_argument("bad family");
}

IsoGroup parse_iso_group(std::string_view text) {
  IsoGroup g;
  std::string_view rest;
  if (text.substr(0, 3) == "Sp(") {
    g.kind = IsoGroup::Kind::Sp;
    rest = text.substr(3);
  } else if (text.substr(0, 2) == "O(") {
    g.kind = IsoGroup::Kind::O;
    rest = text.substr(2);
  } else {
    throw std::invalid_argument("group must be Sp(m) or O(m)");
  }
  if (rest.empty() || rest.back() != ')') throw std::invalid_argument("group must be Sp(m) or O(m)");
  const std::string digits(rest.substr(0, rest.size() - 1));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("group must be Sp(m) or O(m)");
  g.m = std::stoi(digits);
  if (g.m < 1 || (g.kind == IsoGroup::Kind::Sp && g.m % 2 != 0))
    throw std::invalid_argument("invalid group " + std::string(text));
  return g;
}

Decomposition<Partition> branch_gl_to_iso(const Partition& lambda, IsoGroup target, BranchMethod method) {
  if (lambda.length() > target.rank())
    throw StableRangeError("restriction of S" + to_string(lambda) + " to " + target.name() +
                           " is outside the stable range l(lambda) <= " + std::to_string(target.rank()));
  return method == BranchMethod::Oracle ? oracle_branch(lambda, target) : littlewood_rule(lambda, target);
}

BigInt iso_dimension(const Partition& mu, IsoGroup g) {
  const int n = g.rank();
  if (mu.length() > n) throw std::invalid_argument(to_string(mu) + " is not a label of " + g.name());
  if (mu.empty()) return 1;
  if (g.kind == IsoGroup::Kind::O && g.m == 2) return 2;
  auto rs = oracle_root_system(g);
  std::vector<HalfInt> eps(n, HalfInt(0));
  for (int k = 0; k < mu.length(); ++k) eps[k] = HalfInt(mu[k]);
  BigInt d = rs->dim(rs->from_epsilon(eps));
  if (rs->type() == LieType::D && mu.length() == n) d *= 2;
  return d;
}

LittlewoodReport verify_littlewood_identity(ClassicalFamily family, const Partition& lambda, int n,
                                            BranchMethod method) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const IsoGroup g = iso_group(family, n);
  if (lambda.length() > n)
    throw StableRangeError("l(" + to_string(lambda) + ") exceeds n = " + std::to_string(n));
  LittlewoodReport report;
  report.case_name = std::string(to_string(family)) + " n=" + std::to_string(n) + " lambda=" + to_string(lambda);
  std::map<Partition, Decomposition<Partition>> cache;
  for (const GradedTerm& t : littlewood_complex(family, lambda)) {
    const BigInt sign = t.i % 2 == 0 ? 1 : -1;
    for (const auto& [label, mult] : t.content) {
      const Partition& nu = std::get<Partition>(label.second);
      auto it = cache.find(nu);
      if (it == cache.end()) it = cache.emplace(nu, branch_gl_to_iso(nu, g, method)).first;
      report.lhs += it->second * (sign * mult);
    }
  }
  report.rhs.add(lambda, 1);
  report.pass = report.lhs == report.rhs;
  return report;
}

}  // namespace lwood
