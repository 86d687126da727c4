#include "lwood/spinor.hpp"

#include "lwood/character.hpp"
#include "lwood/errors.hpp"
#include "lwood/littlewood_richardson.hpp"

#include <map>
#include <stdexcept>

namespace lwood {

namespace {

bool is_d(SpinorFamily f) { return f != SpinorFamily::B; }

SpinLabel label_for(SpinorFamily family, int r) {
  if (family == SpinorFamily::B || family == SpinorFamily::Dfull) return SpinLabel::Delta;
  const bool plus = (family == SpinorFamily::Dplus) == (r % 2 == 0);
  return plus ? SpinLabel::DeltaPlus : SpinLabel::DeltaMinus;
}

BigInt spin_dim(SpinorFamily family, int n, SpinLabel label) {
  BigInt full = BigInt(1) << n;
  return is_d(family) && label != SpinLabel::Delta ? full / 2 : full;
}

BigInt skew_dim(const Partition& lambda, const Partition& mu, int dim_v) {
  BigInt d = 0;
  for (const auto& [nu, c] : skew_schur_expand({lambda, mu})) d += c * schur_dimension(nu, dim_v);
  return d;
}

// dim V_{lambda + delta}; for Dfull also the outer-automorphism image.
BigInt target_dim(SpinorFamily family, int n, const Partition& lambda) {
  if (is_d(family) && n == 1) return family == SpinorFamily::Dfull ? 2 : 1;
  auto rs = RootSystem::get(is_d(family) ? LieType::D : LieType::B, n);
  std::vector<HalfInt> eps;
  for (int k = 0; k < n; ++k) eps.push_back(HalfInt(lambda[k]) + HalfInt::from_twice(1));
  const BigInt d = rs->dim(rs->from_epsilon(eps));
  if (d > dimension_bound()) throw ScaleError("dim V_{lambda+delta} exceeds the dimension bound");
  return family == SpinorFamily::Dfull ? 2 * d : d;
}

}  // namespace

const char* to_string(SpinorFamily family) {
  switch (family) {
    case SpinorFamily::B: return "B";
    case SpinorFamily::Dplus: return "Dplus";
    case SpinorFamily::Dminus: return "Dminus";
    case SpinorFamily::Dfull: return "Dfull";
  }
  return "?";
}

SpinorFamily parse_spinor_family(std::string_view text) {
  for (auto f : {SpinorFamily::B, SpinorFamily::Dplus, SpinorFamily::Dminus, SpinorFamily::Dfull})
    if (text == to_string(f)) return f;
  throw std::invalid_argument("spinor family must be B, Dplus, Dminus or Dfull");
}

std::vector<Partition> self_transpose_in_square(int n) {
  std::vector<Partition> out;
  for (int d = 0; d <= n * n; ++d)
    for (const Partition& p : partitions_of(d, n, n))
      if (is_self_conjugate(p)) out.push_back(p);
  return out;
}

std::vector<GradedTerm> spinor_complex(SpinorFamily family, int n) {
  if (n < 1 || n > 8) throw ScaleError("spinor complexes are supported for 1 <= n <= 8");
  std::map<std::pair<int, int>, GradedTerm> cells;
  for (const Partition& p : self_transpose_in_square(n)) {
    const int r = rank(p);
    const int i = (p.size() + r) / 2;
    auto& t = cells[{i, p.size()}];
    t.i = i;
    t.j = p.size();
    t.content.add({p, GLabel{label_for(family, r)}}, 1);
  }
  std::vector<GradedTerm> out;
  for (auto& [key, t] : cells) out.push_back(std::move(t));
  return out;
}

SpinorReport verify_spinor_identity(SpinorFamily family, int n, const Partition& lambda) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (lambda.length() > n) throw std::invalid_argument("l(lambda) exceeds n");
  const int dim_v = is_d(family) ? 2 * n : 2 * n + 1;
  SpinorReport report;
  report.case_name = std::string(to_string(family)) + " n=" + std::to_string(n) + " lambda=" + to_string(lambda);
  for (const Partition& mu : self_transpose_in_square(n)) {
    if (!lambda.contains(mu)) continue;
    const int r = rank(mu);
    const int i = (mu.size() + r) / 2;
    const BigInt term = skew_dim(lambda, mu, dim_v) * spin_dim(family, n, label_for(family, r));
    report.lhs += i % 2 == 0 ? term : BigInt(-term);
  }
  report.rhs = target_dim(family, n, lambda);
  report.pass = report.lhs == report.rhs;
  return report;
}

}  // namespace lwood
