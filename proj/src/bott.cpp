#include "lwood/bott.hpp"

#include "lwood/qsets.hpp"

#include <stdexcept>

namespace lwood {

Dynkin shifted_reflection(const RootSystem& rs, int i, const Dynkin& lambda) {
  if (i < 1 || i > rs.rank()) throw std::out_of_range("simple reflection index out of range");
  rs.check_weight(lambda);
  return rs.shifted_reflect(i, lambda);
}

Weight shifted_reflection(int i, const Weight& lambda) {
  auto rs = RootSystem::get(lambda.type, lambda.rank);
  Weight out = Weight::fundamental(*rs, shifted_reflection(*rs, i, lambda.to_dynkin()));
  return out.in_system(lambda.system);
}

BottOutcome bott(const RootSystem& rs, const Dynkin& lambda) {
  rs.check_weight(lambda);
  auto r = rs.dot_dominant(lambda);
  if (!r) return BottOutcome::vanishing();
  if (r->length > static_cast<int>(rs.num_positive_roots()))
    throw std::logic_error("Bott's algorithm exceeded the number of positive roots");
  return BottOutcome::cohomology(r->length, r->weight);
}

BottOutcome bott(const Weight& lambda) {
  return bott(*RootSystem::get(lambda.type, lambda.rank), lambda.to_dynkin());
}

bool is_singular_epsilon(const RootSystem& rs, const std::vector<HalfInt>& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == HalfInt(0) && (rs.type() == LieType::B || rs.type() == LieType::C)) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[i] == x[j]) return true;
      if (rs.type() != LieType::A && x[i] == -x[j]) return true;
    }
  }
  return false;
}

bool is_singular(const RootSystem& rs, const Dynkin& lambda) {
  rs.check_weight(lambda);
  if (!rs.has_epsilon()) return rs.is_singular(lambda);
  Dynkin shifted = lambda;
  for (int& v : shifted) ++v;
  return is_singular_epsilon(rs, rs.to_epsilon(shifted));
}

const char* to_string(SpinLabel label) {
  switch (label) {
    case SpinLabel::DeltaPlus: return "Delta+";
    case SpinLabel::DeltaMinus: return "Delta-";
    case SpinLabel::Delta: return "Delta";
  }
  return "?";
}

namespace {

void check_square(int n, const Partition& lambda) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (lambda.length() > n || lambda[0] > n)
    throw std::invalid_argument("partition " + to_string(lambda) + " does not fit in the " + std::to_string(n) +
                                "x" + std::to_string(n) + " square");
}

}  // namespace

SpinCohomology spin_cohomology_D(int n, const Partition& lambda, SpinComponent component) {
  check_square(n, lambda);
  if (!is_self_conjugate(lambda)) return {};
  const int r = rank(lambda);
  const bool even = r % 2 == 0;
  const bool plus = (component == SpinComponent::Plus) == even;
  return {false, (lambda.size() - r) / 2, plus ? SpinLabel::DeltaPlus : SpinLabel::DeltaMinus};
}

SpinCohomology spin_cohomology_B(int n, const Partition& lambda) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument("partition " + to_string(lambda) + " has more than " + std::to_string(n) + " parts");
  if (!in_q(lambda, QVariant::Plus)) return {};
  return {false, lambda.size() / 2, SpinLabel::Delta};
}

std::vector<HalfInt> spin_weight_D(int n, const Partition& lambda, SpinComponent component) {
  check_square(n, lambda);
  std::vector<HalfInt> x(n);
  for (int i = 0; i < n; ++i) x[i] = HalfInt::from_twice(1 - 2 * lambda[n - 1 - i]);
  if (component == SpinComponent::Minus) x[n - 1] = -x[n - 1];
  return x;
}

std::vector<HalfInt> spin_weight_B(int n, const Partition& lambda) {
  if (lambda.length() > n) throw std::invalid_argument("partition has more than n parts");
  std::vector<HalfInt> x(n);
  for (int i = 0; i < n; ++i) x[i] = HalfInt::from_twice(1 - 2 * lambda[n - 1 - i]);
  return x;
}

std::optional<SpinLabel> spin_label_of(const RootSystem& rs, const Dynkin& weight) {
  const int n = rs.rank();
  if (rs.type() == LieType::B && weight == rs.fundamental(n)) return SpinLabel::Delta;
  if (rs.type() == LieType::D) {
    if (weight == rs.fundamental(n)) return SpinLabel::DeltaPlus;
    if (weight == rs.fundamental(n - 1)) return SpinLabel::DeltaMinus;
  }
  return std::nullopt;
}

}  // namespace lwood
