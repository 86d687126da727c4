#include "lwood/qsets.hpp"

#include <stdexcept>

namespace lwood {

namespace {

bool in_q_minus(const Partition& lambda) {
  if (lambda.empty()) return true;
  if (lambda.length() != lambda[0] + 1) return false;
  std::vector<int> rest;
  for (int i = 1; i < lambda.length(); ++i) rest.push_back(lambda[i] - 1);
  return in_q_minus(Partition(std::move(rest)));
}

}  // namespace

bool in_q(const Partition& lambda, QVariant variant) {
  return variant == QVariant::Minus ? in_q_minus(lambda) : in_q_minus(transpose(lambda));
}

std::vector<Partition> enumerate_q(QVariant variant, int d) {
  if (d < 0 || d % 2 != 0) throw std::invalid_argument("Q-sets contain only even sizes");
  std::vector<Partition> out;
  for (Partition& p : partitions_of(d))
    if (in_q(p, variant)) out.push_back(std::move(p));
  return out;
}

const char* to_string(QVariant variant) { return variant == QVariant::Minus ? "minus" : "plus"; }

}  // namespace lwood
