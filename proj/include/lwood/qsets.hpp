#pragma once

#include "lwood/partition.hpp"

#include <vector>

namespace lwood {

enum class QVariant { Minus, Plus };

/// Q_{-1}: empty, or l(lambda) = lambda_1 + 1 with the partition left after
/// deleting the first row and column again in Q_{-1}. Q_1 = transposes.
bool in_q(const Partition& lambda, QVariant variant);

/// Members of the Q-set of size d, in increasing lexicographic order.
/// Throws std::invalid_argument for odd d.
std::vector<Partition> enumerate_q(QVariant variant, int d);

const char* to_string(QVariant variant);

}  // namespace lwood
