#pragma once

#include "lwood/bigint.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lwood {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// i-th part (0-based); zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// True when mu_i <= lambda_i for all i.
  bool contains(const Partition& mu) const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Skew shape outer/inner. `valid()` is false when inner is not contained in
/// outer; such a shape has no boxes and expands to nothing.
struct SkewShape {
  Partition outer;
  Partition inner;

  bool valid() const { return outer.contains(inner); }
  int size() const { return valid() ? outer.size() - inner.size() : 0; }
};

Partition transpose(const Partition& lambda);

/// Length of the main diagonal: max{i : lambda_i >= i}.
int rank(const Partition& lambda);

inline bool is_self_conjugate(const Partition& lambda) { return transpose(lambda) == lambda; }

/// All partitions of n with at most max_length parts and parts at most
/// max_part, in increasing lexicographic order of the part vectors.
std::vector<Partition> partitions_of(int n, int max_length = -1, int max_part = -1);

/// Partitions contained in the given one (including the empty partition).
std::vector<Partition> subpartitions(const Partition& lambda);

/// Sum of two partitions, part by part.
Partition operator+(const Partition& a, const Partition& b);

/// Dimension of S_lambda(C^m) via the hook-content formula.
BigInt schur_dimension(const Partition& lambda, int m);

/// Number of semistandard tableaux of shape lambda and content mu
/// (mu any composition; zeros allowed).
BigInt kostka(const Partition& lambda, const std::vector<int>& content);

/// "(2,1,1)"; the empty partition renders as "()".
std::string to_string(const Partition& lambda);

/// Parses "2,1,1" (also tolerates surrounding brackets/parentheses and
/// blanks). The empty string gives the empty partition.
Partition parse_partition(std::string_view text);

}  // namespace lwood
