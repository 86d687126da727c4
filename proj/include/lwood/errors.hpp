#pragma once

#include <stdexcept>
#include <string>

namespace lwood {

/// Input outside the desk-scale bounds an operation supports.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Branching requested outside the stable range of Littlewood's rule.
class StableRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (a subtraction loop did not reach zero,
/// a reconstructed multiplicity went negative, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The virtual character handed to a decomposition is not a nonnegative
/// combination of irreducible characters.
class NotACharacterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lwood
