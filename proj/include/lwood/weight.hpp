#pragma once

#include "lwood/halfint.hpp"
#include "lwood/root_system.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lwood {

enum class CoordSystem { Epsilon, Fundamental };

/// Weight with exact half-integer coordinates tagged by its coordinate
/// system and root system.
struct Weight {
  CoordSystem system = CoordSystem::Fundamental;
  LieType type = LieType::A;
  int rank = 1;
  std::vector<HalfInt> coords;

  static Weight fundamental(const RootSystem& rs, const Dynkin& labels);
  static Weight epsilon(const RootSystem& rs, std::vector<HalfInt> coords);

  /// Dynkin labels; throws if the coordinates are not a weight.
  Dynkin to_dynkin() const;
  Weight in_system(CoordSystem target) const;

  /// "fundamental:G2" / "epsilon:D4".
  std::string system_tag() const;
  /// "fund:1,0" / "eps:3/2,1/2".
  std::string str() const;

  bool operator==(const Weight&) const = default;
};

/// Parses "fund:1,0" or "eps:3/2,1/2". An unprefixed list is taken as
/// fundamental coordinates.
Weight parse_weight(const RootSystem& rs, std::string_view text);

/// Parses "fundamental:G2" into (system, type, rank).
Weight weight_from_tag(std::string_view tag, std::vector<HalfInt> coords);

}  // namespace lwood
