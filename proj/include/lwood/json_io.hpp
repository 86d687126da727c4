#pragma once

#include "lwood/bott.hpp"
#include "lwood/graded_term.hpp"
#include "lwood/littlewood.hpp"
#include "lwood/resolutions.hpp"
#include "lwood/spinor.hpp"

#include <json.hpp>

namespace lwood {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& value);
Json to_json(const Partition& p);
Json to_json(const Dynkin& d);
Json to_json(const GLabel& label);
Json to_json(const Decomposition<Partition>& d);
Json to_json(const Decomposition<Dynkin>& d);
Json to_json(const GradedTerm& term);
Json to_json(const std::vector<GradedTerm>& terms);
/// {"ambient":14,"entries":{"1,2":10,...}}
Json to_json(const BettiTable& b);
Json to_json(const HilbertData& h);
/// {"vanishes":true} or {"degree":k,"weight":"fund:..."}
Json to_json(const BottOutcome& o, const RootSystem& rs);
Json to_json(const LittlewoodReport& r);
Json to_json(const SpinorReport& r);
Json to_json(const AuditReport& r);

BettiTable betti_from_json(const Json& j);

}  // namespace lwood
