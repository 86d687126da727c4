#include "lwood/group_case.hpp"

#include <array>
#include <stdexcept>

namespace lwood {

namespace {

struct CaseInfo {
  CaseFamily family;
  const char* name;
  LieType type;
  int rank;
  int dim_e;
  int dim_v;
  int vector_node;
};

constexpr std::array<CaseInfo, 10> kExceptional{{
    {CaseFamily::G2, "G2", LieType::G, 2, 2, 7, 1},
    {CaseFamily::F4_6, "F4_6", LieType::F, 4, 6, 26, 4},
    {CaseFamily::F4_3, "F4_3", LieType::F, 4, 3, 26, 4},
    {CaseFamily::E6_5, "E6_5", LieType::E, 6, 5, 27, 1},
    {CaseFamily::E6_3, "E6_3", LieType::E, 6, 3, 27, 1},
    {CaseFamily::E7_6, "E7_6", LieType::E, 7, 6, 56, 7},
    {CaseFamily::E8_7, "E8_7", LieType::E, 8, 7, 248, 8},
    {CaseFamily::F4_1, "F4_1", LieType::F, 4, 1, 26, 4},
    {CaseFamily::E6_1, "E6_1", LieType::E, 6, 1, 27, 1},
    {CaseFamily::E8_1, "E8_1", LieType::E, 8, 1, 248, 8},
}};

const CaseInfo& info(CaseFamily family) {
  for (const auto& c : kExceptional)
    if (c.family == family) return c;
  throw std::invalid_argument("not an exceptional case");
}

void check_n(const GroupCase& c) {
  const int lo = c.family == CaseFamily::OD ? 2 : 1;
  if (c.n < lo || c.n > 8) throw std::invalid_argument("rank parameter out of range for " + c.name());
}

}  // namespace

int GroupCase::dim_e() const { return classical() ? n : info(family).dim_e; }

int GroupCase::dim_v() const {
  switch (family) {
    case CaseFamily::SpC:
    case CaseFamily::OD: return 2 * n;
    case CaseFamily::SOB: return 2 * n + 1;
    default: return info(family).dim_v;
  }
}

RootSystemPtr GroupCase::root_system() const {
  switch (family) {
    case CaseFamily::SpC: check_n(*this); return RootSystem::get(LieType::C, n);
    case CaseFamily::SOB: check_n(*this); return RootSystem::get(LieType::B, n);
    case CaseFamily::OD: check_n(*this); return RootSystem::get(LieType::D, n);
    default: {
      const auto& c = info(family);
      return RootSystem::get(c.type, c.rank);
    }
  }
}

Dynkin GroupCase::vector_weight() const {
  auto rs = root_system();
  if (!classical()) return rs->fundamental(info(family).vector_node);
  // First epsilon coordinate; differs from omega_1 only for D2.
  std::vector<HalfInt> e1(rs->rank(), HalfInt(0));
  e1[0] = HalfInt(1);
  return rs->from_epsilon(e1);
}

std::string GroupCase::name() const {
  switch (family) {
    case CaseFamily::SpC: return "SpC" + std::to_string(n);
    case CaseFamily::SOB: return "SOB" + std::to_string(n);
    case CaseFamily::OD: return "OD" + std::to_string(n);
    default: return info(family).name;
  }
}

GroupCase parse_group_case(std::string_view text) {
  for (const auto& c : kExceptional)
    if (text == c.name) return GroupCase::exceptional(c.family);
  for (auto [prefix, family] : {std::pair{"SpC", CaseFamily::SpC}, std::pair{"SOB", CaseFamily::SOB},
                                std::pair{"OD", CaseFamily::OD}}) {
    std::string_view p(prefix);
    if (text.substr(0, p.size()) != p) continue;
    std::string rest(text.substr(p.size()));
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) break;
    GroupCase g{family, std::stoi(rest)};
    check_n(g);
    return g;
  }
  throw std::invalid_argument("unknown group case: " + std::string(text));
}

std::vector<GroupCase> exceptional_cases() {
  std::vector<GroupCase> out;
  for (const auto& c : kExceptional) out.push_back(GroupCase::exceptional(c.family));
  return out;
}

}  // namespace lwood
