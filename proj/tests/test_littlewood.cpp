#include <doctest.h>

#include "lwood/character.hpp"
#include "lwood/errors.hpp"
#include "lwood/littlewood.hpp"
#include "lwood/spinor.hpp"

#include <map>

using namespace lwood;

namespace {

Decomposition<TermLabel> content_of(const std::vector<GradedTerm>& terms, int i) { return content_at(terms, i); }

Decomposition<TermLabel> schur_terms(const Partition& e, std::initializer_list<Partition> nus) {
  Decomposition<TermLabel> d;
  for (const auto& nu : nus) d.add({e, GLabel{nu}}, 1);
  return d;
}

}  // namespace

TEST_CASE("littlewood complexes of small partitions") {
  auto c11 = littlewood_complex(ClassicalFamily::C, {1, 1});
  REQUIRE(c11.size() == 2);
  CHECK(c11[0].content == schur_terms({1, 1}, {{1, 1}}));
  CHECK(c11[1].content == schur_terms({1, 1}, {{}}));
  CHECK(c11[1].j == 2);

  auto c22 = littlewood_complex(ClassicalFamily::C, {2, 2});
  REQUIRE(c22.size() == 3);
  CHECK(c22[0].content == schur_terms({2, 2}, {{2, 2}}));
  CHECK(c22[1].content == schur_terms({2, 2}, {{1, 1}}));
  CHECK(c22[2].content.empty());

  auto b2 = littlewood_complex(ClassicalFamily::B, {2});
  REQUIRE(b2.size() == 2);
  CHECK(b2[1].content == schur_terms({2}, {{}}));
}

TEST_CASE("C(lambda)_0 is S_lambda and the complex stops at |lambda|/2") {
  for (int d = 0; d <= 7; ++d)
    for (const auto& lambda : partitions_of(d))
      for (auto f : {ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D}) {
        auto terms = littlewood_complex(f, lambda);
        CHECK(terms.size() == static_cast<std::size_t>(d / 2 + 1));
        CHECK(terms[0].content == schur_terms(lambda, {lambda}));
      }
}

TEST_CASE("branching examples") {
  CHECK(branch_gl_to_iso({1}, IsoGroup::sp(6)) == Decomposition<Partition>{{Partition{1}, 1}});
  Decomposition<Partition> expect11{{Partition{1, 1}, 1}, {Partition{}, 1}};
  CHECK(branch_gl_to_iso({1, 1}, IsoGroup::sp(4)) == expect11);
  CHECK(branch_gl_to_iso({1, 1}, IsoGroup::sp(4), BranchMethod::Oracle) == expect11);
  Decomposition<Partition> expect2{{Partition{2}, 1}, {Partition{}, 1}};
  CHECK(branch_gl_to_iso({2}, IsoGroup::o(5)) == expect2);
  CHECK(branch_gl_to_iso({2}, IsoGroup::o(5), BranchMethod::Oracle) == expect2);
  CHECK_THROWS_AS(branch_gl_to_iso({1, 1, 1}, IsoGroup::sp(4)), StableRangeError);
  CHECK_THROWS_AS(branch_gl_to_iso({1, 1, 1}, IsoGroup::o(5)), StableRangeError);
}

TEST_CASE("Littlewood's rule agrees with the character oracle in the stable range") {
  std::vector<IsoGroup> groups{IsoGroup::sp(2), IsoGroup::sp(4), IsoGroup::sp(6), IsoGroup::o(3),
                               IsoGroup::o(5),  IsoGroup::o(7),  IsoGroup::o(4),  IsoGroup::o(6)};
  for (const auto& g : groups)
    for (int d = 0; d <= 5; ++d)
      for (const auto& lambda : partitions_of(d, g.rank())) {
        CAPTURE(g.name());
        CAPTURE(to_string(lambda));
        auto rule = branch_gl_to_iso(lambda, g);
        CHECK(rule.is_nonnegative());
        CHECK(rule == branch_gl_to_iso(lambda, g, BranchMethod::Oracle));
        CHECK(rule.total([&](const Partition& mu) { return iso_dimension(mu, g); }) ==
              schur_dimension(lambda, g.m));
      }
}

TEST_CASE("Euler characteristic identity for the Littlewood complexes") {
  CHECK(verify_littlewood_identity(ClassicalFamily::C, {2, 2}, 2).pass);
  CHECK(verify_littlewood_identity(ClassicalFamily::C, {1}, 1).pass);
  CHECK(verify_littlewood_identity(ClassicalFamily::B, {2}, 2).pass);
  CHECK(verify_littlewood_identity(ClassicalFamily::C, {2, 2}, 2, BranchMethod::Oracle).pass);
  CHECK(verify_littlewood_identity(ClassicalFamily::D, {2, 1}, 2, BranchMethod::Oracle).pass);
  CHECK_THROWS_AS(verify_littlewood_identity(ClassicalFamily::C, {1, 1, 1}, 2), StableRangeError);

  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      for (const auto& lambda : partitions_of(d, n))
        for (auto f : {ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D}) {
          auto report = verify_littlewood_identity(f, lambda, n);
          CAPTURE(report.case_name);
          CHECK(report.pass);
        }
}

TEST_CASE("identity reports carry both sides") {
  auto report = verify_littlewood_identity(ClassicalFamily::B, {1, 1}, 2);
  CHECK(report.pass);
  CHECK(report.lhs == report.rhs);
  CHECK(report.rhs == Decomposition<Partition>{{Partition{1, 1}, 1}});
  CHECK(report.case_name == "B n=2 lambda=(1,1)");
}

TEST_CASE("bracket maps") {
  const auto g2 = GroupCase::exceptional(CaseFamily::G2);
  CHECK(bracket_dynkin(g2, {3, 1}) == Dynkin{2, 1});
  CHECK(bracket_weight(g2, {3, 1}).str() == "fund:2,1");
  CHECK(bracket_dynkin(GroupCase::exceptional(CaseFamily::E7_6), {1}) == Dynkin{0, 0, 0, 0, 0, 0, 1});
  CHECK(bracket_dynkin(GroupCase::exceptional(CaseFamily::E6_3), {1, 1}) == Dynkin{0, 0, 1, 0, 0, 0});
  CHECK(bracket_dynkin(GroupCase::symplectic(3), {2, 1}) == Dynkin{1, 1, 0});
  CHECK_THROWS_AS(bracket_dynkin(g2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(bracket_dynkin(GroupCase::exceptional(CaseFamily::F4_6), {1}), std::invalid_argument);

  std::vector<GroupCase> cases = exceptional_cases();
  cases.push_back(GroupCase::symplectic(3));
  cases.push_back(GroupCase::odd_orthogonal(3));
  cases.push_back(GroupCase::even_orthogonal(4));
  for (const auto& c : cases) {
    if (!c.spherical()) continue;
    auto rs = c.root_system();
    CAPTURE(c.name());
    CHECK(bracket_dynkin(c, {}) == rs->zero());
    CHECK(bracket_dynkin(c, {1}) == c.vector_weight());
    CHECK(rs->dim(c.vector_weight()) == c.dim_v());
    std::vector<Partition> small;
    for (int d = 0; d <= 6; ++d)
      for (const auto& p : partitions_of(d, c.dim_e())) small.push_back(p);
    for (const auto& a : small)
      for (const auto& b : small) {
        Dynkin sum = bracket_dynkin(c, a);
        const Dynkin db = bracket_dynkin(c, b);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += db[k];
        CHECK(sum == bracket_dynkin(c, a + b));
        CHECK(rs->is_dominant(sum));
      }
  }
}

TEST_CASE("group case table") {
  const std::map<std::string, std::pair<int, int>> dims{
      {"G2", {2, 7}},   {"F4_6", {6, 26}}, {"F4_3", {3, 26}},  {"E6_5", {5, 27}},
      {"E6_3", {3, 27}}, {"E7_6", {6, 56}}, {"E8_7", {7, 248}}};
  for (const auto& [name, de] : dims) {
    auto c = parse_group_case(name);
    CHECK(c.name() == name);
    CHECK(c.dim_e() == de.first);
    CHECK(c.dim_v() == de.second);
  }
  CHECK(parse_group_case("SpC3").dim_v() == 6);
  CHECK(parse_group_case("SOB2").dim_v() == 5);
  CHECK(parse_group_case("OD4").dim_e() == 4);
  CHECK_THROWS(parse_group_case("X9"));
  CHECK_THROWS(parse_group_case("OD1"));
}

TEST_CASE("ring components") {
  // Degree one of K[Y] is E (x) V in every case.
  std::vector<GroupCase> cases = exceptional_cases();
  cases.push_back(GroupCase::even_orthogonal(2));
  for (const auto& c : cases) {
    auto rs = c.root_system();
    CHECK(total_dim(*rs, ring_component(c, {1})) == c.dim_v());
  }
  // O(4) with l(lambda) = 2 carries both constituents.
  auto od2 = ring_component(GroupCase::even_orthogonal(2), {1, 1});
  CHECK(od2 == Decomposition<Dynkin>{{Dynkin{2, 0}, 1}, {Dynkin{0, 2}, 1}});

  // F4 with dim E = 6: Lambda^2 V = V_w3 + V_w1 and S^2 V = V_2w4 + V_w4 + K.
  const auto f46 = GroupCase::exceptional(CaseFamily::F4_6);
  CHECK(ring_component(f46, {1, 1}) == Decomposition<Dynkin>{{Dynkin{0, 0, 1, 0}, 1}, {Dynkin{1, 0, 0, 0}, 1}});
  CHECK(ring_component(f46, {2}) == Decomposition<Dynkin>{{Dynkin{0, 0, 0, 2}, 1}});
}

TEST_CASE("spinor complexes") {
  auto d2 = spinor_complex(SpinorFamily::Dfull, 2);
  REQUIRE(d2.size() == 4);
  const std::vector<Partition> expect2{{}, {1}, {2, 1}, {2, 2}};
  for (int i = 0; i < 4; ++i) {
    CHECK(d2[i].i == i);
    CHECK(d2[i].j == expect2[i].size());
    CHECK(d2[i].content == Decomposition<TermLabel>{{{expect2[i], GLabel{SpinLabel::Delta}}, 1}});
  }
  auto d3 = spinor_complex(SpinorFamily::Dfull, 3);
  CHECK(content_of(d3, 3) == Decomposition<TermLabel>{{{Partition{2, 2}, GLabel{SpinLabel::Delta}}, 1},
                                                     {{Partition{3, 1, 1}, GLabel{SpinLabel::Delta}}, 1}});
  CHECK(content_of(d3, 6) == Decomposition<TermLabel>{{{Partition{3, 3, 3}, GLabel{SpinLabel::Delta}}, 1}});

  auto plus = spinor_complex(SpinorFamily::Dplus, 2);
  CHECK(plus[1].content.begin()->first.second == GLabel{SpinLabel::DeltaMinus});
  CHECK(plus[2].content.begin()->first.second == GLabel{SpinLabel::DeltaMinus});
  auto minus = spinor_complex(SpinorFamily::Dminus, 2);
  CHECK(minus[0].content.begin()->first.second == GLabel{SpinLabel::DeltaMinus});
  CHECK(minus[1].content.begin()->first.second == GLabel{SpinLabel::DeltaPlus});
  CHECK(minus[3].content.begin()->first.second == GLabel{SpinLabel::DeltaMinus});
  CHECK_THROWS_AS(spinor_complex(SpinorFamily::B, 9), ScaleError);
}

TEST_CASE("spinor term counts match hook-length enumeration") {
  // A self-transpose partition in the n x n square is determined by its
  // distinct odd diagonal hook lengths, each at most 2n - 1.
  for (int n = 1; n <= 6; ++n) {
    std::map<int, int> expected;
    for (int mask = 0; mask < (1 << n); ++mask) {
      int size = 0, r = 0;
      for (int k = 0; k < n; ++k)
        if (mask & (1 << k)) {
          size += 2 * k + 1;
          ++r;
        }
      expected[(size + r) / 2]++;
    }
    std::map<int, int> got;
    for (const auto& t : spinor_complex(SpinorFamily::B, n)) got[t.i] += static_cast<int>(t.content.size());
    CHECK(got == expected);
  }
}

TEST_CASE("spinor Euler identities") {
  auto b1 = verify_spinor_identity(SpinorFamily::B, 1, {});
  CHECK(b1.pass);
  CHECK(b1.lhs == 2);
  CHECK(verify_spinor_identity(SpinorFamily::Dfull, 2, {1, 1}).pass);
  CHECK(verify_spinor_identity(SpinorFamily::B, 2, {2, 1}).pass);
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      for (const auto& lambda : partitions_of(d, n))
        for (auto f : {SpinorFamily::B, SpinorFamily::Dplus, SpinorFamily::Dminus, SpinorFamily::Dfull}) {
          auto report = verify_spinor_identity(f, n, lambda);
          CAPTURE(report.case_name);
          CHECK(report.pass);
        }
}
