#include "lwood/acceptance.hpp"

#include "lwood/bott.hpp"
#include "lwood/littlewood.hpp"
#include "lwood/plethysm.hpp"
#include "lwood/qsets.hpp"
#include "lwood/reference_data.hpp"
#include "lwood/resolutions.hpp"
#include "lwood/spinor.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <stdexcept>

namespace lwood {

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k].str();
  return out;
}

std::vector<BigInt> audit_totals(const AuditReport& r) {
  std::vector<BigInt> out;
  for (const auto& row : r.rows) out.push_back(row.computed);
  return out;
}

std::string mismatched_columns(const AuditReport& r) {
  std::string out;
  for (const auto& row : r.rows)
    if (!row.pass()) out += (out.empty() ? "" : ", ") + ("F" + std::to_string(row.i)) + ": " + row.computed.str() +
                            " vs " + row.expected->str();
  return out;
}

std::string partitions_string(const std::vector<Partition>& ps) {
  std::string out = "{";
  for (std::size_t k = 0; k < ps.size(); ++k) out += (k ? "," : "") + to_string(ps[k]);
  return out + "}";
}

void g2_y2(CriterionResult& r) {
  const auto terms = g2_equivariant_resolution();
  const auto b = betti_of(terms, case_dims(GroupCase::exceptional(CaseFamily::G2)), 14);
  const auto expected = parse_betti_text(g2_y2_betti_text(), 14);
  const bool terms_ok = terms == g2_y2_expected_terms();
  r.expected = "totals " + join(expected.totals()) + ", table as printed, six listed terms";
  r.computed = "totals " + join(b.totals()) + (b == expected ? ", table matches" : ", table differs") +
               (terms_ok ? ", terms match" : ", terms differ");
  r.pass = terms_ok && b == expected;
}

void g2_y1(CriterionResult& r) {
  const auto expected = betti_totals(g2_y1_betti_text());
  const auto report = dimension_audit(GroupCase::exceptional(CaseFamily::G2), g2_y1_stated_terms(), expected);
  r.expected = "totals " + join(expected);
  r.computed = "totals " + join(audit_totals(report));
  if (!report.pass()) r.computed += " (mismatch " + mismatched_columns(report) + ")";
  r.pass = report.pass();
}

void e6_cone(CriterionResult& r) {
  const auto expected = parse_betti_text(e6_cone_betti_text(), 27);
  const auto b = betti_of(stated_to_terms(e6_cone_stated_terms()), case_dims(GroupCase::exceptional(CaseFamily::E6_1)),
                          27);
  std::string numerator;
  bool numerator_ok = false;
  try {
    const auto h = hilbert_numerator(b, 10);
    numerator = polynomial_string(h.numerator);
    numerator_ok = h.numerator == e6_cone_hilbert_numerator();
  } catch (const std::exception& e) {
    numerator = e.what();
  }
  r.expected = "totals " + join(expected.totals()) + ", numerator " + polynomial_string(e6_cone_hilbert_numerator());
  r.computed = "totals " + join(b.totals()) + (b == expected ? " (table matches)" : " (table differs)") +
               ", numerator " + numerator;
  r.pass = b == expected && numerator_ok;
}

void f4_cone(CriterionResult& r) {
  const auto expected = betti_totals(e6_cone_betti_text());
  const auto report = dimension_audit(GroupCase::exceptional(CaseFamily::F4_1), f4_cone_stated_terms(), expected);
  r.expected = "totals " + join(expected);
  r.computed = "totals " + join(audit_totals(report));
  if (!report.pass()) r.computed += " (mismatch " + mismatched_columns(report) + ")";
  r.pass = report.pass();
}

void littlewood_sweep(CriterionResult& r) {
  int cases = 0;
  std::string failures;
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      for (const auto& lambda : partitions_of(d, n))
        for (auto f : {ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D}) {
          if (f == ClassicalFamily::D && lambda.length() >= n) continue;
          ++cases;
          const auto report = verify_littlewood_identity(f, lambda, n);
          if (!report.pass && failures.size() < 200) failures += " " + report.case_name;
        }
  r.expected = "all identities hold";
  r.computed = std::to_string(cases) + " cases" + (failures.empty() ? ", all pass" : ", failures:" + failures);
  r.pass = failures.empty();
}

void qset_plethysm(CriterionResult& r) {
  int checked = 0, agree = 0;
  std::string failures;
  for (auto variant : {QVariant::Minus, QVariant::Plus})
    for (int d = 0; d <= 10; d += 2) {
      Decomposition<Partition> q;
      for (const auto& p : enumerate_q(variant, d))
        if (p.length() <= 6) q.add(p, 1);
      const Form form = variant == QVariant::Minus ? Form::Alternating : Form::Symmetric;
      ++checked;
      if (q == plethysm_wedge_power(d / 2, form, 6))
        ++agree;
      else
        failures += std::string(" ") + to_string(variant) + ":" + std::to_string(d);
    }
  r.expected = "12 of 12 sizes agree";
  r.computed = std::to_string(agree) + " of " + std::to_string(checked) + " sizes agree" + failures;
  r.pass = agree == checked;
}

bool same(const SpinCohomology& closed, const RootSystem& rs, const BottOutcome& o) {
  if (closed.vanishes != o.vanishes) return false;
  if (o.vanishes) return true;
  return closed.degree == o.degree && spin_label_of(rs, o.weight) == closed.label;
}

void spin_bott(CriterionResult& r) {
  int checked = 0;
  std::string failures;
  for (int n = 2; n <= 6; ++n) {
    auto rs = RootSystem::get(LieType::D, n);
    for (const auto& la : subpartitions(Partition(std::vector<int>(n, n))))
      for (auto comp : {SpinComponent::Plus, SpinComponent::Minus}) {
        ++checked;
        if (!same(spin_cohomology_D(n, la, comp), *rs, bott(*rs, rs->from_epsilon(spin_weight_D(n, la, comp)))))
          failures += " D" + std::to_string(n) + to_string(la);
      }
  }
  for (int n = 1; n <= 6; ++n) {
    auto rs = RootSystem::get(LieType::B, n);
    for (int size = 0; size <= 10; ++size)
      for (const auto& la : partitions_of(size, n, n)) {
        ++checked;
        if (!same(spin_cohomology_B(n, la), *rs, bott(*rs, rs->from_epsilon(spin_weight_B(n, la)))))
          failures += " B" + std::to_string(n) + to_string(la);
      }
  }
  r.expected = "closed forms agree with Bott";
  r.computed = std::to_string(checked) + " comparisons" + (failures.empty() ? ", all agree" : ", mismatches:" + failures);
  r.pass = failures.empty();
}

std::vector<std::vector<Partition>> spinor_lists(int n) {
  std::vector<std::vector<Partition>> out;
  const auto terms = spinor_complex(SpinorFamily::Dfull, n);
  for (const auto& t : terms) {
    if (static_cast<int>(out.size()) <= t.i) out.resize(t.i + 1);
    for (const auto& [label, m] : t.content) out[t.i].push_back(label.first);
  }
  return out;
}

void spinor_complexes(CriterionResult& r) {
  const std::vector<std::vector<Partition>> n2{{{}}, {{1}}, {{2, 1}}, {{2, 2}}};
  const std::vector<std::vector<Partition>> n3{{{}}, {{1}}, {{2, 1}}, {{2, 2}, {3, 1, 1}},
                                               {{3, 2, 1}}, {{3, 3, 2}}, {{3, 3, 3}}};
  const auto got2 = spinor_lists(2);
  const auto got3 = spinor_lists(3);
  int cases = 0;
  std::string failures;
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d)
      for (const auto& la : partitions_of(d, n))
        for (auto f : {SpinorFamily::B, SpinorFamily::Dfull}) {
          ++cases;
          const auto rep = verify_spinor_identity(f, n, la);
          if (!rep.pass) failures += " " + rep.case_name;
        }
  auto render = [](const std::vector<std::vector<Partition>>& l) {
    std::string s;
    for (const auto& x : l) s += partitions_string(x);
    return s;
  };
  r.expected = "n=2 " + render(n2) + "; n=3 " + render(n3) + "; identities hold";
  r.computed = "n=2 " + render(got2) + "; n=3 " + render(got3) + "; " + std::to_string(cases) + " identities" +
               (failures.empty() ? " pass" : " failing:" + failures);
  r.pass = got2 == n2 && got3 == n3 && failures.empty();
}

void dimension_spots(CriterionResult& r) {
  struct Spot {
    LieType type;
    int rank;
    Dynkin w;
    long expected;
  };
  const std::vector<Spot> spots{
      {LieType::G, 2, {1, 0}, 7},
      {LieType::G, 2, {0, 1}, 14},
      {LieType::F, 4, {0, 0, 0, 1}, 26},
      {LieType::F, 4, {1, 0, 0, 0}, 52},
      {LieType::E, 6, {1, 0, 0, 0, 0, 0}, 27},
      {LieType::E, 6, {0, 1, 0, 0, 0, 0}, 78},
      {LieType::E, 6, {0, 0, 1, 0, 0, 0}, 351},
      {LieType::E, 6, {0, 0, 0, 0, 1, 0}, 351},
      {LieType::E, 6, {1, 0, 0, 0, 0, 1}, 650},
      {LieType::E, 6, {0, 0, 0, 1, 0, 0}, 2925},
      {LieType::E, 7, {0, 0, 0, 0, 0, 0, 1}, 56},
      {LieType::E, 8, {0, 0, 0, 0, 0, 0, 0, 1}, 248},
  };
  std::vector<BigInt> want, got;
  for (const auto& s : spots) {
    want.emplace_back(s.expected);
    got.push_back(RootSystem::get(s.type, s.rank)->dim(s.w));
  }
  // The E8 module V_w8 is the adjoint one: its nonzero weights are the roots.
  auto e8 = RootSystem::get(LieType::E, 8);
  const auto& roots = e8->positive_roots_dynkin();
  const bool adjoint = std::find(roots.begin(), roots.end(), e8->fundamental(8)) != roots.end();
  r.expected = join(want) + ", E8 w8 adjoint";
  r.computed = join(got) + (adjoint ? ", E8 w8 adjoint" : ", E8 w8 not the highest root");
  r.pass = want == got && adjoint;
}

void koszul_example(CriterionResult& r) {
  const std::vector<Partition> want{{}, {1, 1}, {2, 1, 1}, {2, 2, 2}};
  bool ok = true;
  std::string got;
  for (int i = 0; i <= 3; ++i) {
    const auto terms = koszul_terms(Form::Alternating, 3, i);
    std::vector<Partition> ps;
    for (const auto& [p, m] : terms) ps.push_back(p);
    got += partitions_string(ps) + "@" + std::to_string(2 * i) + " ";
    ok = ok && terms == Decomposition<Partition>{{want[i], 1}};
  }
  r.expected = "{()}@0 {(1,1)}@2 {(2,1,1)}@4 {(2,2,2)}@6";
  got.pop_back();
  r.computed = got;
  r.pass = ok;
}

void quadric_dims(CriterionResult& r) {
  const BigInt e6 = quadric_space_dimension(GroupCase::exceptional(CaseFamily::E6_3));
  const BigInt f4 = quadric_space_dimension(GroupCase::exceptional(CaseFamily::F4_3));
  r.expected = "E6_3 162, F4_3 318";
  r.computed = "E6_3 " + e6.str() + ", F4_3 " + f4.str();
  r.pass = e6 == 162 && f4 == 318;
}

struct Entry {
  CriterionInfo info;
  std::function<void(CriterionResult&)> run;
  double time_limit;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{1, "g2-y2-betti", "G2 Y2 equivariant resolution and Betti table"}, g2_y2, 10},
      {{2, "g2-y1-audit", "G2 Y1 stated terms against the Betti totals"}, g2_y1, 5},
      {{3, "e6-cone", "E6 cone Betti table and Hilbert numerator"}, e6_cone, 0},
      {{4, "f4-cone", "F4 cone stated terms against the E6 Betti totals"}, f4_cone, 0},
      {{5, "littlewood-sweep", "Littlewood identities, |lambda| <= 6, n <= 4"}, littlewood_sweep, 60},
      {{6, "qset-plethysm", "Q-sets against plethysm, dim E = 6, sizes <= 10"}, qset_plethysm, 0},
      {{7, "spin-bott", "spin closed forms against Bott, n <= 6"}, spin_bott, 0},
      {{8, "spinor-complexes", "spinor complexes and their Euler identities"}, spinor_complexes, 0},
      {{9, "dimension-spot", "irreducible dimension spot checks"}, dimension_spots, 0},
      {{10, "koszul-example", "Koszul complex of Lambda^2 E, dim E = 3"}, koszul_example, 0},
      {{11, "quadric-dims", "quadric spaces of E6_3 and F4_3"}, quadric_dims, 0},
  };
  return all;
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

int resolve_criterion(std::string_view id_or_name) {
  for (const auto& e : entries())
    if (id_or_name == e.info.name || id_or_name == std::to_string(e.info.id)) return e.info.id;
  throw std::invalid_argument("unknown acceptance criterion: " + std::string(id_or_name));
}

CriterionResult run_criterion(int id) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.name = e.info.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(r);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.computed = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.time_limit > 0 && r.seconds > e.time_limit) {
      r.pass = false;
      r.computed += " (over the time limit)";
    }
    return r;
  }
  throw std::invalid_argument("unknown acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids) {
  std::vector<std::future<CriterionResult>> jobs;
  for (int id : ids) jobs.push_back(std::async(std::launch::async, run_criterion, id));
  std::vector<CriterionResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f s", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " " + (r.id < 10 ? " " : "") + std::to_string(r.id) + " " + r.name +
         "  expected: " + r.expected + "  computed: " + r.computed + "  (" + secs + ")";
}

}  // namespace lwood
