#include "lwood/reference_data.hpp"

namespace lwood {

namespace {

GradedTerm g2_term(int i, int j, std::initializer_list<std::pair<Partition, Dynkin>> items) {
  GradedTerm t{i, j, {}};
  for (const auto& [e, g] : items) t.content.add({e, GLabel{g}}, 1);
  return t;
}

// (lambda_1, lambda_2; mu_1, mu_2)(-degree) in homological degree i.
StatedTerm y1(int i, int l1, int l2, int m1, int m2, int degree) { return {i, Partition{l1, l2}, {m1, m2}, degree}; }

StatedTerm cone(int i, int degree, Dynkin g) { return {i, Partition{degree}, std::move(g), degree}; }

Dynkin e6(int node) {
  Dynkin d(6, 0);
  if (node) d[node - 1] = 1;
  return d;
}

Dynkin f4(int node, int mult = 1) {
  Dynkin d(4, 0);
  if (node) d[node - 1] = mult;
  return d;
}

}  // namespace

std::vector<GradedTerm> g2_y2_expected_terms() {
  return {
      g2_term(0, 0, {{{}, {0, 0}}}),
      g2_term(1, 2, {{{1, 1}, {1, 0}}, {{2}, {0, 0}}}),
      g2_term(2, 3, {{{2, 1}, {0, 0}}, {{2, 1}, {1, 0}}}),
      g2_term(3, 5, {{{3, 2}, {0, 0}}, {{3, 2}, {1, 0}}}),
      g2_term(4, 6, {{{3, 3}, {1, 0}}, {{4, 2}, {0, 0}}}),
      g2_term(5, 8, {{{4, 4}, {0, 0}}}),
  };
}

std::string g2_y2_betti_text() {
  return "       0  1  2  3  4 5\n"
         "total: 1 10 16 16 10 1\n"
         "    0: 1  .  .  .  . .\n"
         "    1: . 10 16  .  . .\n"
         "    2: .  .  . 16 10 .\n"
         "    3: .  .  .  .  . 1\n";
}

std::string g2_y2_char2_betti_text() {
  return "       0  1  2  3  4 5\n"
         "total: 1 10 17 17 10 1\n"
         "    0: 1  .  .  .  . .\n"
         "    1: . 10 16  1  . .\n"
         "    2: .  .  1 16 10 .\n"
         "    3: .  .  .  .  . 1\n";
}

std::vector<StatedTerm> g2_y1_stated_terms() {
  return {
      y1(0, 0, 0, 0, 0, 0),
      y1(1, 2, 0, 0, 0, 2), y1(1, 1, 1, 1, 0, 2), y1(1, 1, 1, 0, 1, 2),
      y1(2, 2, 1, 0, 0, 3), y1(2, 3, 0, 1, 0, 3), y1(2, 2, 1, 2, 0, 3),
      y1(3, 3, 1, 0, 0, 4), y1(3, 2, 2, 1, 0, 4), y1(3, 3, 1, 1, 0, 4), y1(3, 3, 1, 2, 0, 4), y1(3, 2, 2, 0, 1, 4),
      y1(4, 4, 1, 1, 0, 5), y1(4, 4, 1, 0, 1, 5), y1(4, 3, 3, 0, 0, 6), y1(4, 3, 3, 2, 0, 6),
      y1(5, 3, 3, 1, 0, 6), y1(5, 4, 2, 1, 0, 6), y1(5, 4, 3, 1, 0, 7), y1(5, 4, 3, 0, 1, 7),
      y1(6, 4, 3, 0, 0, 7), y1(6, 5, 2, 0, 0, 7), y1(6, 6, 2, 1, 0, 8),
      y1(7, 6, 3, 0, 0, 9),
  };
}

std::string g2_y1_betti_text() {
  return "       0  1  2   3   4  5  6 7\n"
         "total: 1 24 84 126 119 77 27 4\n"
         "    0: 1  .  .   .   .  .  . .\n"
         "    1: . 24 84 126  84 35  6 .\n"
         "    2: .  .  .   .  35 42 21 4\n";
}

std::vector<StatedTerm> e6_cone_stated_terms() {
  return {
      cone(0, 0, e6(0)),
      cone(1, 2, e6(1)),
      cone(2, 3, e6(2)),
      cone(3, 5, e6(5)),
      cone(4, 6, {1, 0, 0, 0, 0, 1}),
      cone(5, 7, {2, 0, 0, 0, 0, 0}),
      cone(5, 8, {0, 0, 0, 0, 0, 2}),
      cone(6, 9, {1, 0, 0, 0, 0, 1}),
      cone(7, 10, e6(3)),
      cone(8, 12, e6(2)),
      cone(9, 13, e6(6)),
      cone(10, 15, e6(0)),
  };
}

std::string e6_cone_betti_text() {
  return "       0  1  2   3   4   5   6   7  8  9 10\n"
         "total: 1 27 78 351 650 702 650 351 78 27  1\n"
         "    0: 1  .  .   .   .   .   .   .  .  .  .\n"
         "    1: . 27 78   .   .   .   .   .  .  .  .\n"
         "    2: .  .  . 351 650 351   .   .  .  .  .\n"
         "    3: .  .  .   .   . 351 650 351  .  .  .\n"
         "    4: .  .  .   .   .   .   .   . 78 27  .\n"
         "    5: .  .  .   .   .   .   .   .  .  .  1\n";
}

std::vector<BigInt> e6_cone_hilbert_numerator() { return {1, 10, 28, 28, 10, 1}; }

std::vector<StatedTerm> f4_cone_stated_terms() {
  std::vector<StatedTerm> out{cone(0, 0, f4(0))};
  auto add = [&](int i, int degree, std::initializer_list<Dynkin> reps) {
    for (const auto& r : reps) out.push_back(cone(i, degree, r));
  };
  add(1, 2, {f4(0), f4(4)});
  add(2, 3, {f4(1), f4(4)});
  add(3, 5, {f4(4), f4(3), f4(1)});
  add(4, 6, {f4(0), f4(4), f4(4), f4(4, 2)});
  add(5, 7, {f4(0), f4(4), f4(4, 2)});
  add(5, 8, {f4(0), f4(4), f4(4, 2)});
  add(6, 9, {f4(0), f4(4), f4(4), f4(4, 2)});
  add(7, 10, {f4(4), f4(3), f4(1)});
  add(8, 12, {f4(1), f4(4)});
  add(9, 13, {f4(0), f4(4)});
  add(10, 15, {f4(0)});
  return out;
}

std::vector<StatedTerm> e8_cone_stated_terms() {
  auto w = [](int node) {
    Dynkin d(8, 0);
    if (node) d[node - 1] = 1;
    return d;
  };
  return {cone(0, 0, w(0)), cone(1, 2, w(0)), cone(1, 2, w(1)), cone(2, 3, w(8)), cone(2, 3, w(2)), cone(2, 3, w(1))};
}

std::vector<BigInt> betti_totals(const std::string& table_text) { return parse_betti_text(table_text).totals(); }

}  // namespace lwood
