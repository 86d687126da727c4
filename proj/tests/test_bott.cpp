#include "doctest.h"

#include "lwood/bott.hpp"
#include "lwood/qsets.hpp"

#include <functional>

using namespace lwood;

namespace {

RootSystemPtr rs_of(LieType t, int n) { return RootSystem::get(t, n); }

std::vector<HalfInt> eps(std::initializer_list<int> twice) {
  std::vector<HalfInt> x;
  for (int t : twice) x.push_back(HalfInt::from_twice(t));
  return x;
}

// All words of length <= max_len in the simple reflections.
void for_each_word(int rank, int max_len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> word;
  std::function<void()> rec = [&] {
    f(word);
    if (static_cast<int>(word.size()) == max_len) return;
    for (int i = 1; i <= rank; ++i) {
      word.push_back(i);
      rec();
      word.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST_CASE("shifted reflections") {
  auto a1 = rs_of(LieType::A, 1);
  CHECK(shifted_reflection(*a1, 1, {0}) == Dynkin{-2});
  CHECK(shifted_reflection(*a1, 1, shifted_reflection(*a1, 1, {3})) == Dynkin{3});

  auto d4 = rs_of(LieType::D, 4);
  Weight x = Weight::epsilon(*d4, eps({5, 1, -3, 7}));  // (5/2, 1/2, -3/2, 7/2)
  // i < n swaps neighbours with a shift.
  CHECK(shifted_reflection(2, x) == Weight::epsilon(*d4, eps({5, -5, 3, 7})));
  // i = n: (.., x_{n-1}, x_n) -> (.., -x_n - 1, -x_{n-1} - 1).
  CHECK(shifted_reflection(4, x) == Weight::epsilon(*d4, eps({5, 1, -9, 1})));
  for (int i = 1; i <= 4; ++i) CHECK(shifted_reflection(i, shifted_reflection(i, x)) == x);
}

TEST_CASE("Bott examples") {
  auto g2 = rs_of(LieType::G, 2);
  CHECK(bott(*g2, {2, 1}) == BottOutcome::cohomology(0, {2, 1}));
  CHECK(bott(*g2, {-1, 0}).vanishes);

  auto d3 = rs_of(LieType::D, 3);
  auto w22 = spin_weight_D(3, Partition{2, 2}, SpinComponent::Plus);
  BottOutcome o = bott(*d3, d3->from_epsilon(w22));
  CHECK_FALSE(o.vanishes);
  CHECK(o.degree == 1);
  CHECK(bott(*d3, d3->from_epsilon(spin_weight_D(3, Partition{2}, SpinComponent::Plus))).vanishes);
}

TEST_CASE("Bott inverts reduced words applied to dominant weights") {
  for (auto [t, n] : {std::pair{LieType::A, 3}, {LieType::B, 3}, {LieType::C, 2}, {LieType::G, 2},
                      {LieType::D, 4}, {LieType::B, 4}, {LieType::A, 2}}) {
    auto rs = rs_of(t, n);
    for (const Dynkin& lambda : {rs->zero(), Dynkin(n, 1), rs->fundamental(1), rs->fundamental(n)}) {
      for_each_word(n, 4, [&](const std::vector<int>& word) {
        // Reduced iff each step raises the length: the reflected weight
        // (lambda + rho) gets a new negative pairing each time.
        Dynkin mu = lambda;
        for (int& v : mu) ++v;
        int len = 0;
        bool reduced = true;
        for (int i : word) {
          // s_i w is longer than w iff w^{-1} alpha_i > 0 iff <w(lambda+rho), alpha_i> > 0.
          if (mu[i - 1] <= 0) {
            reduced = false;
            break;
          }
          mu = rs->reflect(i, mu);
          ++len;
        }
        if (!reduced) return;
        for (int& v : mu) --v;
        CHECK(bott(*rs, mu) == BottOutcome::cohomology(len, lambda));
      });
    }
  }
}

TEST_CASE("singularity tests agree") {
  for (auto [t, n] : {std::pair{LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3}, {LieType::D, 4}}) {
    auto rs = rs_of(t, n);
    std::vector<int> w(n);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        CHECK(is_singular(*rs, w) == rs->is_singular(w));
        CHECK(bott(*rs, w).vanishes == rs->is_singular(w));
        return;
      }
      for (int v = -4; v <= 2; ++v) {
        w[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
}

TEST_CASE("Bott never uses more steps than positive roots") {
  auto e6 = rs_of(LieType::E, 6);
  Dynkin far{-3, -3, -3, -3, -3, -3};
  BottOutcome o = bott(*e6, far);
  if (!o.vanishes) CHECK(o.degree <= 36);
  Dynkin w0_rho{-2, -2, -2, -2, -2, -2};  // w0 . 0 = -2 rho
  CHECK(bott(*e6, w0_rho) == BottOutcome::cohomology(36, e6->zero()));
}

TEST_CASE("spin cohomology in type D") {
  CHECK(spin_cohomology_D(3, Partition{1}, SpinComponent::Plus) == SpinCohomology{false, 0, SpinLabel::DeltaMinus});
  CHECK(spin_cohomology_D(3, Partition{2, 1}, SpinComponent::Plus) == SpinCohomology{false, 1, SpinLabel::DeltaMinus});
  CHECK(spin_cohomology_D(2, Partition{2}, SpinComponent::Plus).vanishes);
  CHECK(spin_cohomology_D(3, Partition{}, SpinComponent::Minus) == SpinCohomology{false, 0, SpinLabel::DeltaMinus});
  CHECK_THROWS(spin_cohomology_D(2, Partition{3}, SpinComponent::Plus));
}

TEST_CASE("spin cohomology in type B") {
  CHECK(spin_cohomology_B(2, Partition{2}) == SpinCohomology{false, 1, SpinLabel::Delta});
  CHECK(spin_cohomology_B(3, Partition{1}).vanishes);
  CHECK(spin_cohomology_B(3, Partition{}) == SpinCohomology{false, 0, SpinLabel::Delta});
}

TEST_CASE("closed forms agree with Bott's algorithm") {
  for (int n = 2; n <= 5; ++n) {
    auto rs = rs_of(LieType::D, n);
    for (const auto& la : subpartitions(Partition(std::vector<int>(n, n))))
      for (auto comp : {SpinComponent::Plus, SpinComponent::Minus}) {
        SpinCohomology closed = spin_cohomology_D(n, la, comp);
        BottOutcome o = bott(*rs, rs->from_epsilon(spin_weight_D(n, la, comp)));
        CAPTURE(to_string(la));
        REQUIRE(closed.vanishes == o.vanishes);
        if (o.vanishes) continue;
        CHECK(closed.degree == o.degree);
        CHECK(spin_label_of(*rs, o.weight) == closed.label);
      }
  }
  for (int n = 1; n <= 5; ++n) {
    auto rs = rs_of(LieType::B, n);
    for (int size = 0; size <= 10; ++size)
      for (const auto& la : partitions_of(size, n, n)) {
        SpinCohomology closed = spin_cohomology_B(n, la);
        BottOutcome o = bott(*rs, rs->from_epsilon(spin_weight_B(n, la)));
        CAPTURE(to_string(la));
        REQUIRE(closed.vanishes == o.vanishes);
        if (o.vanishes) continue;
        CHECK(closed.degree == o.degree);
        CHECK(spin_label_of(*rs, o.weight) == closed.label);
      }
  }
}

TEST_CASE("type B closed form needs lambda inside the square") {
  // Outside the n x n square the Q_1 criterion no longer describes the
  // cohomology: for n = 1, lambda = (3) Bott gives H^1 = V_{3/2}.
  auto b1 = rs_of(LieType::B, 1);
  CHECK(spin_cohomology_B(1, Partition{3}).vanishes);
  CHECK(bott(*b1, b1->from_epsilon(spin_weight_B(1, Partition{3}))) == BottOutcome::cohomology(1, {3}));
}
