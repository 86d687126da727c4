#include "doctest.h"

#include "lwood/errors.hpp"
#include "lwood/littlewood_richardson.hpp"
#include "lwood/partition.hpp"
#include "lwood/plethysm.hpp"
#include "lwood/qsets.hpp"

#include <functional>
#include <map>
#include <thread>

using namespace lwood;

namespace {

// Independent oracle for c^lambda_{mu,nu}: multiply the dominant parts of
// s_mu and s_nu as monomial sums in m variables, then peel off Schur
// polynomials with Kostka numbers.
Decomposition<Partition> schur_product_oracle(const Partition& mu, const Partition& nu, int m) {
  auto monomials = [&](const Partition& la) {
    // Full monomial expansion of s_la in m variables via all compositions.
    std::map<std::vector<int>, BigInt> out;
    std::vector<int> c(m, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == m - 1) {
        c[i] = left;
        BigInt k = kostka(la, c);
        if (k != 0) out[c] = k;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        c[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, la.size());
    return out;
  };
  auto a = monomials(mu), b = monomials(nu);
  std::map<std::vector<int>, BigInt> prod;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      std::vector<int> z(m);
      for (int i = 0; i < m; ++i) z[i] = x[i] + y[i];
      if (std::is_sorted(z.rbegin(), z.rend())) prod[z] += cx * cy;
    }
  Decomposition<Partition> out;
  while (!prod.empty()) {
    auto top = std::prev(prod.end());
    if (top->second == 0) {
      prod.erase(top);
      continue;
    }
    Partition alpha(top->first);
    BigInt coeff = top->second;
    out.add(alpha, coeff);
    for (const Partition& beta : partitions_of(alpha.size(), m)) {
      std::vector<int> z = beta.parts();
      z.resize(m, 0);
      prod[z] -= coeff * kostka(alpha, beta.parts());
      if (prod[z] == 0) prod.erase(z);
    }
  }
  return out;
}

// Number of semistandard fillings of lambda/mu with entries 1..m.
BigInt skew_ssyt_count(const Partition& lambda, const Partition& mu, int m) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = mu[i]; j < lambda[i]; ++j) cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> val;
  BigInt count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1;
    if (auto it = val.find({i, j - 1}); it != val.end()) lo = std::max(lo, it->second);
    if (auto it = val.find({i - 1, j}); it != val.end()) lo = std::max(lo, it->second + 1);
    for (int v = lo; v <= m; ++v) {
      val[{i, j}] = v;
      rec(k + 1);
    }
    val.erase({i, j});
  };
  rec(0);
  return count;
}

std::vector<Partition> all_partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("transpose") {
  CHECK(transpose(Partition{2, 1, 1}) == Partition{3, 1});
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition{4, 4}) == Partition{2, 2, 2, 2});
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("rank") {
  CHECK(rank(Partition{2, 2}) == 2);
  CHECK(rank(Partition{3, 1}) == 1);
  CHECK(rank(Partition{}) == 0);
}

TEST_CASE("normalization and parsing") {
  CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == Partition{2, 1});
  CHECK_THROWS(Partition{1, 2});
  CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
  CHECK(parse_partition("[3, 1]") == Partition{3, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(to_string(Partition{2, 1, 1}) == "(2,1,1)");
  CHECK(to_string(Partition{}) == "()");
}

TEST_CASE("partitions_of counts and order") {
  CHECK(partitions_of(10).size() == 42);
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{1, 1, 1, 1});
  CHECK(p4.back() == Partition{4});
  CHECK(std::is_sorted(p4.begin(), p4.end()));
  CHECK(partitions_of(6, 2).size() == 4);
}

TEST_CASE("schur dimension and kostka") {
  CHECK(schur_dimension(Partition{1, 1}, 4) == 6);
  CHECK(schur_dimension(Partition{2}, 4) == 10);
  CHECK(schur_dimension(Partition{2, 1}, 3) == 8);
  CHECK(schur_dimension(Partition{1, 1, 1}, 2) == 0);
  CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka(Partition{3, 2}, {2, 2, 1}) == 2);
  CHECK(kostka(Partition{2}, {0, 2}) == 1);
}

TEST_CASE("Q-sets") {
  CHECK(in_q(Partition{}, QVariant::Minus));
  CHECK(in_q(Partition{2, 1, 1}, QVariant::Minus));
  CHECK_FALSE(in_q(Partition{3, 1}, QVariant::Minus));
  CHECK(in_q(Partition{3, 1}, QVariant::Plus));
  CHECK(enumerate_q(QVariant::Minus, 0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_q(QVariant::Minus, 2) == std::vector<Partition>{Partition{1, 1}});
  CHECK(enumerate_q(QVariant::Minus, 4) == std::vector<Partition>{Partition{2, 1, 1}});
  CHECK(enumerate_q(QVariant::Plus, 2) == std::vector<Partition>{Partition{2}});
  CHECK_THROWS_WITH_AS(enumerate_q(QVariant::Minus, 3), "Q-sets contain only even sizes",
                       std::invalid_argument);
  // Q_{-1} members of size 2k biject with partitions of k into distinct parts.
  CHECK(enumerate_q(QVariant::Minus, 12).size() == 4);
}

TEST_CASE("LR coefficients: examples") {
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{1, 1}, Partition{2}) == 0);
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  for (const auto& la : all_partitions_up_to(5)) CHECK(lr_coefficient(la, Partition{}, la) == 1);
}

TEST_CASE("LR coefficients agree with Schur products computed from monomials") {
  for (const auto& mu : all_partitions_up_to(4))
    for (const auto& nu : all_partitions_up_to(4)) {
      if (mu.size() + nu.size() > 6) continue;
      int m = mu.length() + nu.length();
      if (m == 0) continue;
      CAPTURE(to_string(mu));
      CAPTURE(to_string(nu));
      CHECK(lr_product(mu, nu) == schur_product_oracle(mu, nu, m));
    }
}

TEST_CASE("LR symmetry for |lambda| <= 8") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : subpartitions(la))
        for (const auto& nu : partitions_of(n - mu.size()))
          if (la.contains(nu)) CHECK(lr_coefficient(la, mu, nu) == lr_coefficient(la, nu, mu));
}

TEST_CASE("skew Schur expansion") {
  CHECK(skew_schur_expand({Partition{2, 2}, Partition{1, 1}}) ==
        Decomposition<Partition>{{Partition{1, 1}, 1}});
  CHECK(skew_schur_expand({Partition{3, 1}, Partition{}}) ==
        Decomposition<Partition>{{Partition{3, 1}, 1}});
  CHECK(skew_schur_expand({Partition{1, 1}, Partition{2}}).empty());
  CHECK(skew_schur_expand({Partition{}, Partition{}}) == Decomposition<Partition>{{Partition{}, 1}});
}

TEST_CASE("skew dimensions match direct skew tableau counts") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& la : partitions_of(n))
      for (const auto& mu : subpartitions(la))
        for (int m = 1; m <= 4; ++m) {
          auto expansion = skew_schur_expand({la, mu});
          BigInt lhs = expansion.total([m](const Partition& nu) { return schur_dimension(nu, m); });
          CHECK(lhs == skew_ssyt_count(la, mu, m));
        }
}

TEST_CASE("LR memo is consistent under concurrent use") {
  const Partition la{4, 3, 2, 1}, mu{2, 1};
  std::vector<Partition> nus = partitions_of(7);
  std::vector<BigInt> serial;
  for (const auto& nu : nus) serial.push_back(lr_coefficient(la, mu, nu));
  std::vector<std::vector<BigInt>> results(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (const auto& nu : nus) results[t].push_back(lr_coefficient(la, mu, nu));
    });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == serial);
}

TEST_CASE("plethysm oracle") {
  using D = Decomposition<Partition>;
  CHECK(plethysm_wedge_power(2, Form::Alternating, 4) == D{{Partition{2, 1, 1}, 1}});
  CHECK(plethysm_wedge_power(1, Form::Alternating, 2) == D{{Partition{1, 1}, 1}});
  CHECK(plethysm_wedge_power(2, Form::Symmetric, 4) == D{{Partition{3, 1}, 1}});
  CHECK(plethysm_wedge_power(0, Form::Symmetric, 3) == D{{Partition{}, 1}});
  CHECK_THROWS_AS(plethysm_wedge_power(7, Form::Symmetric, 3), ScaleError);
  CHECK_THROWS_AS(plethysm_wedge_power(1, Form::Symmetric, 9), ScaleError);
}

TEST_CASE("Q-sets match the plethysm oracle") {
  for (int d = 0; d <= 12; d += 2) {
    int dim_e = std::max(d, 1);
    if (dim_e > 8 || d / 2 > 6) continue;
    for (auto [variant, form] : {std::pair{QVariant::Minus, Form::Alternating},
                                 std::pair{QVariant::Plus, Form::Symmetric}}) {
      Decomposition<Partition> expected;
      for (const auto& p : enumerate_q(variant, d)) expected.add(p, 1);
      CHECK(plethysm_wedge_power(d / 2, form, dim_e) == expected);
    }
  }
}

TEST_CASE("decomposition arithmetic") {
  using D = Decomposition<Partition>;
  D a{{Partition{1}, 2}, {Partition{2}, 1}};
  D b{{Partition{1}, -2}, {Partition{1, 1}, 3}};
  D c{{Partition{}, 5}};
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
  D s = a + b;
  CHECK_FALSE(s.contains(Partition{1}));
  CHECK(s.size() == 2);
  CHECK((a * BigInt(0)).empty());
  CHECK((a - a).empty());
  CHECK_FALSE(b.is_nonnegative());
}
