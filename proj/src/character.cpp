#include "lwood/character.hpp"

#include "lwood/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <string>

namespace lwood {

namespace {

std::string weight_str(const Dynkin& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

void check_bound(const RootSystem& rs, const Dynkin& lambda) {
  BigInt d = rs.dim(lambda);
  if (d > dimension_bound())
    throw ScaleError("V" + weight_str(lambda) + " of " + rs.name() + " has dimension " + to_string(d) +
                     ", above the bound " + to_string(dimension_bound()));
}

std::map<Dynkin, BigInt> freudenthal(const RootSystem& rs, const Dynkin& lambda) {
  const int n = rs.rank();
  const auto& roots = rs.positive_roots_dynkin();

  // Dominant weights below lambda, reached by subtracting positive roots.
  std::set<Dynkin> seen{lambda};
  std::vector<Dynkin> dom{lambda};
  for (std::size_t k = 0; k < dom.size(); ++k)
    for (const auto& beta : roots) {
      Dynkin mu = dom[k];
      for (int i = 0; i < n; ++i) mu[i] -= beta[i];
      if (rs.is_dominant(mu) && seen.insert(mu).second) dom.push_back(std::move(mu));
    }
  auto level = [&](const Dynkin& mu) {
    Dynkin diff(n);
    for (int i = 0; i < n; ++i) diff[i] = lambda[i] - mu[i];
    long long s = 0;
    for (long long c : rs.root_coordinates_scaled(diff)) s += c;
    return s;
  };
  std::stable_sort(dom.begin(), dom.end(), [&](const Dynkin& a, const Dynkin& b) { return level(a) < level(b); });

  Dynkin lr = lambda;
  for (int& v : lr) ++v;
  const long long top = rs.inner(lr, lr);
  std::map<Dynkin, long long> mult{{lambda, 1}};
  for (std::size_t k = 1; k < dom.size(); ++k) {
    const Dynkin& mu = dom[k];
    Dynkin mr = mu;
    for (int& v : mr) ++v;
    long long sum = 0;
    for (const auto& alpha : roots) {
      Dynkin nu = mu;
      while (true) {
        for (int i = 0; i < n; ++i) nu[i] += alpha[i];
        auto it = mult.find(rs.dominant_conjugate(nu));
        if (it == mult.end()) break;
        sum += it->second * rs.inner(nu, alpha);
      }
    }
    long long den = top - rs.inner(mr, mr);
    if (den <= 0 || (2 * sum) % den != 0)
      throw ConsistencyError("Freudenthal recursion is not integral at " + weight_str(mu));
    mult[mu] = 2 * sum / den;
  }
  std::map<Dynkin, BigInt> out;
  for (const auto& [mu, m] : mult)
    if (m != 0) out.emplace(mu, m);
  return out;
}

}  // namespace

BigInt dimension_bound() {
  static const BigInt bound = [] {
    if (const char* env = std::getenv("LWOOD_DIM_BOUND")) {
      try {
        return BigInt(std::string(env));
      } catch (const std::exception&) {
      }
    }
    return BigInt(1000000);
  }();
  return bound;
}

std::shared_ptr<const std::map<Dynkin, BigInt>> dominant_multiplicities(const RootSystem& rs,
                                                                         const Dynkin& lambda) {
  rs.check_weight(lambda);
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
  check_bound(rs, lambda);
  using Key = std::pair<std::string, Dynkin>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const std::map<Dynkin, BigInt>>> memo;
  Key key{rs.name(), lambda};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto value = std::make_shared<const std::map<Dynkin, BigInt>>(freudenthal(rs, lambda));
  std::lock_guard lock(mutex);
  return memo.emplace(std::move(key), value).first->second;
}

Character weight_multiplicities(const RootSystem& rs, const Dynkin& lambda) {
  Character chi;
  for (const auto& [mu, m] : *dominant_multiplicities(rs, lambda))
    for (const Dynkin& w : rs.orbit(mu)) chi.add(w, m);
  return chi;
}

Character character_of(const RootSystem& rs, const Decomposition<Dynkin>& reps) {
  Character chi;
  for (const auto& [lambda, c] : reps) {
    if (c < 0) throw std::invalid_argument("character_of needs nonnegative multiplicities");
    for (const auto& [mu, m] : *dominant_multiplicities(rs, lambda))
      for (const Dynkin& w : rs.orbit(mu)) chi.add(w, c * m);
  }
  return chi;
}

Decomposition<Dynkin> decompose_character(const RootSystem& rs, const Character& chi) {
  std::map<std::vector<long long>, std::pair<Dynkin, BigInt>> dom;  // keyed by root coordinates
  for (const auto& [w, m] : chi) {
    rs.check_weight(w);
    Dynkin d = rs.dominant_conjugate(w);
    if (chi.at(d) != m)
      throw NotACharacterError("character is not Weyl-invariant at " + weight_str(w));
    if (d == w) dom.emplace(rs.root_coordinates_scaled(w), std::make_pair(w, m));
  }
  Decomposition<Dynkin> out;
  while (!dom.empty()) {
    auto top = std::prev(dom.end());
    auto [lambda, c] = top->second;
    if (c < 0)
      throw NotACharacterError("negative multiplicity " + to_string(c) + " at highest weight " + weight_str(lambda));
    out.add(lambda, c);
    for (const auto& [mu, m] : *dominant_multiplicities(rs, lambda)) {
      auto key = rs.root_coordinates_scaled(mu);
      auto it = dom.find(key);
      if (it == dom.end()) it = dom.emplace(key, std::make_pair(mu, BigInt(0))).first;
      it->second.second -= c * m;
      if (it->second.second == 0) dom.erase(it);
    }
  }
  return out;
}

Character multiply(const Character& a, const Character& b) {
  Character out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      Dynkin z = x;
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
      out.add(z, cx * cy);
    }
  return out;
}

Character adams(const Character& chi, int k) {
  Character out;
  for (const auto& [w, m] : chi) {
    Dynkin z = w;
    for (int& v : z) v *= k;
    out.add(z, m);
  }
  return out;
}

BigInt degree(const Character& chi) {
  BigInt s = 0;
  for (const auto& [w, m] : chi) s += m;
  return s;
}

namespace {

Character divide_exact(const Character& chi, int k) {
  Character out;
  for (const auto& [w, m] : chi) {
    if (m % k != 0) throw ConsistencyError("Newton identity produced a non-integral character");
    out.add(w, m / k);
  }
  return out;
}

// h_0..h_top (elementary = false) or e_0..e_top via Newton's identities.
std::vector<Character> newton_series(const Character& base, int top, bool elementary, int rank) {
  std::vector<Character> psi(top + 1);
  for (int i = 1; i <= top; ++i) psi[i] = adams(base, i);
  std::vector<Character> out(top + 1);
  out[0].add(Dynkin(rank, 0), 1);
  for (int k = 1; k <= top; ++k) {
    Character acc;
    for (int i = 1; i <= k; ++i) {
      Character term = multiply(psi[i], out[k - i]);
      if (elementary && i % 2 == 0) acc -= term;
      else acc += term;
    }
    out[k] = divide_exact(acc, k);
  }
  return out;
}

Character determinant(const std::vector<std::vector<int>>& idx, const std::vector<Character>& series) {
  // idx[i][j] indexes series; negative indices are zero entries.
  const std::size_t n = idx.size();
  std::function<Character(std::size_t, std::vector<bool>&)> expand = [&](std::size_t row,
                                                                          std::vector<bool>& used) {
    if (row == n) {
      Character one;
      one.add(Dynkin(series[0].begin()->first.size(), 0), 1);
      return one;
    }
    Character acc;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col]) continue;
      int k = idx[row][col];
      if (k >= 0 && k < static_cast<int>(series.size()) && !series[k].empty()) {
        used[col] = true;
        Character minor = expand(row + 1, used);
        used[col] = false;
        Character term = multiply(series[k], minor);
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    return acc;
  };
  std::vector<bool> used(n, false);
  return expand(0, used);
}

}  // namespace

Character schur_character(const RootSystem& rs, const Character& base, const Partition& lambda,
                          SchurLimits limits) {
  if (lambda.size() > limits.max_size)
    throw ScaleError("Schur character needs |lambda| <= " + std::to_string(limits.max_size));
  BigInt base_dim = 0;
  for (const auto& [w, m] : base) base_dim += abs(m);
  if (base_dim > limits.max_base_dim)
    throw ScaleError("Schur character needs base dimension <= " + std::to_string(limits.max_base_dim));
  if (lambda.empty()) {
    Character one;
    one.add(rs.zero(), 1);
    return one;
  }
  const bool dual = lambda.length() > lambda[0];
  const Partition shape = dual ? transpose(lambda) : lambda;
  std::vector<Character> series = newton_series(base, shape[0] + shape.length(), dual, rs.rank());
  const int n = shape.length();
  std::vector<std::vector<int>> idx(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) idx[i][j] = shape[i] - i + j;
  return determinant(idx, series);
}

Decomposition<Dynkin> tensor_product(const RootSystem& rs, const Dynkin& a, const Dynkin& b) {
  const bool swap = rs.dim(a) < rs.dim(b);
  const Dynkin& big = swap ? b : a;
  const Dynkin& small = swap ? a : b;
  Decomposition<Dynkin> out;
  for (const auto& [mu, m] : *dominant_multiplicities(rs, small))
    for (const Dynkin& w : rs.orbit(mu)) {
      Dynkin shifted = big;
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += w[i];
      if (auto r = rs.dot_dominant(shifted)) out.add(r->weight, r->length % 2 ? BigInt(-m) : m);
    }
  out.require_nonnegative("tensor product");
  return out;
}

Decomposition<Dynkin> tensor_product(const RootSystem& rs, const Decomposition<Dynkin>& a,
                                     const Decomposition<Dynkin>& b) {
  Decomposition<Dynkin> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out += tensor_product(rs, x, y) * (cx * cy);
  return out;
}

BigInt total_dim(const RootSystem& rs, const Decomposition<Dynkin>& reps) {
  return reps.total([&](const Dynkin& d) { return rs.dim(d); });
}

}  // namespace lwood
