#include "lwood/plethysm.hpp"

#include "lwood/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace lwood {

namespace {

using Monomial = std::vector<int>;

bool is_dominant(const Monomial& m) { return std::is_sorted(m.rbegin(), m.rend()); }

}  // namespace

Decomposition<Partition> plethysm_wedge_power(int k, Form form, int dim_e) {
  if (dim_e < 1 || dim_e > 8 || k < 0 || k > 6)
    throw ScaleError("plethysm oracle supports 1 <= dimE <= 8 and 0 <= k <= 6, got dimE=" +
                     std::to_string(dim_e) + " k=" + std::to_string(k));

  // Weights of the quadratic piece: e_a + e_b with a < b (or a <= b).
  std::vector<std::pair<int, int>> weights;
  for (int a = 0; a < dim_e; ++a)
    for (int b = form == Form::Alternating ? a + 1 : a; b < dim_e; ++b) weights.emplace_back(a, b);

  // The weights are pairwise distinct, so Lambda^k is the sum over k-subsets.
  // Only dominant monomials are kept; that is enough to read off the Schur
  // expansion of a symmetric polynomial.
  std::map<Monomial, BigInt> poly;
  Monomial cur(dim_e, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      if (is_dominant(cur)) poly[cur] += 1;
      return;
    }
    for (std::size_t w = start; w + left <= weights.size(); ++w) {
      ++cur[weights[w].first];
      ++cur[weights[w].second];
      rec(w + 1, left - 1);
      --cur[weights[w].first];
      --cur[weights[w].second];
    }
  };
  rec(0, k);

  Decomposition<Partition> out;
  while (!poly.empty()) {
    auto top = std::prev(poly.end());
    if (top->second == 0) {
      poly.erase(top);
      continue;
    }
    const Partition alpha(top->first);
    const BigInt c = top->second;
    if (c < 0) throw ConsistencyError("plethysm oracle: negative Schur coefficient at " + to_string(alpha));
    out.add(alpha, c);
    // Subtract c * s_alpha restricted to dominant monomials.
    for (const Partition& beta : partitions_of(alpha.size(), dim_e)) {
      BigInt kk = kostka(alpha, beta.parts());
      if (kk == 0) continue;
      Monomial m(beta.parts());
      m.resize(dim_e, 0);
      BigInt& slot = poly[m];
      slot -= c * kk;
      if (slot == 0) poly.erase(m);
    }
  }
  return out;
}

const char* to_string(Form form) { return form == Form::Alternating ? "alternating" : "symmetric"; }

}  // namespace lwood
