#include "lwood/littlewood_richardson.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace lwood {

namespace {

// Enumerates LR fillings of outer/inner. With a fixed content, only fillings
// of that content are counted; otherwise every lattice filling is reported
// to `sink` with its content.
class LrFiller {
 public:
  LrFiller(const Partition& outer, const Partition& inner, const Partition* content)
      : outer_(outer), inner_(inner), content_(content) {
    for (int i = 0; i < outer_.length(); ++i)
      for (int j = outer_[i] - 1; j >= inner_[i]; --j) cells_.emplace_back(i, j);
    grid_.assign(outer_.length(), std::vector<int>(outer_.empty() ? 0 : outer_[0], 0));
    int letters = content_ ? content_->length() : static_cast<int>(cells_.size());
    counts_.assign(letters + 2, 0);
  }

  void run(const std::function<void(const std::vector<int>&)>& sink) {
    sink_ = &sink;
    place(0);
  }

 private:
  void place(std::size_t k) {
    if (k == cells_.size()) {
      (*sink_)(counts_);
      return;
    }
    auto [i, j] = cells_[k];
    int hi = static_cast<int>(counts_.size()) - 2;
    if (j + 1 < outer_[i]) hi = std::min(hi, grid_[i][j + 1]);
    int lo = 1;
    if (i > 0 && j >= inner_[i - 1]) lo = grid_[i - 1][j] + 1;
    // A letter r can only sit in row r or lower.
    hi = std::min(hi, i + 1);
    for (int r = lo; r <= hi; ++r) {
      if (content_ && counts_[r] >= (*content_)[r - 1]) continue;
      if (r > 1 && counts_[r] >= counts_[r - 1]) continue;
      ++counts_[r];
      grid_[i][j] = r;
      place(k + 1);
      --counts_[r];
    }
    grid_[i][j] = 0;
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition* content_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
  const std::function<void(const std::vector<int>&)>* sink_ = nullptr;
};

std::mutex lr_memo_mutex;
std::map<std::tuple<Partition, Partition, Partition>, BigInt> lr_memo;

}  // namespace

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  if (nu.empty()) return mu == lambda ? 1 : 0;

  auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard lock(lr_memo_mutex);
    if (auto it = lr_memo.find(key); it != lr_memo.end()) return it->second;
  }
  BigInt count = 0;
  LrFiller filler(lambda, mu, &nu);
  filler.run([&](const std::vector<int>&) { ++count; });
  std::lock_guard lock(lr_memo_mutex);
  lr_memo.emplace(std::move(key), count);
  return count;
}

Decomposition<Partition> skew_schur_expand(const SkewShape& shape) {
  Decomposition<Partition> out;
  if (!shape.valid()) return out;
  LrFiller filler(shape.outer, shape.inner, nullptr);
  filler.run([&](const std::vector<int>& counts) {
    std::vector<int> content(counts.begin() + 1, counts.end());
    out.add(Partition(std::move(content)), 1);
  });
  return out;
}

Decomposition<Partition> lr_product(const Partition& mu, const Partition& nu, int max_length) {
  Decomposition<Partition> out;
  const int n = mu.size() + nu.size();
  int cap = mu.length() + nu.length();
  if (max_length >= 0) cap = std::min(cap, max_length);
  for (const Partition& lambda : partitions_of(n, cap, mu[0] + nu[0])) {
    if (!lambda.contains(mu) || !lambda.contains(nu)) continue;
    out.add(lambda, lr_coefficient(lambda, mu, nu));
  }
  return out;
}

}  // namespace lwood
