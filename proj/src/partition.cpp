#include "lwood/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lwood {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++t[j];
  return Partition(std::move(t));
}

int rank(const Partition& lambda) {
  int r = 0;
  while (r < lambda.length() && lambda[r] >= r + 1) ++r;
  return r;
}

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_length < 0) max_length = n;
  if (max_part < 0) max_part = n;
  std::vector<int> cur;
  // Emits in decreasing lex order; reversed at the end.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur(lambda.length(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    int cap = i == 0 ? lambda[0] : std::min(lambda[i], cur[i - 1]);
    for (int p = 0; p <= cap; ++p) {
      cur[i] = p;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> s(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
  return Partition(std::move(s));
}

BigInt schur_dimension(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0;
  const Partition t = transpose(lambda);
  BigInt num = 1, den = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      num *= m + j - i;
      den *= (lambda[i] - j - 1) + (t[j] - i - 1) + 1;
    }
  }
  return num / den;
}

namespace {

BigInt kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, std::size_t k,
                  std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  if (k == 0) {
    return std::all_of(shape.begin(), shape.end(), [](int p) { return p == 0; }) ? 1 : 0;
  }
  auto key = std::make_pair(shape, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Remove a horizontal strip of size content[k-1] holding the largest letter.
  BigInt total = 0;
  std::vector<int> inner(shape.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == shape.size()) {
      if (left == 0) total += kostka_rec(inner, content, k - 1, memo);
      return;
    }
    int below = i + 1 < shape.size() ? shape[i + 1] : 0;
    for (int v = shape[i]; v >= below; --v) {
      int taken = shape[i] - v;
      if (taken > left) break;
      inner[i] = v;
      rec(i + 1, left - taken);
    }
  };
  rec(0, content[k - 1]);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka(const Partition& lambda, const std::vector<int>& content) {
  int n = std::accumulate(content.begin(), content.end(), 0);
  if (n != lambda.size()) return 0;
  if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) return 0;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
  return kostka_rec(lambda.parts(), content, content.size(), memo);
}

std::string to_string(const Partition& lambda) {
  std::string s = "(";
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      parts.push_back(std::stoi(token));
      token.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ',' || c == ' ') {
      flush();
    } else if (c == '(' || c == ')' || c == '[' || c == ']') {
      flush();
    } else {
      throw std::invalid_argument("bad character in partition: '" + std::string(1, c) + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

}  // namespace lwood
