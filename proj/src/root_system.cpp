#include "lwood/root_system.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lwood {

namespace {

using Rational = boost::rational<long long>;
using RMatrix = std::vector<std::vector<Rational>>;

IntMatrix classical_cartan(LieType type, int n) {
  // Simple roots in epsilon coordinates, then a_ij = 2(a_i,a_j)/(a_j,a_j).
  int dim = type == LieType::A ? n + 1 : n;
  std::vector<std::vector<int>> simple(n, std::vector<int>(dim, 0));
  for (int i = 0; i + 1 < n; ++i) {
    simple[i][i] = 1;
    simple[i][i + 1] = -1;
  }
  auto& last = simple[n - 1];
  switch (type) {
    case LieType::A: last[n - 1] = 1; last[n] = -1; break;
    case LieType::B: last[n - 1] = 1; break;
    case LieType::C: last[n - 1] = 2; break;
    case LieType::D: last = std::vector<int>(dim, 0); last[n - 2] = 1; last[n - 1] = 1; break;
    default: break;
  }
  auto dot = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
  };
  IntMatrix a(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]);
  return a;
}

IntMatrix exceptional_cartan(LieType type, int n) {
  if (type == LieType::G) return {{2, -1}, {-3, 2}};
  if (type == LieType::F) return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  link(1, 3);
  link(2, 4);
  for (int i = 3; i < n; ++i) link(i, i + 1);
  return a;
}

bool valid_pair(LieType type, int rank) {
  switch (type) {
    case LieType::A:
    case LieType::B:
    case LieType::C: return rank >= 1 && rank <= 8;
    case LieType::D: return rank >= 2 && rank <= 8;
    case LieType::E: return rank >= 6 && rank <= 8;
    case LieType::F: return rank == 4;
    case LieType::G: return rank == 2;
  }
  return false;
}

RMatrix invert(const IntMatrix& m, Rational& det) {
  const std::size_t n = m.size();
  RMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].numerator() == 0) ++p;
    if (p == n) throw std::logic_error("singular Cartan matrix");
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].numerator() == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  RMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

char type_letter(LieType type) { return "ABCDEFG"[static_cast<int>(type)]; }

LieType parse_lie_type(char letter) {
  if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
  if (letter < 'A' || letter > 'G') throw std::invalid_argument(std::string("unknown Lie type '") + letter + "'");
  return static_cast<LieType>(letter - 'A');
}

std::shared_ptr<const RootSystem> RootSystem::get(LieType type, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<LieType, int>, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{type, rank}];
  if (!slot) slot = std::make_shared<const RootSystem>(type, rank);
  return slot;
}

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  if (!valid_pair(type, rank))
    throw std::invalid_argument(std::string("unsupported root system ") + type_letter(type) + std::to_string(rank));
  cartan_ = has_epsilon() ? classical_cartan(type, rank) : exceptional_cartan(type, rank);
  const int n = rank_;

  // Symmetrizer: (a_i,a_j) = a_ij L_j / 2 must be symmetric. Propagate along
  // the Dynkin graph, then scale each component so its shortest root has L=2.
  std::vector<Rational> len(n, 0);
  std::vector<int> component(n, -1);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    len[s] = 1;
    component[s] = components;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0 || component[j] >= 0) continue;
        len[j] = Rational(cartan_[j][i]) * len[i] / Rational(cartan_[i][j]);
        component[j] = components;
        stack.push_back(j);
      }
    }
    ++components;
  }
  lengths_.assign(n, 0);
  for (int c = 0; c < components; ++c) {
    Rational lo = 0;
    for (int i = 0; i < n; ++i)
      if (component[i] == c && (lo.numerator() == 0 || len[i] < lo)) lo = len[i];
    for (int i = 0; i < n; ++i)
      if (component[i] == c) {
        Rational l = len[i] * 2 / lo;
        if (l.denominator() != 1) throw std::logic_error("non-integral root length");
        lengths_[i] = static_cast<int>(l.numerator());
      }
  }
  auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    // (x, y) for x, y in simple-root coordinates, times 2.
    long long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += static_cast<long long>(x[i]) * y[j] * cartan_[i][j] * lengths_[j];
    return s;
  };

  // Positive roots by closure: beta + a_i is a root iff p - <beta, a_i^vee> > 0
  // where p is the largest k with beta - k a_i a root.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  roots_ = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      roots_.push_back(r);
    }
  }

  for (const auto& r : roots_) {
    Dynkin d(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[j] += r[i] * cartan_[i][j];
    roots_dynkin_.push_back(d);
    long long norm2 = form(r, r);  // 2 (alpha, alpha)
    std::vector<int> co(n);
    for (int i = 0; i < n; ++i) {
      long long num = 2LL * r[i] * lengths_[i];
      if (num % norm2 != 0) throw std::logic_error("non-integral coroot");
      co[i] = static_cast<int>(num / norm2);
    }
    coroots_.push_back(co);
  }

  // Gram matrix of fundamental weights: (w_i, w_j) = C_ij L_j / 2, C = A^{-1}.
  Rational det;
  RMatrix inv = invert(cartan_, det);
  if (det.denominator() != 1) throw std::logic_error("non-integral Cartan determinant");
  det_ = det.numerator();
  long long scale = 1;
  RMatrix g(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g[i][j] = inv[i][j] * lengths_[j] / 2;
      scale = std::lcm(scale, g[i][j].denominator());
    }
  gram_.assign(n, std::vector<long long>(n));
  inverse_scaled_.assign(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gram_[i][j] = (g[i][j] * scale).numerator();
      // (A^T)^{-1} = (A^{-1})^T
      Rational t = inv[j][i] * det_;
      if (t.denominator() != 1) throw std::logic_error("adjugate not integral");
      inverse_scaled_[i][j] = t.numerator();
    }

  // rho = half-sum of positive roots must equal the sum of the fundamental weights.
  Dynkin twice_rho(n, 0);
  for (const auto& d : roots_dynkin_)
    for (int i = 0; i < n; ++i) twice_rho[i] += d[i];
  for (int v : twice_rho)
    if (v != 2) throw std::logic_error("rho cross-check failed for " + name());
}

std::string RootSystem::name() const { return type_letter(type_) + std::to_string(rank_); }

Dynkin RootSystem::fundamental(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("fundamental weight index out of range");
  Dynkin w(rank_, 0);
  w[i - 1] = 1;
  return w;
}

int RootSystem::coroot_pairing(const Dynkin& lambda, std::size_t k) const {
  const auto& co = coroots_[k];
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += co[i] * lambda[i];
  return s;
}

long long RootSystem::inner(const Dynkin& a, const Dynkin& b) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(a[i]) * b[j] * gram_[i][j];
  return s;
}

bool RootSystem::is_dominant(const Dynkin& lambda) const {
  return std::all_of(lambda.begin(), lambda.end(), [](int v) { return v >= 0; });
}

void RootSystem::check_weight(const Dynkin& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_)
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " coordinates, " + name() +
                                " needs " + std::to_string(rank_));
}

Dynkin RootSystem::reflect(int i, const Dynkin& lambda) const {
  Dynkin out = lambda;
  const int c = lambda[i - 1];
  for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[i - 1][j];
  return out;
}

Dynkin RootSystem::shifted_reflect(int i, const Dynkin& lambda) const {
  Dynkin out = lambda;
  const int c = lambda[i - 1] + 1;
  for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[i - 1][j];
  return out;
}

Dynkin RootSystem::dominant_conjugate(const Dynkin& lambda) const {
  Dynkin mu = lambda;
  while (true) {
    int i = 0;
    while (i < rank_ && mu[i] >= 0) ++i;
    if (i == rank_) return mu;
    mu = reflect(i + 1, mu);
  }
}

std::optional<DotResult> RootSystem::dot_dominant(const Dynkin& lambda) const {
  Dynkin mu = lambda;
  for (int i = 0; i < rank_; ++i) ++mu[i];
  int steps = 0;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank_; ++i) {
      if (mu[i] == 0) return std::nullopt;
      if (mu[i] < 0 && neg < 0) neg = i;
    }
    if (neg < 0) break;
    mu = reflect(neg + 1, mu);
    ++steps;
  }
  for (int i = 0; i < rank_; ++i) --mu[i];
  return DotResult{steps, mu};
}

bool RootSystem::is_singular(const Dynkin& lambda) const {
  Dynkin mu = lambda;
  for (int i = 0; i < rank_; ++i) ++mu[i];
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (coroot_pairing(mu, k) == 0) return true;
  return false;
}

std::vector<long long> RootSystem::root_coordinates_scaled(const Dynkin& lambda) const {
  std::vector<long long> c(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += inverse_scaled_[i][j] * lambda[j];
  return c;
}

BigInt RootSystem::dim(const Dynkin& lambda) const {
  check_weight(lambda);
  if (!is_dominant(lambda)) throw std::invalid_argument("dimension requested for a non-dominant weight");
  BigInt num = 1, den = 1;
  for (const auto& co : coroots_) {
    long long a = 0, b = 0;
    for (int i = 0; i < rank_; ++i) {
      a += static_cast<long long>(co[i]) * (lambda[i] + 1);
      b += co[i];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

std::vector<Dynkin> RootSystem::orbit(const Dynkin& lambda) const {
  std::set<Dynkin> seen{lambda};
  std::vector<Dynkin> out{lambda};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 1; i <= rank_; ++i) {
      if (out[k][i - 1] == 0) continue;
      Dynkin r = reflect(i, out[k]);
      if (seen.insert(r).second) out.push_back(std::move(r));
    }
  }
  return out;
}

Dynkin RootSystem::from_epsilon(const std::vector<HalfInt>& x) const {
  if (!has_epsilon()) throw std::invalid_argument(name() + " has no epsilon coordinates");
  if (static_cast<int>(x.size()) != epsilon_dim())
    throw std::invalid_argument("epsilon weight for " + name() + " needs " + std::to_string(epsilon_dim()) +
                                " coordinates");
  if (type_ == LieType::A || type_ == LieType::C)
    for (const HalfInt& h : x)
      if (!h.is_integer()) throw std::invalid_argument("half-integral coordinates need type B or D");
  const int n = rank_;
  std::vector<HalfInt> a(n);
  for (int i = 0; i + 1 < n; ++i) a[i] = x[i] - x[i + 1];
  switch (type_) {
    case LieType::A: a[n - 1] = x[n - 1] - x[n]; break;
    case LieType::B: a[n - 1] = 2 * x[n - 1]; break;
    case LieType::C: a[n - 1] = x[n - 1]; break;
    case LieType::D: a[n - 1] = x[n - 2] + x[n - 1]; break;
    default: break;
  }
  Dynkin out(n);
  for (int i = 0; i < n; ++i) {
    if (!a[i].is_integer()) throw std::invalid_argument("epsilon coordinates do not define a weight of " + name());
    out[i] = a[i].to_int();
  }
  return out;
}

std::vector<HalfInt> RootSystem::to_epsilon(const Dynkin& lambda) const {
  if (!has_epsilon()) throw std::invalid_argument(name() + " has no epsilon coordinates");
  check_weight(lambda);
  const int n = rank_;
  std::vector<HalfInt> x(epsilon_dim());
  int top;  // last index fixed directly
  switch (type_) {
    case LieType::A: x[n] = 0; top = n; break;
    case LieType::B: x[n - 1] = HalfInt::from_twice(lambda[n - 1]); top = n - 1; break;
    case LieType::C: x[n - 1] = lambda[n - 1]; top = n - 1; break;
    default:
      x[n - 1] = HalfInt::from_twice(lambda[n - 1] - lambda[n - 2]);
      x[n - 2] = HalfInt::from_twice(lambda[n - 1] + lambda[n - 2]);
      top = n - 2;
      break;
  }
  for (int i = top - 1; i >= 0; --i) x[i] = x[i + 1] + lambda[i];
  return x;
}

}  // namespace lwood
