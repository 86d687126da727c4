#include "lwood/resolutions.hpp"

#include "lwood/character.hpp"
#include "lwood/errors.hpp"
#include "lwood/littlewood.hpp"
#include "lwood/littlewood_richardson.hpp"
#include "lwood/qsets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lwood {

BigInt BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? BigInt(0) : it->second;
}

void BettiTable::add(int i, int j, const BigInt& value) {
  if (value == 0) return;
  BigInt& v = entries[{i, j}];
  v += value;
  if (v == 0) entries.erase({i, j});
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries) m = std::max(m, key.first);
  return m;
}

std::vector<BigInt> BettiTable::totals() const {
  std::vector<BigInt> out(max_index() + 1, BigInt(0));
  for (const auto& [key, v] : entries) out[key.first] += v;
  return out;
}

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string BettiTable::to_text() const {
  const int cols = std::max(max_index() + 1, 1);
  int lo = 0, hi = 0;
  for (const auto& [key, v] : entries) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> labels{""};
  grid.emplace_back();
  for (int c = 0; c < cols; ++c) grid.back().push_back(std::to_string(c));
  labels.push_back("total:");
  grid.emplace_back();
  const auto tot = totals();
  for (int c = 0; c < cols; ++c) grid.back().push_back(c < static_cast<int>(tot.size()) ? tot[c].str() : "0");
  for (int r = lo; r <= hi; ++r) {
    labels.push_back(std::to_string(r) + ":");
    grid.emplace_back();
    for (int c = 0; c < cols; ++c) {
      const BigInt v = at(c, c + r);
      grid.back().push_back(v == 0 ? "." : v.str());
    }
  }
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : grid)
    for (int c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out += pad_left(labels[k], 6);
    for (int c = 0; c < cols; ++c) out += " " + pad_left(grid[k][c], width[c]);
    out += "\n";
  }
  return out;
}

BettiTable parse_betti_text(std::string_view text, int ambient_dim) {
  BettiTable b;
  b.ambient_dim = ambient_dim;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (header) {
      header = false;
      continue;
    }
    std::string label;
    ls >> label;
    if (label == "total:") continue;
    if (label.empty() || label.back() != ':') throw std::invalid_argument("bad Betti table row: " + line);
    const int r = std::stoi(label.substr(0, label.size() - 1));
    std::string cell;
    for (int c = 0; ls >> cell; ++c)
      if (cell != ".") b.add(c, c + r, BigInt(cell));
  }
  return b;
}

std::string polynomial_string(const std::vector<BigInt>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    if (k == 0 || a != 1) out += a.str();
    if (k >= 1) out += "T";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

HilbertData hilbert_numerator(const BettiTable& b, int codim) {
  if (codim < 0) throw std::invalid_argument("codimension must be nonnegative");
  int top = 0;
  for (const auto& [key, v] : b.entries) top = std::max(top, key.second);
  std::vector<BigInt> p(top + 1, BigInt(0));
  for (const auto& [key, v] : b.entries) p[key.second] += key.first % 2 == 0 ? v : BigInt(-v);
  for (int step = 0; step < codim; ++step) {
    BigInt remainder = 0;
    for (const auto& c : p) remainder += c;
    if (remainder != 0 || p.size() < 2)
      throw ConsistencyError("not Cohen-Macaulay-consistent data: K-polynomial is not divisible by (1-T)^" +
                             std::to_string(codim));
    std::vector<BigInt> q(p.size() - 1, BigInt(0));
    BigInt run = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) q[k] = run += p[k];
    p = std::move(q);
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  BigInt at_one = 0;
  for (const auto& c : p) at_one += c;
  if (at_one <= 0) throw ConsistencyError("Hilbert numerator has nonpositive value at T = 1");
  return {p, b.ambient_dim - codim};
}

Decomposition<Partition> koszul_terms(Form form, int m, int i) {
  if (m < 1) throw std::invalid_argument("dim E must be positive");
  const int top = form == Form::Alternating ? m * (m - 1) / 2 : m * (m + 1) / 2;
  if (i < 0 || i > top)
    throw std::invalid_argument("Koszul index " + std::to_string(i) + " outside 0.." + std::to_string(top));
  Decomposition<Partition> out;
  for (const Partition& mu : enumerate_q(form == Form::Alternating ? QVariant::Minus : QVariant::Plus, 2 * i))
    if (mu.length() <= m) out.add(mu, 1);
  return out;
}

std::vector<GradedTerm> koszul_complex(Form form, int m) {
  const int top = form == Form::Alternating ? m * (m - 1) / 2 : m * (m + 1) / 2;
  std::vector<GradedTerm> out;
  for (int i = 0; i <= top; ++i) {
    GradedTerm t{i, 2 * i, {}};
    for (const auto& [mu, mult] : koszul_terms(form, m, i)) t.content.add({mu, GLabel{Dynkin{}}}, mult);
    out.push_back(std::move(t));
  }
  return out;
}

TermDims case_dims(const GroupCase& c) { return term_dims(c.dim_e(), c.root_system(), c.dim_v()); }

Decomposition<TermLabel> cauchy_slice(const GroupCase& c, int d) {
  if (d < 0 || d > 8) throw ScaleError("coordinate ring slices are supported for degrees 0..8");
  Decomposition<TermLabel> out;
  for (const Partition& lambda : partitions_of(d, c.dim_e()))
    for (const auto& [w, mult] : ring_component(c, lambda)) out.add({lambda, GLabel{w}}, mult);
  return out;
}

BigInt slice_dimension(const GroupCase& c, const Decomposition<TermLabel>& slice) {
  return slice.total(case_dims(c));
}

BigInt quadric_space_dimension(const GroupCase& c) {
  const BigInt n = BigInt(c.dim_e()) * c.dim_v();
  return n * (n + 1) / 2 - slice_dimension(c, cauchy_slice(c, 2));
}

namespace {

constexpr int kG2Codim = 5;

class G2Reconstruction {
 public:
  G2Reconstruction() : rs_(RootSystem::get(LieType::G, 2)), v_(weight_multiplicities(*rs_, rs_->fundamental(1))) {}

  std::vector<GradedTerm> run() {
    std::vector<GradedTerm> found;
    int next_index = 0;
    for (int j = 0; next_index <= kG2Codim; ++j) {
      if (j > 12) throw ConsistencyError("G2 reconstruction did not terminate");
      Decomposition<TermLabel> chi = ring_degree(j);
      for (const GradedTerm& t : found) {
        const BigInt sign = t.i % 2 == 0 ? 1 : -1;
        chi -= times_sym(t.content, j - t.j) * sign;
      }
      if (chi.empty()) continue;
      const int i = next_index++;
      if (i % 2 == 1) chi *= -1;
      if (!chi.is_nonnegative())
        throw ConsistencyError("reconstructed term in degree " + std::to_string(j) + " has mixed signs");
      found.push_back({i, j, chi});
    }
    return found;
  }

 private:
  Decomposition<TermLabel> ring_degree(int j) const {
    Decomposition<TermLabel> out;
    for (const Partition& l : partitions_of(j, 2)) out.add({l, GLabel{Dynkin{l[0] - l[1], l[1]}}}, 1);
    return out;
  }

  const Decomposition<Dynkin>& schur_of_v(const Partition& nu) {
    auto it = schur_v_.find(nu);
    if (it != schur_v_.end()) return it->second;
    SchurLimits limits;
    limits.max_size = std::max(limits.max_size, nu.size());
    return schur_v_[nu] = decompose_character(*rs_, schur_character(*rs_, v_, nu, limits));
  }

  // content (x) Sym^m(E (x) V), with Sym^m(E (x) V) = sum over |nu| = m of
  // S_nu E (x) S_nu V.
  Decomposition<TermLabel> times_sym(const Decomposition<TermLabel>& content, int m) {
    Decomposition<TermLabel> out;
    for (const Partition& nu : partitions_of(m, 2)) {
      const auto& snv = schur_of_v(nu);
      for (const auto& [label, mult] : content) {
        const auto e_part = lr_product(label.first, nu, 2);
        const auto g_part = tensor_product(*rs_, Decomposition<Dynkin>{{std::get<Dynkin>(label.second), 1}}, snv);
        for (const auto& [e, me] : e_part)
          for (const auto& [g, mg] : g_part) out.add({e, GLabel{g}}, mult * me * mg);
      }
    }
    return out;
  }

  RootSystemPtr rs_;
  Character v_;
  std::map<Partition, Decomposition<Dynkin>> schur_v_;
};

}  // namespace

std::vector<GradedTerm> g2_equivariant_resolution() { return G2Reconstruction().run(); }

BettiTable betti_of(const std::vector<GradedTerm>& terms, const TermDims& dims, int ambient_dim) {
  BettiTable b;
  b.ambient_dim = ambient_dim;
  for (const GradedTerm& t : terms) b.add(t.i, t.j, t.content.total(dims));
  return b;
}

std::vector<GradedTerm> stated_to_terms(const std::vector<StatedTerm>& stated) {
  std::map<std::pair<int, int>, GradedTerm> cells;
  for (const StatedTerm& s : stated) {
    auto& t = cells[{s.i, s.degree}];
    t.i = s.i;
    t.j = s.degree;
    t.content.add({s.e, GLabel{s.g}}, s.mult);
  }
  std::vector<GradedTerm> out;
  for (auto& [key, t] : cells) out.push_back(std::move(t));
  return out;
}

bool AuditReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.pass(); });
}

AuditReport dimension_audit(const GroupCase& c, const std::vector<StatedTerm>& stated,
                            const std::vector<BigInt>& expected_totals) {
  const TermDims dims = case_dims(c);
  int top = static_cast<int>(expected_totals.size()) - 1;
  for (const StatedTerm& s : stated) top = std::max(top, s.i);
  AuditReport report;
  report.case_name = c.name();
  for (int i = 0; i <= top; ++i) {
    AuditRow row;
    row.i = i;
    row.computed = 0;
    if (i < static_cast<int>(expected_totals.size())) row.expected = expected_totals[i];
    report.rows.push_back(row);
  }
  for (const StatedTerm& s : stated) report.rows[s.i].computed += dims({s.e, GLabel{s.g}}) * s.mult;
  return report;
}

}  // namespace lwood
