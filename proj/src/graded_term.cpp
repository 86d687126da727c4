#include "lwood/graded_term.hpp"

#include <stdexcept>

namespace lwood {

std::string to_string(const GLabel& label) {
  if (const auto* p = std::get_if<Partition>(&label)) return "S" + to_string(*p);
  if (const auto* s = std::get_if<SpinLabel>(&label)) return to_string(*s);
  const auto& d = std::get<Dynkin>(label);
  std::string out = "[";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(d[k]);
  }
  return out + "]";
}

std::string to_string(const TermLabel& label) { return to_string(label.first) + "x" + to_string(label.second); }

std::string to_string(const GradedTerm& term) {
  std::string out = "i=" + std::to_string(term.i) + " j=" + std::to_string(term.j) + ": ";
  if (term.content.empty()) return out + "0";
  bool first = true;
  for (const auto& [label, mult] : term.content) {
    if (!first) out += " + ";
    first = false;
    if (mult != 1) out += mult.str() + "*";
    out += to_string(label);
  }
  return out;
}

Decomposition<TermLabel> content_at(const std::vector<GradedTerm>& terms, int i) {
  Decomposition<TermLabel> out;
  for (const auto& t : terms)
    if (t.i == i) out += t.content;
  return out;
}

BigInt TermDims::operator()(const TermLabel& label) const {
  return schur_dimension(label.first, dim_e) * g_dim(label.second);
}

TermDims term_dims(int dim_e, RootSystemPtr rs, int dim_v) {
  return {dim_e, [rs, dim_v](const GLabel& g) -> BigInt {
            if (const auto* p = std::get_if<Partition>(&g)) return schur_dimension(*p, dim_v);
            if (const auto* s = std::get_if<SpinLabel>(&g)) {
              if (!rs) throw std::invalid_argument("spin label without a root system");
              const int n = rs->rank();
              BigInt two_n = BigInt(1) << n;
              if (rs->type() == LieType::D && *s != SpinLabel::Delta) return two_n / 2;
              return two_n;
            }
            const auto& d = std::get<Dynkin>(g);
            if (d.empty()) return 1;
            if (!rs) throw std::invalid_argument("weight label without a root system");
            return rs->dim(d);
          }};
}

}  // namespace lwood
