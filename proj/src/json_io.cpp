#include "lwood/json_io.hpp"

#include <limits>

namespace lwood {

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return static_cast<long long>(value);
  return value.str();
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Dynkin& d) { return Json(d); }

Json to_json(const GLabel& label) {
  if (const auto* p = std::get_if<Partition>(&label)) return {{"schur", to_json(*p)}};
  if (const auto* s = std::get_if<SpinLabel>(&label)) return {{"spin", to_string(*s)}};
  return {{"weight", to_json(std::get<Dynkin>(label))}};
}

Json to_json(const Decomposition<Partition>& d) {
  Json out = Json::array();
  for (const auto& [p, m] : d) out.push_back({{"partition", to_json(p)}, {"mult", to_json(m)}});
  return out;
}

Json to_json(const Decomposition<Dynkin>& d) {
  Json out = Json::array();
  for (const auto& [w, m] : d) out.push_back({{"weight", to_json(w)}, {"mult", to_json(m)}});
  return out;
}

Json to_json(const GradedTerm& term) {
  Json content = Json::array();
  for (const auto& [label, m] : term.content)
    content.push_back({{"e", to_json(label.first)}, {"g", to_json(label.second)}, {"mult", to_json(m)}});
  return {{"i", term.i}, {"j", term.j}, {"content", content}};
}

Json to_json(const std::vector<GradedTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(to_json(t));
  return out;
}

Json to_json(const BettiTable& b) {
  Json entries = Json::object();
  for (const auto& [key, v] : b.entries)
    entries[std::to_string(key.first) + "," + std::to_string(key.second)] = to_json(v);
  return {{"ambient", b.ambient_dim}, {"entries", entries}};
}

Json to_json(const HilbertData& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.numerator) coeffs.push_back(to_json(c));
  return {{"numerator", coeffs}, {"text", polynomial_string(h.numerator)}, {"krull_dim", h.krull_dim}};
}

Json to_json(const BottOutcome& o, const RootSystem& rs) {
  if (o.vanishes) return {{"vanishes", true}};
  return {{"degree", o.degree}, {"weight", Weight::fundamental(rs, o.weight).str()}};
}

Json to_json(const LittlewoodReport& r) {
  return {{"pass", r.pass}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"case", r.case_name}};
}

Json to_json(const SpinorReport& r) {
  return {{"pass", r.pass}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"case", r.case_name}};
}

Json to_json(const AuditReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"i", row.i}, {"computed", to_json(row.computed)}};
    j["expected"] = row.expected ? to_json(*row.expected) : Json(nullptr);
    j["pass"] = row.pass();
    rows.push_back(j);
  }
  return {{"case", r.case_name}, {"pass", r.pass()}, {"rows", rows}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable b;
  b.ambient_dim = j.at("ambient").get<int>();
  for (const auto& [key, v] : j.at("entries").items()) {
    const auto comma = key.find(',');
    const BigInt value = v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long long>());
    b.add(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)), value);
  }
  return b;
}

}  // namespace lwood
