#include "lwood/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace lwood {

Weight Weight::fundamental(const RootSystem& rs, const Dynkin& labels) {
  rs.check_weight(labels);
  Weight w{CoordSystem::Fundamental, rs.type(), rs.rank(), {}};
  for (int v : labels) w.coords.emplace_back(v);
  return w;
}

Weight Weight::epsilon(const RootSystem& rs, std::vector<HalfInt> coords) {
  rs.from_epsilon(coords);
  return Weight{CoordSystem::Epsilon, rs.type(), rs.rank(), std::move(coords)};
}

Dynkin Weight::to_dynkin() const {
  auto rs = RootSystem::get(type, rank);
  if (system == CoordSystem::Epsilon) return rs->from_epsilon(coords);
  Dynkin d;
  for (const HalfInt& h : coords) d.push_back(h.to_int());
  rs->check_weight(d);
  return d;
}

Weight Weight::in_system(CoordSystem target) const {
  if (target == system) return *this;
  auto rs = RootSystem::get(type, rank);
  Dynkin d = to_dynkin();
  return target == CoordSystem::Fundamental ? fundamental(*rs, d) : epsilon(*rs, rs->to_epsilon(d));
}

std::string Weight::system_tag() const {
  return std::string(system == CoordSystem::Epsilon ? "epsilon:" : "fundamental:") + type_letter(type) +
         std::to_string(rank);
}

std::string Weight::str() const {
  std::string s = system == CoordSystem::Epsilon ? "eps:" : "fund:";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += coords[i].str();
  }
  return s;
}

namespace {

std::vector<HalfInt> parse_coords(std::string_view text) {
  std::vector<HalfInt> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" []()");
    auto e = item.find_last_not_of(" []()");
    if (b == std::string::npos) continue;
    out.push_back(HalfInt::parse(item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace

Weight parse_weight(const RootSystem& rs, std::string_view text) {
  if (text.rfind("eps:", 0) == 0) return Weight::epsilon(rs, parse_coords(text.substr(4)));
  if (text.rfind("fund:", 0) == 0) text.remove_prefix(5);
  Weight w{CoordSystem::Fundamental, rs.type(), rs.rank(), parse_coords(text)};
  w.to_dynkin();
  return w;
}

Weight weight_from_tag(std::string_view tag, std::vector<HalfInt> coords) {
  auto colon = tag.find(':');
  if (colon == std::string_view::npos || colon + 2 > tag.size())
    throw std::invalid_argument("bad weight system tag '" + std::string(tag) + "'");
  std::string_view sys = tag.substr(0, colon);
  Weight w;
  if (sys == "epsilon") w.system = CoordSystem::Epsilon;
  else if (sys == "fundamental") w.system = CoordSystem::Fundamental;
  else throw std::invalid_argument("bad weight system tag '" + std::string(tag) + "'");
  w.type = parse_lie_type(tag[colon + 1]);
  w.rank = std::stoi(std::string(tag.substr(colon + 2)));
  w.coords = std::move(coords);
  w.to_dynkin();
  return w;
}

}  // namespace lwood
