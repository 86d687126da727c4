#include "lwood/cli.hpp"

#include "lwood/acceptance.hpp"
#include "lwood/bott.hpp"
#include "lwood/character.hpp"
#include "lwood/errors.hpp"
#include "lwood/json_io.hpp"
#include "lwood/littlewood.hpp"
#include "lwood/littlewood_richardson.hpp"
#include "lwood/plethysm.hpp"
#include "lwood/qsets.hpp"
#include "lwood/reference_data.hpp"
#include "lwood/resolutions.hpp"
#include "lwood/spinor.hpp"
#include "lwood/weight.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace lwood {

namespace {

struct Output {
  Json json;
  std::string text;
  int code = 0;
};

struct Options {
  std::string format = "text";
  bool oracle = false;
};

RootSystemPtr root_system_of(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("root system name like G2 or D4 expected, got '" + name + "'");
  std::size_t used = 0;
  const int rank = std::stoi(name.substr(1), &used);
  if (used + 1 != name.size()) throw std::invalid_argument("bad root system name '" + name + "'");
  return RootSystem::get(parse_lie_type(name[0]), rank);
}

std::string weight_text(const RootSystem& rs, const Dynkin& w) { return Weight::fundamental(rs, w).str(); }

template <class Label, class F>
std::string decomposition_text(const Decomposition<Label>& d, F label_text) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& [label, mult] : d) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += mult.str() + "*";
    out += label_text(label);
  }
  return out;
}

std::string partitions_text(const Decomposition<Partition>& d) {
  return decomposition_text(d, [](const Partition& p) { return to_string(p); });
}

std::string weights_text(const RootSystem& rs, const Decomposition<Dynkin>& d) {
  return decomposition_text(d, [&](const Dynkin& w) { return weight_text(rs, w); });
}

Json weights_json(const RootSystem& rs, const Decomposition<Dynkin>& d) {
  Json out = Json::array();
  for (const auto& [w, m] : d) out.push_back({{"weight", weight_text(rs, w)}, {"mult", to_json(m)}});
  return out;
}

std::string terms_text(const std::vector<GradedTerm>& terms) {
  std::string out;
  for (const auto& t : terms) out += to_string(t) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QVariant parse_variant(const std::string& s) {
  if (s == "minus" || s == "-1") return QVariant::Minus;
  if (s == "plus" || s == "1") return QVariant::Plus;
  throw std::invalid_argument("variant must be minus or plus");
}

Form parse_form(const std::string& s) {
  if (s == "alternating" || s == "alt") return Form::Alternating;
  if (s == "symmetric" || s == "sym") return Form::Symmetric;
  throw std::invalid_argument("form must be alternating or symmetric");
}

Json partition_list(const std::vector<Partition>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

// Named tables: the resolution behind each one and its ambient space.
struct Source {
  std::vector<GradedTerm> terms;
  TermDims dims;
  int ambient;
};

Source source_of(const std::string& name) {
  auto from_stated = [](CaseFamily f, const std::vector<StatedTerm>& stated) {
    const auto c = GroupCase::exceptional(f);
    return Source{stated_to_terms(stated), case_dims(c), c.dim_e() * c.dim_v()};
  };
  if (name == "g2-y2") {
    const auto c = GroupCase::exceptional(CaseFamily::G2);
    return {g2_equivariant_resolution(), case_dims(c), 14};
  }
  if (name == "g2-y1") return from_stated(CaseFamily::G2, g2_y1_stated_terms());
  if (name == "e6-cone") return from_stated(CaseFamily::E6_1, e6_cone_stated_terms());
  if (name == "f4-cone") return from_stated(CaseFamily::F4_1, f4_cone_stated_terms());
  if (name == "e8-cone") return from_stated(CaseFamily::E8_1, e8_cone_stated_terms());
  throw std::invalid_argument("unknown source '" + name + "' (g2-y2, g2-y1, e6-cone, f4-cone, e8-cone)");
}

BettiTable load_table(const std::string& source, const std::string& file, int ambient) {
  if (!file.empty()) {
    const std::string text = read_file(file);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return betti_from_json(Json::parse(text));
    return parse_betti_text(text, ambient);
  }
  if (source.empty()) throw std::invalid_argument("give --source or --file");
  const auto s = source_of(source);
  return betti_of(s.terms, s.dims, s.ambient);
}

using Handler = std::function<Output()>;

class Cli {
 public:
  Cli() : app_("Littlewood complexes, Bott's algorithm and equivariant resolutions", "lwood") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--format", opts_.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app_.add_flag("--oracle", opts_.oracle, "Use the brute-force oracle for branching, Q-sets and tensor products");
    add_characters();
    add_combinatorics();
    add_littlewood();
    add_resolutions();
  }

  int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << help_text();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app_.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n" << help_text();
      return 2;
    }
    for (const auto& [sub, handler] : handlers_) {
      if (!sub->parsed()) continue;
      try {
        const Output o = handler();
        if (opts_.format == "json")
          out << o.json.dump(2) << "\n";
        else
          out << o.text << (o.text.empty() || o.text.back() == '\n' ? "" : "\n");
        return o.code;
      } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << "\n";
        return 1;
      } catch (const NotACharacterError& e) {
        err << "not a character: " << e.what() << "\n";
        return 1;
      } catch (const StableRangeError& e) {
        err << "outside the stable range: " << e.what() << "\n";
        return 2;
      } catch (const ScaleError& e) {
        err << "outside the supported scale: " << e.what() << "\n";
        return 2;
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
    }
    return 2;
  }

 private:
  std::string help_text() const {
    for (const auto* sub : app_.get_subcommands()) return sub->help();
    return app_.help();
  }

  CLI::App* command(const std::string& name, const std::string& description, Handler h) {
    auto* sub = app_.add_subcommand(name, description);
    handlers_.emplace_back(sub, std::move(h));
    return sub;
  }

  void add_characters() {
    auto* bott_cmd = command("bott", "Cohomology of the line bundle L(weight) on G/B", [this] {
      const auto rs = root_system_of(type);
      const Weight w = parse_weight(*rs, weight);
      const auto o = bott(w);
      const std::string text =
          o.vanishes ? "vanishes" : "H^" + std::to_string(o.degree) + " = V(" + weight_text(*rs, o.weight) + ")";
      return Output{to_json(o, *rs), text};
    });
    bott_cmd->add_option("--type", type, "Root system, e.g. G2, D4")->required();
    bott_cmd->add_option("--weight", weight, "fund:a,b,... or eps:x,y,...")->required();

    auto* dim_cmd = command("dim", "Dimension of an irreducible module", [this] {
      const auto rs = root_system_of(type);
      const Dynkin w = parse_weight(*rs, weight).to_dynkin();
      rs->check_weight(w);
      if (!rs->is_dominant(w)) throw std::invalid_argument("weight is not dominant");
      const BigInt d = rs->dim(w);
      return Output{{{"dim", to_json(d)}}, d.str()};
    });
    dim_cmd->add_option("--type", type)->required();
    dim_cmd->add_option("--weight", weight)->required();

    auto* mults_cmd = command("mults", "Weight multiplicities of an irreducible module", [this] {
      const auto rs = root_system_of(type);
      const Dynkin w = parse_weight(*rs, weight).to_dynkin();
      if (!rs->is_dominant(w)) throw std::invalid_argument("weight is not dominant");
      Character chi;
      if (all)
        chi = weight_multiplicities(*rs, w);
      else
        for (const auto& [mu, m] : *dominant_multiplicities(*rs, w)) chi.add(mu, m);
      std::string text;
      Json rows = Json::array();
      for (const auto& [mu, m] : chi) {
        text += weight_text(*rs, mu) + " " + m.str() + "\n";
        rows.push_back({{"weight", weight_text(*rs, mu)}, {"mult", to_json(m)}});
      }
      return Output{{{"dim", to_json(rs->dim(w))}, {"weights", rows}}, text};
    });
    mults_cmd->add_option("--type", type)->required();
    mults_cmd->add_option("--weight", weight)->required();
    mults_cmd->add_flag("--all", all, "List every weight, not only the dominant ones");

    auto* dec_cmd = command("decompose", "Decompose a tensor product of irreducibles", [this] {
      const auto rs = root_system_of(type);
      Decomposition<Dynkin> result{{rs->zero(), 1}};
      Character chi{{rs->zero(), 1}};
      for (const auto& text : weights) {
        const Dynkin w = parse_weight(*rs, text).to_dynkin();
        if (!rs->is_dominant(w)) throw std::invalid_argument("weight is not dominant: " + text);
        if (opts_.oracle)
          chi = multiply(chi, weight_multiplicities(*rs, w));
        else
          result = tensor_product(*rs, result, Decomposition<Dynkin>{{w, 1}});
      }
      if (opts_.oracle) result = decompose_character(*rs, chi);
      return Output{weights_json(*rs, result), weights_text(*rs, result)};
    });
    dec_cmd->add_option("--type", type)->required();
    dec_cmd->add_option("--weight", weights, "Repeat for each factor")->required();
  }

  void add_combinatorics() {
    auto* lr_cmd = command("lr", "Littlewood-Richardson coefficient or product", [this] {
      const Partition m = parse_partition(mu), n = parse_partition(nu);
      if (!lambda.empty()) {
        const BigInt c = lr_coefficient(parse_partition(lambda), m, n);
        return Output{{{"coefficient", to_json(c)}}, c.str()};
      }
      const auto d = lr_product(m, n, max_length);
      return Output{to_json(d), partitions_text(d)};
    });
    lr_cmd->add_option("--lambda", lambda, "Outer partition; omit for the full product");
    lr_cmd->add_option("--mu", mu)->required();
    lr_cmd->add_option("--nu", nu)->required();
    lr_cmd->add_option("--max-length", max_length, "Drop partitions with more parts");

    auto* skew_cmd = command("skew", "Expand a skew Schur functor", [this] {
      const auto d = skew_schur_expand({parse_partition(outer), parse_partition(inner)});
      return Output{to_json(d), partitions_text(d)};
    });
    skew_cmd->add_option("--outer", outer)->required();
    skew_cmd->add_option("--inner", inner)->required();

    auto* qset_cmd = command("qset", "Partitions in Q_{-1} (minus) or Q_1 (plus) of a given size", [this] {
      const QVariant v = parse_variant(variant);
      std::vector<Partition> ps;
      if (opts_.oracle) {
        if (size % 2) throw std::invalid_argument("Q-sets only have members of even size");
        for (const auto& p : partitions_of(size))
          if (in_q(p, v)) ps.push_back(p);
        std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
      } else {
        ps = enumerate_q(v, size);
      }
      const Json j = partition_list(ps);
      return Output{j, j.dump()};
    });
    qset_cmd->add_option("--variant", variant, "minus or plus")->required();
    qset_cmd->add_option("--size", size)->required();

    auto* pleth_cmd = command("pleth", "Schur decomposition of Lambda^k(Lambda^2 E) or Lambda^k(Sym^2 E)", [this] {
      const Form f = parse_form(form);
      Decomposition<Partition> d;
      if (opts_.oracle) {
        d = plethysm_wedge_power(k, f, dim_e);
      } else {
        for (const auto& p : enumerate_q(f == Form::Alternating ? QVariant::Minus : QVariant::Plus, 2 * k))
          if (p.length() <= dim_e) d.add(p, 1);
      }
      return Output{to_json(d), partitions_text(d)};
    });
    pleth_cmd->add_option("--form", form, "alternating or symmetric")->required();
    pleth_cmd->add_option("--k", k)->required();
    pleth_cmd->add_option("--dim-e", dim_e)->required();
  }

  void add_littlewood() {
    auto* branch_cmd = command("branch", "Restrict S_lambda of the natural module to Sp(m) or O(m)", [this] {
      const IsoGroup g = parse_iso_group(group);
      const auto d = branch_gl_to_iso(parse_partition(lambda), g,
                                      opts_.oracle ? BranchMethod::Oracle : BranchMethod::Littlewood);
      return Output{to_json(d), partitions_text(d)};
    });
    branch_cmd->add_option("--lambda", lambda)->required();
    branch_cmd->add_option("--group", group, "Sp(4), O(5), ...")->required();

    auto* lwood_cmd = command("lwood", "Littlewood complex C(lambda), one line per degree", [this] {
      const auto terms = littlewood_complex(parse_classical_family(family), parse_partition(lambda));
      return Output{to_json(terms), terms_text(terms)};
    });
    lwood_cmd->add_option("--family", family, "B, C or D")->required();
    lwood_cmd->add_option("--lambda", lambda)->required();

    auto* vl_cmd = command("verify-lwood", "Euler characteristic of C(lambda) against [lambda]", [this] {
      const auto r = verify_littlewood_identity(parse_classical_family(family), parse_partition(lambda), n,
                                                opts_.oracle ? BranchMethod::Oracle : BranchMethod::Littlewood);
      const std::string text = std::string(r.pass ? "pass" : "FAIL") + " " + r.case_name +
                               "\nlhs: " + partitions_text(r.lhs) + "\nrhs: " + partitions_text(r.rhs);
      return Output{to_json(r), text, r.pass ? 0 : 1};
    });
    vl_cmd->add_option("--family", family)->required();
    vl_cmd->add_option("--lambda", lambda)->required();
    vl_cmd->add_option("--n", n, "Rank")->required();

    auto* sp_cmd = command("spinor", "Resolution of the Littlewood spinor module", [this] {
      const auto terms = spinor_complex(parse_spinor_family(family), n);
      return Output{to_json(terms), terms_text(terms)};
    });
    sp_cmd->add_option("--family", family, "B, Dplus, Dminus or Dfull")->required();
    sp_cmd->add_option("--n", n)->required();

    auto* vs_cmd = command("verify-spinor", "Dimension-level Euler identity of the spinor resolution", [this] {
      const auto r = verify_spinor_identity(parse_spinor_family(family), n, parse_partition(lambda));
      const std::string text = std::string(r.pass ? "pass" : "FAIL") + " " + r.case_name + "\nlhs: " + r.lhs.str() +
                               "\nrhs: " + r.rhs.str();
      return Output{to_json(r), text, r.pass ? 0 : 1};
    });
    vs_cmd->add_option("--family", family)->required();
    vs_cmd->add_option("--n", n)->required();
    vs_cmd->add_option("--lambda", lambda)->required();

    auto* br_cmd = command("bracket", "The G-module paired with S_lambda E in the coordinate ring", [this] {
      const GroupCase c = parse_group_case(gcase);
      const Partition la = parse_partition(lambda);
      const auto rs = c.root_system();
      const auto d = ring_component(c, la);
      Json j{{"case", c.name()}, {"lambda", to_json(la)}};
      if (c.spherical()) j["weight"] = weight_text(*rs, bracket_dynkin(c, la));
      j["component"] = weights_json(*rs, d);
      return Output{j, weights_text(*rs, d)};
    });
    br_cmd->add_option("--case", gcase, "SpC3, SOB2, OD4, G2, F4_3, E6_1, ...")->required();
    br_cmd->add_option("--lambda", lambda)->required();
  }

  void add_resolutions() {
    auto* k_cmd = command("koszul", "Koszul complex of Lambda^2 E or Sym^2 E", [this] {
      const Form f = parse_form(form);
      if (i) {
        const auto d = koszul_terms(f, m, *i);
        return Output{to_json(d), partitions_text(d)};
      }
      const auto terms = koszul_complex(f, m);
      return Output{to_json(terms), terms_text(terms)};
    });
    k_cmd->add_option("--form", form)->required();
    k_cmd->add_option("--m", m, "dim E")->required();
    k_cmd->add_option("--i", i, "Single homological degree");

    auto* s_cmd = command("slice", "Degree-d component of the coordinate ring", [this] {
      const GroupCase c = parse_group_case(gcase);
      const auto slice = cauchy_slice(c, degree);
      const auto dims = case_dims(c);
      std::string text = decomposition_text(slice, [](const TermLabel& l) { return to_string(l); });
      const BigInt total = slice_dimension(c, slice);
      Json content = Json::array();
      for (const auto& [label, mult] : slice)
        content.push_back({{"e", to_json(label.first)}, {"g", to_json(label.second)}, {"mult", to_json(mult)}});
      return Output{{{"case", c.name()}, {"degree", degree}, {"dim", to_json(total)}, {"content", content}},
                    text + "\ndim " + total.str()};
    });
    s_cmd->add_option("--case", gcase)->required();
    s_cmd->add_option("--degree", degree)->required();

    command("g2-resolution", "Equivariant resolution of the G2 variety Y_2", [this] {
      const auto terms = g2_equivariant_resolution();
      const auto b = betti_of(terms, case_dims(GroupCase::exceptional(CaseFamily::G2)), 14);
      return Output{{{"terms", to_json(terms)}, {"betti", to_json(b)}}, terms_text(terms) + "\n" + b.to_text()};
    });

    auto* b_cmd = command("betti", "Betti table of a named resolution or a table file", [this] {
      const auto b = load_table(source, file, ambient);
      return Output{to_json(b), b.to_text()};
    });
    b_cmd->add_option("--source", source, "g2-y2, g2-y1, e6-cone, f4-cone, e8-cone");
    b_cmd->add_option("--file", file, "Betti table as text or JSON");
    b_cmd->add_option("--ambient", ambient, "Ambient dimension for text tables");

    auto* h_cmd = command("hilbert", "Hilbert series numerator from a Betti table", [this] {
      const auto b = load_table(source, file, ambient);
      const auto h = hilbert_numerator(b, codim);
      return Output{to_json(h), polynomial_string(h.numerator) + "\nkrull dim " + std::to_string(h.krull_dim)};
    });
    h_cmd->add_option("--source", source);
    h_cmd->add_option("--file", file);
    h_cmd->add_option("--ambient", ambient);
    h_cmd->add_option("--codim", codim)->required();

    auto* a_cmd = command("audit", "Dimension audit of a stated resolution against its Betti totals", [this] {
      AuditReport r;
      if (name == "g2-y1")
        r = dimension_audit(GroupCase::exceptional(CaseFamily::G2), g2_y1_stated_terms(),
                            betti_totals(g2_y1_betti_text()));
      else if (name == "f4-cone")
        r = dimension_audit(GroupCase::exceptional(CaseFamily::F4_1), f4_cone_stated_terms(),
                            betti_totals(e6_cone_betti_text()));
      else if (name == "e6-cone")
        r = dimension_audit(GroupCase::exceptional(CaseFamily::E6_1), e6_cone_stated_terms(),
                            betti_totals(e6_cone_betti_text()));
      else if (name == "e8-cone")
        r = dimension_audit(GroupCase::exceptional(CaseFamily::E8_1), e8_cone_stated_terms());
      else
        throw std::invalid_argument("unknown audit '" + name + "' (g2-y1, f4-cone, e6-cone, e8-cone)");
      std::string text = std::string(r.pass() ? "pass" : "FAIL") + " " + r.case_name + "\n";
      for (const auto& row : r.rows) {
        text += "F" + std::to_string(row.i) + " " + row.computed.str();
        if (row.expected) text += (row.pass() ? " = " : " != ") + row.expected->str();
        text += "\n";
      }
      return Output{to_json(r), text, r.pass() ? 0 : 1};
    });
    a_cmd->add_option("--name", name)->required();

    auto* suite_cmd = command("suite", "Run acceptance criteria (all when no --name is given)", [this] {
      std::vector<int> ids;
      for (const auto& n : names) ids.push_back(resolve_criterion(n));
      if (ids.empty())
        for (const auto& c : acceptance_criteria()) ids.push_back(c.id);
      const auto results = run_criteria(ids);
      std::string text;
      Json rows = Json::array();
      bool pass = true;
      for (const auto& r : results) {
        text += format_result(r) + "\n";
        rows.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"seconds", r.seconds}});
        pass = pass && r.pass;
      }
      return Output{{{"pass", pass}, {"criteria", rows}}, text, pass ? 0 : 1};
    });
    suite_cmd->add_option("--name", names, "Criterion id or name; repeatable");
  }

  CLI::App app_;
  Options opts_;
  // Option storage, bound by the subcommands.
  std::string type, weight, lambda, mu, nu, outer, inner, variant, form, family, group, gcase, source, file, name;
  std::vector<std::string> weights, names;
  bool all = false;
  int max_length = -1, size = 0, k = 0, dim_e = 0, n = 0, m = 0, degree = 0, codim = 0, ambient = 0;
  std::optional<int> i;
  std::vector<std::pair<CLI::App*, Handler>> handlers_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli;
  return cli.run(argc, argv, out, err);
}

}  // namespace lwood
