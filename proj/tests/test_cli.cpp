#include <doctest.h>

#include "lwood/cli.hpp"
#include "lwood/json_io.hpp"
#include "lwood/reference_data.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace lwood;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lwood");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("documented examples") {
  auto dim = cli({"dim", "--type", "G2", "--weight", "1,0"});
  CHECK(dim.code == 0);
  CHECK(dim.out == "7\n");

  auto q = cli({"qset", "--variant", "minus", "--size", "4"});
  CHECK(q.code == 0);
  CHECK(q.out == "[[2,1,1]]\n");

  auto v = cli({"verify-lwood", "--family", "C", "--lambda", "2,2", "--n", "2"});
  CHECK(v.code == 0);
  CHECK(first_line(v.out).rfind("pass", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  auto unknown = cli({"dim", "--type", "G2", "--weight", "1,0", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(cli({"dim", "--type", "G2"}).code == 2);
  CHECK(cli({"dim", "--type", "G2", "--weight", "-1,0"}).code == 2);
  CHECK(cli({"branch", "--lambda", "1,1,1", "--group", "Sp(4)"}).code == 2);
  CHECK(cli({"koszul", "--form", "alt", "--m", "3", "--i", "9"}).code == 2);
  CHECK(cli({"spinor", "--family", "B", "--n", "9"}).code == 2);
  CHECK(cli({"audit", "--name", "f4-cone"}).code == 1);
  CHECK(cli({"audit", "--name", "e6-cone"}).code == 0);
  CHECK(cli({"suite", "--name", "g2-y1-audit"}).code == 1);
  CHECK(cli({"suite", "--name", "1", "--name", "quadric-dims"}).code == 0);
  CHECK(cli({"suite", "--name", "99"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("oracle flag agrees with the default method") {
  const std::vector<std::vector<std::string>> commands{
      {"qset", "--variant", "plus", "--size", "8"},
      {"pleth", "--form", "symmetric", "--k", "3", "--dim-e", "4"},
      {"pleth", "--form", "alternating", "--k", "3", "--dim-e", "5"},
      {"branch", "--lambda", "3,2,1", "--group", "O(7)"},
      {"branch", "--lambda", "2,2,1", "--group", "Sp(6)"},
      {"decompose", "--type", "G2", "--weight", "1,0", "--weight", "0,1"},
      {"verify-lwood", "--family", "D", "--lambda", "2,1", "--n", "3"},
  };
  for (const auto& c : commands) {
    auto plain = cli(c);
    auto with_oracle = c;
    with_oracle.push_back("--oracle");
    auto oracle = cli(with_oracle);
    CHECK(plain.code == 0);
    CHECK(plain.out == oracle.out);
  }
}

TEST_CASE("JSON output is one document and round-trips") {
  const std::vector<std::vector<std::string>> commands{
      {"bott", "--type", "G2", "--weight", "fund:-3,1"},
      {"bott", "--type", "B2", "--weight", "eps:1/2,1/2"},
      {"dim", "--type", "E8", "--weight", "0,0,0,0,0,0,0,1"},
      {"mults", "--type", "G2", "--weight", "1,0", "--all"},
      {"lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1"},
      {"skew", "--outer", "3,2", "--inner", "1"},
      {"lwood", "--family", "B", "--lambda", "2,1,1"},
      {"spinor", "--family", "Dplus", "--n", "3"},
      {"verify-spinor", "--family", "Dfull", "--n", "2", "--lambda", "2,1"},
      {"bracket", "--case", "F4_6", "--lambda", "2"},
      {"koszul", "--form", "sym", "--m", "2"},
      {"slice", "--case", "E6_3", "--degree", "2"},
      {"g2-resolution"},
      {"betti", "--source", "g2-y1"},
      {"hilbert", "--source", "g2-y2", "--codim", "5"},
      {"audit", "--name", "e8-cone"},
      {"suite", "--name", "koszul-example"},
  };
  for (auto c : commands) {
    c.push_back("--format");
    c.push_back("json");
    auto r = cli(c);
    INFO(c[0]);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);  // throws on trailing content
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(Json::parse(j.dump()).dump() == j.dump());
  }
}

TEST_CASE("Betti tables read back from files") {
  const std::string json_path = "lwood_cli_betti.json", text_path = "lwood_cli_betti.txt";
  auto json = cli({"betti", "--source", "g2-y2", "--format", "json"});
  std::ofstream(json_path) << json.out;
  std::ofstream(text_path) << g2_y2_betti_text();
  auto from_json = cli({"betti", "--file", json_path});
  auto from_text = cli({"betti", "--file", text_path, "--ambient", "14"});
  CHECK(from_json.out == g2_y2_betti_text());
  CHECK(from_text.out == g2_y2_betti_text());
  CHECK(cli({"betti", "--file", json_path, "--format", "json"}).out == json.out);
  auto h = cli({"hilbert", "--file", text_path, "--codim", "5"});
  CHECK(h.code == 0);
  std::remove(json_path.c_str());
  std::remove(text_path.c_str());
}
