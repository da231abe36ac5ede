#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "qslab/opspec.hpp"
#include "qslab/verify.hpp"

using namespace qslab;

namespace {

SuiteConfig small(const std::string& suite) {
  SuiteConfig c;
  c.suite = suite;
  c.n = 3;
  c.N = 6;
  c.alphas = {0.0, 1.0};
  c.quad = {20, 32};
  return c;
}

std::vector<std::vector<double>> read_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QSLAB_CLI) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("lists and quadrature strings") {
  CHECK(parse_real_list("1,2.5,3", false) == std::vector<double>{1, 2.5, 3});
  const auto p = parse_real_list("1,inf", true);
  CHECK(std::isinf(p[1]));
  CHECK_THROWS_AS(parse_real_list("1,inf", false), ConfigError);
  CHECK_THROWS_AS(parse_real_list("1,,2", false), ConfigError);
  CHECK_THROWS_AS(parse_real_list("1;2", false), ConfigError);
  CHECK_THROWS_AS(parse_real_list("", false), ConfigError);
  const QuadratureResolution q = parse_quad("200x256");
  CHECK(q.radial == 200);
  CHECK(q.angular == 256);
  for (const char* bad : {"200", "x256", "0x4", "4x0", "3x4x5", "a x b", "-3x4"})
    CHECK_THROWS_AS(parse_quad(bad), ConfigError);
}

TEST_CASE("config validation") {
  SuiteConfig c;
  CHECK_NOTHROW(validate(c));
  c.suite = "nope";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SuiteConfig{};
  c.n = 33;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SuiteConfig{};
  c.N = 65;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SuiteConfig{};
  c.alphas = {-1.0};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SuiteConfig{};
  c.ps = {0.0};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SuiteConfig{};
  c.tol_scale = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  CHECK_THROWS_AS(run_suite(c), ConfigError);
}

TEST_CASE("records are sorted, consistent and reproducible") {
  const SuiteReport a = run_suite(small("trace"));
  REQUIRE(a.records.size() == 4);
  for (std::size_t k = 1; k < a.records.size(); ++k) CHECK(a.records[k - 1].id < a.records[k].id);
  for (const auto& r : a.records) {
    CHECK(r.pass == (r.samples > 0 && r.measured <= r.bound));
    CHECK(r.inputs_digest.size() == 16);
    CHECK(!r.anchor.empty());
  }
  CHECK(a.passed());

  const SuiteReport b = run_suite(small("trace"));
  CHECK(report_json(a, false) == report_json(b, false));

  SuiteConfig other = small("trace");
  other.seed = 8;
  CHECK(report_json(run_suite(other), false) != report_json(a, false));
}

TEST_CASE("report layout") {
  const SuiteReport r = run_suite(small("slice"));
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"meta", "records", "timing"});
  CHECK(j["meta"]["config"]["suite"] == "slice");
  CHECK(j["meta"]["summary"]["checks"] == r.records.size());
  CHECK(j["records"].size() == r.records.size());
  CHECK(j["records"][0].begin().key() == "id");
  CHECK(j["timing"]["checks"].size() == r.records.size());

  const auto k = nlohmann::ordered_json::parse(report_json(r, false));
  CHECK(!k.contains("timing"));
  // the digest ignores wall times
  SuiteReport slow = r;
  for (auto& rec : slow.records) rec.wall_ms += 1000;
  CHECK(nlohmann::ordered_json::parse(report_json(slow))["meta"]["digest"] == j["meta"]["digest"]);

  SuiteConfig c = small("quat");
  c.ps = {1.0, INFINITY};
  CHECK(nlohmann::ordered_json::parse(report_json(run_suite(c)))["meta"]["config"]["p"][1] == "inf");
}

TEST_CASE("a failing bound is reported, not thrown") {
  SuiteConfig c = small("trace");
  c.tol_scale = 1e-300;
  const SuiteReport r = run_suite(c);
  CHECK(!r.passed());
  CHECK(!r.failures().empty());
  // the exact counterexample stays at zero
  for (const auto& rec : r.records)
    if (rec.id == "trace.basis_dependence") CHECK(rec.pass);
}

TEST_CASE("fnv1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("operator specs") {
  const BergmanSpace s(0.0, 8);
  const Complex z{0.3, -0.4};
  const auto val = [&](const std::string& spec) { return berezin(s, parse_operator(spec, s), z).value; };
  CHECK(std::abs(val("I") - 1.0) < 1e-15);
  CHECK(std::abs(val("J") - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(val("P(0)") - std::pow(1 - std::norm(z), 2)) < 1e-15);
  const Complex p = berezin(s, projection_pz(s, {0.3, 0.2}), z).value;
  CHECK(std::abs(val("P(0.3+0.2i)") - p) < 1e-15);
  CHECK(std::abs(val("(1+2i)*P(0.3+0.2i)") - Complex(1, 2) * p) < 1e-15);
  CHECK(std::abs(val("2*I - J") - Complex(2, -1)) < 1e-15);
  CHECK(std::abs(val("2i*I") - Complex(0, 2)) < 1e-15);
  CHECK(std::abs(val("i * J") + 1.0) < 1e-15);
  CHECK(std::abs(val("-(I + J)") - Complex(-1, -1)) < 1e-15);
  CHECK(std::abs(val(" 0.5 * ( I - P(-0.1i) ) ") - 0.5 * (1.0 - berezin(s, projection_pz(s, {0, -0.1}), z).value)) <
        1e-15);
  for (const char* bad : {"", "K", "P(1)", "P(0.3", "2 I", "I +", "I)", "(1+2i)", "lift(/nonexistent.json)"})
    CHECK_THROWS_AS(parse_operator(bad, s), SpecError);
}

TEST_CASE("lift files") {
  const BergmanSpace s(1.0, 2);
  const std::string path = "test_report_lift.json";
  {
    std::ofstream f(path);
    f << "[[[1,0],[0,0],[0,0]],[[0,0],[2,1],[0,0]],[[0,0],[0,0],[0,-1]]]";
  }
  const BergOperator t = parse_operator("lift(" + path + ")", s);
  CHECK(t.tail == Complex(0.0));
  CHECK(t.m(1, 1) == Complex(2, 1));
  CHECK(t.m(2, 2) == Complex(0, -1));
  {
    std::ofstream f(path);
    f << "[[[1,0],[0,0]],[[0,0],[1,0]]]";
  }
  CHECK_THROWS_AS(parse_operator("lift(" + path + ")", s), SpecError);
  {
    std::ofstream f(path);
    f << "[[1,2,3]";
  }
  CHECK_THROWS_AS(parse_operator("lift(" + path + ")", s), SpecError);
  std::remove(path.c_str());
}

TEST_CASE("grids and CSV") {
  CHECK(parse_grid("0x0").empty());
  CHECK(parse_grid("3x0").empty());
  const auto g = parse_grid("4x8");
  REQUIRE(g.size() == 32);
  CHECK(g[0] == Complex(0.0));
  CHECK(std::abs(std::abs(g[31]) - 0.75) < 1e-15);
  for (const char* bad : {"4", "4x", "x4", "4x8x", "-1x3", "5000x1"}) CHECK_THROWS_AS(parse_grid(bad), SpecError);

  const BergmanSpace s(0.0, 10);
  std::string header;
  CHECK(berezin_csv(s, BergOperator::identity(s), {}) == "re_z,im_z,re_value,im_value\r\n");

  const BergOperator t = parse_operator("(0.5-1.5i)*P(0.2+0.1i) + J", s);
  const auto rows = read_csv(berezin_csv(s, t, g), &header);
  CHECK(header == "re_z,im_z,re_value,im_value\r");
  REQUIRE(rows.size() == g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Complex z{rows[k][0], rows[k][1]};
    CHECK(z == g[k]);
    const Complex v = berezin(s, t, z).value;
    CHECK(rows[k][2] == v.real());
    CHECK(rows[k][3] == v.imag());
  }
  // P_0 at alpha = 0 is (1 - |z|^2)^2
  for (const auto& r : read_csv(berezin_csv(s, parse_operator("P(0)", s), g), nullptr))
    CHECK(std::abs(r[2] - std::pow(1 - r[0] * r[0] - r[1] * r[1], 2)) < 1e-15);
}

TEST_CASE("command line") {
  CHECK(run_cli("verify trace --n 3 --seed 5 --out cli_a.json") == 0);
  CHECK(run_cli("verify trace --n 3 --seed 5 --out cli_b.json") == 0);
  auto strip = [](const std::string& path) {
    auto j = nlohmann::ordered_json::parse(slurp(path));
    j.erase("timing");
    return j.dump();
  };
  CHECK(strip("cli_a.json") == strip("cli_b.json"));
  CHECK(run_cli("verify trace --n 3 --tol 1e-300 --out cli_c.json") == 1);
  CHECK(run_cli("verify nosuch") == 2);
  CHECK(run_cli("verify trace --n 40") == 2);
  CHECK(run_cli("verify bergman --alpha -2") == 2);
  CHECK(run_cli("verify bergman --quad 10by10") == 2);
  CHECK(run_cli("verify trace --bogus 1") == 2);
  CHECK(run_cli("") == 2);

  CHECK(run_cli("dump-berezin --op I --grid 2x3 --out cli.csv") == 0);
  const auto rows = read_csv(slurp("cli.csv"), nullptr);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) CHECK(r[2] == 1.0);
  CHECK(run_cli("dump-berezin --op I --grid 0x0 --out cli.csv") == 0);
  CHECK(slurp("cli.csv") == "re_z,im_z,re_value,im_value\r\n");
  CHECK(run_cli("dump-berezin --op 'P(' --grid 2x2 --out cli.csv") == 2);
  CHECK(run_cli("dump-berezin --op I --grid 2 --out cli.csv") == 2);
  CHECK(run_cli("dump-berezin --op I --grid 2x2 --alpha -3 --out cli.csv") == 2);
  for (const char* f : {"cli_a.json", "cli_b.json", "cli_c.json", "cli.csv"}) std::remove(f);
}
