#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qslab/opspec.hpp"
#include "qslab/verify.hpp"

using namespace qslab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qslab: quaternionic spectral theory checks"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string alpha_list, p_list, quad;
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("suite", cfg.suite, "quat, qmatrix, spectrum, trace, schatten, slice, bergman or all")
      ->required();
  verify->add_option("--n", cfg.n, "matrix dimension (1..32)");
  verify->add_option("--N", cfg.N, "Bergman truncation degree (1..64)");
  verify->add_option("--alpha", alpha_list, "comma-separated weights, each > -1");
  verify->add_option("--p", p_list, "comma-separated exponents, inf allowed");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--quad", quad, "disk quadrature RxA (radial x angular)");
  verify->add_option("--tol", cfg.tol_scale, "factor applied to every bound");
  verify->add_option("--out", cfg.out, "report path (default stdout)");

  std::string op, grid, csv_out;
  double alpha = 0.0;
  std::size_t trunc = 24;
  auto* dump = app.add_subcommand("dump-berezin", "write the Berezin transform of an operator on a polar grid as CSV");
  dump->add_option("--op", op, "operator, e.g. \"I\", \"(1+2i)*P(0.3) - J\", \"lift(m.json)\"")->required();
  dump->add_option("--grid", grid, "polar grid RxA: radii k/R, angles 2 pi a/A")->required();
  dump->add_option("--out", csv_out, "CSV path (default stdout)");
  dump->add_option("--alpha", alpha, "weight (> -1)");
  dump->add_option("--N", trunc, "truncation degree (0..64)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) {
    SuiteReport rep;
    try {
      if (!alpha_list.empty()) cfg.alphas = parse_real_list(alpha_list, false);
      if (!p_list.empty()) cfg.ps = parse_real_list(p_list, true);
      if (!quad.empty()) cfg.quad = parse_quad(quad);
      rep = run_suite(cfg);
    } catch (const ConfigError& e) {
      std::cerr << "qslab verify: " << e.what() << "\n";
      return kExitUsage;
    }
    if (!write_out(cfg.out, report_json(rep))) {
      std::cerr << "qslab verify: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
    const auto failed = rep.failures();
    for (const CheckRecord* r : failed) {
      std::fprintf(stderr, "FAIL %s measured=%.6g bound=%.6g%s%s\n", r->id.c_str(), r->measured, r->bound,
                   r->error.empty() ? "" : " error: ", r->error.c_str());
    }
    std::fprintf(stderr, "%zu checks, %zu failed\n", rep.records.size(), failed.size());
    return failed.empty() ? 0 : kExitFail;
  }

  try {
    const BergmanSpace s(alpha, trunc, UnitImaginary::e1(), {1, 1});
    const BergOperator t = parse_operator(op, s);
    const auto points = parse_grid(grid);
    if (!write_out(csv_out, berezin_csv(s, t, points))) {
      std::cerr << "qslab dump-berezin: cannot write " << csv_out << "\n";
      return kExitUsage;
    }
  } catch (const DomainError& e) {
    std::cerr << "qslab dump-berezin: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
