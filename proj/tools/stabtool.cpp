// Command-line front end over the C engine interface.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stabengine.h"

namespace {

struct Options {
  std::string model = "toric";
  int lx = 4, ly = 3;
  double alpha = 0.0;
  std::string alpha_grid;
  int shots = 2000;
  unsigned long long seed = 12345;
  std::string out;
  bool strict_separation = true;
  bool periodic = false;
};

std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    double d = std::stod(tok, &pos);
    if (pos != tok.size()) throw CLI::ValidationError("--alpha-grid", "bad number: " + tok);
    v.push_back(d);
  }
  return v;
}

int emit(const Options& opt, int status, char* body) {
  if (status != SE_OK || !body) {
    std::cerr << "error: " << se_last_error() << "\n";
    se_free(body);
    return status == SE_OK ? SE_CHECK_FAILED : status;
  }
  if (opt.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file: " << opt.out << "\n";
      se_free(body);
      return SE_CONFIG_ERROR;
    }
    f << body;
  }
  se_free(body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer-model analysis tool"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--model", opt.model, "model family: toric | xz");
  app.add_option("--lx", opt.lx, "horizontal extent (unit cells)");
  app.add_option("--ly", opt.ly, "vertical extent (unit cells)");
  app.add_option("--alpha", opt.alpha, "field strength");
  app.add_option("--alpha-grid", opt.alpha_grid, "comma-separated alpha values");
  app.add_option("--shots", opt.shots, "measurement shots per readout frame");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--out", opt.out, "output file (default: stdout)");
  app.add_flag("--strict-separation,!--no-strict-separation", opt.strict_separation,
               "enforce the step-separation rule");
  app.add_flag("--periodic", opt.periodic, "periodic boundary conditions");

  auto* analyze = app.add_subcommand("analyze", "symmetry and localization report");
  auto* sweep = app.add_subcommand("sweep", "order parameters vs alpha (CSV)");
  auto* simulate = app.add_subcommand("simulate", "adaptive measurement protocol run");
  auto* invariants = app.add_subcommand("invariants", "sector invariants report");
  auto* oracle = app.add_subcommand("oracle", "cross-check against dense solvers");
  // global flags may follow the subcommand
  for (auto* sc : {analyze, sweep, simulate, invariants, oracle}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : SE_CONFIG_ERROR;
  }

  std::vector<double> grid;
  try {
    grid = parse_grid(opt.alpha_grid);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return SE_CONFIG_ERROR;
  }
  if (grid.empty()) grid.push_back(opt.alpha);

  se_model* m = nullptr;
  int rc = se_model_create(opt.model.c_str(), opt.lx, opt.ly, opt.alpha,
                           opt.periodic ? 1 : 0, &m);
  if (rc != SE_OK) {
    std::cerr << "error: " << se_last_error() << "\n";
    return rc;
  }
  char* body = nullptr;
  if (analyze->parsed()) {
    rc = se_analyze(m, &body);
  } else if (sweep->parsed()) {
    rc = se_sweep(m, grid.data(), (int)grid.size(), &body);
  } else if (simulate->parsed()) {
    rc = se_simulate(m, opt.shots, opt.seed, opt.strict_separation ? 1 : 0, &body);
  } else if (invariants->parsed()) {
    rc = se_invariants(m, &body);
  } else if (oracle->parsed()) {
    rc = se_oracle(m, grid.data(), (int)grid.size(), &body);
  }
  int out_rc = emit(opt, rc, body);
  se_model_destroy(m);
  return out_rc;
}
