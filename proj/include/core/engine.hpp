#pragma once
// Report builders behind the CLI and the C API: one reproducible text artifact
// per command, tagged with tool version and config hash.

#include <cstdint>
#include <string>
#include <vector>

namespace stab {

struct RunConfig {
  std::string command;          // analyze | sweep | simulate | invariants | oracle
  std::string model = "toric";  // toric | xz
  int lx = 4, ly = 3;
  double alpha = 0.0;
  std::vector<double> alpha_grid;
  int shots = 2000;
  uint64_t seed = 12345;
  bool strict_separation = true;
  bool periodic = false;  // invariants and statistics run on periodic lattices
};

std::string engine_version();
std::string config_hash(const RunConfig& cfg);  // FNV-1a 64 over canonical form

// Returns the artifact body (JSON, or CSV for sweep). Throws
// std::invalid_argument for configuration errors and ResourceLimitError when
// a size cap is exceeded.
std::string run_command(const RunConfig& cfg);

}  // namespace stab
