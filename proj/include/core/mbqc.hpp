#pragma once
// Adaptive single-qubit-measurement protocol simulator: resource states,
// per-shot byproduct recursion, logical channel predictions, error-scaling
// verification and commutator-gate composition.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/localization.hpp"
#include "core/models.hpp"
#include "core/spectra.hpp"

namespace stab {

struct Step {
  Coord site;      // bulk site carrying the rotated measurement
  std::string g;   // group element localizable at the site
  double theta = 0;
};

struct Resource {
  SpinModel model;
  SymmetryCatalog catalog;
  LogicalSet logical;
  StateVector state;
};

// ground state of the model prepared for protocol runs; pure stabilizer
// projection when all field terms vanish, exact diagonalization otherwise
Resource make_resource(const SpinModel& model, uint64_t seed = 12345);

// sigma_k(g) = <R_k(g)> on the resource state
double sigma_value(const Resource& res, Coord site, const std::string& label);
std::vector<double> sigma_of_steps(const Resource& res, const std::vector<Step>& steps);

struct ProtocolOptions {
  bool strict_separation = true;  // consecutive steps >= 2*delta + d apart
  double delta = 0.0;
  double d = 1.5;                 // horizontal unit-cell distance
  int flip_qubit = -1;            // record the negated outcome at this qubit
};

struct ProtocolEstimate {
  double mean = 0;
  double se = 0;    // standard error of the mean
  int frame = -1;   // readout frame the label was estimated in
};

struct ProtocolResult {
  std::map<std::string, ProtocolEstimate> table;  // primary labels
  std::vector<double> sigmas;                     // per step
  int shots = 0;
  uint64_t seed = 0;
  int n_frames = 0;
};

// full adaptive measurement simulation; `shots` shots per readout frame
ProtocolResult run_protocol(const Resource& res, const std::vector<Step>& steps,
                            int shots, uint64_t seed,
                            const ProtocolOptions& opts = {});

// Heisenberg composition of the logical mixture channels
std::map<std::string, double> predict_logical(const LogicalSet& logical,
                                              const std::vector<Step>& steps,
                                              const std::vector<double>& sigmas);

// eps = theta^2/N * (1 - sigma^2)/sigma^2
double error_bound(double theta, int N, double sigma);

struct ScalingRow {
  int N = 0;
  double distance = 0;  // trace distance between Choi states
  double bound = 0;
};

// N-fold split-rotation mixture vs the target unitary rotation on one logical
// qubit, exact channel composition
std::vector<ScalingRow> verify_error_scaling(double theta, double sigma,
                                             const std::vector<int>& Ns);

// operator distance between the group-commutator sequence for two
// anticommuting logical generators and exp(-(dtheta)^2/4 [T, T'])
double compose_commutator(const LogicalSet& logical, const std::string& g,
                          const std::string& gprime, double dtheta);

}  // namespace stab
