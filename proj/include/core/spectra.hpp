#pragma once
// Exact ground states and expectation values (dense for small dimensions,
// matrix-free Lanczos above), stabilizer-state expectations, and the order
// parameter sweep engine.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/duality.hpp"
#include "core/models.hpp"
#include "core/pauli.hpp"

namespace stab {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amp;  // length 2^n
};

// out += coeff * i^phase X^x Z^z |v>
void apply_pauli_add(const Pauli& p, std::complex<double> coeff,
                     const std::vector<std::complex<double>>& v,
                     std::vector<std::complex<double>>& out);
StateVector apply_pauli(const Pauli& p, const StateVector& v);

struct GroundResult {
  StateVector state;
  double energy = 0;
  double gap = 0;          // estimate of E1 - E0
  bool degenerate = false; // gap < 1e-8
  double residual = 0;     // ||Hv - Ev||
};

// lowest eigenpair; dense below 2^11, matrix-free Lanczos above (n <= 14).
// If the ground space is (numerically) degenerate and tie_break symmetries
// are given, the returned vector is projected into their +1 sectors.
GroundResult ground_state(const std::vector<std::pair<double, Pauli>>& terms, int n,
                          uint64_t seed = 12345,
                          const GeneratingSet* tie_break_syms = nullptr);

double expect(const StateVector& v, const Pauli& p);

// exact expectation of p on the stabilizer state fixed by `stabs` (all +1,
// commuting, independent or not): +-1 if the pattern is in the group, else 0
double stabilizer_expectation(const GeneratingSet& stabs, const Pauli& p);

struct SweepRow {
  double alpha = 0;
  std::string id;
  double value = 0;
  std::string route;  // "chain" | "oracle"
};

struct SweepOptions {
  bool with_oracle = false;   // add dense 2D rows (n_qubits <= 14 required)
  bool with_fm = false;       // Fredenhagen-Marcu ratio (oracle route only)
  uint64_t seed = 12345;
};

// order parameters vs alpha for the open toric lattice; chain route via the
// M~ decomposition, optional dense-oracle cross rows
std::vector<SweepRow> order_parameter_sweep(const LatticeSpec& lattice,
                                            const std::vector<double>& alphas,
                                            const SweepOptions& opts);

}  // namespace stab
