#pragma once
// Real Lie algebra generated by Pauli operators under commutators and linear
// combinations, with dimension-based classification.

#include <set>
#include <string>
#include <vector>

#include "core/pauli.hpp"

namespace stab {

struct ClosureResult {
  std::vector<Pauli> basis;  // Hermitian representatives, deduplicated patterns
  int dim = 0;
  std::vector<std::string> labels;
  bool full = false;           // dim == 4^n - 1
  bool formula_mismatch = false;  // set by callers comparing to family formulas
};

ClosureResult closure(const std::vector<Pauli>& gens, size_t max_dim = 1u << 20);

// dimension-based family labels: su(2^m), so(2n), 4*su(2^m), "full"
std::vector<std::string> classify(int dim, int n_qubits);

}  // namespace stab
