#pragma once
// Shared test utilities: dense matrix oracle for small Pauli operators and a
// deterministic random-operator source.

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "core/pauli.hpp"

namespace testutil {

using Mat = Eigen::MatrixXcd;

// 2^n x 2^n matrix of i^phase X^x Z^z: Z first, then X flips, matching the
// internal basis-index convention (qubit q <-> bit q)
inline Mat dense(const stab::Pauli& p) {
  int n = p.n, dim = 1 << n;
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Mat m = Mat::Zero(dim, dim);
  int xm = 0, zm = 0;
  for (int q = 0; q < n; ++q) {
    if (p.xbit(q)) xm |= 1 << q;
    if (p.zbit(q)) zm |= 1 << q;
  }
  for (int b = 0; b < dim; ++b) {
    double sign = (__builtin_popcount(b & zm) & 1) ? -1.0 : 1.0;
    m(b ^ xm, b) += ipow[((p.phase % 4) + 4) % 4] * sign;
  }
  return m;
}

inline stab::Pauli random_pauli(std::mt19937_64& rng, int n) {
  stab::Pauli p = stab::Pauli::identity(n);
  static const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (int q = 0; q < n; ++q) {
    char l = letters[rng() % 4];
    if (l != 'I') p = stab::multiply(p, stab::Pauli::single(n, q, l));
  }
  p.phase = (p.phase + (int)(rng() % 4)) % 4;
  return p;
}

}  // namespace testutil
