#pragma once
// n-qubit Pauli algebra over the binary symplectic representation.
// An operator is i^phase * (X-part) * (Z-part), where the X-part is the
// product of X on every set bit of x and likewise for z.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stab {

struct Pauli {
  int n = 0;
  std::vector<uint64_t> x, z;  // bit q of word q/64
  int phase = 0;               // power of i, mod 4

  static Pauli identity(int n);
  // single-qubit letter at qubit q; letter in {I,X,Y,Z}. Y carries phase 1
  // (Y = i X Z) so the operator is Hermitian.
  static Pauli single(int n, int q, char letter);

  bool xbit(int q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool zbit(int q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_xbit(int q, bool v);
  void set_zbit(int q, bool v);
  char letter(int q) const;  // I/X/Y/Z pattern letter at qubit q

  bool is_identity_pattern() const;
  int weight() const;                 // number of non-identity sites
  std::vector<int> support() const;   // qubit indices
  int xz_overlap() const;             // popcount(x & z)
  bool is_hermitian() const { return ((phase + xz_overlap()) % 2) == 0; }

  // same pattern, phase normalized so the operator is Hermitian with +1
  // leading sign (phase = overlap mod 2)
  Pauli hermitian_rep() const;

  // restriction to a subset of qubits (keep[q] true); phase reset to the
  // Hermitian representative of the restricted pattern
  Pauli restrict(const std::vector<char>& keep) const;

  bool same_pattern(const Pauli& o) const { return x == o.x && z == o.z; }
  bool operator==(const Pauli& o) const {
    return n == o.n && x == o.x && z == o.z && phase == o.phase;
  }
};

Pauli multiply(const Pauli& a, const Pauli& b);
// 0 if PQ = QP, 1 if PQ = -QP
int commutes_bit(const Pauli& a, const Pauli& b);
inline bool commute(const Pauli& a, const Pauli& b) { return commutes_bit(a, b) == 0; }

// text form: [+|-][i]?[IXYZ]{n}, e.g. "-iYI"
std::string to_string(const Pauli& p);
Pauli parse_pauli(const std::string& s);

using GeneratingSet = std::vector<Pauli>;

// F2 rank of the x|z rows (phases ignored)
int group_rank(const GeneratingSet& gens);

// if P's pattern lies in the F2 span of gens' patterns, return the
// combination as indices (ascending); otherwise nullopt
std::optional<std::vector<int>> pattern_in_span(const GeneratingSet& gens, const Pauli& p);

struct BinaryForm {
  int m = 0;
  std::vector<std::vector<uint8_t>> k;  // symmetric, zero diagonal
  BinaryForm() = default;
  explicit BinaryForm(int m_) : m(m_), k(m_, std::vector<uint8_t>(m_, 0)) {}
};

// deterministic first-wins greedy in index order over the form
std::vector<int> maximal_isotropic(int m, const BinaryForm& form);

}  // namespace stab
