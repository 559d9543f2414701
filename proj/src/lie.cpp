#include "core/lie.hpp"

#include <map>
#include <stdexcept>

namespace stab {

namespace {
using Key = std::pair<std::vector<uint64_t>, std::vector<uint64_t>>;
Key key_of(const Pauli& p) { return {p.x, p.z}; }
}  // namespace

ClosureResult closure(const std::vector<Pauli>& gens, size_t max_dim) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  int n = gens[0].n;
  std::map<Key, Pauli> basis;  // sorted pattern keys -> deterministic iteration
  std::vector<Pauli> work;
  for (const auto& g : gens) {
    if (!g.is_hermitian()) throw std::invalid_argument("closure generators must be Hermitian");
    if (g.is_identity_pattern()) continue;
    Pauli h = g.hermitian_rep();
    if (basis.emplace(key_of(h), h).second) work.push_back(h);
  }
  while (!work.empty()) {
    Pauli p = work.back();
    work.pop_back();
    // pair against a snapshot of current basis
    std::vector<Pauli> snap;
    snap.reserve(basis.size());
    for (auto& [k, v] : basis) snap.push_back(v);
    for (const Pauli& q : snap) {
      if (commutes_bit(p, q)) {
        Pauli c = multiply(p, q).hermitian_rep();
        if (!c.is_identity_pattern() && basis.emplace(key_of(c), c).second) {
          work.push_back(c);
          if (basis.size() > max_dim)
            throw std::runtime_error("Lie closure exceeded size bound");
        }
      }
    }
  }
  ClosureResult r;
  for (auto& [k, v] : basis) r.basis.push_back(v);
  r.dim = (int)r.basis.size();
  r.labels = classify(r.dim, n);
  r.full = (n < 16) && ((size_t)r.dim == (size_t(1) << (2 * n)) - 1);
  return r;
}

std::vector<std::string> classify(int dim, int n_qubits) {
  std::vector<std::string> out;
  for (int m = 1; m <= 16; ++m) {
    long long su = (1LL << (2 * m)) - 1;
    if (su == dim) out.push_back("su(2^" + std::to_string(m) + ")");
    if (4 * su == dim) out.push_back("4*su(2^" + std::to_string(m) + ")");
  }
  for (int nn = 2; nn <= 64; ++nn)
    if ((long long)nn * (2 * nn - 1) == dim) out.push_back("so(" + std::to_string(2 * nn) + ")");
  if (n_qubits < 16 && (long long)dim == (1LL << (2 * n_qubits)) - 1) out.push_back("full");
  if (out.empty()) out.push_back("unclassified");
  return out;
}

}  // namespace stab
