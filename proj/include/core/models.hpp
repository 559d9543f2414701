#pragma once
// Hamiltonian families (anisotropic toric code, open H variant for MBQC,
// XZ-star) and their symmetry catalogs with boundary representations.

#include <map>
#include <string>
#include <vector>

#include "core/lattice.hpp"
#include "core/pauli.hpp"

namespace stab {

struct TermInfo {
  std::string family;  // "A","B","xfield","zfield","C","D"
  int x = 0, y = 0;    // lattice cell indices of the term
};

struct SpinModel {
  LatticeSpec lattice;
  std::vector<Coord> sites;      // qubit index -> coordinate
  std::map<Coord, int> index;    // coordinate -> qubit index
  std::vector<std::pair<double, Pauli>> terms;
  std::vector<TermInfo> term_info;
  std::vector<int> stabilizer_idx;
  double h_x = 0, h_z = 0;       // alpha = h_x = h_z for the open MBQC variant
  double eps_field = 0;          // optional boundary symmetry-breaking field

  int n_qubits() const { return (int)sites.size(); }
  int qubit(Coord c) const;
  GeneratingSet stabilizers() const;
};

struct CatalogEntry {
  std::string label;
  Pauli U, VL, VR;
  bool derived = false;     // recorded group element that is a product of generators
  int chi = 0;
  char letter = ' ';        // dominant Pauli letter of the representation
};

struct SymmetryCatalog {
  LatticeSpec lattice;
  std::vector<Coord> sites;
  std::vector<CatalogEntry> entries;
  std::map<std::string, int> by_label;
  std::vector<int> left_sites, right_sites, bulk_sites;  // qubit indices
  std::vector<std::string> notes;

  int n_qubits() const { return (int)sites.size(); }
  const CatalogEntry& at(const std::string& label) const;
  // single-site restriction of U(label) at qubit q
  char local_rep(int q, const std::string& label) const;
  std::vector<std::string> primary_labels() const;
};

// Builders. For the open-smooth toric lattice the MBQC variant is built:
// requires h_x == h_z (= alpha); boundary-column X fields are dropped (or set
// to eps_field when nonzero).
SpinModel build_toric(const LatticeSpec& lattice, double h_x, double h_z,
                      double eps_field = 0.0);
SpinModel build_xz_star(const LatticeSpec& lattice);

SymmetryCatalog symmetry_catalog(const SpinModel& model);

}  // namespace stab
