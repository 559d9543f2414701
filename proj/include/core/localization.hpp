#pragma once
// kappa form, localizing operators beta/R, logical observables T(g) and the
// readout subgroup H.

#include <map>
#include <string>
#include <vector>

#include "core/models.hpp"
#include "core/pauli.hpp"

namespace stab {

struct LocalizedOp {
  std::string label;  // group element localizable at the site
  char beta = 'I';    // single-site Pauli representative
  Pauli R;            // beta (x) U_{>k}, Hermitian with +1 leading phase
};

struct LocalizationEntry {
  Coord site;
  std::vector<LocalizedOp> localizable;
};

struct LogicalSet {
  std::vector<std::string> labels;            // catalog order
  std::map<std::string, Pauli> T;
  std::vector<std::string> H_labels;          // kept isotropic subgroup generators
  std::map<std::string, int> init_values;     // +1 / -1 / 0
  int rank_H = 0;                             // number of kept generator labels
};

// kappa from V_L commutation, verified against the V_R-derived form; entries
// indexed like catalog.entries
BinaryForm kappa(const SymmetryCatalog& catalog);

// all group elements localizable at a bulk site, with deterministic beta
// representative (preference Z, X, Y, I)
LocalizationEntry localize(const SymmetryCatalog& catalog, Coord site);

// R_site(g) = beta (x) U_{>site}(g); throws if g is not localizable there
Pauli build_R(const SymmetryCatalog& catalog, Coord site, const std::string& label);

LogicalSet logical_observables(const SymmetryCatalog& catalog);

}  // namespace stab
