#pragma once
// Operator substitution maps (direct M, Kramers-Wannier dual M~, chain-level
// duality D) and the decomposition of the toric family into decoupled
// transverse-field Ising chains.

#include <map>
#include <string>
#include <vector>

#include "core/models.hpp"
#include "core/pauli.hpp"

namespace stab {

enum class MapKind { DirectM, DualMtilde };

struct ChainSpec {
  std::string sector;  // "electric" | "magnetic"
  int row = 0;
  int n_sites = 0;
  std::vector<double> field;          // per site
  std::vector<double> coupling;       // per bond (n_sites - 1)
  std::vector<std::string> site_origin;  // chain site -> originating lattice operator
  std::vector<std::string> bond_origin;
};

struct ChainOp {
  int chain = -1;  // index into Decomposition::chains
  Pauli p;         // on that chain's register
};

struct Decomposition {
  MapKind kind = MapKind::DualMtilde;
  std::vector<ChainSpec> chains;
  std::vector<ChainOp> term_images;  // per model term index
};

// Mechanically applies the substitution map to every model term; validates
// that every image lands on a single chain and that the electric and magnetic
// sectors commute. Only the toric family is supported.
Decomposition decompose_chains(const SpinModel& model, MapKind kind);

// image of a product of model terms (word given by term indices); throws if
// the factors land on different chains
ChainOp apply_map(const Decomposition& d, const std::vector<int>& word);

// chain-level Kramers-Wannier image of a single model term: maps its DirectM
// image to the DualMtilde image (used to verify M~ = D o M family by family)
ChainOp kw_D_of_direct_image(const SpinModel& model, int term_idx);

}  // namespace stab
