#include "core/duality.hpp"

#include <stdexcept>

namespace stab {

namespace {

struct ChainLayout {
  // chain index per (sector, row); electric rows then magnetic rows
  int lx = 0, ly = 0;
  int electric_chain(int row) const { return row - 1; }
  int magnetic_chain(int row) const { return ly + (row - 1); }
};

void check_toric_open(const SpinModel& model) {
  if (model.lattice.kind != LatticeKind::ToricEdge ||
      model.lattice.boundary != Boundary::OpenSmooth)
    throw std::invalid_argument("chain decomposition supports the open toric family");
  if (model.eps_field != 0)
    throw std::invalid_argument("chain decomposition requires the pristine model (no epsilon field)");
}

}  // namespace

Decomposition decompose_chains(const SpinModel& model, MapKind kind) {
  check_toric_open(model);
  int lx = model.lattice.lx, ly = model.lattice.ly;
  ChainLayout lay{lx, ly};
  Decomposition d;
  d.kind = kind;
  // electric chains, one per vertex row
  for (int y = 1; y <= ly; ++y) {
    ChainSpec c;
    c.sector = "electric";
    c.row = y;
    if (kind == MapKind::DualMtilde) {
      // sites = vertex positions x=1..lx; A -> X, Z-field -> ZZ bond
      c.n_sites = lx;
      c.field.assign(lx, 1.0);
      c.coupling.assign(lx - 1, model.h_z);
      for (int x = 1; x <= lx; ++x)
        c.site_origin.push_back("A[" + std::to_string(x) + "," + std::to_string(y) + "]");
      for (int x = 1; x < lx; ++x)
        c.bond_origin.push_back("zfield[" + std::to_string(x) + "," + std::to_string(y) + "]");
    } else {
      // sites = half-integer positions x+1/2, x=0..lx; A -> ZZ bond, Z-field -> X
      c.n_sites = lx + 1;
      c.field.assign(lx + 1, 0.0);
      for (int s = 1; s < lx; ++s) c.field[s] = model.h_z;
      c.coupling.assign(lx, 1.0);
      for (int x = 0; x <= lx; ++x)
        c.site_origin.push_back("sigma[" + std::to_string(2 * x + 1) + "/2," + std::to_string(y) + "]");
      for (int x = 1; x <= lx; ++x)
        c.bond_origin.push_back("A[" + std::to_string(x) + "," + std::to_string(y) + "]");
    }
    d.chains.push_back(std::move(c));
  }
  // magnetic chains, one per plaquette row
  for (int y = 1; y < ly; ++y) {
    ChainSpec c;
    c.sector = "magnetic";
    c.row = y;
    if (kind == MapKind::DualMtilde) {
      // sites = plaquette positions x=1..lx-1; B -> X, X-field -> ZZ bond
      c.n_sites = lx - 1;
      c.field.assign(lx - 1, 1.0);
      c.coupling.assign(lx - 2, model.h_x);
      for (int x = 1; x < lx; ++x)
        c.site_origin.push_back("B[" + std::to_string(x) + "," + std::to_string(y) + "]");
      for (int x = 2; x < lx; ++x)
        c.bond_origin.push_back("xfield[" + std::to_string(x) + "," + std::to_string(y) + "]");
    } else {
      // sites x=0..lx-1; B -> ZZ bond, X-field -> X
      c.n_sites = lx;
      c.field.assign(lx, 0.0);
      for (int s = 1; s < lx - 1; ++s) c.field[s] = model.h_x;
      c.coupling.assign(lx - 1, 1.0);
      for (int x = 0; x < lx; ++x)
        c.site_origin.push_back("tau[" + std::to_string(2 * x + 1) + "/2," + std::to_string(y) + "]");
      for (int x = 1; x < lx; ++x)
        c.bond_origin.push_back("B[" + std::to_string(x) + "," + std::to_string(y) + "]");
    }
    d.chains.push_back(std::move(c));
  }
  // term images
  for (int i = 0; i < (int)model.terms.size(); ++i) {
    const TermInfo& t = model.term_info[i];
    ChainOp img;
    if (t.family == "A" || t.family == "zfield") {
      img.chain = lay.electric_chain(t.y);
    } else if (t.family == "B" || t.family == "xfield") {
      img.chain = lay.magnetic_chain(t.y);
    } else {
      throw std::invalid_argument("term outside the toric family: " + t.family);
    }
    int ns = d.chains[img.chain].n_sites;
    img.p = Pauli::identity(ns);
    if (kind == MapKind::DualMtilde) {
      if (t.family == "A")
        img.p = Pauli::single(ns, t.x - 1, 'X');
      else if (t.family == "B")
        img.p = Pauli::single(ns, t.x - 1, 'X');
      else if (t.family == "zfield")
        img.p = multiply(Pauli::single(ns, t.x - 1, 'Z'), Pauli::single(ns, t.x, 'Z'));
      else  // xfield, x = 2..lx-1 -> bond between plaquette sites x-1, x (1-based)
        img.p = multiply(Pauli::single(ns, t.x - 2, 'Z'), Pauli::single(ns, t.x - 1, 'Z'));
    } else {
      if (t.family == "A")
        img.p = multiply(Pauli::single(ns, t.x - 1, 'Z'), Pauli::single(ns, t.x, 'Z'));
      else if (t.family == "B")
        img.p = multiply(Pauli::single(ns, t.x - 1, 'Z'), Pauli::single(ns, t.x, 'Z'));
      else if (t.family == "zfield")
        img.p = Pauli::single(ns, t.x, 'X');
      else
        img.p = Pauli::single(ns, t.x - 1, 'X');
    }
    d.term_images.push_back(std::move(img));
  }
  // sector commutation sanity: electric images never share a chain with
  // magnetic images by construction; verify commutation within each chain is
  // preserved against the 2D operators
  for (int i = 0; i < (int)model.terms.size(); ++i)
    for (int j = i + 1; j < (int)model.terms.size(); ++j) {
      const auto &a = d.term_images[i], &b = d.term_images[j];
      int chain_cb = (a.chain == b.chain) ? commutes_bit(a.p, b.p) : 0;
      if (chain_cb != commutes_bit(model.terms[i].second, model.terms[j].second))
        throw std::runtime_error("substitution map broke a commutation relation");
    }
  return d;
}

ChainOp apply_map(const Decomposition& d, const std::vector<int>& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  ChainOp out;
  out.chain = d.term_images.at(word[0]).chain;
  out.p = Pauli::identity(d.chains[out.chain].n_sites);
  for (int t : word) {
    const ChainOp& img = d.term_images.at(t);
    if (img.chain != out.chain)
      throw std::invalid_argument("word is not expressible on a single chain");
    out.p = multiply(out.p, img.p);
  }
  return out;
}

ChainOp kw_D_of_direct_image(const SpinModel& model, int term_idx) {
  // D on the direct-map chains: ZZ bond (b,b+1) -> X at dual site b;
  // X at site s -> ZZ on dual bond (s-1, s). The dual register is the
  // DualMtilde chain for the same term.
  check_toric_open(model);
  Decomposition dm = decompose_chains(model, MapKind::DirectM);
  Decomposition dt = decompose_chains(model, MapKind::DualMtilde);
  const ChainOp& src = dm.term_images.at(term_idx);
  int ns_dual = dt.chains[dt.term_images.at(term_idx).chain].n_sites;
  ChainOp out;
  out.chain = dt.term_images.at(term_idx).chain;
  out.p = Pauli::identity(ns_dual);
  const Pauli& p = src.p;
  // decode: collect Z-support and X-support of the direct image
  std::vector<int> zs, xs;
  for (int q = 0; q < p.n; ++q) {
    if (p.xbit(q)) xs.push_back(q);
    if (p.zbit(q)) zs.push_back(q);
  }
  if (zs.size() == 2 && xs.empty() && zs[1] == zs[0] + 1) {
    out.p = Pauli::single(ns_dual, zs[0], 'X');
  } else if (xs.size() == 1 && zs.empty()) {
    out.p = multiply(Pauli::single(ns_dual, xs[0] - 1, 'Z'),
                     Pauli::single(ns_dual, xs[0], 'Z'));
  } else {
    throw std::invalid_argument("D is defined on bond ZZ and site X images");
  }
  return out;
}

}  // namespace stab
