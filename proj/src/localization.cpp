#include "core/localization.hpp"

#include <algorithm>
#include <stdexcept>

namespace stab {

BinaryForm kappa(const SymmetryCatalog& catalog) {
  int m = (int)catalog.entries.size();
  BinaryForm f(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int kl = commutes_bit(catalog.entries[i].VL, catalog.entries[j].VL);
      int kr = commutes_bit(catalog.entries[i].VR, catalog.entries[j].VR);
      if (kl != kr)
        throw std::runtime_error("malformed catalog: V_L and V_R commutation forms disagree");
      f.k[i][j] = (uint8_t)kl;
    }
  return f;
}

namespace {

int site_index(const SymmetryCatalog& cat, Coord site) {
  for (int q = 0; q < (int)cat.sites.size(); ++q)
    if (cat.sites[q] == site) return q;
  throw std::invalid_argument("coordinate is not a qubit site");
}

bool anticommute_letters(char a, char b) {
  return a != 'I' && b != 'I' && a != b;
}

Pauli restrict_right(const SymmetryCatalog& cat, const Pauli& u, int x2) {
  std::vector<char> keep(cat.sites.size(), 0);
  for (int q = 0; q < (int)cat.sites.size(); ++q)
    if (cat.sites[q].x2 > x2) keep[q] = 1;
  return u.restrict(keep);
}

Pauli restrict_left_incl(const SymmetryCatalog& cat, const Pauli& u, int x2) {
  std::vector<char> keep(cat.sites.size(), 0);
  for (int q = 0; q < (int)cat.sites.size(); ++q)
    if (cat.sites[q].x2 <= x2) keep[q] = 1;
  return u.restrict(keep);
}

}  // namespace

LocalizationEntry localize(const SymmetryCatalog& catalog, Coord site) {
  int q = site_index(catalog, site);
  if (std::find(catalog.bulk_sites.begin(), catalog.bulk_sites.end(), q) ==
      catalog.bulk_sites.end())
    throw std::domain_error("localization is defined on bulk sites only");
  BinaryForm f = kappa(catalog);
  LocalizationEntry out;
  out.site = site;
  int m = (int)catalog.entries.size();
  const char prefs[4] = {'Z', 'X', 'Y', 'I'};
  for (int gi = 0; gi < m; ++gi) {
    const auto& ge = catalog.entries[gi];
    // genuine cut: U(g) must have support on both sides of the site column
    if (restrict_right(catalog, ge.U, site.x2).is_identity_pattern() ||
        restrict_left_incl(catalog, ge.U, site.x2).is_identity_pattern())
      continue;
    char beta = 0;
    for (char c : prefs) {
      bool ok = true;
      for (int gj = 0; gj < m && ok; ++gj) {
        char u = catalog.entries[gj].U.letter(q);
        if ((anticommute_letters(c, u) ? 1 : 0) != f.k[gi][gj]) ok = false;
      }
      if (ok) { beta = c; break; }
    }
    if (!beta) continue;
    Pauli r = multiply(Pauli::single(catalog.n_qubits(), q, beta),
                       restrict_right(catalog, ge.U, site.x2))
                  .hermitian_rep();
    bool comm = true;
    for (const auto& e : catalog.entries)
      if (commutes_bit(r, e.U)) { comm = false; break; }
    if (!comm) continue;
    out.localizable.push_back({ge.label, beta, r});
  }
  return out;
}

Pauli build_R(const SymmetryCatalog& catalog, Coord site, const std::string& label) {
  LocalizationEntry e = localize(catalog, site);
  for (const auto& l : e.localizable)
    if (l.label == label) return l.R;
  throw std::invalid_argument("group element not localizable at this site: " + label);
}

LogicalSet logical_observables(const SymmetryCatalog& catalog) {
  BinaryForm f = kappa(catalog);
  LogicalSet out;
  // greedy over primary generator labels in catalog order
  std::vector<int> primary;
  for (int i = 0; i < (int)catalog.entries.size(); ++i)
    if (!catalog.entries[i].derived) primary.push_back(i);
  std::vector<int> kept;
  for (int i : primary) {
    bool ok = true;
    for (int j : kept)
      if (f.k[i][j]) { ok = false; break; }
    if (ok) kept.push_back(i);
  }
  std::vector<char> strip_left(catalog.sites.size(), 1);
  for (int q : catalog.left_sites) strip_left[q] = 0;
  for (const auto& e : catalog.entries) {
    out.labels.push_back(e.label);
    bool in_h = false;
    for (int j : kept)
      if (catalog.entries[j].label == e.label) in_h = true;
    if (in_h) {
      out.T[e.label] = e.U;
      out.H_labels.push_back(e.label);
      out.init_values[e.label] = (e.chi == 0) ? +1 : -1;
    } else {
      out.T[e.label] = e.U.restrict(strip_left);
      out.init_values[e.label] = 0;
    }
  }
  out.rank_H = (int)kept.size();
  return out;
}

}  // namespace stab
