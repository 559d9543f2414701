#include <doctest.h>

#include "core/localization.hpp"
#include "core/models.hpp"
#include "test_util.hpp"

using namespace stab;

namespace {

SymmetryCatalog toric_catalog(int lx, int ly) {
  LatticeSpec spec{LatticeKind::ToricEdge, lx, ly, Boundary::OpenSmooth};
  return symmetry_catalog(build_toric(spec, 0, 0));
}

}  // namespace

TEST_CASE("kappa relations, toric") {
  SymmetryCatalog cat = toric_catalog(4, 4);
  BinaryForm k = kappa(cat);
  auto idx = [&](const std::string& l) { return cat.by_label.at(l); };
  for (int y = 1; y <= 4; ++y)
    for (int yp = 1; yp < 4; ++yp) {
      int expect = (yp == y || yp == y - 1) ? 1 : 0;
      CHECK((int)k.k[idx("g_e[" + std::to_string(y) + "]")]
                 [idx("g_m[" + std::to_string(yp) + "]")] == expect);
    }
  for (int y = 1; y <= 4; ++y)
    for (int yp = 1; yp <= 4; ++yp)
      CHECK(k.k[idx("g_e[" + std::to_string(y) + "]")]
               [idx("g_e[" + std::to_string(yp) + "]")] == 0);
  // symmetric, zero diagonal; V_L- and V_R-derived forms agree
  for (size_t i = 0; i < cat.entries.size(); ++i) {
    CHECK(k.k[i][i] == 0);
    for (size_t j = 0; j < cat.entries.size(); ++j) {
      CHECK(k.k[i][j] == k.k[j][i]);
      CHECK((int)k.k[i][j] == commutes_bit(cat.entries[i].VL, cat.entries[j].VL));
      CHECK((int)k.k[i][j] == commutes_bit(cat.entries[i].VR, cat.entries[j].VR));
    }
  }
}

TEST_CASE("localize, toric bulk sites") {
  SymmetryCatalog cat = toric_catalog(4, 3);
  // horizontal edge between columns 2 and 3, row 2: the electric row symmetry
  LocalizationEntry he = localize(cat, {5, 4});
  REQUIRE(he.localizable.size() == 1);
  CHECK(he.localizable[0].label == "g_e[2]");
  CHECK(he.localizable[0].beta == 'X');
  // vertical edge at column 2, between rows 1 and 2: the magnetic symmetry
  LocalizationEntry ve = localize(cat, {4, 3});
  REQUIRE(ve.localizable.size() == 1);
  CHECK(ve.localizable[0].label == "g_m[1]");
  CHECK(ve.localizable[0].beta == 'Z');
  // boundary sites are rejected
  CHECK_THROWS_AS(localize(cat, {2, 3}), std::domain_error);
}

TEST_CASE("localize, star model bulk site") {
  LatticeSpec spec{LatticeKind::StarVertex, 6, 4, Boundary::OpenSmooth};
  SymmetryCatalog cat = symmetry_catalog(build_xz_star(spec));
  // a bulk vertex admits a localization from the row triple through it
  LocalizationEntry e = localize(cat, {6, 4});
  CHECK(e.localizable.size() >= 1);
  for (const auto& lo : e.localizable) {
    CHECK(lo.beta != 'I');
    for (const auto& ent : cat.entries) CHECK(commutes_bit(lo.R, ent.U) == 0);
  }
}

TEST_CASE("build_R, toric") {
  LatticeSpec spec{LatticeKind::ToricEdge, 4, 3, Boundary::OpenSmooth};
  SpinModel model = build_toric(spec, 0, 0);
  SymmetryCatalog cat = symmetry_catalog(model);
  std::map<std::pair<std::string, std::pair<int, int>>, Pauli> fam;
  for (size_t i = 0; i < model.terms.size(); ++i)
    fam[{model.term_info[i].family, {model.term_info[i].x, model.term_info[i].y}}] =
        model.terms[i].second;

  // R at horizontal edge (k+1/2, y): product of stars to the right
  Pauli re = build_R(cat, {5, 4}, "g_e[2]");
  Pauli want = Pauli::identity(model.n_qubits());
  for (int x = 3; x <= 4; ++x) want = multiply(want, fam.at({"A", {x, 2}}));
  CHECK(re == want.hermitian_rep());

  // R at vertical edge (k, y+1/2): product of plaquettes from k rightward
  Pauli rm = build_R(cat, {4, 3}, "g_m[1]");
  Pauli wantm = Pauli::identity(model.n_qubits());
  for (int x = 2; x <= 3; ++x) wantm = multiply(wantm, fam.at({"B", {x, 1}}));
  CHECK(rm == wantm.hermitian_rep());

  for (const auto& ent : cat.entries) {
    CHECK(commutes_bit(re, ent.U) == 0);
    CHECK(commutes_bit(rm, ent.U) == 0);
  }
  CHECK_THROWS(build_R(cat, {5, 4}, "g_m[1]"));
}

TEST_CASE("logical observables, toric") {
  SymmetryCatalog cat = toric_catalog(4, 3);
  LogicalSet ls = logical_observables(cat);
  CHECK(ls.H_labels == std::vector<std::string>{"g_e[1]", "g_e[2]", "g_e[3]"});
  CHECK(ls.rank_H == 3);
  for (int y = 1; y <= 3; ++y) {
    std::string l = "g_e[" + std::to_string(y) + "]";
    CHECK(ls.T.at(l) == cat.at(l).U);
    CHECK(ls.init_values.at(l) == 1);
  }
  for (int y = 1; y <= 2; ++y) {
    std::string l = "g_m[" + std::to_string(y) + "]";
    // T strips the left boundary factor from U
    CHECK(multiply(cat.at(l).VL, ls.T.at(l)).same_pattern(cat.at(l).U));
    CHECK(ls.init_values.at(l) == 0);
  }
  // readout observables commute pairwise; T-pair signs reproduce kappa
  BinaryForm k = kappa(cat);
  for (size_t i = 0; i < ls.labels.size(); ++i)
    for (size_t j = 0; j < ls.labels.size(); ++j)
      CHECK(commutes_bit(ls.T.at(ls.labels[i]), ls.T.at(ls.labels[j])) == (int)k.k[i][j]);
}

TEST_CASE("logical observables, star model") {
  LatticeSpec spec{LatticeKind::StarVertex, 6, 4, Boundary::OpenSmooth};
  SymmetryCatalog cat = symmetry_catalog(build_xz_star(spec));
  LogicalSet ls = logical_observables(cat);
  CHECK(ls.rank_H == spec.ly - 1);
  BinaryForm k = kappa(cat);
  for (size_t i = 0; i < ls.labels.size(); ++i)
    for (size_t j = 0; j < ls.labels.size(); ++j)
      CHECK(commutes_bit(ls.T.at(ls.labels[i]), ls.T.at(ls.labels[j])) == (int)k.k[i][j]);
}
