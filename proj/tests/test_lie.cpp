#include <doctest.h>

#include <algorithm>

#include "core/lie.hpp"
#include "core/models.hpp"
#include "test_util.hpp"

using namespace stab;

namespace {

std::vector<Pauli> boundary_gens(const SymmetryCatalog& cat) {
  // every catalog entry contributes, including the derived rows; duplicate
  // boundary patterns are kept once
  std::vector<Pauli> gens;
  for (const auto& e : cat.entries) {
    if (e.VR.is_identity_pattern()) continue;
    Pauli v = e.VR.hermitian_rep();
    bool dup = false;
    for (const auto& g : gens)
      if (g.same_pattern(v)) dup = true;
    if (!dup) gens.push_back(v);
  }
  return gens;
}

std::vector<Pauli> toric_gens(int lx, int ly) {
  LatticeSpec spec{LatticeKind::ToricEdge, lx, ly, Boundary::OpenSmooth};
  return boundary_gens(symmetry_catalog(build_toric(spec, 0, 0)));
}

std::vector<Pauli> star_gens(int lx, int ly) {
  LatticeSpec spec{LatticeKind::StarVertex, lx, ly, Boundary::OpenSmooth};
  return boundary_gens(symmetry_catalog(build_xz_star(spec)));
}

}  // namespace

TEST_CASE("small closures") {
  ClosureResult su2 = closure({parse_pauli("X"), parse_pauli("Z")});
  CHECK(su2.dim == 3);
  CHECK(std::count(su2.labels.begin(), su2.labels.end(), "su(2^1)") == 1);
  CHECK(su2.full);

  std::vector<Pauli> so6 = {parse_pauli("XI"), parse_pauli("XX"), parse_pauli("IX"),
                            parse_pauli("ZI"), parse_pauli("IZ")};
  ClosureResult r = closure(so6);
  CHECK(r.dim == 15);
  CHECK(std::count(r.labels.begin(), r.labels.end(), "so(6)") == 1);
  CHECK(std::count(r.labels.begin(), r.labels.end(), "su(2^2)") == 1);
  CHECK(r.full);

  CHECK(closure({parse_pauli("X")}).dim == 1);
  Pauli antiherm = Pauli::single(1, 0, 'X');
  antiherm.phase = 1;  // iX
  CHECK_THROWS_AS(closure({antiherm}), std::invalid_argument);
}

TEST_CASE("closure is order independent and monotone") {
  std::vector<Pauli> gens = {parse_pauli("XXI"), parse_pauli("IZZ"), parse_pauli("ZIX")};
  ClosureResult a = closure(gens);
  std::reverse(gens.begin(), gens.end());
  ClosureResult b = closure(gens);
  CHECK(a.dim == b.dim);
  REQUIRE(a.basis.size() == b.basis.size());
  for (size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);

  gens.push_back(parse_pauli("YII"));
  CHECK(closure(gens).dim >= a.dim);
}

TEST_CASE("toric boundary algebra family law") {
  CHECK(closure(toric_gens(4, 3)).dim == 15);   // so(6)
  CHECK(closure(toric_gens(4, 4)).dim == 28);   // so(8)
  CHECK(closure(toric_gens(4, 5)).dim == 45);   // so(10)
  ClosureResult r3 = closure(toric_gens(4, 3));
  CHECK(std::count(r3.labels.begin(), r3.labels.end(), "so(6)") == 1);
  // ly=2 leaves a single boundary qubit; the quadratic formula does not apply
  CHECK(closure(toric_gens(4, 2)).dim == 3);
}

TEST_CASE("star boundary algebra family law") {
  CHECK(closure(star_gens(6, 3)).dim == 15);    // su(4)
  ClosureResult r4 = closure(star_gens(6, 4));
  CHECK(r4.dim == 60);                          // 4*su(4)
  CHECK(std::count(r4.labels.begin(), r4.labels.end(), "4*su(2^2)") == 1);
}

TEST_CASE("classify") {
  CHECK(classify(3, 1) == std::vector<std::string>{"su(2^1)", "full"});
  CHECK(classify(7, 5) == std::vector<std::string>{"unclassified"});
  auto l15 = classify(15, 2);
  CHECK(std::count(l15.begin(), l15.end(), "so(6)") == 1);
  CHECK(std::count(l15.begin(), l15.end(), "full") == 1);
}
