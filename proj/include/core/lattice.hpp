#pragma once
// 2D lattice coordinates (doubled integers), regions, k-neighborhoods and the
// decorrelation-hypothesis geometry.

#include <compare>
#include <map>
#include <vector>

#include "core/pauli.hpp"

namespace stab {

enum class LatticeKind { ToricEdge, StarVertex };
enum class Boundary { Periodic, OpenSmooth };
enum class BoundaryStyle { Smooth, Rough, Mixed };

struct Coord {
  int x2 = 0, y2 = 0;  // doubled coordinates: even = vertex, odd = edge midpoint
  auto operator<=>(const Coord&) const = default;
};

struct LatticeSpec {
  LatticeKind kind = LatticeKind::ToricEdge;
  int lx = 2, ly = 2;
  Boundary boundary = Boundary::Periodic;

  // qubit site enumeration (fixed order; index = position in this list)
  std::vector<Coord> sites() const;
  // doubled-coordinate periods (periodic boundary only)
  int px2() const { return 2 * lx; }
  int py2() const { return 2 * ly; }
  void validate() const;
};

struct Region {
  std::vector<Coord> sites;  // sorted, unique
  BoundaryStyle style = BoundaryStyle::Smooth;
};

// squared Euclidean distance between doubled coords (wrapped if periodic)
long dist2(const LatticeSpec& spec, Coord a, Coord b);

// all lattice qubit sites within Euclidean distance k (in doubled units) of
// the region
Region neighborhood(const LatticeSpec& spec, const Region& region, double k);

struct StabPartition {
  std::vector<int> inside, outside, crossing;  // indices into the input set
};

// classify generators by support relative to region; site_of maps qubit index
// to its coordinate
StabPartition partition_stabilizers(const GeneratingSet& stabs,
                                    const std::vector<Coord>& site_of,
                                    const Region& region);

// minimum separation in unit cells for given boundary-style pair and spread
double min_separation(BoundaryStyle a, BoundaryStyle b, double delta);

// Decorrelation hypothesis: 1 iff (after recombining each offending crossing
// generator with at most one support-adjacent generator) every crossing
// generator of the delta-neighborhood of supp P avoids the
// delta-neighborhood of supp Q.
bool decorrelation_hypothesis(const LatticeSpec& spec,
                              const std::vector<Coord>& site_of,
                              const GeneratingSet& stabs, const Pauli& p,
                              const Pauli& q, double delta);

}  // namespace stab
