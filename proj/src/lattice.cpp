#include "core/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace stab {

void LatticeSpec::validate() const {
  if (lx < 2 || ly < 2) throw std::invalid_argument("lattice dimensions must be >= 2");
  if (kind == LatticeKind::StarVertex && boundary == Boundary::OpenSmooth && lx % 3 != 0)
    throw std::invalid_argument("star lattice with open boundary needs lx divisible by 3");
}

std::vector<Coord> LatticeSpec::sites() const {
  validate();
  std::vector<Coord> out;
  if (kind == LatticeKind::ToricEdge) {
    if (boundary == Boundary::Periodic) {
      for (int y = 0; y < ly; ++y)
        for (int x = 0; x < lx; ++x) {
          out.push_back({2 * x + 1, 2 * y});  // horizontal edge
          out.push_back({2 * x, 2 * y + 1});  // vertical edge
        }
    } else {
      // open smooth: horizontal edges x=1..lx-1, y=1..ly; vertical edges
      // x=1..lx, y=1..ly-1
      for (int y = 1; y <= ly; ++y)
        for (int x = 1; x < lx; ++x) out.push_back({2 * x + 1, 2 * y});
      for (int y = 1; y < ly; ++y)
        for (int x = 1; x <= lx; ++x) out.push_back({2 * x, 2 * y + 1});
    }
  } else {
    if (boundary == Boundary::Periodic) {
      for (int y = 0; y < ly; ++y)
        for (int x = 0; x < lx; ++x) out.push_back({2 * x, 2 * y});
    } else {
      for (int y = 1; y <= ly; ++y)
        for (int x = 0; x <= lx; ++x) out.push_back({2 * x, 2 * y});
    }
  }
  return out;
}

long dist2(const LatticeSpec& spec, Coord a, Coord b) {
  long dx = std::abs(a.x2 - b.x2), dy = std::abs(a.y2 - b.y2);
  if (spec.boundary == Boundary::Periodic) {
    dx = std::min(dx, (long)spec.px2() - dx);
    dy = std::min(dy, (long)spec.py2() - dy);
  }
  return dx * dx + dy * dy;
}

Region neighborhood(const LatticeSpec& spec, const Region& region, double k) {
  Region out;
  out.style = region.style;
  if (region.sites.empty()) return out;
  double k2 = k * k + 1e-9;
  for (const Coord& s : spec.sites()) {
    for (const Coord& r : region.sites) {
      if ((double)dist2(spec, s, r) <= k2) {
        out.sites.push_back(s);
        break;
      }
    }
  }
  std::sort(out.sites.begin(), out.sites.end());
  out.sites.erase(std::unique(out.sites.begin(), out.sites.end()), out.sites.end());
  return out;
}

StabPartition partition_stabilizers(const GeneratingSet& stabs,
                                    const std::vector<Coord>& site_of,
                                    const Region& region) {
  std::set<Coord> reg(region.sites.begin(), region.sites.end());
  StabPartition part;
  for (int i = 0; i < (int)stabs.size(); ++i) {
    auto sup = stabs[i].support();
    int in = 0, outc = 0;
    for (int q : sup) (reg.count(site_of[q]) ? in : outc)++;
    if (sup.empty() || outc == 0)
      part.inside.push_back(i);
    else if (in == 0)
      part.outside.push_back(i);
    else
      part.crossing.push_back(i);
  }
  return part;
}

double min_separation(BoundaryStyle a, BoundaryStyle b, double delta) {
  if (a == BoundaryStyle::Mixed || b == BoundaryStyle::Mixed)
    throw std::invalid_argument("min_separation styles must be smooth or rough");
  if (a == b) return 2 * delta + 1.0;
  return 2 * delta + 1.5;
}

static Region support_region(const std::vector<Coord>& site_of, const Pauli& p) {
  Region r;
  for (int q : p.support()) r.sites.push_back(site_of[q]);
  std::sort(r.sites.begin(), r.sites.end());
  r.sites.erase(std::unique(r.sites.begin(), r.sites.end()), r.sites.end());
  return r;
}

static bool overlaps(const Pauli& g, const std::set<Coord>& reg,
                     const std::vector<Coord>& site_of) {
  for (int q : g.support())
    if (reg.count(site_of[q])) return true;
  return false;
}

bool decorrelation_hypothesis(const LatticeSpec& spec,
                              const std::vector<Coord>& site_of,
                              const GeneratingSet& stabs, const Pauli& p,
                              const Pauli& q, double delta) {
  Region rq = support_region(site_of, q);
  if (rq.sites.empty()) return true;
  Region rp = support_region(site_of, p);
  Region np = neighborhood(spec, rp, delta);
  Region nq = neighborhood(spec, rq, delta);
  std::set<Coord> nqset(nq.sites.begin(), nq.sites.end());
  StabPartition part = partition_stabilizers(stabs, site_of, np);
  for (int ci : part.crossing) {
    if (!overlaps(stabs[ci], nqset, site_of)) continue;
    // try recombining with one support-adjacent generator
    bool fixed = false;
    for (int j = 0; j < (int)stabs.size() && !fixed; ++j) {
      if (j == ci) continue;
      if (commutes_bit(stabs[ci], stabs[j]) != 0) continue;  // keep the set commuting
      bool adjacent = false;
      for (int qa : stabs[ci].support()) {
        for (int qb : stabs[j].support())
          if (dist2(spec, site_of[qa], site_of[qb]) <= 4) { adjacent = true; break; }
        if (adjacent) break;
      }
      if (!adjacent) continue;
      Pauli prod = multiply(stabs[ci], stabs[j]);
      if (!overlaps(prod, nqset, site_of)) fixed = true;
    }
    if (!fixed) return false;
  }
  return true;
}

}  // namespace stab
