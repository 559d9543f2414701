// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/duality.hpp"
#include "core/lattice.hpp"
#include "core/lie.hpp"
#include "core/localization.hpp"
#include "core/mbqc.hpp"
#include "core/models.hpp"
#include "core/pauli.hpp"
#include "core/spectra.hpp"
#include "core/sset.hpp"

using namespace stab;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion %2d  %s%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
              detail.empty() ? "" : "  -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SymmetryCatalog open_toric_catalog(int lx, int ly) {
  LatticeSpec spec{LatticeKind::ToricEdge, lx, ly, Boundary::OpenSmooth};
  return symmetry_catalog(build_toric(spec, 0, 0));
}

SymmetryCatalog open_star_catalog(int lx, int ly) {
  LatticeSpec spec{LatticeKind::StarVertex, lx, ly, Boundary::OpenSmooth};
  return symmetry_catalog(build_xz_star(spec));
}

std::vector<Pauli> boundary_gens(const SymmetryCatalog& cat) {
  std::map<std::pair<std::vector<uint64_t>, std::vector<uint64_t>>, Pauli> dedup;
  for (const auto& e : cat.entries)
    if (!e.VR.is_identity_pattern()) dedup[{e.VR.x, e.VR.z}] = e.VR.hermitian_rep();
  std::vector<Pauli> gens;
  for (auto& [k, v] : dedup) gens.push_back(v);
  return gens;
}

// --- criterion 1: boundary Lie algebra dimensions --------------------------
void criterion_1() {
  struct Case {
    bool star;
    int ly, want;
  };
  const Case cases[] = {{false, 3, 15}, {false, 4, 28}, {false, 5, 45},
                        {true, 3, 15},  {true, 4, 60},  {true, 5, 255}};
  bool ok = true;
  std::ostringstream detail;
  for (const Case& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    SymmetryCatalog cat = c.star ? open_star_catalog(6, c.ly) : open_toric_catalog(4, c.ly);
    int dim = closure(boundary_gens(cat)).dim;
    double dt = seconds_since(t0);
    if (dim != c.want || dt > 5.0) {
      ok = false;
      detail << (c.star ? "star" : "toric") << " ly=" << c.ly << " dim=" << dim
             << " (want " << c.want << ", " << dt << "s) ";
    }
  }
  report(1, "boundary algebra dimensions", ok, detail.str());
}

// --- criterion 2: logical qubit counts -------------------------------------
void criterion_2() {
  bool ok = true;
  std::ostringstream detail;
  for (int ly : {2, 3, 4}) {
    int r = logical_observables(open_toric_catalog(4, ly)).rank_H;
    if (r != ly) {
      ok = false;
      detail << "toric ly=" << ly << " rank=" << r << " ";
    }
  }
  for (int ly : {3, 4, 5}) {
    int r = logical_observables(open_star_catalog(6, ly)).rank_H;
    if (r != ly - 1) {
      ok = false;
      detail << "star ly=" << ly << " rank=" << r << " ";
    }
  }
  report(2, "logical qubit counts", ok, detail.str());
}

// --- criterion 3: kappa relations ------------------------------------------
void criterion_3() {
  SymmetryCatalog cat = open_toric_catalog(4, 4);
  BinaryForm k = kappa(cat);
  auto idx = [&](const std::string& l) { return cat.by_label.at(l); };
  bool ok = true;
  for (int y = 1; y <= 4; ++y) {
    for (int yp = 1; yp < 4; ++yp) {
      int want = (yp == y || yp == y - 1) ? 1 : 0;
      if ((int)k.k[idx("g_e[" + std::to_string(y) + "]")]
                [idx("g_m[" + std::to_string(yp) + "]")] != want)
        ok = false;
    }
    for (int yp = 1; yp <= 4; ++yp)
      if (k.k[idx("g_e[" + std::to_string(y) + "]")]
             [idx("g_e[" + std::to_string(yp) + "]")] != 0)
        ok = false;
  }
  for (int y = 1; y < 4; ++y)
    for (int yp = 1; yp < 4; ++yp)
      if (k.k[idx("g_m[" + std::to_string(y) + "]")]
             [idx("g_m[" + std::to_string(yp) + "]")] != 0)
        ok = false;
  // left- and right-boundary forms agree entry by entry
  for (size_t i = 0; i < cat.entries.size(); ++i)
    for (size_t j = 0; j < cat.entries.size(); ++j) {
      if ((int)k.k[i][j] != commutes_bit(cat.entries[i].VL, cat.entries[j].VL)) ok = false;
      if ((int)k.k[i][j] != commutes_bit(cat.entries[i].VR, cat.entries[j].VR)) ok = false;
    }
  report(3, "kappa pairing", ok);
}

// --- criterion 4: perfect order at alpha = 0 -------------------------------
void criterion_4() {
  LatticeSpec spec{LatticeKind::ToricEdge, 4, 2, Boundary::OpenSmooth};
  SpinModel model = build_toric(spec, 0, 0);
  Resource res = make_resource(model);
  bool ok = true;
  for (int q : res.catalog.bulk_sites) {
    LocalizationEntry le = localize(res.catalog, res.catalog.sites[q]);
    for (const auto& lo : le.localizable)
      if (std::abs(sigma_value(res, res.catalog.sites[q], lo.label) - 1.0) > 1e-12)
        ok = false;
  }
  int n = model.n_qubits(), k = (spec.lx + 1) / 2;
  for (int y = 1; y <= spec.ly; ++y) {
    Pauli w = Pauli::identity(n);
    for (int x = k; x < spec.lx; ++x)
      w = multiply(w, Pauli::single(n, model.qubit({2 * x + 1, 2 * y}), 'Z'));
    if (std::abs(expect(res.state, w)) > 1e-12) ok = false;
  }
  for (int y = 1; y < spec.ly; ++y) {
    Pauli w = Pauli::identity(n);
    for (int x = k; x < spec.lx; ++x)
      w = multiply(w, Pauli::single(n, model.qubit({2 * x, 2 * y + 1}), 'X'));
    if (std::abs(expect(res.state, w)) > 1e-12) ok = false;
  }
  report(4, "perfect computational order, vanishing string order at alpha=0", ok);
}

// --- criterion 5: chain route vs dense 2D solver ---------------------------
void criterion_5() {
  auto t0 = std::chrono::steady_clock::now();
  LatticeSpec spec{LatticeKind::ToricEdge, 3, 2, Boundary::OpenSmooth};
  SweepOptions opts;
  opts.with_oracle = true;
  auto rows = order_parameter_sweep(spec, {0.25, 0.5, 0.75, 1.0, 1.5, 2.0}, opts);
  std::map<std::pair<std::string, double>, double> chain, oracle;
  for (const auto& r : rows)
    (r.route == "chain" ? chain : oracle)[{r.id, r.alpha}] = r.value;
  double max_delta = 0;
  for (const auto& [key, v] : chain) {
    auto it = oracle.find(key);
    if (it == oracle.end()) continue;
    max_delta = std::max(max_delta, std::abs(v - it->second));
  }
  double dt = seconds_since(t0);
  std::ostringstream detail;
  detail << "max delta " << max_delta << ", " << dt << "s";
  report(5, "chain decomposition matches dense diagonalization", max_delta <= 1e-10 && dt < 30.0,
         detail.str());
}

// --- criterion 6: crossover structure on the larger lattice ----------------
void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  LatticeSpec spec{LatticeKind::ToricEdge, 7, 3, Boundary::OpenSmooth};
  std::vector<double> grid;
  for (int i = 0; i <= 8; ++i) grid.push_back(0.25 * i);
  auto rows = order_parameter_sweep(spec, grid, {});
  std::map<std::string, std::map<double, double>> series;
  for (const auto& r : rows) series[r.id][r.alpha] = r.value;
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [id, vals] : series) {
    if (id == "E0") continue;
    bool is_sigma = id.rfind("sigma_", 0) == 0;
    double prev = is_sigma ? 2.0 : -2.0;
    for (double a : grid) {
      double v = vals.at(a);
      if (is_sigma ? (v > prev + 1e-9) : (v < prev - 1e-9)) {
        ok = false;
        detail << id << " not monotone ";
        break;
      }
      prev = v;
    }
    if (is_sigma && vals.at(2.0) >= 0.1) {
      ok = false;
      detail << id << "(2)=" << vals.at(2.0) << " ";
    }
    if (!is_sigma && vals.at(2.0) <= 0.9) {
      ok = false;
      detail << id << "(2)=" << vals.at(2.0) << " ";
    }
  }
  // unique sigma/W crossing per row, inside (0.5, 1.5)
  for (const auto& fam : {std::pair<std::string, std::string>{"sigma_e[", "W_e["},
                          std::pair<std::string, std::string>{"sigma_m[", "W_m["}}) {
    for (int y = 1; y <= 3; ++y) {
      std::string sid = fam.first + std::to_string(y) + "]";
      std::string wid = fam.second + std::to_string(y) + "]";
      if (!series.count(sid) || !series.count(wid)) continue;
      int crossings = 0;
      double where = -1;
      for (size_t i = 1; i < grid.size(); ++i) {
        double d0 = series[sid][grid[i - 1]] - series[wid][grid[i - 1]];
        double d1 = series[sid][grid[i]] - series[wid][grid[i]];
        if (d0 > 0 && d1 <= 0) {
          ++crossings;
          // linear interpolation within the bracketing interval
          where = grid[i - 1] + (grid[i] - grid[i - 1]) * d0 / (d0 - d1);
        }
      }
      if (crossings != 1 || where <= 0.5 || where >= 1.5) {
        ok = false;
        detail << sid << "/" << wid << " crossings=" << crossings << "@" << where << " ";
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt > 10.0) {
    ok = false;
    detail << dt << "s";
  }
  report(6, "order parameter crossover", ok, detail.str());
}

// --- criterion 7: measurement protocol vs channel composition --------------
void criterion_7() {
  LatticeSpec spec{LatticeKind::ToricEdge, 4, 2, Boundary::OpenSmooth};
  Resource res = make_resource(build_toric(spec, 0, 0));
  // candidate (site, label) pairs grouped by column
  std::map<int, std::vector<std::pair<Coord, std::string>>> by_col;
  for (int q : res.catalog.bulk_sites) {
    Coord c = res.catalog.sites[q];
    for (const auto& lo : localize(res.catalog, c).localizable)
      by_col[c.x2].push_back({c, lo.label});
  }
  std::vector<int> cols;
  for (auto& [x2, v] : by_col) cols.push_back(x2);
  std::mt19937_64 rng(20240818);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  ProtocolOptions opts;
  opts.strict_separation = false;
  bool ok = true;
  std::ostringstream detail;
  for (int seq = 0; seq < 5; ++seq) {
    int nsteps = 1 + (int)(rng() % 3);
    std::set<int> chosen;
    while ((int)chosen.size() < nsteps) chosen.insert(cols[rng() % cols.size()]);
    std::vector<Step> steps;
    for (int x2 : chosen) {
      const auto& cands = by_col[x2];
      const auto& pick = cands[rng() % cands.size()];
      steps.push_back({pick.first, pick.second, angle(rng)});
    }
    ProtocolResult pr = run_protocol(res, steps, 10000, 1000 + seq, opts);
    for (double s : pr.sigmas)
      if (std::abs(s - 1.0) > 1e-12) ok = false;  // exactly solvable resource
    auto pred = predict_logical(res.logical, steps, pr.sigmas);
    for (const auto& [label, est] : pr.table) {
      double dev = std::abs(est.mean - pred.at(label));
      if (dev > 5.0 * est.se + 1e-9) {
        ok = false;
        detail << "seq" << seq << " " << label << " dev=" << dev << " se=" << est.se << " ";
      }
    }
  }
  report(7, "adaptive protocol matches the logical channel", ok, detail.str());
}

// --- criterion 8: channel error scaling ------------------------------------
void criterion_8() {
  bool ok = true;
  std::ostringstream detail;
  for (double sg : {0.6, 0.8, 0.9}) {
    auto rows = verify_error_scaling(M_PI / 3, sg, {1, 10, 100});
    for (const auto& r : rows)
      if (r.distance > r.bound + 1e-12) {
        ok = false;
        detail << "sigma=" << sg << " N=" << r.N << " d=" << r.distance
               << " > eps=" << r.bound << " ";
      }
    double c10 = rows[1].distance * rows[1].N, c100 = rows[2].distance * rows[2].N;
    if (std::abs(c10 - c100) > 0.2 * std::max(c10, c100)) {
      ok = false;
      detail << "sigma=" << sg << " dN " << c10 << " vs " << c100 << " ";
    }
  }
  report(8, "channel distance within the error bound, 1/N scaling", ok, detail.str());
}

// --- criterion 9: the phi invariant ----------------------------------------
void criterion_9() {
  bool ok = true;
  std::ostringstream detail;
  {
    LatticeSpec spec{LatticeKind::ToricEdge, 8, 8, Boundary::Periodic};
    SpinModel model = build_toric(spec, 0, 0);
    auto rels = global_relations(model, symmetry_catalog(model));
    std::vector<Rect> rects = {{2, 5, 2, 5}, {1, 6, 1, 6}, {3, 4, 3, 4}};
    std::map<std::string, std::string> want = {{"e", "m"}, {"m", "e"}};
    for (const auto& rel : rels) {
      std::string got = phi(model, rel, rects);
      if (got != want.at(rel.id)) {
        ok = false;
        detail << "toric " << rel.id << "->" << got << " ";
      }
    }
  }
  {
    LatticeSpec spec{LatticeKind::StarVertex, 12, 8, Boundary::Periodic};
    SpinModel model = build_xz_star(spec);
    auto rels = global_relations(model, symmetry_catalog(model));
    std::map<std::string, std::string> want = {
        {"g_110", "m"}, {"g_011", "mb"}, {"gbar_110", "e"}, {"gbar_011", "eb"}};
    for (const auto& rel : rels) {
      int par = rel.id.rfind("gbar_", 0) == 0 ? 1 : 0;
      std::vector<Rect> rects = {{0, 8, par, par + 4}, {3, 11, par + 2, par + 6},
                                 {0, 8, par + 2, par + 6}};
      std::string got = phi(model, rel, rects);
      if (got != want.at(rel.id)) {
        ok = false;
        detail << "star " << rel.id << "->" << got << " ";
      }
    }
  }
  report(9, "phi labels the relation sectors", ok, detail.str());
}

// --- criterion 10: decorrelation on the exact ground state -----------------
void criterion_10() {
  LatticeSpec spec{LatticeKind::ToricEdge, 8, 4, Boundary::OpenSmooth};
  SpinModel model = build_toric(spec, 0, 0);
  GeneratingSet stabs = model.stabilizers();
  int n = model.n_qubits();
  std::mt19937_64 rng(31);
  static const char letters[3] = {'X', 'Y', 'Z'};
  std::vector<int> left, right;
  for (int q = 0; q < n; ++q) {
    if (model.sites[q].x2 <= 5) left.push_back(q);
    if (model.sites[q].x2 >= 11) right.push_back(q);  // >= 3 half-steps of gap
  }
  auto rand_op = [&](const std::vector<int>& pool) {
    Pauli p = Pauli::identity(n);
    int w = 1 + (int)(rng() % 3);
    for (int i = 0; i < w; ++i)
      p = multiply(p, Pauli::single(n, pool[rng() % pool.size()], letters[rng() % 3]));
    return p.hermitian_rep();
  };
  bool ok = true;
  std::ostringstream detail;
  int accepted = 0, attempts = 0;
  while (accepted < 50 && attempts < 5000) {
    ++attempts;
    Pauli p = rand_op(left), q = rand_op(right);
    if (p.is_identity_pattern() || q.is_identity_pattern()) continue;
    if (!decorrelation_hypothesis(spec, model.sites, stabs, p, q, 0)) continue;
    ++accepted;
    double ep = stabilizer_expectation(stabs, p);
    double eq = stabilizer_expectation(stabs, q);
    double epq = stabilizer_expectation(stabs, multiply(p, q));
    if (std::abs(epq - ep * eq) > 1e-12) {
      ok = false;
      detail << "pair " << accepted << " <PQ>=" << epq << " <P><Q>=" << ep * eq << " ";
    }
  }
  if (accepted < 50) {
    ok = false;
    detail << "only " << accepted << " separated pairs ";
  }
  // breaking the separation rule admits a correlated counterexample
  {
    Pauli p = multiply(Pauli::single(n, model.qubit({3, 4}), 'X'),
                       Pauli::single(n, model.qubit({4, 3}), 'X'));
    Pauli q = multiply(Pauli::single(n, model.qubit({5, 4}), 'X'),
                       Pauli::single(n, model.qubit({4, 5}), 'X'));
    bool hyp = decorrelation_hypothesis(spec, model.sites, stabs, p, q, 0);
    double ep = stabilizer_expectation(stabs, p);
    double eq = stabilizer_expectation(stabs, q);
    double epq = stabilizer_expectation(stabs, multiply(p, q));
    if (hyp || std::abs(epq - ep * eq) < 0.5) {
      ok = false;
      detail << "counterexample hyp=" << hyp << " corr=" << epq - ep * eq;
    }
  }
  report(10, "decorrelation under the separation rule", ok, detail.str());
}

// --- criterion 11: mutual statistics ---------------------------------------
void criterion_11() {
  bool ok = true;
  std::ostringstream detail;
  LatticeSpec tspec{LatticeKind::ToricEdge, 8, 8, Boundary::Periodic};
  SpinModel toric = build_toric(tspec, 0, 0);
  if (mutual_statistics(toric, "e", "m") != -1) {
    ok = false;
    detail << "toric (e,m) != -1 ";
  }
  LatticeSpec sspec{LatticeKind::StarVertex, 12, 8, Boundary::Periodic};
  SpinModel star = build_xz_star(sspec);
  std::vector<std::string> labels = {"e", "eb", "m", "mb"};
  std::map<std::pair<std::string, std::string>, int> table;
  for (const auto& a : labels)
    for (const auto& b : labels) table[{a, b}] = mutual_statistics(star, a, b);
  auto two_toric = [](const std::string& a, const std::string& b) {
    bool crossed = (a == "e" && b == "m") || (a == "m" && b == "e") ||
                   (a == "eb" && b == "mb") || (a == "mb" && b == "eb");
    return crossed ? -1 : 1;
  };
  std::vector<int> perm = {0, 1, 2, 3};
  bool matched = false;
  do {
    bool good = true;
    for (int i = 0; i < 4 && good; ++i)
      for (int j = 0; j < 4 && good; ++j)
        if (table[{labels[i], labels[j]}] != two_toric(labels[perm[i]], labels[perm[j]]))
          good = false;
    if (good) matched = true;
  } while (!matched && std::next_permutation(perm.begin(), perm.end()));
  if (!matched) {
    ok = false;
    detail << "no relabeling matches two toric copies";
  }
  report(11, "mutual statistics tables", ok, detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
