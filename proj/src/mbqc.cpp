#include "core/mbqc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace stab {

namespace {

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(uint64_t& s) {
  return (double)(splitmix64(s) >> 11) * 0x1.0p-53;
}

// sign of a Hermitian Pauli relative to the plain tensor product of its
// single-site letters
int herm_sign(const Pauli& p) {
  int e = (((p.phase - p.xz_overlap()) % 4) + 4) % 4;
  if (e == 0) return +1;
  if (e == 2) return -1;
  throw std::logic_error("non-Hermitian operator where a sign was expected");
}

bool conflict(char a, char b) { return a != 'I' && b != 'I' && a != b; }

// measure the Hermitian involution sum_i c_i P_i; projects amp in place,
// returns the sampled outcome
int measure(std::vector<std::complex<double>>& amp,
            const std::vector<std::pair<std::complex<double>, Pauli>>& mop,
            uint64_t& rng) {
  size_t dim = amp.size();
  std::vector<std::complex<double>> mv(dim, 0.0);
  for (const auto& [c, p] : mop) apply_pauli_add(p, c, amp, mv);
  std::complex<double> ev = 0;
  for (size_t i = 0; i < dim; ++i) ev += std::conj(amp[i]) * mv[i];
  double m = std::clamp(ev.real(), -1.0, 1.0);
  double pplus = 0.5 * (1.0 + m);
  int o = (unit_double(rng) < pplus) ? +1 : -1;
  double nrm2 = 0;
  for (size_t i = 0; i < dim; ++i) {
    amp[i] = 0.5 * (amp[i] + (double)o * mv[i]);
    nrm2 += std::norm(amp[i]);
  }
  double inv = 1.0 / std::sqrt(nrm2);
  for (auto& a : amp) a *= inv;
  return o;
}

int measure_letter(std::vector<std::complex<double>>& amp, int n, int q, char letter,
                   uint64_t& rng) {
  return measure(amp, {{1.0, Pauli::single(n, q, letter)}}, rng);
}

}  // namespace

Resource make_resource(const SpinModel& model, uint64_t seed) {
  Resource r;
  r.model = model;
  r.catalog = symmetry_catalog(model);
  r.logical = logical_observables(r.catalog);
  int n = model.n_qubits();
  if (n > 14) throw ResourceLimitError("resource states are limited to 14 qubits");
  bool field_free = true;
  for (int i = 0; i < (int)model.terms.size(); ++i) {
    const std::string& f = model.term_info[i].family;
    if (f != "A" && f != "B" && f != "C" && f != "D" && model.terms[i].first != 0)
      field_free = false;
  }
  if (field_free) {
    size_t dim = size_t(1) << n;
    std::vector<std::complex<double>> amp(dim, 0.0), sv(dim);
    amp[0] = 1.0;
    bool ok = true;
    for (const Pauli& s : model.stabilizers()) {
      std::fill(sv.begin(), sv.end(), std::complex<double>(0, 0));
      apply_pauli_add(s, 1.0, amp, sv);
      double nrm2 = 0;
      for (size_t i = 0; i < dim; ++i) {
        amp[i] = 0.5 * (amp[i] + sv[i]);
        nrm2 += std::norm(amp[i]);
      }
      if (nrm2 < 1e-12) { ok = false; break; }
      double inv = 1.0 / std::sqrt(nrm2);
      for (auto& a : amp) a *= inv;
    }
    if (ok) {
      r.state.n = n;
      r.state.amp = std::move(amp);
      return r;
    }
  }
  GeneratingSet stabs = model.stabilizers();
  r.state = ground_state(model.terms, n, seed, &stabs).state;
  return r;
}

double sigma_value(const Resource& res, Coord site, const std::string& label) {
  Pauli R = build_R(res.catalog, site, label);
  return expect(res.state, R);
}

std::vector<double> sigma_of_steps(const Resource& res, const std::vector<Step>& steps) {
  std::vector<double> out;
  for (const auto& s : steps) out.push_back(sigma_value(res, s.site, s.g));
  return out;
}

namespace {

struct StepCtx {
  int q = -1;
  char alpha = 'I', beta = 'I';
  double theta = 0;
  std::string label;
};

struct FramePlan {
  std::vector<int> labels;           // primary entry indices read out here
  std::map<int, char> right_letter;  // right-boundary qubit -> basis
};

}  // namespace

ProtocolResult run_protocol(const Resource& res, const std::vector<Step>& steps,
                            int shots, uint64_t seed, const ProtocolOptions& opts) {
  if (shots <= 0) throw std::invalid_argument("shots must be positive");
  const SymmetryCatalog& cat = res.catalog;
  const LogicalSet& logi = res.logical;
  int n = cat.n_qubits();

  // primary (non-derived) labels in catalog order
  std::vector<int> primary;
  for (int i = 0; i < (int)cat.entries.size(); ++i)
    if (!cat.entries[i].derived) primary.push_back(i);

  // per-qubit symmetry-respecting basis letter for bulk sites
  std::map<int, char> alpha_letter;
  for (int q : cat.bulk_sites) {
    char a = 'I';
    for (const auto& e : cat.entries) {
      char u = e.U.letter(q);
      if (u == 'I') continue;
      if (a != 'I' && a != u)
        throw std::runtime_error("site-local representations do not commute");
      a = u;
    }
    alpha_letter[q] = (a == 'I') ? 'Z' : a;
  }

  // left-boundary bases from V_L of the readout subgroup
  std::map<int, char> left_letter;
  for (int q : cat.left_sites) left_letter[q] = 'I';
  for (const std::string& h : logi.H_labels) {
    const Pauli& vl = cat.at(h).VL;
    for (int q : cat.left_sites) {
      char u = vl.letter(q);
      if (u == 'I') continue;
      if (conflict(left_letter[q], u))
        throw std::runtime_error("readout subgroup has incompatible left bases");
      left_letter[q] = u;
    }
  }

  // readout frames: greedy grouping of labels with compatible right bases
  std::vector<FramePlan> frames;
  for (int idx : primary) {
    const Pauli& vr = cat.entries[idx].VR;
    bool placed = false;
    for (auto& f : frames) {
      bool ok = true;
      for (int q : cat.right_sites) {
        auto it = f.right_letter.find(q);
        if (it != f.right_letter.end() && conflict(it->second, vr.letter(q))) ok = false;
      }
      if (ok) {
        f.labels.push_back(idx);
        for (int q : cat.right_sites)
          if (vr.letter(q) != 'I') f.right_letter[q] = vr.letter(q);
        placed = true;
        break;
      }
    }
    if (!placed) {
      FramePlan f;
      f.labels.push_back(idx);
      for (int q : cat.right_sites)
        if (vr.letter(q) != 'I') f.right_letter[q] = vr.letter(q);
      frames.push_back(std::move(f));
    }
  }

  // step contexts (sorted left-to-right, distinct columns)
  std::vector<StepCtx> ctx;
  int prev_x2 = -1000000;
  for (const auto& s : steps) {
    if (s.site.x2 <= prev_x2)
      throw std::invalid_argument("steps must be ordered left-to-right in distinct columns");
    if (opts.strict_separation && prev_x2 > -1000000) {
      double need = 2.0 * (2.0 * opts.delta + opts.d);  // doubled units
      if ((double)(s.site.x2 - prev_x2) + 1e-12 < need)
        throw std::invalid_argument("steps violate the strict separation rule");
    }
    prev_x2 = s.site.x2;
    LocalizationEntry le = localize(cat, s.site);
    StepCtx c;
    c.theta = s.theta;
    c.label = s.g;
    for (const auto& lo : le.localizable)
      if (lo.label == s.g) c.beta = lo.beta;
    if (c.beta == 'I' || c.beta == 0)
      throw std::invalid_argument("group element not localizable at step site: " + s.g);
    for (int q = 0; q < n; ++q)
      if (cat.sites[q] == s.site) c.q = q;
    c.alpha = alpha_letter.at(c.q);
    ctx.push_back(c);
  }

  // bulk sweep order: columns left to right, step sites last within a column
  std::vector<int> sweep = cat.bulk_sites;
  auto step_at = [&](int q) -> const StepCtx* {
    for (const auto& c : ctx)
      if (c.q == q) return &c;
    return nullptr;
  };
  std::sort(sweep.begin(), sweep.end(), [&](int a, int b) {
    int sa = step_at(a) != nullptr, sb = step_at(b) != nullptr;
    return std::tuple(cat.sites[a].x2, sa, cat.sites[a].y2) <
           std::tuple(cat.sites[b].x2, sb, cat.sites[b].y2);
  });

  std::vector<int> lefts = cat.left_sites, rights = cat.right_sites;
  auto by_y = [&](int a, int b) { return cat.sites[a].y2 < cat.sites[b].y2; };
  std::sort(lefts.begin(), lefts.end(), by_y);
  std::sort(rights.begin(), rights.end(), by_y);

  ProtocolResult out;
  out.shots = shots;
  out.seed = seed;
  out.n_frames = (int)frames.size();
  out.sigmas = sigma_of_steps(res, steps);

  for (int fi = 0; fi < (int)frames.size(); ++fi) {
    const FramePlan& f = frames[fi];
    std::map<std::string, double> sum, sum2;
    for (int shot = 0; shot < shots; ++shot) {
      uint64_t rng = seed ^ (0x51ed2700b1a3f095ULL * (uint64_t)(fi + 1));
      rng += (uint64_t)shot * 0x2545f4914f6cdd1dULL;
      splitmix64(rng);
      std::vector<std::complex<double>> amp = res.state.amp;
      std::map<int, int> outc;  // recorded outcome per measured qubit
      auto record = [&](int q, int o) {
        outc[q] = (q == opts.flip_qubit) ? -o : o;
      };
      for (int q : lefts) {
        char l = left_letter.at(q);
        record(q, measure_letter(amp, n, q, l == 'I' ? 'Z' : l, rng));
      }
      // lambda per primary label; left outcomes enter only for H members
      std::map<std::string, double> lam;
      for (int idx : primary) {
        const auto& e = cat.entries[idx];
        double l0 = 1.0;
        bool in_h = std::find(logi.H_labels.begin(), logi.H_labels.end(), e.label) !=
                    logi.H_labels.end();
        if (in_h) {
          l0 = herm_sign(e.VL);
          for (int q : cat.left_sites)
            if (e.VL.letter(q) != 'I') l0 *= outc.at(q);
        }
        lam[e.label] = l0;
      }
      for (int q : sweep) {
        const StepCtx* sc = step_at(q);
        int o;
        if (!sc) {
          o = measure_letter(amp, n, q, alpha_letter.at(q), rng);
        } else {
          double l = lam.at(sc->label);
          double ang = l * sc->theta;
          // exp(i ang/2 beta) alpha exp(-i ang/2 beta)
          std::vector<std::pair<std::complex<double>, Pauli>> mop;
          Pauli pa = Pauli::single(n, q, sc->alpha);
          if (conflict(sc->alpha, sc->beta)) {
            Pauli pb = Pauli::single(n, q, sc->beta);
            mop.push_back({std::cos(ang), pa});
            mop.push_back({std::complex<double>(0, -std::sin(ang)), multiply(pa, pb)});
          } else {
            mop.push_back({1.0, pa});
          }
          o = measure(amp, mop, rng);
        }
        record(q, o);
        for (int idx : primary) {
          const auto& e = cat.entries[idx];
          if (e.U.letter(q) != 'I') lam[e.label] *= outc.at(q);
        }
      }
      for (int q : rights) {
        auto it = f.right_letter.find(q);
        char l = (it == f.right_letter.end() || it->second == 'I') ? 'Z' : it->second;
        record(q, measure_letter(amp, n, q, l, rng));
      }
      for (int idx : f.labels) {
        const auto& e = cat.entries[idx];
        // lambda carries the V_L sign already; T's total sign covers all three
        // factors, so cancel the duplicate left sign for readout members
        double v = lam.at(e.label) * herm_sign(logi.T.at(e.label));
        bool in_h = std::find(logi.H_labels.begin(), logi.H_labels.end(), e.label) !=
                    logi.H_labels.end();
        if (in_h) v *= herm_sign(e.VL);
        for (int q : cat.right_sites)
          if (e.VR.letter(q) != 'I') v *= outc.at(q);
        sum[e.label] += v;
        sum2[e.label] += v * v;
      }
    }
    for (int idx : f.labels) {
      const std::string& l = cat.entries[idx].label;
      double m = sum[l] / shots;
      double var = std::max(0.0, sum2[l] / shots - m * m);
      ProtocolEstimate pe;
      pe.mean = m;
      pe.se = std::sqrt(var / shots);
      pe.frame = fi;
      out.table[l] = pe;
    }
  }
  return out;
}

namespace {

using PatKey = std::pair<std::vector<uint64_t>, std::vector<uint64_t>>;

std::complex<double> ipow(int e) {
  static const std::complex<double> tab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return tab[((e % 4) + 4) % 4];
}

}  // namespace

std::map<std::string, double> predict_logical(const LogicalSet& logical,
                                              const std::vector<Step>& steps,
                                              const std::vector<double>& sigmas) {
  if (sigmas.size() != steps.size())
    throw std::invalid_argument("one sigma value per step is required");
  GeneratingSet th;
  std::vector<double> th_init;
  for (const std::string& h : logical.H_labels) {
    th.push_back(logical.T.at(h));
    th_init.push_back((double)logical.init_values.at(h));
  }
  auto init_expect = [&](const Pauli& p) -> double {
    if (p.is_identity_pattern()) return 1.0;
    auto comb = pattern_in_span(th, p);
    if (!comb) return 0.0;
    Pauli prod = Pauli::identity(p.n);
    double v = 1.0;
    for (int i : *comb) {
      prod = multiply(prod, th[i]);
      v *= th_init[i];
    }
    int dp = ((p.phase - prod.phase) % 4 + 4) % 4;
    return (dp == 0) ? v : -v;
  };

  std::map<std::string, double> out;
  for (const std::string& label : logical.labels) {
    const Pauli& t0 = logical.T.at(label);
    std::map<PatKey, std::pair<Pauli, std::complex<double>>> ops;
    ops[{t0.x, t0.z}] = {t0, 1.0};
    for (int i = (int)steps.size() - 1; i >= 0; --i) {
      const Pauli& tk = logical.T.at(steps[i].g);
      double c = std::cos(steps[i].theta), s = std::sin(steps[i].theta);
      double sg = sigmas[i];
      std::map<PatKey, std::pair<Pauli, std::complex<double>>> next;
      auto add = [&](const Pauli& p, std::complex<double> coeff) {
        Pauli h = p.hermitian_rep();
        std::complex<double> f = coeff * ipow(p.phase - h.phase);
        auto [it, fresh] = next.try_emplace(PatKey{h.x, h.z}, h, f);
        if (!fresh) it->second.second += f;
      };
      for (auto& [k, pc] : ops) {
        if (commute(pc.first, tk)) {
          add(pc.first, pc.second);
        } else {
          add(pc.first, c * pc.second);
          Pauli q = multiply(tk, pc.first);
          add(q, std::complex<double>(0, sg * s) * pc.second);
        }
      }
      ops = std::move(next);
    }
    std::complex<double> val = 0;
    for (auto& [k, pc] : ops) val += pc.second * init_expect(pc.first);
    if (std::abs(val.imag()) > 1e-9)
      throw std::logic_error("prediction acquired an imaginary part");
    out[label] = val.real();
  }
  return out;
}

double error_bound(double theta, int N, double sigma) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (sigma <= 0 || sigma > 1)
    throw std::domain_error("error bound requires sigma in (0, 1]");
  return theta * theta / N * (1 - sigma * sigma) / (sigma * sigma);
}

namespace {

Eigen::Matrix2cd pauli2(char l) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (l) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -1i, 1i, 0; break;
    default:  m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::Matrix2cd rot2(char axis, double theta) {
  return std::cos(theta / 2) * pauli2('I') -
         std::complex<double>(0, std::sin(theta / 2)) * pauli2(axis);
}

// Choi state of a qubit channel given its Pauli transfer matrix
Eigen::Matrix4cd choi_of_transfer(const Eigen::Matrix4d& T) {
  Eigen::Matrix2cd P[4] = {pauli2('I'), pauli2('X'), pauli2('Y'), pauli2('Z')};
  Eigen::Matrix4cd J = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      Eigen::Matrix2cd ekl = Eigen::Matrix2cd::Zero();
      ekl(k, l) = 1;
      Eigen::Vector4cd cc;
      for (int a = 0; a < 4; ++a) cc(a) = (P[a] * ekl).trace() / 2.0;
      Eigen::Vector4cd oc = T.cast<std::complex<double>>() * cc;
      Eigen::Matrix2cd img = Eigen::Matrix2cd::Zero();
      for (int a = 0; a < 4; ++a) img += oc(a) * P[a];
      Eigen::Matrix4cd kr;  // kron(img, ekl)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          kr.block<2, 2>(2 * i, 2 * j) = img * ekl(i, j);
      J += kr / 2.0;
    }
  return J;
}

Eigen::Matrix4cd choi_of_unitary(const Eigen::Matrix2cd& U) {
  Eigen::Vector4cd om = Eigen::Vector4cd::Zero();
  om(0) = om(3) = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd KU = Eigen::Matrix4cd::Zero();  // kron(U, I)
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      KU(2 * i + 0, 2 * j + 0) = U(i, j);
      KU(2 * i + 1, 2 * j + 1) = U(i, j);
    }
  Eigen::Vector4cd v = KU * om;
  return v * v.adjoint();
}

}  // namespace

std::vector<ScalingRow> verify_error_scaling(double theta, double sigma,
                                             const std::vector<int>& Ns) {
  if (sigma <= 0 || sigma > 1) throw std::domain_error("sigma must lie in (0, 1]");
  std::vector<ScalingRow> rows;
  for (int N : Ns) {
    double step = theta / (N * sigma);
    double c = std::cos(step), s = std::sin(step);
    Eigen::Matrix4d T1 = Eigen::Matrix4d::Identity();
    T1(1, 1) = c; T1(1, 2) = -sigma * s;
    T1(2, 1) = sigma * s; T1(2, 2) = c;
    Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
    for (int i = 0; i < N; ++i) T = T1 * T;
    Eigen::Matrix4cd J1 = choi_of_transfer(T);
    // target: rotation by angle theta about the logical generator axis
    Eigen::Matrix4cd J2 = choi_of_unitary(rot2('Z', theta));
    Eigen::Matrix4cd D = J1 - J2;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(D);
    double dist = 0;
    for (int i = 0; i < 4; ++i) dist += std::abs(es.eigenvalues()(i));
    dist *= 0.5;
    rows.push_back({N, dist, error_bound(theta, N, sigma)});
  }
  return rows;
}

double compose_commutator(const LogicalSet& logical, const std::string& g,
                          const std::string& gprime, double dtheta) {
  const Pauli& a = logical.T.at(g);
  const Pauli& b = logical.T.at(gprime);
  if (commute(a, b))
    throw std::invalid_argument("logical generators commute: zero commutator");
  // faithful 2x2 representation of the pair: T(g) -> Z, T(g') -> X
  Eigen::Matrix2cd U = rot2('Z', dtheta) * rot2('X', dtheta) *
                       rot2('Z', -dtheta) * rot2('X', -dtheta);
  // exp(-(dtheta)^2/4 [Z, X]) = exp(-i dtheta^2/2 Y)
  Eigen::Matrix2cd V = rot2('Y', dtheta * dtheta);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(U - V);
  return svd.singularValues()(0);
}

}  // namespace stab
