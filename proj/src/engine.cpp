#include "core/engine.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/duality.hpp"
#include "core/lie.hpp"
#include "core/localization.hpp"
#include "core/mbqc.hpp"
#include "core/models.hpp"
#include "core/spectra.hpp"
#include "core/sset.hpp"

namespace stab {

using nlohmann::json;

std::string engine_version() { return "0.1.0"; }

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string canonical(const RunConfig& c) {
  std::ostringstream o;
  o << "command=" << c.command << ";model=" << c.model << ";lx=" << c.lx
    << ";ly=" << c.ly << ";alpha=" << fmt(c.alpha) << ";grid=";
  for (double a : c.alpha_grid) o << fmt(a) << ",";
  o << ";shots=" << c.shots << ";seed=" << c.seed
    << ";strict=" << (c.strict_separation ? 1 : 0)
    << ";periodic=" << (c.periodic ? 1 : 0);
  return o.str();
}

SpinModel build_model(const RunConfig& cfg, bool periodic) {
  LatticeSpec lat;
  lat.lx = cfg.lx;
  lat.ly = cfg.ly;
  lat.boundary = periodic ? Boundary::Periodic : Boundary::OpenSmooth;
  if (cfg.model == "toric") {
    lat.kind = LatticeKind::ToricEdge;
    return build_toric(lat, cfg.alpha, cfg.alpha);
  }
  if (cfg.model == "xz") {
    lat.kind = LatticeKind::StarVertex;
    return build_xz_star(lat);
  }
  throw std::invalid_argument("unknown model family: " + cfg.model);
}

json header(const RunConfig& cfg) {
  json j;
  j["version"] = engine_version();
  j["config_hash"] = config_hash(cfg);
  j["command"] = cfg.command;
  j["model"] = {{"family", cfg.model}, {"lx", cfg.lx}, {"ly", cfg.ly},
                {"alpha", cfg.alpha}, {"periodic", cfg.periodic}};
  return j;
}

std::string run_analyze(const RunConfig& cfg) {
  SpinModel model = build_model(cfg, cfg.periodic);
  SymmetryCatalog cat = symmetry_catalog(model);
  json j = header(cfg);
  j["n_qubits"] = model.n_qubits();
  json labels = json::array();
  for (const auto& e : cat.entries)
    labels.push_back({{"label", e.label}, {"derived", e.derived},
                      {"letter", std::string(1, e.letter)}, {"chi", e.chi}});
  j["symmetries"] = labels;
  j["symmetry_rank"] = [&] {
    GeneratingSet g;
    for (const auto& e : cat.entries) g.push_back(e.U);
    return group_rank(g);
  }();
  if (!cfg.periodic) {
    BinaryForm f = kappa(cat);
    json kt = json::array();
    for (const auto& row : f.k) {
      json r = json::array();
      for (uint8_t v : row) r.push_back((int)v);
      kt.push_back(r);
    }
    j["kappa"] = kt;
    LogicalSet logi = logical_observables(cat);
    j["logical_qubits"] = logi.rank_H;
    j["readout_generators"] = logi.H_labels;
    json init;
    for (const auto& [l, v] : logi.init_values) init[l] = v;
    j["init_values"] = init;
    // Lie closure of the deduplicated right-boundary representations
    std::map<std::pair<std::vector<uint64_t>, std::vector<uint64_t>>, Pauli> dedup;
    for (const auto& e : cat.entries)
      if (!e.VR.is_identity_pattern()) dedup[{e.VR.x, e.VR.z}] = e.VR.hermitian_rep();
    std::vector<Pauli> gens;
    for (auto& [k, v] : dedup) gens.push_back(v);
    ClosureResult cr = closure(gens, 1 << 20);
    j["closure"] = {{"dim", cr.dim}, {"labels", cr.labels}};
    // localization table over bulk sites
    json loc = json::array();
    for (int q : cat.bulk_sites) {
      LocalizationEntry le = localize(cat, cat.sites[q]);
      json ls = json::array();
      for (const auto& lo : le.localizable)
        if (lo.beta != 'I')
          ls.push_back({{"label", lo.label}, {"beta", std::string(1, lo.beta)}});
      loc.push_back({{"site", {cat.sites[q].x2, cat.sites[q].y2}},
                     {"localizable", ls}});
    }
    j["localization"] = loc;
  }
  j["notes"] = cat.notes;
  return j.dump(2) + "\n";
}

std::string run_sweep(const RunConfig& cfg) {
  if (cfg.model != "toric" || cfg.periodic)
    throw std::invalid_argument("sweep runs on the open toric family");
  LatticeSpec lat{LatticeKind::ToricEdge, cfg.lx, cfg.ly, Boundary::OpenSmooth};
  std::vector<double> alphas = cfg.alpha_grid;
  if (alphas.empty()) alphas = {cfg.alpha};
  SweepOptions opts;
  opts.seed = cfg.seed;
  auto rows = order_parameter_sweep(lat, alphas, opts);
  std::ostringstream o;
  o << "# config_hash=" << config_hash(cfg) << "\n";
  o << "# version=" << engine_version() << "\n";
  o << "alpha,observable_id,value,route\n";
  for (const auto& r : rows)
    o << fmt(r.alpha) << "," << r.id << "," << fmt(r.value) << "," << r.route << "\n";
  return o.str();
}

std::string run_simulate(const RunConfig& cfg) {
  if (cfg.model != "toric" || cfg.periodic)
    throw std::invalid_argument("simulate runs on the open toric family");
  SpinModel model = build_model(cfg, false);
  Resource res = make_resource(model, cfg.seed);
  // deterministic pseudo-random step sequence (up to 3 steps) from the seed
  uint64_t s = cfg.seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL;
  auto next = [&s]() {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return s;
  };
  std::map<int, std::vector<std::pair<Coord, std::string>>> by_col;
  for (int q : res.catalog.bulk_sites) {
    Coord c = res.catalog.sites[q];
    LocalizationEntry le = localize(res.catalog, c);
    for (const auto& lo : le.localizable)
      if (lo.beta != 'I') by_col[c.x2].push_back({c, lo.label});
  }
  std::vector<Step> steps;
  int min_gap = cfg.strict_separation ? 3 : 1;
  int last_x2 = -100;
  int want = 1 + (int)(next() % 3);
  for (auto& [x2, cands] : by_col) {
    if ((int)steps.size() >= want) break;
    if (x2 - last_x2 < min_gap) continue;
    auto& pick = cands[next() % cands.size()];
    double theta = 2.0 * M_PI * (double)(next() >> 11) * 0x1.0p-53;
    steps.push_back({pick.first, pick.second, theta});
    last_x2 = x2;
  }
  ProtocolOptions popts;
  popts.strict_separation = cfg.strict_separation;
  ProtocolResult pr = run_protocol(res, steps, cfg.shots, cfg.seed, popts);
  auto pred = predict_logical(res.logical, steps, pr.sigmas);
  json j = header(cfg);
  json js = json::array();
  for (size_t i = 0; i < steps.size(); ++i)
    js.push_back({{"site", {steps[i].site.x2, steps[i].site.y2}},
                  {"g", steps[i].g}, {"theta", steps[i].theta},
                  {"sigma", pr.sigmas[i]}});
  j["steps"] = js;
  j["shots"] = pr.shots;
  j["seed"] = pr.seed;
  j["frames"] = pr.n_frames;
  json est = json::array();
  bool all_ok = true;
  for (const auto& [label, pe] : pr.table) {
    double p = pred.at(label);
    bool ok = std::abs(pe.mean - p) <= 5.0 * pe.se + 1e-9;
    all_ok = all_ok && ok;
    est.push_back({{"label", label}, {"estimate", pe.mean}, {"stderr", pe.se},
                   {"prediction", p}, {"frame", pe.frame}, {"pass", ok}});
  }
  j["estimates"] = est;
  j["pass"] = all_ok;
  return j.dump(2) + "\n";
}

std::string run_invariants(const RunConfig& cfg) {
  RunConfig pc = cfg;
  pc.periodic = true;
  SpinModel model = build_model(pc, true);
  SymmetryCatalog cat = symmetry_catalog(model);
  json j = header(pc);
  auto rels = global_relations(model, cat);
  json jr = json::array();
  bool star = cfg.model == "xz";
  for (const auto& rel : rels) {
    std::vector<Rect> rects;
    if (!star) {
      if (cfg.lx < 8 || cfg.ly < 8)
        throw std::invalid_argument("toric invariants need lx, ly >= 8");
      rects = {{2, 5, 2, 5}, {1, 6, 1, 6}, {3, 4, 3, 4}};
    } else {
      if (cfg.lx < 12 || cfg.ly < 8)
        throw std::invalid_argument("star invariants need lx >= 12, ly >= 8");
      int par = rel.id.rfind("gbar_", 0) == 0 ? 1 : 0;
      rects = {{0, 8, par, par + 4}, {3, 11, par + 2, par + 6}, {0, 8, par + 2, par + 6}};
    }
    std::string label = phi(model, rel, rects);
    json rj = json::array();
    for (const auto& r : rects) rj.push_back({r.x0, r.x1, r.y0, r.y1});
    jr.push_back({{"relation", rel.id}, {"phi", label}, {"rectangles", rj}});
  }
  j["phi"] = jr;
  std::vector<std::string> sectors =
      star ? std::vector<std::string>{"e", "eb", "m", "mb"}
           : std::vector<std::string>{"e", "m"};
  json st;
  for (const auto& a : sectors) {
    json row;
    for (const auto& b : sectors) row[b] = mutual_statistics(model, a, b);
    st[a] = row;
  }
  j["mutual_statistics"] = st;
  j["restricted_mobility"] = restricted_mobility(model);
  return j.dump(2) + "\n";
}

std::string run_oracle(const RunConfig& cfg) {
  if (cfg.model != "toric" || cfg.periodic)
    throw std::invalid_argument("oracle cross-checks run on the open toric family");
  LatticeSpec lat{LatticeKind::ToricEdge, cfg.lx, cfg.ly, Boundary::OpenSmooth};
  std::vector<double> alphas = cfg.alpha_grid;
  if (alphas.empty()) alphas = {cfg.alpha};
  SweepOptions opts;
  opts.seed = cfg.seed;
  opts.with_oracle = true;
  opts.with_fm = true;
  auto rows = order_parameter_sweep(lat, alphas, opts);
  std::map<std::pair<std::string, std::string>, double> chain, oracle;
  for (const auto& r : rows) {
    auto key = std::make_pair(fmt(r.alpha), r.id);
    (r.route == "chain" ? chain : oracle)[key] = r.value;
  }
  json j = header(cfg);
  json cmp = json::array();
  double max_delta = 0;
  for (const auto& [key, v] : chain) {
    auto it = oracle.find(key);
    if (it == oracle.end()) continue;
    double d = std::abs(v - it->second);
    max_delta = std::max(max_delta, d);
    cmp.push_back({{"alpha", key.first}, {"observable_id", key.second},
                   {"chain", v}, {"oracle", it->second}, {"delta", d}});
  }
  j["chain_vs_ed"] = cmp;
  j["max_delta"] = max_delta;
  json extra = json::array();
  for (const auto& [key, v] : oracle)
    if (chain.find(key) == chain.end())
      extra.push_back({{"alpha", key.first}, {"observable_id", key.second}, {"value", v}});
  j["oracle_only"] = extra;
  // channel error-scaling cross-check
  json sc = json::array();
  for (double sg : {0.6, 0.8, 0.9}) {
    auto srows = verify_error_scaling(M_PI / 3, sg, {1, 10, 100});
    for (const auto& r : srows)
      sc.push_back({{"sigma", sg}, {"N", r.N}, {"distance", r.distance},
                    {"bound", r.bound}, {"pass", r.distance <= r.bound}});
  }
  j["error_scaling"] = sc;
  return j.dump(2) + "\n";
}

}  // namespace

std::string config_hash(const RunConfig& cfg) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                (unsigned long long)fnv1a(canonical(cfg)));
  return buf;
}

std::string run_command(const RunConfig& cfg) {
  if (cfg.command == "analyze") return run_analyze(cfg);
  if (cfg.command == "sweep") return run_sweep(cfg);
  if (cfg.command == "simulate") return run_simulate(cfg);
  if (cfg.command == "invariants") return run_invariants(cfg);
  if (cfg.command == "oracle") return run_oracle(cfg);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace stab
