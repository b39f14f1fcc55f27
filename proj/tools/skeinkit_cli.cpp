// Copyright 2026 The skeinkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// skeinkit: reports as JSON on stdout, a short summary on stderr.
// Exit codes: 0 all checks pass, 1 usage, 2 parse, 3 budget, 4 verification.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skeinkit/bracket.hpp"
#include "skeinkit/compiler.hpp"
#include "skeinkit/density.hpp"
#include "skeinkit/gadgets.hpp"
#include "skeinkit/io.hpp"
#include "skeinkit/partition.hpp"
#include "skeinkit/potts.hpp"

using namespace skeinkit;

namespace {

struct Report {
  std::string command;
  std::string digest;  // FNV-1a of all input file contents
  Json params = Json::object();
  Json outputs = Json::object();
  Json tolerances = Json::object();
  bool pass = true;
  std::string summary;

  void check(const std::string& name, bool ok) {
    outputs["checks"][name] = ok;
    pass = pass && ok;
  }
};

std::uint64_t g_seed = 1;

double rel_delta(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

BracketParams params_from(std::optional<int> r, const std::string& t, std::optional<double> t_angle, Json& out) {
  int given = (r ? 1 : 0) + (t.empty() ? 0 : 1) + (t_angle ? 1 : 0);
  if (given != 1) fail(ErrorKind::Usage, "give exactly one of --r, --t, --t-angle");
  if (r) {
    out["r"] = *r;
    return BracketParams::root_of_unity(*r);
  }
  if (t_angle) {
    out["t_angle"] = *t_angle;
    return BracketParams::generic_angle(*t_angle);
  }
  auto comma = t.find(',');
  if (comma == std::string::npos) fail(ErrorKind::Usage, "--t takes re,im");
  Complex tv;
  try {
    tv = {std::stod(t.substr(0, comma)), std::stod(t.substr(comma + 1))};
  } catch (const std::exception&) {
    fail(ErrorKind::Usage, "--t takes re,im");
  }
  out["t"] = complex_json(tv);
  return BracketParams::generic(tv);
}

// ---- bracket ----

struct BracketArgs {
  std::string file, mode = "plat", method = "morse", t;
  std::optional<int> r;
  std::optional<double> t_angle;
};

Report cmd_bracket(const BracketArgs& a) {
  Report rep;
  rep.command = "bracket";
  std::string text = read_text_file(a.file);
  rep.digest = fnv1a_hex(text);
  BraidWord w = parse_braid_any(text);
  rep.params["mode"] = a.mode;
  rep.params["method"] = a.method;
  BracketParams params = params_from(a.r, a.t, a.t_angle, rep.params);
  if (a.mode != "plat" && a.mode != "trace") fail(ErrorKind::Usage, "--mode is plat or trace");
  if (a.method != "morse" && a.method != "brute") fail(ErrorKind::Usage, "--method is morse or brute");
  const bool plat = a.mode == "plat";
  const bool morse = a.method == "morse";

  auto eval = [&](bool use_morse) {
    if (plat) {
      PlatPresentation p(w);
      return use_morse ? bracket_morse(p, params) : bracket_bruteforce(p, params);
    }
    return use_morse ? bracket_morse_trace(w, params) : bracket_bruteforce(w, Closure::Trace, params);
  };
  Complex b = eval(morse);
  int wr = plat ? plat_writhe(PlatPresentation(w)) : writhe(w);
  Complex jones = jones_normalized(b, wr, params);
  rep.outputs["braid"] = serialize_braid(w);
  rep.outputs["bracket"] = complex_json(b);
  rep.outputs["jones"] = complex_json(jones);
  rep.outputs["writhe"] = wr;
  rep.outputs["components"] = plat ? plat_components(PlatPresentation(w)) : trace_components(w);
  rep.outputs["delta"] = complex_json(params.delta());
  rep.summary = "bracket = " + std::to_string(b.real()) + " + " + std::to_string(b.imag()) + "i";
  if (plat && params.is_root_of_unity()) {
    double p = plat_probability(PlatPresentation(w), params);
    rep.outputs["plat_probability"] = p;
    rep.check("probability_in_unit_interval", p >= -1e-12 && p <= 1 + 1e-12);
    rep.summary += ", plat probability = " + std::to_string(p);
  }
  rep.tolerances["cross_check_rel"] = 1e-9;
  if (static_cast<int>(w.size()) <= kMaxBruteForceCrossings) {
    Complex other = eval(!morse);
    double d = rel_delta(b, other);
    rep.outputs["cross_check"] = {{"method", morse ? "brute" : "morse"}, {"value", complex_json(other)}, {"rel_delta", d}};
    rep.check("methods_agree", d <= 1e-9);
  }
  return rep;
}

// ---- compile / verify ----

struct CompileArgs {
  std::string file, out;
  int r = 5;
  double eps = 0.02;
  int net_len = 10;
};

Report cmd_compile(const CompileArgs& a) {
  Report rep;
  rep.command = "compile";
  std::string text = read_text_file(a.file);
  rep.digest = fnv1a_hex(text);
  QuantumCircuit c = parse_circuit(text);
  rep.params = {{"r", a.r}, {"eps", a.eps}, {"net_len", a.net_len}};
  BracketParams params = BracketParams::root_of_unity(a.r);
  QubitEncoding enc(params);
  SU2Net net = build_net(enc, a.net_len);
  TwoQubitSearchOptions two;
  two.seed = g_seed;
  CompileResult res = compile_circuit(c, a.eps, enc, net, two);
  Json gates = Json::array();
  for (const auto& g : res.gates)
    gates.push_back({{"method", to_string(g.method)},
                     {"achieved_distance", g.achieved_distance},
                     {"leakage", g.leakage},
                     {"word_length", g.word.size()},
                     {"depth", g.depth}});
  auto ver = verify_reduction(c, res.plat, params, res.reported_eps);
  rep.outputs = {{"plat", serialize_braid(res.plat.braid())},
                 {"g", res.plat.g()},
                 {"gates", gates},
                 {"achieved_distance", res.total_distance},
                 {"leakage", res.total_leakage},
                 {"reported_bound", res.reported_eps},
                 {"p_circuit", ver.p_circuit},
                 {"p_plat", ver.p_plat},
                 {"abs_delta", std::abs(ver.p_circuit - ver.p_plat)}};
  rep.tolerances["bound"] = res.reported_eps;
  rep.check("probability_within_bound", ver.pass);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) fail(ErrorKind::Usage, "cannot write " + a.out);
    f << serialize_braid(res.plat.braid()) << "\n";
    rep.outputs["plat_file"] = a.out;
  }
  rep.summary = "compiled to " + std::to_string(res.plat.braid().size()) + " crossings on " +
                std::to_string(res.plat.n_strands()) + " strands; |p_circuit - p_plat| = " +
                std::to_string(std::abs(ver.p_circuit - ver.p_plat)) + " (bound " + std::to_string(res.reported_eps) + ")";
  return rep;
}

struct VerifyArgs {
  std::string circuit, plat;
  int r = 5;
  double bound = 0.05;
};

Report cmd_verify(const VerifyArgs& a) {
  Report rep;
  rep.command = "verify";
  std::string ct = read_text_file(a.circuit), pt = read_text_file(a.plat);
  rep.digest = fnv1a_hex(ct + pt);
  QuantumCircuit c = parse_circuit(ct);
  PlatPresentation p(parse_braid_any(pt));
  rep.params = {{"r", a.r}, {"bound", a.bound}};
  BracketParams params = BracketParams::root_of_unity(a.r);
  if (p.n_strands() != 4 * c.n_qubits()) fail(ErrorKind::Usage, "plat must have 4 strands per qubit");
  auto ver = verify_reduction(c, p, params, a.bound);
  rep.outputs = {{"p_circuit", ver.p_circuit}, {"p_plat", ver.p_plat}, {"abs_delta", std::abs(ver.p_circuit - ver.p_plat)}};
  rep.tolerances["bound"] = a.bound;
  rep.check("probability_within_bound", ver.pass);
  rep.summary = "p_circuit = " + std::to_string(ver.p_circuit) + ", p_plat = " + std::to_string(ver.p_plat);
  return rep;
}

// ---- potts ----

struct PottsArgs {
  std::string file;
  std::optional<double> n, x, y;
};

Report cmd_potts(const PottsArgs& a) {
  Report rep;
  rep.command = "potts";
  std::string text = read_text_file(a.file);
  rep.digest = fnv1a_hex(text);
  PottsGraph g = parse_graph(text);
  rep.tolerances["rel"] = 1e-9;

  if (a.x) {
    if (!a.y) fail(ErrorKind::Usage, "--x needs --y");
    if (a.n) fail(ErrorKind::Usage, "--n is implied by --x and --y");
    rep.params = {{"x", *a.x}, {"y", *a.y}};
    double t = tutte_from_potts(g, *a.x, *a.y);
    rep.outputs["tutte"] = t;
    rep.summary = "T(x, y) = " + std::to_string(t);
    if (g.edges.size() <= 20) {
      double o = tutte_cd_oracle(g, *a.x, *a.y);
      rep.outputs["tutte_cd_oracle"] = o;
      rep.outputs["rel_delta"] = rel_delta(t, o);
      rep.check("tutte_matches_contraction_deletion", rel_delta(t, o) <= 1e-9);
    }
    return rep;
  }
  if (!a.n) fail(ErrorKind::Usage, "potts needs --n (or --x and --y)");
  const double n = *a.n;
  rep.params["n"] = n;
  if (a.y) {
    rep.params["y"] = *a.y;
    for (auto& e : g.edges) e.y = *a.y;
  }
  double zc = z_cluster(g, n);
  rep.outputs["z_cluster"] = zc;
  rep.summary = "Z = " + std::to_string(zc);
  try {
    double zt = z_transfer(g, n);
    rep.outputs["z_transfer"] = zt;
    rep.check("transfer_matches_cluster", rel_delta(zc, zt) <= 1e-9);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    rep.outputs["z_transfer"] = nullptr;
  }
  if (n == std::floor(n) && n >= 1 && std::pow(n, g.vertices) <= 1e7) {
    double zcol = z_colorings(g, static_cast<int>(n));
    rep.outputs["z_colorings"] = zcol;
    rep.check("colorings_match_cluster", rel_delta(zc, zcol) <= 1e-9);
  }
  return rep;
}

// ---- implement-weight ----

struct WeightArgs {
  double n = 5, target = 0, eps = 1e-3;
  std::vector<double> start;
  std::size_t budget = kImplementWeightBudget;
};

Report cmd_implement_weight(const WeightArgs& a) {
  Report rep;
  rep.command = "implement-weight";
  rep.params = {{"n", a.n}, {"start", a.start}, {"target", a.target}, {"eps", a.eps}, {"budget", a.budget}};
  rep.digest = fnv1a_hex(rep.params.dump());
  auto w = implement_weight(a.start, a.n, a.target, a.eps, a.budget);
  double again = w.tree.evaluate();
  rep.outputs = {{"achieved", w.achieved},
                 {"distance", w.distance},
                 {"reevaluated", again},
                 {"nodes", w.nodes},
                 {"edges", w.edges},
                 {"seed_case", w.seed_case},
                 {"seed_y", w.seed_y},
                 {"seed_power", w.seed_power}};
  if (w.seed_x) rep.outputs["seed_x"] = *w.seed_x;
  if (w.tree.nodes.size() <= 64) rep.outputs["tree"] = w.tree.describe();
  rep.tolerances["eps"] = a.eps;
  rep.check("reevaluated_within_eps", std::abs(again - a.target) <= a.eps);
  rep.summary = "target " + std::to_string(a.target) + " reached within " + std::to_string(std::abs(again - a.target)) +
                " using " + std::to_string(w.nodes) + " nodes (" + w.seed_case + ")";
  return rep;
}

// ---- dense-check ----

struct DenseArgs {
  std::string preset, expect;
  std::optional<int> r;
  int strands = 4;
};

Report cmd_dense_check(const DenseArgs& a) {
  Report rep;
  rep.command = "dense-check";
  std::vector<CMatrix> gens;
  DensityOptions opt;
  opt.seed = g_seed;
  if (!a.preset.empty() == a.r.has_value()) fail(ErrorKind::Usage, "give exactly one of --preset, --r");
  if (a.r) {
    rep.params = {{"r", *a.r}, {"strands", a.strands}};
    gens = kauffman_generators(*a.r, a.strands);
  } else if (a.preset == "kauffman-r5" || a.preset == "kauffman-r6" || a.preset == "kauffman-r7") {
    int r = a.preset.back() - '0';
    rep.params = {{"preset", a.preset}, {"r", r}, {"strands", 4}};
    gens = kauffman_generators(r, 4);
  } else if (a.preset == "potts-n5-k3") {
    rep.params = {{"preset", a.preset}, {"n", 5}, {"k", 3}, {"y", -2.0}, {"x", -2.0 / 3.0}};
    gens = potts_edge_generators(5, 3, -2, -2.0 / 3.0);
    opt = noncompact_density_options();
    opt.seed = g_seed;
  } else {
    fail(ErrorKind::Usage, "unknown preset " + a.preset + " (kauffman-r5, kauffman-r6, kauffman-r7, potts-n5-k3)");
  }
  rep.digest = fnv1a_hex(rep.params.dump());
  auto cert = density_certificate(gens, -1, opt);
  rep.outputs = {{"lie_dim", cert.lie_dim},   {"target_dim", cert.target_dim},      {"dense", cert.dense},
                 {"words", cert.words},       {"near_identity", cert.near_identity}, {"closest", cert.closest},
                 {"note", cert.note}};
  rep.tolerances = {{"near", opt.near}, {"rank_tol", opt.rank_tol}};
  if (!a.expect.empty()) {
    if (a.expect != "dense" && a.expect != "not-dense") fail(ErrorKind::Usage, "--expect is dense or not-dense");
    rep.check("matches_expectation", cert.dense == (a.expect == "dense"));
  }
  rep.summary = "lie_dim " + std::to_string(cert.lie_dim) + "/" + std::to_string(cert.target_dim) +
                (cert.dense ? ", dense" : ", not dense") + " (" + cert.note + ")";
  return rep;
}

// ---- gadgets ----

struct APrimeArgs {
  std::optional<double> a, b;
  bool grid = false;
};

Report cmd_a_prime(const APrimeArgs& args) {
  Report rep;
  rep.command = "gadget a-prime";
  if (args.grid) {
    rep.params = {{"grid", 100}, {"b_range", "(0, 1/4)"}, {"a_range", "(1/2, 1)"}};
    int viol = 0, n = 0;
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < 100; ++j) {
        double b = (i + 0.5) / 100 * 0.25, a = 0.5 + (j + 0.5) / 100 * 0.5;
        double ap = postselected_success(a);
        viol += (a < 0.5 + b && !(ap < 4 * b * b)) || (a > 0.5 + 2 * b && !(ap > 8 * b * b));
        ++n;
      }
    rep.outputs = {{"points", n}, {"violations", viol}};
    rep.check("no_violations", viol == 0);
    rep.summary = std::to_string(viol) + " violations on " + std::to_string(n) + " grid points";
  } else {
    if (!args.a) fail(ErrorKind::Usage, "a-prime needs --a (or --grid)");
    rep.params["a"] = *args.a;
    double ap = postselected_success(*args.a);
    rep.outputs["a_prime"] = ap;
    rep.summary = "a' = " + std::to_string(ap);
    if (args.b) {
      double a = *args.a, b = *args.b;
      rep.params["b"] = b;
      if (a < 0.5 + b) rep.check("below_4b2", ap < 4 * b * b);
      if (a > 0.5 + 2 * b) rep.check("above_8b2", ap > 8 * b * b);
    }
  }
  rep.digest = fnv1a_hex(rep.params.dump());
  return rep;
}

struct PromiseArgs {
  double a = 0.5, b = 0.01, gap = 2.0;
  int n = 20;
};

Report cmd_promise_demo(const PromiseArgs& p) {
  Report rep;
  rep.command = "gadget promise-demo";
  rep.params = {{"a", p.a}, {"b", p.b}, {"n", p.n}, {"gap", p.gap}};
  rep.digest = fnv1a_hex(rep.params.dump());
  SimulatedThresholdOracle oracle(p.a, p.b, p.gap, g_seed);
  auto res = promise_compare(std::ref(oracle), p.n);
  rep.outputs = {{"answer", to_string(res.answer)}, {"queries", res.queries}};
  rep.check("query_budget", res.queries <= 2 * (p.n + 1));
  if (p.a >= 8 * p.b || p.b >= 8 * p.a)
    rep.check("answer_correct", res.answer == (p.a > p.b ? Comparison::AoverB : Comparison::BoverA));
  rep.summary = std::string("answer ") + to_string(res.answer) + " after " + std::to_string(res.queries) + " queries";
  return rep;
}

struct ApvArgs {
  double f = 1000, k = 2, c = 1.5, lo = 1, hi = 2;
  int m = 30;
};

Report cmd_apv_demo(const ApvArgs& p) {
  Report rep;
  rep.command = "gadget apv-demo";
  rep.params = {{"f", p.f}, {"k", p.k}, {"c", p.c}, {"lo", p.lo}, {"hi", p.hi}, {"m", p.m}};
  rep.digest = fnv1a_hex(rep.params.dump());
  std::mt19937_64 rng(g_seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> wobble(2 * p.m + 1);
  for (auto& v : wobble) v = u(rng);
  // f(y_n) = f k^{-n} times a factor in [1, c); answers inside the window are arbitrary
  auto decide = [&](int n) {
    double g = p.f * std::pow(p.k, -n) * (1 + (p.c - 1) * wobble[n + p.m]);
    if (g < p.lo) return Threshold::Below;
    if (g > p.hi) return Threshold::Above;
    return wobble[n + p.m] < 0.5 ? Threshold::Below : Threshold::Above;
  };
  auto est = apv_to_apx(decide, p.lo, p.hi, p.k, p.c, p.m);
  rep.outputs = {{"estimate", est.estimate}, {"lower", est.lower},   {"upper", est.upper},
                 {"n_star", est.n_star},     {"scale", est.scale},   {"guaranteed_factor", est.guaranteed_factor},
                 {"queries", est.queries}};
  rep.check("interval_contains_f", est.lower <= p.f && p.f <= est.upper);
  rep.summary = "estimate " + std::to_string(est.estimate) + " for f = " + std::to_string(p.f);
  return rep;
}

int emit(const Report& rep, double seconds) {
  Json j = {{"command", rep.command},       {"inputs_digest", rep.digest}, {"params", rep.params},
            {"outputs", rep.outputs},       {"tolerances", rep.tolerances}, {"pass", rep.pass},
            {"wall_time_s", seconds},       {"seed", g_seed}};
  std::cout << j.dump(2) << std::endl;
  std::cerr << rep.command << ": " << rep.summary << (rep.pass ? " [pass]" : " [FAIL]") << std::endl;
  return rep.pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeinkit: skein-theoretic brackets, circuit compilation and Potts models"};
  app.require_subcommand(1);
  app.add_option("--seed", g_seed, "seed for every randomized step")->capture_default_str();

  BracketArgs ba;
  auto* sb = app.add_subcommand("bracket", "Kauffman bracket of a braid closure");
  sb->add_option("braid", ba.file, "braid file (text or JSON)")->required();
  sb->add_option("--mode", ba.mode, "plat or trace")->capture_default_str();
  sb->add_option("--method", ba.method, "morse or brute")->capture_default_str();
  sb->add_option("--r", ba.r, "root of unity t = exp(2 pi i / r)");
  sb->add_option("--t", ba.t, "generic t as re,im");
  sb->add_option("--t-angle", ba.t_angle, "generic t = exp(i angle)");

  CompileArgs ca;
  auto* sc = app.add_subcommand("compile", "compile a 1-2 qubit circuit to a plat");
  sc->add_option("circuit", ca.file, "circuit JSON")->required();
  sc->add_option("--r", ca.r)->capture_default_str();
  sc->add_option("--eps", ca.eps)->capture_default_str();
  sc->add_option("--net-len", ca.net_len, "maximum word length of the epsilon-net")->capture_default_str();
  sc->add_option("--out", ca.out, "write the plat braid here");

  VerifyArgs va;
  auto* sv = app.add_subcommand("verify", "compare circuit and plat acceptance probabilities");
  sv->add_option("circuit", va.circuit)->required();
  sv->add_option("plat", va.plat)->required();
  sv->add_option("--r", va.r)->capture_default_str();
  sv->add_option("--bound", va.bound)->capture_default_str();

  PottsArgs pa;
  auto* sp = app.add_subcommand("potts", "Potts partition function or Tutte polynomial of a graph");
  sp->add_option("graph", pa.file, "graph JSON")->required();
  sp->add_option("--n", pa.n, "number of states");
  sp->add_option("--y", pa.y, "uniform edge weight (or Tutte y with --x)");
  sp->add_option("--x", pa.x, "Tutte x");

  WeightArgs wa;
  auto* sw = app.add_subcommand("implement-weight", "series-parallel composition reaching a target weight");
  sw->add_option("--n", wa.n)->capture_default_str();
  sw->add_option("--start", wa.start, "start weight(s)")->required();
  sw->add_option("--target", wa.target)->required();
  sw->add_option("--eps", wa.eps)->capture_default_str();
  sw->add_option("--budget", wa.budget)->capture_default_str();

  DenseArgs da;
  auto* sd = app.add_subcommand("dense-check", "numerical density certificate");
  sd->add_option("--preset", da.preset, "kauffman-r5, kauffman-r6, kauffman-r7, potts-n5-k3");
  sd->add_option("--r", da.r);
  sd->add_option("--strands", da.strands)->capture_default_str();
  sd->add_option("--expect", da.expect, "dense or not-dense");

  auto* sg = app.add_subcommand("gadget", "hardness gadgets");
  sg->require_subcommand(1);
  APrimeArgs aa;
  auto* sga = sg->add_subcommand("a-prime", "postselected success probability");
  sga->add_option("--a", aa.a);
  sga->add_option("--b", aa.b);
  sga->add_flag("--grid", aa.grid, "check the displayed bounds on a 100x100 grid");
  PromiseArgs pr;
  auto* sgp = sg->add_subcommand("promise-demo", "comparison driver on a simulated oracle");
  sgp->add_option("--a", pr.a)->capture_default_str();
  sgp->add_option("--b", pr.b)->capture_default_str();
  sgp->add_option("--n", pr.n)->capture_default_str();
  sgp->add_option("--gap", pr.gap)->capture_default_str();
  ApvArgs ap;
  auto* sgv = sg->add_subcommand("apv-demo", "window decisions to an approximation");
  sgv->add_option("--f", ap.f)->capture_default_str();
  sgv->add_option("--k", ap.k)->capture_default_str();
  sgv->add_option("--c", ap.c)->capture_default_str();
  sgv->add_option("--lo", ap.lo)->capture_default_str();
  sgv->add_option("--hi", ap.hi)->capture_default_str();
  sgv->add_option("--m", ap.m)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string which = "skeinkit";
  try {
    Report rep;
    if (*sb) rep = cmd_bracket(ba);
    else if (*sc) rep = cmd_compile(ca);
    else if (*sv) rep = cmd_verify(va);
    else if (*sp) rep = cmd_potts(pa);
    else if (*sw) rep = cmd_implement_weight(wa);
    else if (*sd) rep = cmd_dense_check(da);
    else if (*sga) rep = cmd_a_prime(aa);
    else if (*sgp) rep = cmd_promise_demo(pr);
    else rep = cmd_apv_demo(ap);
    return emit(rep, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  } catch (const Error& e) {
    Json j = {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}, {"pass", false}, {"seed", g_seed}};
    std::cout << j.dump(2) << std::endl;
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << std::endl;
    return exit_code(e.kind());
  }
}
