// Copyright 2026 The anyonweave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// anyonc: model checks, gate compilation, verification and braid diagrams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "anyon/json_io.hpp"
#include "anyon/render.hpp"
#include "anyon/synthesis.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using anyon::Charge;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

constexpr const char* kReportFormat = "anyonweave-report/1";

/// Everything that determines a compiled word, plus where it was written.
struct RunConfig {
  std::string kind = "single";
  int k = 5;
  std::string target = "hadamard";
  std::string phi = "pi";
  int max_length = 24;
  int step = 2;
  std::string method = "bidirectional";
  double hash_cell = 0.05;
  std::uint64_t budget = 4'000'000;
  int threads = 1;
  int refine = 0;
  std::string net;
  int sk_depth = 0;
  std::string out_dir;
  std::string name;
};

ojson to_json(const RunConfig& c) {
  ojson j;
  j["kind"] = c.kind;
  j["k"] = c.k;
  j["target"] = c.target;
  j["phi"] = c.phi;
  j["max_length"] = c.max_length;
  j["step"] = c.step;
  j["method"] = c.method;
  j["hash_cell"] = c.hash_cell;
  j["budget"] = c.budget;
  j["threads"] = c.threads;
  j["refine"] = c.refine;
  j["net"] = c.net;
  j["sk_depth"] = c.sk_depth;
  j["out_dir"] = c.out_dir;
  j["name"] = c.name;
  return j;
}

template <class T>
void take(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw anyon::UsageError(std::string("config field '") + key + "' has the wrong type");
  }
}

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw anyon::UsageError("config must be an object");
  RunConfig c;
  take(j, "kind", c.kind);
  take(j, "k", c.k);
  take(j, "target", c.target);
  take(j, "phi", c.phi);
  take(j, "max_length", c.max_length);
  take(j, "step", c.step);
  take(j, "method", c.method);
  take(j, "hash_cell", c.hash_cell);
  take(j, "budget", c.budget);
  take(j, "threads", c.threads);
  take(j, "refine", c.refine);
  take(j, "net", c.net);
  take(j, "sk_depth", c.sk_depth);
  take(j, "out_dir", c.out_dir);
  take(j, "name", c.name);
  return c;
}

/// Reads "pi", "-pi/4", "3pi/2", "pi*0.5" or a plain number (radians).
double parse_angle(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?)(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, re)) {
    double v = std::numbers::pi;
    if (m[2].length() > 0) v *= std::stod(m[2]);
    if (m[3].length() > 0) v /= std::stod(m[3]);
    return m[1] == "-" ? -v : v;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || s.find_first_not_of(" \t", used) != std::string::npos) {
    throw anyon::UsageError("cannot parse angle '" + s + "'");
  }
  return v;
}

void require_level(int k) {
  if (k < 1 || k > anyon::kMaxLevel) {
    throw anyon::UsageError("k=" + std::to_string(k) + " outside 1.." + std::to_string(anyon::kMaxLevel));
  }
}

std::string default_out_dir() {
  if (const char* env = std::getenv("ANYONC_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

anyon::SearchConfig search_config(const RunConfig& c) {
  anyon::SearchConfig s;
  s.max_length = c.max_length;
  s.alphabet.step = c.step;
  s.constraints.weave_only = c.step == 2;
  s.method = anyon::parse_method(c.method);
  s.hash_cell = c.hash_cell;
  s.budget = c.budget;
  s.threads = c.threads;
  s.refine = c.refine;
  s.validate();
  return s;
}

ojson complex_matrix(const anyon::Matrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

ojson gate_json(const anyon::CompiledGate& g) {
  ojson j;
  j["target"] = g.target;
  j["distance"] = g.distance;
  j["length"] = g.word.size();
  j["candidates_examined"] = g.candidates_examined;
  j["method"] = g.method;
  j["budget_limited"] = g.budget_limited;
  j["searched_length"] = g.searched_length;
  return j;
}

ojson two_qubit_json(const anyon::TwoQubitReport& r) {
  ojson j;
  j["distance"] = r.distance;
  j["leakage"] = r.leakage;
  j["leakage_frobenius"] = r.leakage_frobenius;
  j["control0"] = r.control0;
  j["control1"] = r.control1;
  j["target0"] = r.target0;
  j["phi"] = r.phi;
  j["phase_on_11"] = r.phase_on_11;
  j["block"] = complex_matrix(r.block);
  return j;
}

// ---------------------------------------------------------------------------
// Verification shared by compile (self-check) and verify

struct Verification {
  double distance = 0.0;
  double leakage = 0.0;
  ojson detail;
};

Verification verify_single(const anyon::BraidFile& f, const Eigen::Matrix2cd& target) {
  const anyon::Model model(f.k);
  const auto& ctx = f.word.context();
  if (ctx != anyon::ObjectList(3, Charge::half())) {
    throw anyon::UsageError("single-qubit braids act on three charge-1/2 objects");
  }
  const auto u4 = anyon::represent(anyon::qubit_word(f.word), model, Charge::vacuum());
  const auto u3 = anyon::represent(f.word, model);
  const auto sectors = anyon::sector_blocks(u3, anyon::ContiguousCharge{0, 2});
  Verification v;
  v.distance = anyon::distance(u4.matrix, target);
  v.leakage = sectors.off_block_spectral;
  ojson blocks = ojson::array();
  for (const auto& b : sectors.blocks) {
    ojson e;
    e["total_twice"] = b.label;
    e["matrix"] = complex_matrix(b.block);
    blocks.push_back(e);
  }
  v.detail["qubit"] = complex_matrix(u4.matrix);
  v.detail["sectors"] = blocks;
  return v;
}

Verification verify_two_qubit(const anyon::BraidFile& f, double phi, bool on_11) {
  const anyon::Model model(f.k);
  if (f.word.context() != anyon::QubitLayout::strands() || f.word.final_objects() != f.word.context()) {
    throw anyon::UsageError("two-qubit braids act on eight charge-1/2 strands and return them in order");
  }
  const auto u = anyon::represent(f.word, model, Charge::vacuum());
  const auto r = anyon::two_qubit_report(u, phi, on_11);
  Verification v;
  v.distance = r.distance;
  v.leakage = r.leakage;
  v.detail = two_qubit_json(r);
  return v;
}

// ---------------------------------------------------------------------------
// compile

struct CompileOutput {
  anyon::BraidFile braid;
  ojson report;
};

CompileOutput run_compile(const RunConfig& cfg) {
  require_level(cfg.k);
  const anyon::Model model(cfg.k);
  const auto scfg = search_config(cfg);
  const double phi = parse_angle(cfg.phi);
  const auto t0 = std::chrono::steady_clock::now();

  CompileOutput out;
  ojson& rep = out.report;
  rep["format"] = kReportFormat;
  rep["convention"] = anyon::kConventionId;
  rep["command"] = "compile";
  rep["config"] = to_json(cfg);

  if (cfg.kind == "single") {
    const auto target = anyon::named_gate(cfg.target, phi);
    anyon::CompiledGate g;
    if (!cfg.net.empty()) {
      anyon::require_single_qubit_level(model.level());
      const anyon::WeaveSpace space(model, anyon::ObjectList(3, Charge::half()), Charge::half(), scfg.alphabet);
      const auto net = anyon::load_net(space, cfg.net);
      g = anyon::refine(target, net, cfg.sk_depth, cfg.target);
    } else {
      g = anyon::compile_single_qubit(target, model, scfg, cfg.target, &std::cerr);
    }
    out.braid = {cfg.k, g.word, std::size_t{1}};
    const auto v = verify_single(out.braid, target);
    rep["result"] = gate_json(g);
    rep["result"]["leakage"] = v.leakage;
    rep["verification"] = v.detail;
    rep["distance"] = g.distance;
  } else if (cfg.kind == "controlled-phase") {
    anyon::TwoQubitGate g;
    if (cfg.k == 3) {
      if (std::abs(std::remainder(phi - std::numbers::pi, 2 * std::numbers::pi)) > 1e-12) {
        throw anyon::DomainError("at k=3 the two-qubit construction yields controlled-Z only (phi = pi)");
      }
      g = anyon::build_k3_controlled_z(model, scfg, &std::cerr);
    } else {
      const auto sw = anyon::compile_swap(model, scfg, &std::cerr);
      const auto ph = anyon::compile_phase_step(model, phi, scfg, &std::cerr);
      g = anyon::assemble_two_qubit(sw, ph, model, phi);
    }
    out.braid = {cfg.k, g.word, std::nullopt};
    ojson comps = ojson::array();
    for (const auto& c : g.components) comps.push_back(gate_json(c));
    rep["components"] = comps;
    rep["result"] = two_qubit_json(g.report);
    rep["result"]["length"] = g.word.size();
    rep["distance"] = g.report.distance;
  } else {
    throw anyon::UsageError("unknown kind '" + cfg.kind + "' (expected single or controlled-phase)");
  }
  rep["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string default_name(const RunConfig& c) {
  if (c.kind == "single") return c.target + "-k" + std::to_string(c.k);
  return "cphase-k" + std::to_string(c.k);
}

struct Written {
  std::string braid;
  std::string report;
};

Written write_outputs(const RunConfig& cfg, const CompileOutput& out) {
  const std::string dir = cfg.out_dir.empty() ? default_out_dir() : cfg.out_dir;
  fs::create_directories(dir);
  const std::string base = (fs::path(dir) / (cfg.name.empty() ? default_name(cfg) : cfg.name)).string();
  Written w{base + ".braid.json", base + ".report.json"};
  auto rep = out.report;
  rep["braid"] = fs::path(w.braid).filename().string();
  anyon::write_braid(w.braid, out.braid);
  anyon::write_text(w.report, rep.dump(2) + "\n");
  return w;
}

void print_summary(const CompileOutput& out, const Written& w) {
  const auto& r = out.report["result"];
  std::cout << std::setprecision(4) << "distance   " << out.report["distance"].get<double>() << "\n"
            << "leakage    " << r["leakage"].get<double>() << "\n"
            << "length     " << out.braid.word.size() << "\n";
  if (r.contains("candidates_examined")) {
    std::cout << "candidates " << r["candidates_examined"].get<std::uint64_t>() << "\n";
    if (r["budget_limited"].get<bool>()) std::cout << "note       search budget exhausted, best effort\n";
  } else {
    std::uint64_t n = 0;
    bool limited = false;
    for (const auto& c : out.report["components"]) {
      n += c["candidates_examined"].get<std::uint64_t>();
      limited = limited || c["budget_limited"].get<bool>();
    }
    std::cout << "candidates " << n << "\n"
              << "control0   " << r["control0"].get<double>() << "\n";
    if (limited) std::cout << "note       search budget exhausted, best effort\n";
  }
  std::cout << "braid      " << w.braid << "\nreport     " << w.report << "\n";
}

// ---------------------------------------------------------------------------
// check

/// Path counts of n charge-1/2 objects from powers of the truncated
/// adjacency matrix, independent of path enumeration.
std::vector<std::uint64_t> transfer_counts(int k, int max_n) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(k + 1), 0), out;
  v[1] = 1;  // one object of charge 1/2
  out.push_back(1);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::uint64_t> w(v.size(), 0);
    for (int j = 0; j <= k; ++j) {
      if (j > 0) w[static_cast<std::size_t>(j - 1)] += v[static_cast<std::size_t>(j)];
      if (j < k) w[static_cast<std::size_t>(j + 1)] += v[static_cast<std::size_t>(j)];
    }
    v = w;
    std::uint64_t total = 0;
    for (auto x : v) total += x;
    out.push_back(total);
  }
  return out;
}

int run_check(int k, std::optional<int> max_label) {
  require_level(k);
  // The exhaustive scan grows roughly as k^9; beyond k = 16 only small
  // external labels are checked unless asked otherwise.
  const int cap = max_label ? *max_label : (k <= 16 ? k : 8);
  if (cap < 0) throw anyon::UsageError("--max-label must be >= 0");
  const anyon::Model model(k);
  const auto r = model.check_consistency(cap);
  std::cout << std::scientific << std::setprecision(2) << "k          " << k << "\n";
  if (r.max_label < k) std::cout << "labels     external labels <= " << r.max_label << " (twice units)\n";
  std::cout
            << "pentagon   " << r.pentagon << " over " << r.pentagon_equations << " equations\n"
            << "hexagon    " << r.hexagon << " over " << r.hexagon_equations << " equations\n"
            << "unitarity  " << r.unitarity << "\n";
  constexpr int kMaxN = 14;
  const auto expect = transfer_counts(k, kMaxN);
  bool dims_ok = true;
  for (int n = 1; n <= kMaxN; ++n) {
    const auto got = anyon::enumerate_paths(anyon::ObjectList(static_cast<std::size_t>(n), Charge::half()),
                                            model.level())
                         .size();
    if (got != expect[static_cast<std::size_t>(n - 1)]) {
      dims_ok = false;
      std::cout << "dimension  n=" << n << ": " << got << " paths, transfer matrix gives "
                << expect[static_cast<std::size_t>(n - 1)] << "\n";
    }
  }
  std::cout << "dimensions " << (dims_ok ? "match" : "MISMATCH") << " for 1.." << kMaxN << " charge-1/2 objects\n";
  const bool ok = r.passed() && dims_ok;
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& braid_path, const std::string& report_path, std::string target, std::string phi,
               std::optional<double> tol, bool json_out) {
  const auto f = anyon::read_braid(braid_path);
  std::optional<double> reported;
  bool on_11 = f.k == 3;
  if (!report_path.empty()) {
    nlohmann::json rep;
    try {
      rep = nlohmann::json::parse(anyon::read_text(report_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw anyon::ParseError(report_path + ": " + e.what());
    }
    const auto cfg = config_from_json(rep.at("config"));
    if (target.empty()) target = cfg.target;
    if (phi.empty()) phi = cfg.phi;
    reported = rep.at("distance").get<double>();
    if (rep.contains("result") && rep["result"].contains("phase_on_11")) on_11 = rep["result"]["phase_on_11"];
  }
  if (phi.empty()) phi = "pi";

  Verification v;
  if (f.word.strands() == 8) {
    v = verify_two_qubit(f, parse_angle(phi), on_11);
  } else {
    if (target.empty()) throw anyon::UsageError("verify: --target or --report required for single-qubit braids");
    v = verify_single(f, anyon::named_gate(target, parse_angle(phi)));
  }
  const double limit = tol ? *tol : (reported ? *reported + 1e-12 : 1e-3);
  bool ok = v.distance <= limit;
  if (reported && std::abs(v.distance - *reported) > 1e-12) ok = false;

  ojson out;
  out["format"] = kReportFormat;
  out["convention"] = anyon::kConventionId;
  out["command"] = "verify";
  out["braid"] = braid_path;
  out["distance"] = v.distance;
  out["leakage"] = v.leakage;
  if (reported) out["reported_distance"] = *reported;
  out["tolerance"] = limit;
  out["passed"] = ok;
  out["detail"] = v.detail;
  if (json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::scientific << std::setprecision(6) << "distance   " << v.distance << "\n"
              << "leakage    " << v.leakage << "\n";
    if (reported) std::cout << "reported   " << *reported << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// library

std::string file_tag(std::string s) {
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '.') ch = '_';
  return s;
}

int run_library(RunConfig base, const std::string& phi_list) {
  require_level(base.k);
  const std::string dir = base.out_dir.empty() ? default_out_dir() : base.out_dir;
  ojson manifest;
  manifest["format"] = "anyonweave-manifest/1";
  manifest["convention"] = anyon::kConventionId;
  manifest["k"] = base.k;
  ojson gates = ojson::array();

  auto add = [&](RunConfig c, const std::string& label) {
    c.out_dir = dir;
    const auto out = run_compile(c);
    const auto w = write_outputs(c, out);
    ojson e;
    e["name"] = label;
    e["braid"] = fs::path(w.braid).filename().string();
    e["report"] = fs::path(w.report).filename().string();
    e["distance"] = out.report["distance"];
    e["length"] = out.braid.word.size();
    if (c.kind == "controlled-phase") e["two_qubit"] = out.report["result"];
    gates.push_back(e);
    std::cerr << label << ": distance " << out.report["distance"].get<double>() << "\n";
  };

  if (base.k != 3) {
    for (const std::string g : {"hadamard", "pauli-x", "pauli-y", "pauli-z", "s", "t"}) {
      RunConfig c = base;
      c.kind = "single";
      c.target = g;
      c.name = g;
      add(c, g);
    }
  }
  std::stringstream ss(phi_list);
  for (std::string phi; std::getline(ss, phi, ',');) {
    if (base.k != 3) {
      RunConfig c = base;
      c.kind = "single";
      c.target = "phase";
      c.phi = phi;
      c.name = "phase-" + file_tag(phi);
      add(c, "phase(" + phi + ")");
    }
    RunConfig c = base;
    c.kind = "controlled-phase";
    c.phi = phi;
    c.name = "controlled-phase-" + file_tag(phi);
    add(c, "controlled-phase(" + phi + ")");
    if (base.k == 3) break;
  }
  manifest["gates"] = gates;
  fs::create_directories(dir);
  const auto path = (fs::path(dir) / "manifest.json").string();
  anyon::write_text(path, manifest.dump(2) + "\n");
  std::cout << "manifest   " << path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anyonc: su(2)_k anyon braid compiler"};
  app.require_subcommand(1);

  int check_k = 0;
  std::optional<int> check_labels;
  auto* check = app.add_subcommand("check", "pentagon/hexagon/unitarity residuals and dimension counts");
  check->add_option("--k", check_k, "level")->required();
  check->add_option("--max-label", check_labels, "largest external label checked (twice units; default all up to k=16, else 8)");

  RunConfig cc;
  std::string config_path;
  auto* compile = app.add_subcommand("compile", "compile a gate into a braid");
  compile->add_option("--kind", cc.kind, "single | controlled-phase")->check(CLI::IsMember({"single", "controlled-phase"}));
  compile->add_option("--k", cc.k, "level");
  compile->add_option("--target", cc.target, "hadamard, pauli-x, pauli-y, pauli-z, s, t, phase, identity");
  compile->add_option("--phi", cc.phi, "phase angle: pi, pi/4, 0.3, ...");
  auto* o_len = compile->add_option("--max-len", cc.max_length, "middle-weave length searched");
  compile->add_option("--step", cc.step, "weave move alphabet: 2 (pure weaves) or 1");
  compile->add_option("--method", cc.method, "bidirectional | exhaustive");
  compile->add_option("--hash-cell", cc.hash_cell, "hash cell size for bidirectional search");
  compile->add_option("--budget", cc.budget, "enumerated words per half");
  compile->add_option("--threads", cc.threads, "worker threads");
  auto* o_refine = compile->add_option("--refine", cc.refine, "commutator refinement levels (0..3)");
  compile->add_option("--net", cc.net, "epsilon-net file; single-qubit Solovay-Kitaev instead of search");
  compile->add_option("--sk-depth", cc.sk_depth, "Solovay-Kitaev depth with --net");
  compile->add_option("--out", cc.out_dir, "output directory (default $ANYONC_OUT_DIR or .)");
  compile->add_option("--name", cc.name, "output base name");
  compile->add_option("--config", config_path, "report file whose config is re-run; flags override it");

  std::string braid_path, report_path, v_target, v_phi;
  std::optional<double> v_tol;
  bool v_json = false;
  auto* verify = app.add_subcommand("verify", "recompute a braid's unitary and distance");
  verify->add_option("braid", braid_path, "braid JSON")->required();
  verify->add_option("--report", report_path, "compile report to check against");
  verify->add_option("--target", v_target, "single-qubit target gate");
  verify->add_option("--phi", v_phi, "phase angle");
  verify->add_option("--tol", v_tol, "accepted distance");
  verify->add_flag("--json", v_json, "print the verification report as JSON");

  std::string r_path, r_format = "text", r_out;
  auto* render = app.add_subcommand("render", "draw a braid");
  render->add_option("braid", r_path, "braid JSON")->required();
  render->add_option("--format", r_format, "text | svg");
  render->add_option("--out", r_out, "output file (default stdout)");

  int n_k = 5, n_len = 0;
  double n_eps = 0.05, n_cell = 0.02;
  std::string n_out;
  auto* net = app.add_subcommand("net", "build and save a single-qubit epsilon net");
  net->add_option("--k", n_k, "level");
  net->add_option("--epsilon0", n_eps, "target covering radius");
  net->add_option("--max-len", n_len, "fixed word length instead of growing to epsilon0");
  net->add_option("--hash-cell", n_cell, "lookup cell size");
  net->add_option("--out", n_out, "net file")->required();

  RunConfig lc;
  lc.max_length = 36;
  lc.refine = 1;
  std::string l_phis = "pi";
  auto* library = app.add_subcommand("library", "compile the named gate set and write a manifest");
  library->add_option("--k", lc.k, "level");
  library->add_option("--max-len", lc.max_length, "middle-weave length searched");
  library->add_option("--refine", lc.refine, "commutator refinement levels");
  library->add_option("--phi", l_phis, "comma-separated phase angles");
  library->add_option("--out", lc.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(check_k, check_labels);

    if (*compile) {
      RunConfig cfg = cc;
      if (!config_path.empty()) {
        nlohmann::json rep;
        try {
          rep = nlohmann::json::parse(anyon::read_text(config_path));
        } catch (const nlohmann::json::parse_error& e) {
          throw anyon::ParseError(config_path + ": " + e.what());
        }
        if (!rep.contains("config")) throw anyon::UsageError(config_path + ": no config object");
        cfg = config_from_json(rep["config"]);
        // Explicit flags win over the stored config.
        for (auto* opt : compile->get_options()) {
          if (opt->count() == 0) continue;
          const auto n = opt->get_name();
          if (n == "--kind") cfg.kind = cc.kind;
          else if (n == "--k") cfg.k = cc.k;
          else if (n == "--target") cfg.target = cc.target;
          else if (n == "--phi") cfg.phi = cc.phi;
          else if (n == "--max-len") cfg.max_length = cc.max_length;
          else if (n == "--step") cfg.step = cc.step;
          else if (n == "--method") cfg.method = cc.method;
          else if (n == "--hash-cell") cfg.hash_cell = cc.hash_cell;
          else if (n == "--budget") cfg.budget = cc.budget;
          else if (n == "--threads") cfg.threads = cc.threads;
          else if (n == "--refine") cfg.refine = cc.refine;
          else if (n == "--net") cfg.net = cc.net;
          else if (n == "--sk-depth") cfg.sk_depth = cc.sk_depth;
          else if (n == "--out") cfg.out_dir = cc.out_dir;
          else if (n == "--name") cfg.name = cc.name;
        }
      } else if (cfg.kind == "controlled-phase") {
        // Two-qubit defaults: a shorter search plus one refinement level.
        if (o_len->count() == 0) cfg.max_length = 36;
        if (o_refine->count() == 0) cfg.refine = 1;
      }
      const auto out = run_compile(cfg);
      print_summary(out, write_outputs(cfg, out));
      return kExitOk;
    }

    if (*verify) return run_verify(braid_path, report_path, v_target, v_phi, v_tol, v_json);

    if (*render) {
      const auto fmt = anyon::parse_render_format(r_format);
      const auto doc = anyon::render(anyon::read_braid(r_path).word, fmt);
      if (r_out.empty()) std::cout << doc;
      else anyon::write_text(r_out, doc);
      return kExitOk;
    }

    if (*net) {
      require_level(n_k);
      const anyon::Model model(n_k);
      const anyon::WeaveSpace space(model, anyon::ObjectList(3, Charge::half()), Charge::half(), anyon::Alphabet{});
      anyon::require_dense(space);
      anyon::SearchConfig s;
      s.hash_cell = n_cell;
      auto e = n_len > 0 ? anyon::EpsilonNet(space, n_len, n_cell) : anyon::build_net(space, n_eps, s);
      if (n_len > 0) e.sample_covering(1000);
      anyon::save_net(e, n_out);
      std::cout << std::setprecision(4) << "words      " << e.size() << "\nlength     " << e.max_length()
                << "\nradius     " << e.covering_radius() << "\nnet        " << n_out << "\n";
      return kExitOk;
    }

    if (*library) return run_library(lc, l_phis);
  } catch (const anyon::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const anyon::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const anyon::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
