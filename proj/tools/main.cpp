#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgzeta/graph_io.hpp"
#include "qgzeta/polynomial.hpp"
#include "qgzeta/scattering.hpp"
#include "qgzeta/verify.hpp"
#include "qgzeta/zeta.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qgz;

json cx(cplx z) { return json::array({z.real(), z.imag()}); }

json cx_vector(const std::vector<cplx>& v) {
  json out = json::array();
  for (cplx z : v) out.push_back(cx(z));
  return out;
}

// "1.5" or "1.5,-0.25" -> complex
cplx parse_cplx(const std::string& text) {
  size_t comma = text.find(',');
  try {
    size_t pos = 0;
    if (comma == std::string::npos) {
      double re = std::stod(text, &pos);
      if (pos != text.size()) throw InputError("");
      return cplx(re, 0.0);
    }
    double re = std::stod(text.substr(0, comma), &pos);
    if (pos != comma) throw InputError("");
    std::string imtext = text.substr(comma + 1);
    double im = std::stod(imtext, &pos);
    if (pos != imtext.size()) throw InputError("");
    return cplx(re, im);
  } catch (const std::exception&) {
    throw InputError("cannot parse complex value '" + text + "' (use re or re,im)");
  }
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write '" + out_path + "'");
    f << doc.dump(2) << "\n";
  }
}

struct CommonArgs {
  std::string graph_path;
  std::string out_path;
  double tol = 1e-8;
};

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_charpoly(const CommonArgs& common, const std::string& k_text,
                 const std::vector<std::string>& sigma_texts) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBundle bundle = parse_graph_file(common.graph_path);
  cplx k = parse_cplx(k_text);
  json results = json::array();
  double worst = 0.0;
  for (const auto& st : sigma_texts) {
    cplx sigma = parse_cplx(st);
    CharpolyReduction r = charpoly_via_reduction(bundle.graph, k, sigma);
    worst = std::max(worst, r.max_rel_err);
    results.push_back({{"sigma", cx(sigma)},
                       {"direct", cx(r.direct)},
                       {"via_tilde", cx(r.via_tilde)},
                       {"via_bar", cx(r.via_bar)},
                       {"max_rel_err", r.max_rel_err}});
  }
  json doc = {{"command", "charpoly"},
              {"inputs_echo", {{"graph", common.graph_path}, {"k", cx(k)}, {"sigma_count", sigma_texts.size()}}},
              {"results", results},
              {"residuals", {{"max_rel_err", worst}, {"tol", common.tol}, {"within_tol", worst <= common.tol}}},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, common.out_path);
  return worst <= common.tol ? 0 : 1;
}

int run_cover(const CommonArgs& common, const std::string& k_text,
              const std::vector<std::string>& sigma_texts) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBundle bundle = parse_graph_file(common.graph_path);
  if (!bundle.voltage) throw InputError("cover requires a group block in the graph file");
  cplx k = parse_cplx(k_text);
  IrrepSet irreps = resolve_irreps(bundle);
  json results = json::array();
  double worst = 0.0;
  for (const auto& st : sigma_texts) {
    cplx sigma = parse_cplx(st);
    CoveringCharpoly cc = covering_charpoly(bundle.graph, k, *bundle.voltage, irreps, sigma);
    cplx via_l = covering_from_l_functions(bundle.graph, k, *bundle.voltage, irreps, sigma);
    double err = std::max(cc.rel_err, rel_err(cc.direct, via_l));
    worst = std::max(worst, err);
    json factors = json::array();
    for (size_t i = 0; i < irreps.reps.size(); ++i)
      factors.push_back({{"rep", irreps.reps[i].name},
                         {"degree", irreps.reps[i].degree},
                         {"value", cx(cc.factors[i])}});
    results.push_back({{"sigma", cx(sigma)},
                       {"direct", cx(cc.direct)},
                       {"decomposed", cx(cc.decomposed)},
                       {"via_l_functions", cx(via_l)},
                       {"factors", factors},
                       {"max_rel_err", err}});
  }
  json doc = {{"command", "cover"},
              {"inputs_echo", {{"graph", common.graph_path}, {"k", cx(k)}, {"irreps", irreps.reps.size()}}},
              {"results", results},
              {"residuals", {{"max_rel_err", worst}, {"tol", common.tol}, {"within_tol", worst <= common.tol}}},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, common.out_path);
  return worst <= common.tol ? 0 : 1;
}

int run_zeta(const CommonArgs& common, const std::string& k_text, const std::string& rep_name,
             const std::vector<std::string>& s_texts) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBundle bundle = parse_graph_file(common.graph_path);
  if (!bundle.voltage) throw InputError("zeta requires a group block in the graph file");
  cplx k = parse_cplx(k_text);
  Representation rho = resolve_rep(bundle, rep_name.empty() ? "0" : rep_name);
  json results = json::array();
  double worst = 0.0;
  for (const auto& st : s_texts) {
    cplx s = parse_cplx(st);
    LFunctionEval lf = l_function_reciprocal(bundle.graph, k, *bundle.voltage, rho, s);
    worst = std::max(worst, lf.max_rel_err);
    results.push_back({{"s", cx(s)},
                       {"reciprocal_direct", cx(lf.direct)},
                       {"reciprocal_via_tilde", cx(lf.via_tilde)},
                       {"reciprocal_via_bar", cx(lf.via_bar)},
                       {"max_rel_err", lf.max_rel_err}});
  }
  json doc = {{"command", "zeta"},
              {"inputs_echo", {{"graph", common.graph_path}, {"k", cx(k)}, {"rep", rho.name}}},
              {"results", results},
              {"residuals", {{"max_rel_err", worst}, {"tol", common.tol}, {"within_tol", worst <= common.tol}}},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, common.out_path);
  return worst <= common.tol ? 0 : 1;
}

int run_euler(const CommonArgs& common, const std::string& k_text, const std::string& rep_name,
              int order) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBundle bundle = parse_graph_file(common.graph_path);
  cplx k = parse_cplx(k_text);
  Representation rho;
  const VoltageAssignment* va = nullptr;
  if (bundle.voltage) {
    rho = resolve_rep(bundle, rep_name.empty() ? "0" : rep_name);
    va = &*bundle.voltage;
  } else {
    if (!rep_name.empty()) throw InputError("--rep needs a group block in the graph file");
    rho = trivial_representation(cyclic_group(1));
  }
  PowerSeries cycle = euler_product_series(bundle.graph, k, va, rho, order);
  PowerSeries traces = zeta_series_via_traces(bundle.graph, k, va, rho, order);
  double worst = max_abs_coeff_diff(cycle, traces);
  size_t n_classes = prime_cycles(bundle.graph, k, order, va).size();
  json doc = {{"command", "euler"},
              {"inputs_echo", {{"graph", common.graph_path}, {"k", cx(k)}, {"rep", rho.name}, {"order", order}}},
              {"results",
               {{"cycle_series", cx_vector(cycle.coefficients())},
                {"trace_series", cx_vector(traces.coefficients())},
                {"prime_classes", n_classes}}},
              {"residuals", {{"max_abs_coeff_diff", worst}, {"tol", common.tol}, {"within_tol", worst <= common.tol}}},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, common.out_path);
  return worst <= common.tol ? 0 : 1;
}

int run_spectrum(const CommonArgs& common, double kmin, double kmax, int grid) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBundle bundle = parse_graph_file(common.graph_path);
  SecularScan scan = find_secular_roots(bundle.graph, kmin, kmax, grid);
  json modes = json::array();
  for (const Eigenmode& m : scan.modes)
    modes.push_back({{"k", m.k},
                     {"residual", m.residual},
                     {"a", cx_vector(m.a)},
                     {"b", cx_vector(m.b)},
                     {"phi", cx_vector(m.phi)}});
  json doc = {{"command", "spectrum"},
              {"inputs_echo", {{"graph", common.graph_path}, {"kmin", kmin}, {"kmax", kmax}, {"grid", grid}}},
              {"results", {{"roots", scan.roots}, {"modes", modes}, {"warnings", scan.warnings}}},
              {"residuals", json::object()},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, common.out_path);
  return 0;
}

int run_walk(const CommonArgs& common, const std::string& k_text, const std::string& op_name,
             int steps, const std::string& start) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBundle bundle = parse_graph_file(common.graph_path);
  const MetricGraph& g = bundle.graph;
  cplx k = parse_cplx(k_text);
  WalkKind kind;
  if (op_name == "gs") kind = WalkKind::GS;
  else if (op_name == "hkss") kind = WalkKind::HKSS;
  else if (op_name == "tilde") kind = WalkKind::Tilde;
  else if (op_name == "prime") kind = WalkKind::Prime;
  else throw InputError("--op must be one of gs, hkss, tilde, prime");
  if (g.arc_count() == 0) throw InputError("graph has no arcs to walk on");

  int start_arc = 0;
  if (!start.empty()) {
    start_arc = -1;
    for (int a = 0; a < g.arc_count(); ++a)
      if (g.arc_name(a) == start) start_arc = a;
    if (start_arc < 0) throw InputError("unknown start arc '" + start + "'");
  }
  WalkState state;
  state.amplitudes.assign(g.arc_count(), cplx(0.0, 0.0));
  state.amplitudes[start_arc] = 1.0;

  json trace = json::array();
  std::vector<double> norms;
  norms.push_back(state.norm());
  trace.push_back(cx_vector(state.amplitudes));
  for (int s = 0; s < steps; ++s) {
    state = walk_evolve(g, k, kind, std::move(state), 1);
    norms.push_back(state.norm());
    trace.push_back(cx_vector(state.amplitudes));
  }
  json doc = {{"command", "walk"},
              {"inputs_echo",
               {{"graph", common.graph_path},
                {"k", cx(k)},
                {"op", op_name},
                {"steps", steps},
                {"start", g.arc_name(start_arc)}}},
              {"results", {{"norms", norms}, {"final", cx_vector(state.amplitudes)}, {"trace", trace}}},
              {"residuals", json::object()},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, common.out_path);
  return 0;
}

int run_cycles(const CommonArgs& common, const std::string& k_text, int max_len) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBundle bundle = parse_graph_file(common.graph_path);
  cplx k = parse_cplx(k_text);
  const VoltageAssignment* va = bundle.voltage ? &*bundle.voltage : nullptr;
  std::vector<PrimeCycleClass> classes = prime_cycles(bundle.graph, k, max_len, va);
  json rows = json::array();
  for (const auto& c : classes) {
    json arcs = json::array();
    for (int a : c.arcs) arcs.push_back(bundle.graph.arc_name(a));
    json row = {{"arcs", arcs}, {"length", c.length()}, {"weight", cx(c.weight)}};
    if (va) {
      row["voltage"] = c.voltage;
      row["voltage_name"] = va->group()->name(c.voltage);
    }
    rows.push_back(std::move(row));
  }
  json doc = {{"command", "cycles"},
              {"inputs_echo", {{"graph", common.graph_path}, {"k", cx(k)}, {"max_len", max_len}}},
              {"results", {{"classes", rows}, {"count", classes.size()}}},
              {"residuals", json::object()},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, common.out_path);
  return 0;
}

int run_verify(const std::string& data_dir, uint64_t seed, double tol, const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.data_dir = data_dir;
  opts.seed = seed;
  opts.tol = tol;
  VerifyReport report = run_verification(opts);
  json checks = json::array();
  for (const auto& c : report.checks) {
    std::fprintf(stderr, "[%s] %-32s worst=%.3e  (%.2fs)  %s\n", c.pass ? "PASS" : "FAIL",
                 c.name.c_str(), c.worst, c.elapsed_sec, c.detail.c_str());
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"worst", c.worst},
                      {"elapsed_sec", c.elapsed_sec},
                      {"detail", c.detail}});
  }
  std::fprintf(stderr, "%s\n", report.all_pass ? "all checks passed" : "CHECKS FAILED");
  json doc = {{"command", "verify"},
              {"inputs_echo", {{"data", data_dir}, {"seed", seed}, {"tol", tol}}},
              {"results", {{"checks", checks}, {"all_pass", report.all_pass}}},
              {"residuals", json::object()},
              {"timings", {{"total_sec", elapsed_since(t0)}}}};
  emit(doc, out_path);
  return report.all_pass ? 0 : 1;
}

json error_doc(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bond scattering matrices, secular determinants, and zeta identities on metric graphs"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string k_text;
  std::vector<std::string> sigma_texts, s_texts;
  std::string rep_name, op_name = "gs", start_arc;
  double kmin = 0.0, kmax = 0.0;
  int grid = 2000, max_len = 6, order = 8, steps = 10;
  std::string data_dir = "data";
  uint64_t seed = 20260823;

  auto add_common = [&](CLI::App* cmd, bool needs_graph = true) {
    if (needs_graph) cmd->add_option("--graph", common.graph_path, "problem description file")->required();
    cmd->add_option("--out", common.out_path, "write the JSON document here instead of stdout");
    cmd->add_option("--tol", common.tol, "residual tolerance for the exit status");
  };

  CLI::App* c_charpoly = app.add_subcommand("charpoly", "secular determinant, direct and reduced");
  add_common(c_charpoly);
  c_charpoly->add_option("--k", k_text, "momentum (re or re,im)")->required();
  c_charpoly->add_option("--sigma", sigma_texts, "spectral point, repeatable")->required();

  CLI::App* c_cover = app.add_subcommand("cover", "covering determinant and its factorization");
  add_common(c_cover);
  c_cover->add_option("--k", k_text, "momentum")->required();
  c_cover->add_option("--sigma", sigma_texts, "spectral point, repeatable")->required();

  CLI::App* c_zeta = app.add_subcommand("zeta", "twisted L-function reciprocal, three ways");
  add_common(c_zeta);
  c_zeta->add_option("--k", k_text, "momentum")->required();
  c_zeta->add_option("--rep", rep_name, "representation name or index (default: trivial)");
  c_zeta->add_option("--s", s_texts, "evaluation point, repeatable")->required();

  CLI::App* c_euler = app.add_subcommand("euler", "prime-cycle expansion vs transfer traces");
  add_common(c_euler);
  c_euler->add_option("--k", k_text, "momentum")->required();
  c_euler->add_option("--rep", rep_name, "representation name or index");
  c_euler->add_option("--max-len", order, "series truncation order (<= 12)");

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "secular roots and eigenmodes on a window");
  add_common(c_spectrum);
  c_spectrum->add_option("--kmin", kmin, "window start")->required();
  c_spectrum->add_option("--kmax", kmax, "window end")->required();
  c_spectrum->add_option("--grid", grid, "grid points (default 2000)");

  CLI::App* c_walk = app.add_subcommand("walk", "evolve a bond state and trace it");
  add_common(c_walk);
  c_walk->add_option("--k", k_text, "momentum")->required();
  c_walk->add_option("--op", op_name, "gs, hkss, tilde, or prime (default gs)");
  c_walk->add_option("--steps", steps, "number of steps (default 10)");
  c_walk->add_option("--start", start_arc, "starting arc name (default: first arc)");

  CLI::App* c_cycles = app.add_subcommand("cycles", "prime cycle classes with weights");
  add_common(c_cycles);
  c_cycles->add_option("--k", k_text, "momentum")->required();
  c_cycles->add_option("--max-len", max_len, "maximum cycle length (default 6, <= 12)");

  CLI::App* c_verify = app.add_subcommand("verify", "run the whole identity suite");
  c_verify->add_option("--data", data_dir, "directory with the bundled graph files");
  c_verify->add_option("--seed", seed, "seed for the randomized checks");
  c_verify->add_option("--tol", common.tol, "relative tolerance for the identity checks");
  c_verify->add_option("--out", common.out_path, "write the JSON document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_charpoly->parsed()) return run_charpoly(common, k_text, sigma_texts);
    if (c_cover->parsed()) return run_cover(common, k_text, sigma_texts);
    if (c_zeta->parsed()) return run_zeta(common, k_text, rep_name, s_texts);
    if (c_euler->parsed()) return run_euler(common, k_text, rep_name, order);
    if (c_spectrum->parsed()) return run_spectrum(common, kmin, kmax, grid);
    if (c_walk->parsed()) return run_walk(common, k_text, op_name, steps, start_arc);
    if (c_cycles->parsed()) return run_cycles(common, k_text, max_len);
    if (c_verify->parsed()) return run_verify(data_dir, seed, common.tol, common.out_path);
  } catch (const InputError& e) {
    std::cout << error_doc("input", e.what()).dump(2) << "\n";
    return 2;
  } catch (const SingularParameterError& e) {
    std::cout << error_doc("singular-parameter", e.what()).dump(2) << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cout << error_doc("convergence", e.what()).dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout << error_doc("internal", e.what()).dump(2) << "\n";
    return 3;
  }
  return 2;
}
