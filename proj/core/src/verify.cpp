#include "qgzeta/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>

#include "qgzeta/graph_io.hpp"
#include "qgzeta/polynomial.hpp"
#include "qgzeta/random_graphs.hpp"
#include "qgzeta/scattering.hpp"
#include "qgzeta/zeta.hpp"

namespace qgz {

namespace {

const cplx I_UNIT(0.0, 1.0);

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

GraphBundle load_bundle(const VerifyOptions& opts, const std::string& file) {
  return parse_graph_file(opts.data_dir + "/" + file);
}

VoltageAssignment carry_voltage(const MetricGraph& g, const GraphBundle& bundle) {
  if (!bundle.voltage) throw InputError("input file lacks a voltage assignment");
  std::vector<int> arcs(g.arc_count());
  for (int a = 0; a < g.arc_count(); ++a) arcs[a] = bundle.voltage->voltage(a);
  return VoltageAssignment(g, bundle.group, arcs);
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.rows()));
}

int count_loops(const MetricGraph& g) {
  int loops = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.arc(g.forward_arc(e)).origin == g.arc(g.forward_arc(e)).terminus) ++loops;
  return loops;
}

int count_parallel_pairs(const MetricGraph& g) {
  std::multiset<std::pair<int, int>> pairs;
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.arc(g.forward_arc(e)).origin, v = g.arc(g.forward_arc(e)).terminus;
    pairs.insert({std::min(u, v), std::max(u, v)});
  }
  int multi = 0;
  for (auto it = pairs.begin(); it != pairs.end(); it = pairs.upper_bound(*it))
    if (pairs.count(*it) > 1) ++multi;
  return multi;
}

}  // namespace

cplx triangle_symmetric_charpoly(cplx sigma, cplx a, cplx s, cplx t) {
  cplx b = sigma * sigma + (2.0 * a - 1.0) * s * t;
  return b * (b * b - 3.0 * s * t * a * a * sigma * sigma) -
         a * a * a * sigma * sigma * sigma * (s * s * s + t * t * t);
}

cplx triangle_symmetric_twisted_charpoly(cplx sigma, cplx a, cplx s, cplx t) {
  cplx b = sigma * sigma + (2.0 * a - 1.0) * s * t;
  return b * (b * b - 3.0 * s * t * a * a * sigma * sigma) +
         a * a * a * sigma * sigma * sigma * (s * s * s + t * t * t);
}

CheckResult verify_triangle_closed_forms(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"triangle-closed-forms", false, 0.0, 0.0, ""};
  GraphBundle bundle = load_bundle(opts, "k3_z2.json");
  IrrepSet chars = characters_abelian(bundle.group);
  std::mt19937_64 rng(opts.seed);

  for (int draw = 0; draw < 20; ++draw) {
    double k = uniform_in(rng, 0.5, 10.0);
    double len = uniform_in(rng, 0.5, 2.0);
    double pot = uniform_in(rng, -1.0, 1.0);
    double lam = uniform_in(rng, -2.0, 2.0);
    MetricGraph g = with_uniform_data(bundle.graph, len, pot, cplx(lam, 0.0));
    VoltageAssignment va = carry_voltage(g, bundle);
    CoveringGraph cover = derived_covering(g, va);

    cplx a = vertex_factor(g, 0, k);
    cplx t = std::exp(I_UNIT * len * cplx(k - pot, 0.0));
    cplx s = std::exp(I_UNIT * len * cplx(k + pot, 0.0));
    ComplexMatrix u = u_gs(g, k);
    ComplexMatrix f1 = twisted_walk_matrix(g, k, va, chars.reps[1]);
    ComplexMatrix uc = u_gs(cover.graph, k);

    for (int j = 0; j < 10; ++j) {
      cplx sigma = random_sigma(rng, g, k);
      cplx plain = triangle_symmetric_charpoly(sigma, a, s, t);
      cplx twisted = triangle_symmetric_twisted_charpoly(sigma, a, s, t);

      ComplexMatrix m = sigma * ComplexMatrix::identity(6);
      m -= u;
      out.worst = std::max(out.worst, rel_err(determinant(std::move(m)), plain));

      ComplexMatrix m1 = sigma * ComplexMatrix::identity(6);
      m1 -= f1;
      out.worst = std::max(out.worst, rel_err(determinant(std::move(m1)), twisted));

      ComplexMatrix mc = sigma * ComplexMatrix::identity(12);
      mc -= uc;
      out.worst = std::max(out.worst, rel_err(determinant(std::move(mc)), plain * twisted));
    }
  }
  out.pass = out.worst <= opts.tol;
  out.detail = "20 parameter draws x 10 spectral points; secular, sign-twisted, and covering forms";
  out.elapsed_sec = timer.seconds();
  return out;
}

CheckResult verify_charpoly_reduction(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"charpoly-vertex-reduction", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(opts.seed + 1);
  int loops = 0, multis = 0;
  for (int i = 0; i < 50; ++i) {
    RandomGraphOptions gopts;
    gopts.max_vertices = 8;
    gopts.max_edges = 14;
    gopts.force_loop = i % 5 == 0;
    gopts.force_multi_edge = i % 7 == 0;
    MetricGraph g = random_connected_graph(rng, gopts);
    loops += count_loops(g);
    multis += count_parallel_pairs(g);
    double k = uniform_in(rng, 0.5, 10.0);
    for (int j = 0; j < 10; ++j) {
      cplx sigma = random_sigma(rng, g, k);
      out.worst = std::max(out.worst, charpoly_via_reduction(g, k, sigma).max_rel_err);
    }
  }
  out.pass = out.worst <= opts.tol && loops > 0 && multis > 0;
  out.detail = "50 random connected graphs (" + std::to_string(loops) + " loops, " +
               std::to_string(multis) + " parallel pairs), 10 spectral points each";
  out.elapsed_sec = timer.seconds();
  return out;
}

CheckResult verify_covering_factorization(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"covering-factorization", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(opts.seed + 2);

  GraphBundle k3 = load_bundle(opts, "k3_z2.json");
  IrrepSet k3chars = characters_abelian(k3.group);
  for (int draw = 0; draw < 10; ++draw) {
    double k = uniform_in(rng, 0.5, 10.0);
    cplx sigma = random_sigma(rng, k3.graph, k);
    CoveringCharpoly cc = covering_charpoly(k3.graph, k, *k3.voltage, k3chars, sigma);
    out.worst = std::max(out.worst, cc.rel_err);
    cplx via_l = covering_from_l_functions(k3.graph, k, *k3.voltage, k3chars, sigma);
    out.worst = std::max(out.worst, rel_err(cc.direct, via_l));
  }

  std::vector<GroupPtr> groups = {cyclic_group(2), cyclic_group(3), product_group({2, 2})};
  for (int i = 0; i < 10; ++i) {
    RandomGraphOptions gopts;
    gopts.max_vertices = 5;
    gopts.max_edges = 8;
    MetricGraph g = random_connected_graph(rng, gopts);
    GroupPtr group = groups[i % groups.size()];
    VoltageAssignment va = random_voltage(rng, g, group);
    IrrepSet chars = characters_abelian(group);
    double k = uniform_in(rng, 0.5, 10.0);
    for (int j = 0; j < 10; ++j) {
      cplx sigma = random_sigma(rng, g, k);
      CoveringCharpoly cc = covering_charpoly(g, k, va, chars, sigma);
      out.worst = std::max(out.worst, cc.rel_err);
      cplx via_l = covering_from_l_functions(g, k, va, chars, sigma);
      out.worst = std::max(out.worst, rel_err(cc.direct, via_l));
    }
  }
  out.pass = out.worst <= opts.tol;
  out.detail = "triangle with sign voltage plus 10 random graphs over orders 2, 3, 4";
  out.elapsed_sec = timer.seconds();
  return out;
}

CheckResult verify_l_function_forms(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"l-function-three-ways", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(opts.seed + 3);
  std::vector<GroupPtr> groups = {cyclic_group(2), cyclic_group(3), product_group({2, 2})};
  for (int i = 0; i < 6; ++i) {
    RandomGraphOptions gopts;
    gopts.max_vertices = 5;
    gopts.max_edges = 8;
    MetricGraph g = random_connected_graph(rng, gopts);
    GroupPtr group = groups[i % groups.size()];
    VoltageAssignment va = random_voltage(rng, g, group);
    IrrepSet chars = characters_abelian(group);
    double k = uniform_in(rng, 0.5, 10.0);
    for (const auto& rho : chars.reps)
      for (int j = 0; j < 10; ++j) {
        cplx s = random_s(rng, g, k);
        out.worst = std::max(out.worst, l_function_reciprocal(g, k, va, rho, s).max_rel_err);
      }
  }
  out.pass = out.worst <= opts.tol;
  out.detail = "6 random graphs, every character, 10 evaluation points each";
  out.elapsed_sec = timer.seconds();
  return out;
}

CheckResult verify_euler_series(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"euler-product-series", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(opts.seed + 4);
  const int order = 8;

  GraphBundle k3 = load_bundle(opts, "k3_z2.json");
  IrrepSet k3chars = characters_abelian(k3.group);
  for (const auto& rho : k3chars.reps) {
    double k = uniform_in(rng, 0.5, 10.0);
    PowerSeries cycle = euler_product_series(k3.graph, k, &*k3.voltage, rho, order);
    PowerSeries traces = zeta_series_via_traces(k3.graph, k, &*k3.voltage, rho, order);
    out.worst = std::max(out.worst, max_abs_coeff_diff(cycle, traces));
  }

  GroupPtr z2 = cyclic_group(2);
  IrrepSet z2chars = characters_abelian(z2);
  GroupPtr z1 = cyclic_group(1);
  Representation triv1 = trivial_representation(z1);
  for (int i = 0; i < 5; ++i) {
    RandomGraphOptions gopts;
    gopts.max_vertices = 5;
    gopts.max_edges = 6;
    MetricGraph g = random_connected_graph(rng, gopts);
    double k = uniform_in(rng, 0.5, 10.0);
    VoltageAssignment va = random_voltage(rng, g, z2);
    const Representation& rho = z2chars.reps[i % 2];
    PowerSeries cycle = euler_product_series(g, k, &va, rho, order);
    PowerSeries traces = zeta_series_via_traces(g, k, &va, rho, order);
    out.worst = std::max(out.worst, max_abs_coeff_diff(cycle, traces));
    // Untwisted route, no voltage assignment at all.
    PowerSeries cycle0 = euler_product_series(g, k, nullptr, triv1, order);
    PowerSeries traces0 = zeta_series_via_traces(g, k, nullptr, triv1, order);
    out.worst = std::max(out.worst, max_abs_coeff_diff(cycle0, traces0));
  }
  out.pass = out.worst <= 1e-8;
  out.detail = "cycle expansion vs transfer traces through order 8, absolute per coefficient";
  out.elapsed_sec = timer.seconds();
  return out;
}

CheckResult verify_operator_relations(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"walk-operator-relations", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(opts.seed + 5);
  for (int i = 0; i < 20; ++i) {
    RandomGraphOptions gopts;
    gopts.max_vertices = 6;
    gopts.max_edges = 10;
    gopts.force_loop = i % 6 == 0;
    MetricGraph g = random_connected_graph(rng, gopts);
    double k = uniform_in(rng, 0.5, 10.0);
    ScatteringSet set = scattering_set(g, k);
    ComplexMatrix ugs = u_gs(g, k);
    ComplexMatrix uhk = u_hkss(g, k);
    ComplexMatrix uti = u_tilde(g, k);
    ComplexMatrix upr = u_prime(g, k);
    ComplexMatrix id = ComplexMatrix::identity(g.arc_count());
    ComplexMatrix h = set.T * set.F;

    auto note = [&](double d) { out.worst = std::max(out.worst, d); };
    note(max_abs_diff(ugs, set.T * set.S));
    note(max_abs_diff(ugs, h * set.J0));
    note(max_abs_diff(uti, set.J0 * h));
    note(max_abs_diff(uhk, inverse(set.F) * (set.J0 * inverse(set.R))));
    note(max_abs_diff(uti * uhk, id));
    note(max_abs_diff(ugs * upr, id));
    note(max_abs_diff(set.J0 * (uti * set.J0), ugs));
    note(max_abs_diff(set.J0 * (uhk * set.J0), upr));
    note(max_abs_diff(ugs, set.J0 * (inverse(uhk) * set.J0)));
    note(unitarity_defect(ugs));
    note(unitarity_defect(uhk));
    note(unitarity_defect(uti));
    note(unitarity_defect(upr));
  }
  out.pass = out.worst <= 1e-9;
  out.detail = "20 random graphs, real momenta; composition, duality, inverse pairs, unitarity";
  out.elapsed_sec = timer.seconds();
  return out;
}

CheckResult verify_equilateral_spectrum(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"equilateral-triangle-spectrum", false, 0.0, 0.0, ""};
  GraphBundle bundle = load_bundle(opts, "k3_equilateral.json");
  const MetricGraph& g = bundle.graph;
  SecularScan scan = find_secular_roots(g, 0.1, 7.0, 2000);

  // Oracle for the all-lengths-one triangle with Kirchhoff vertices:
  // cos k = 1 or cos k = -1/2 inside the window.
  std::vector<double> oracle = {2.0 * pi / 3.0, 4.0 * pi / 3.0, 2.0 * pi};
  double worst = 0.0;
  bool structure_ok = scan.roots.size() == oracle.size();
  if (structure_ok)
    for (size_t i = 0; i < oracle.size(); ++i)
      worst = std::max(worst, std::abs(scan.roots[i] - oracle[i]));

  if (structure_ok) {
    for (double kr : scan.roots)
      for (WalkKind kind : {WalkKind::GS, WalkKind::HKSS, WalkKind::Tilde, WalkKind::Prime}) {
        std::vector<cplx> ev = eigenvalues(walk_operator(g, kr, kind));
        double best = 1e9;
        for (cplx v : ev) best = std::min(best, std::abs(v - cplx(1.0, 0.0)));
        worst = std::max(worst, best);
      }
    ComplexMatrix j0(g.arc_count(), g.arc_count());
    for (int a = 0; a < g.arc_count(); ++a) j0(a, g.arc(a).inverse) = 1.0;
    for (const Eigenmode& mode : scan.modes) {
      ComplexMatrix uhk = u_hkss(g, mode.k);
      ComplexMatrix ugs = u_gs(g, mode.k);
      std::vector<cplx> ua = uhk * mode.a;
      std::vector<cplx> ja = j0 * mode.a;
      std::vector<cplx> uja = ugs * ja;
      double d1 = 0.0, d2 = 0.0;
      for (int i = 0; i < g.arc_count(); ++i) {
        d1 += std::norm(ua[i] - mode.a[i]);
        d2 += std::norm(uja[i] - ja[i]);
      }
      worst = std::max(worst, std::sqrt(d1));
      worst = std::max(worst, std::sqrt(d2));
      // Boundary values must agree across each vertex star.
      for (int v = 0; v < g.vertex_count(); ++v)
        for (int e : g.arcs_from(v))
          worst = std::max(worst, std::abs(mode.a[e] + mode.b[e] - mode.phi[v]));
    }
  }
  out.worst = worst;
  out.pass = structure_ok && worst <= 1e-6;
  out.detail = "found " + std::to_string(scan.roots.size()) + " roots (expected 3), " +
               std::to_string(scan.modes.size()) + " modes; fixed vectors checked in all four operators";
  out.elapsed_sec = timer.seconds();
  return out;
}

CheckResult verify_ihara_forms(const VerifyOptions& opts) {
  Timer timer;
  CheckResult out{"ihara-bass-edge", false, 0.0, 0.0, ""};
  std::mt19937_64 rng(opts.seed + 6);
  std::vector<MetricGraph> graphs;
  graphs.push_back(load_bundle(opts, "k3_equilateral.json").graph);
  graphs.push_back(load_bundle(opts, "k4.json").graph);
  graphs.push_back(load_bundle(opts, "theta.json").graph);

  for (const MetricGraph& g : graphs)
    for (int i = 0; i < 20; ++i) {
      cplx u;
      do {
        double r = uniform_in(rng, 0.05, 0.8);
        double th = uniform_in(rng, 0.0, 2.0 * pi);
        u = r * cplx(std::cos(th), std::sin(th));
      } while (std::abs(u * u - 1.0) < 0.05);
      IharaPair pair = ihara_zeta_reciprocal(g, u);
      out.worst = std::max(out.worst, rel_err(pair.bass, pair.edge));
      if (&g == &graphs[0]) {
        cplx cubed = 1.0 - u * u * u;
        out.worst = std::max(out.worst, rel_err(pair.edge, cubed * cubed));
      }
    }
  out.pass = out.worst <= 1e-10;
  out.detail = "triangle, tetrahedron, theta graph; 20 points each; triangle matches (1-u^3)^2";
  out.elapsed_sec = timer.seconds();
  return out;
}

VerifyReport run_verification(const VerifyOptions& opts) {
  using CheckFn = CheckResult (*)(const VerifyOptions&);
  struct Entry {
    const char* name;
    CheckFn fn;
  };
  const Entry entries[] = {
      {"triangle-closed-forms", verify_triangle_closed_forms},
      {"charpoly-vertex-reduction", verify_charpoly_reduction},
      {"covering-factorization", verify_covering_factorization},
      {"l-function-three-ways", verify_l_function_forms},
      {"euler-product-series", verify_euler_series},
      {"walk-operator-relations", verify_operator_relations},
      {"equilateral-triangle-spectrum", verify_equilateral_spectrum},
      {"ihara-bass-edge", verify_ihara_forms},
  };
  VerifyReport report;
  for (const Entry& e : entries) {
    Timer timer;
    try {
      report.checks.push_back(e.fn(opts));
    } catch (const std::exception& ex) {
      // A throwing check counts as failed but must not hide the others.
      CheckResult bad{e.name, false, std::numeric_limits<double>::infinity(), timer.seconds(),
                      std::string("aborted: ") + ex.what()};
      report.checks.push_back(std::move(bad));
    }
  }
  report.all_pass = true;
  for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
  return report;
}

}  // namespace qgz
