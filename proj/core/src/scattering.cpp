#include "qgzeta/scattering.hpp"

#include <algorithm>
#include <cmath>

namespace qgz {

namespace {

const cplx I_UNIT(0.0, 1.0);

cplx vertex_factor_at(const MetricGraph& g, int v, cplx k, bool negated) {
  int d = g.degree(v);
  cplx lam = g.lambda(v);
  cplx den = negated ? I_UNIT * k * static_cast<double>(d) + lam
                     : I_UNIT * k * static_cast<double>(d) - lam;
  double scale = std::max(1.0, std::abs(k) * d + std::abs(lam));
  if (std::abs(den) <= 1e-12 * scale)
    throw SingularParameterError("vertex factor pole at vertex '" + g.vertex_name(v) +
                                 "' for this k");
  return 2.0 * I_UNIT * k / den;
}

std::vector<cplx> all_vertex_factors(const MetricGraph& g, cplx k, bool negated) {
  std::vector<cplx> x(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) x[v] = vertex_factor_at(g, v, k, negated);
  return x;
}

// F-shaped matrix from given per-vertex factors: x_{o(e)} - delta_{ef} on
// each outgoing star.
ComplexMatrix star_blocks(const MetricGraph& g, const std::vector<cplx>& x) {
  int na = g.arc_count();
  ComplexMatrix f(na, na);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int e : g.arcs_from(v))
      for (int fcol : g.arcs_from(v)) f(e, fcol) = x[v] - (e == fcol ? 1.0 : 0.0);
  return f;
}

ComplexMatrix phase_diag(const MetricGraph& g, cplx k, double pot_sign, cplx outer_sign) {
  int na = g.arc_count();
  ComplexMatrix t(na, na);
  for (int a = 0; a < na; ++a)
    t(a, a) = std::exp(outer_sign * I_UNIT * g.length(a) * (k + pot_sign * g.potential(a)));
  return t;
}

ComplexMatrix reversal_matrix(const MetricGraph& g) {
  int na = g.arc_count();
  ComplexMatrix j0(na, na);
  for (int a = 0; a < na; ++a) j0(a, g.arc(a).inverse) = 1.0;
  return j0;
}

}  // namespace

cplx vertex_factor(const MetricGraph& g, int vertex, cplx k) {
  if (vertex < 0 || vertex >= g.vertex_count()) throw InputError("vertex index out of range");
  return vertex_factor_at(g, vertex, k, false);
}

ScatteringSet scattering_set(const MetricGraph& g, cplx k) {
  ScatteringSet set;
  set.k = k;
  std::vector<cplx> x = all_vertex_factors(g, k, false);
  int na = g.arc_count();
  set.T = phase_diag(g, k, -1.0, cplx(1.0, 0.0));
  set.R = phase_diag(g, k, +1.0, cplx(1.0, 0.0));
  set.J0 = reversal_matrix(g);
  set.F = star_blocks(g, x);
  set.S = ComplexMatrix(na, na);
  for (int e = 0; e < na; ++e)
    for (int f = 0; f < na; ++f) {
      if (g.arc(f).terminus != g.arc(e).origin) continue;
      set.S(e, f) = x[g.arc(e).origin] - (g.arc(e).inverse == f ? 1.0 : 0.0);
    }
  double scale = std::max(1.0, std::max(set.T.max_abs(), set.F.max_abs()));
  if (max_abs_diff(set.T, set.J0 * set.R * set.J0) > 1e-12 * scale ||
      max_abs_diff(set.S, set.F * set.J0) > 1e-12 * scale)
    throw std::logic_error("scattering_set: composition invariants violated");
  return set;
}

ComplexMatrix u_gs(const MetricGraph& g, cplx k) {
  ScatteringSet set = scattering_set(g, k);
  return set.T * set.S;
}

ComplexMatrix u_hkss(const MetricGraph& g, cplx k) {
  std::vector<cplx> xneg = all_vertex_factors(g, k, true);
  int na = g.arc_count();
  // S at -k, assembled from the reflected vertex factors.
  ComplexMatrix sneg(na, na);
  for (int e = 0; e < na; ++e)
    for (int f = 0; f < na; ++f) {
      if (g.arc(f).terminus != g.arc(e).origin) continue;
      sneg(e, f) = xneg[g.arc(e).origin] - (g.arc(e).inverse == f ? 1.0 : 0.0);
    }
  ComplexMatrix tneg = phase_diag(g, k, +1.0, cplx(-1.0, 0.0));
  return sneg * tneg;
}

ComplexMatrix u_tilde(const MetricGraph& g, cplx k) {
  ScatteringSet set = scattering_set(g, k);
  return set.R * (set.J0 * set.F);
}

ComplexMatrix u_prime(const MetricGraph& g, cplx k) {
  // (T F)^{-1} = F^{-1} T^{-1}, and F^{-1} is the star-block matrix built
  // from the reflected vertex factors.
  std::vector<cplx> xneg = all_vertex_factors(g, k, true);
  ComplexMatrix finv = star_blocks(g, xneg);
  ComplexMatrix tinv = phase_diag(g, k, -1.0, cplx(-1.0, 0.0));
  return reversal_matrix(g) * (finv * tinv);
}

ComplexMatrix walk_operator(const MetricGraph& g, cplx k, WalkKind kind) {
  switch (kind) {
    case WalkKind::GS: return u_gs(g, k);
    case WalkKind::HKSS: return u_hkss(g, k);
    case WalkKind::Tilde: return u_tilde(g, k);
    case WalkKind::Prime: return u_prime(g, k);
  }
  throw InputError("unknown walk operator");
}

const char* walk_kind_name(WalkKind kind) {
  switch (kind) {
    case WalkKind::GS: return "gs";
    case WalkKind::HKSS: return "hkss";
    case WalkKind::Tilde: return "tilde";
    case WalkKind::Prime: return "prime";
  }
  return "?";
}

cplx secular_det(const MetricGraph& g, cplx k) {
  ComplexMatrix m = ComplexMatrix::identity(g.arc_count());
  m -= u_gs(g, k);
  return determinant(std::move(m));
}

double WalkState::norm() const {
  double s = 0.0;
  for (const auto& v : amplitudes) s += std::norm(v);
  return std::sqrt(s);
}

WalkState walk_evolve(const MetricGraph& g, cplx k, WalkKind kind, WalkState state, int steps) {
  if (static_cast<int>(state.amplitudes.size()) != g.arc_count())
    throw InputError("walk state size must equal the arc count");
  if (steps < 0) throw InputError("steps must be >= 0");
  ComplexMatrix u = walk_operator(g, k, kind);
  for (int s = 0; s < steps; ++s) state.amplitudes = u * state.amplitudes;
  return state;
}

namespace {

double abs2_secular(const MetricGraph& g, double k) {
  cplx d = secular_det(g, k);
  return std::norm(d);
}

// Golden-section minimization of |det(I - U(k))|^2 on [lo, hi].
double golden_refine(const MetricGraph& g, double lo, double hi, double width) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = abs2_secular(g, x1), f2 = abs2_secular(g, x2);
  while (b - a > width) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = abs2_secular(g, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = abs2_secular(g, x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

SecularScan find_secular_roots(const MetricGraph& g, double k_min, double k_max, int grid_points,
                               const RootSearchOptions& opts) {
  if (!(k_min > 0.0)) throw InputError("k_min must be positive");
  if (k_min > k_max) throw InputError("k_min must not exceed k_max");
  SecularScan scan;
  if (k_min == k_max) return scan;
  if (grid_points < 2) throw InputError("grid must have at least 2 points");

  std::vector<double> ks(grid_points), fs(grid_points);
  double h = (k_max - k_min) / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    ks[i] = k_min + h * i;
    fs[i] = abs2_secular(g, ks[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i < grid_points; ++i) {
    bool left_ok = i == 0 || fs[i] <= fs[i - 1];
    bool right_ok = i == grid_points - 1 || fs[i] <= fs[i + 1];
    if (!left_ok || !right_ok) continue;
    double lo = i == 0 ? ks[0] : ks[i - 1];
    double hi = i == grid_points - 1 ? ks[grid_points - 1] : ks[i + 1];
    double kr = golden_refine(g, lo, hi, opts.refine_width);
    if (std::abs(secular_det(g, kr)) > opts.accept_abs_det) continue;
    bool dup = false;
    for (double r : roots)
      if (std::abs(r - kr) <= 1e-8) dup = true;
    if (!dup) roots.push_back(kr);
  }
  std::sort(roots.begin(), roots.end());
  for (size_t i = 1; i < roots.size(); ++i)
    if (roots[i] - roots[i - 1] < 2.0 * h)
      scan.warnings.push_back("roots near k=" + std::to_string(roots[i]) +
                              " are separated by less than two grid steps; "
                              "the grid may be too coarse");

  for (double kr : roots) {
    ComplexMatrix m = ComplexMatrix::identity(g.arc_count());
    m -= u_tilde(g, kr);
    ComplexMatrix gram = m.adjoint() * m;
    HermitianEigen eig = hermitian_eigen(std::move(gram));
    double smin = std::sqrt(std::max(0.0, eig.values.empty() ? 0.0 : eig.values[0]));
    double cutoff = std::max(100.0 * smin, 1e-9);
    ScatteringSet set = scattering_set(g, kr);
    for (size_t d = 0; d < eig.values.size(); ++d) {
      double s = std::sqrt(std::max(0.0, eig.values[d]));
      if (s > cutoff) break;
      Eigenmode mode;
      mode.k = kr;
      mode.residual = s;
      mode.a.resize(g.arc_count());
      for (int i = 0; i < g.arc_count(); ++i) mode.a[i] = eig.vectors(i, static_cast<int>(d));
      mode.b = set.F * mode.a;
      mode.phi.assign(g.vertex_count(), cplx(0.0, 0.0));
      for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& out = g.arcs_from(v);
        if (out.empty()) continue;
        cplx acc = 0.0;
        for (int e : out) acc += mode.a[e] + mode.b[e];
        mode.phi[v] = acc / static_cast<double>(out.size());
      }
      scan.modes.push_back(std::move(mode));
    }
  }
  scan.roots = std::move(roots);
  return scan;
}

}  // namespace qgz
