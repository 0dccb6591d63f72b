#include "qgzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qgzeta/polynomial.hpp"
#include "qgzeta/scattering.hpp"

namespace qgz {

namespace {

const cplx I_UNIT(0.0, 1.0);

cplx ipow(cplx base, int e) {
  if (e < 0) {
    if (base == cplx(0.0, 0.0)) throw SingularParameterError("zero raised to a negative power");
    return 1.0 / ipow(base, -e);
  }
  cplx acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

cplx arc_phase(const MetricGraph& g, cplx k, int a) {
  return std::exp(I_UNIT * g.length(a) * (k - g.potential(a)));
}

cplx edge_round_trip(const MetricGraph& g, cplx k, int e) {
  return std::exp(2.0 * I_UNIT * k * g.length(g.forward_arc(e)));
}

void check_denominator(cplx den, cplx sigma2, cplx rt) {
  double scale = std::max(1.0, std::max(std::abs(sigma2), std::abs(rt)));
  if (std::abs(den) <= 1e-12 * scale)
    throw SingularParameterError("sigma^2 coincides with an edge round-trip phase");
}

std::vector<cplx> vertex_factors(const MetricGraph& g, cplx k) {
  std::vector<cplx> x(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) x[v] = vertex_factor(g, v, k);
  return x;
}

}  // namespace

ReducedMatrices reduced_matrices(const MetricGraph& g, cplx k, cplx sigma) {
  int n = g.vertex_count();
  ReducedMatrices out{sigma, ComplexMatrix(n, n), ComplexMatrix(n, n), ComplexMatrix(n, n)};
  std::vector<cplx> x = vertex_factors(g, k);
  cplx sigma2 = sigma * sigma;
  for (int a = 0; a < g.arc_count(); ++a) {
    int u = g.arc(a).origin, v = g.arc(a).terminus;
    cplx rt = edge_round_trip(g, k, g.arc(a).edge);
    cplx den = sigma2 - rt;
    check_denominator(den, sigma2, rt);
    cplx te = arc_phase(g, k, a);
    out.a_tilde(u, v) += x[v] * te / den;
    out.a_bar(u, v) += x[u] * te / den;
    out.d_bar(u, u) += x[u] * rt / den;
  }
  return out;
}

CharpolyReduction charpoly_via_reduction(const MetricGraph& g, cplx k, cplx sigma) {
  CharpolyReduction out;
  ComplexMatrix m = sigma * ComplexMatrix::identity(g.arc_count());
  m -= u_gs(g, k);
  out.direct = determinant(std::move(m));

  ReducedMatrices red = reduced_matrices(g, k, sigma);
  cplx edge_factor = 1.0;
  for (int e = 0; e < g.edge_count(); ++e)
    edge_factor *= sigma * sigma - edge_round_trip(g, k, e);

  ComplexMatrix id = ComplexMatrix::identity(g.vertex_count());
  out.via_tilde = determinant(id - sigma * red.a_tilde + red.d_bar) * edge_factor;
  out.via_bar = determinant(id - sigma * red.a_bar + red.d_bar) * edge_factor;
  out.max_rel_err = std::max(rel_err(out.direct, out.via_tilde), rel_err(out.direct, out.via_bar));
  return out;
}

TwistedBlocks twisted_blocks(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                             cplx sigma) {
  if (va.arc_count() != g.arc_count())
    throw InputError("voltage assignment does not match the graph");
  int p = va.group()->size();
  int n = g.vertex_count(), na = g.arc_count();
  TwistedBlocks out;
  out.sigma = sigma;
  out.u.assign(p, ComplexMatrix(na, na));
  out.a_tilde.assign(p, ComplexMatrix(n, n));
  out.a_bar.assign(p, ComplexMatrix(n, n));
  out.d_bar = ComplexMatrix(n, n);

  ComplexMatrix u_full = u_gs(g, k);
  for (int col = 0; col < na; ++col) {
    int h = va.voltage(col);
    for (int row = 0; row < na; ++row) out.u[h](row, col) = u_full(row, col);
  }

  std::vector<cplx> x = vertex_factors(g, k);
  cplx sigma2 = sigma * sigma;
  for (int a = 0; a < na; ++a) {
    int u = g.arc(a).origin, v = g.arc(a).terminus;
    cplx rt = edge_round_trip(g, k, g.arc(a).edge);
    cplx den = sigma2 - rt;
    check_denominator(den, sigma2, rt);
    cplx te = arc_phase(g, k, a);
    int h = va.voltage(a);
    out.a_tilde[h](u, v) += x[v] * te / den;
    out.a_bar[h](u, v) += x[u] * te / den;
    out.d_bar(u, u) += x[u] * rt / den;
  }
  return out;
}

ComplexMatrix twisted_walk_matrix(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                                  const Representation& rho) {
  if (va.arc_count() != g.arc_count())
    throw InputError("voltage assignment does not match the graph");
  if (!rho.group || rho.group->size() != va.group()->size())
    throw InputError("representation group does not match the voltage group");
  int p = va.group()->size();
  int na = g.arc_count();
  ComplexMatrix u_full = u_gs(g, k);
  ComplexMatrix out(rho.degree * na, rho.degree * na);
  for (int h = 0; h < p; ++h) {
    ComplexMatrix uh(na, na);
    bool any = false;
    for (int col = 0; col < na; ++col) {
      if (va.voltage(col) != h) continue;
      any = true;
      for (int row = 0; row < na; ++row) uh(row, col) = u_full(row, col);
    }
    if (!any) continue;
    out += kron(rho.matrices.at(h).transpose(), uh);
  }
  return out;
}

LFunctionEval l_function_reciprocal(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                                    const Representation& rho, cplx s) {
  if (s == cplx(0.0, 0.0)) throw InputError("s must be nonzero");
  LFunctionEval out;
  int d = rho.degree;
  int n = g.vertex_count();

  ComplexMatrix f = twisted_walk_matrix(g, k, va, rho);
  ComplexMatrix m = ComplexMatrix::identity(f.rows());
  m -= s * f;
  out.direct = determinant(std::move(m));

  TwistedBlocks tb = twisted_blocks(g, k, va, 1.0 / s);
  cplx edge_factor = 1.0;
  for (int e = 0; e < g.edge_count(); ++e)
    edge_factor *= ipow(1.0 - edge_round_trip(g, k, e) * s * s, d);

  ComplexMatrix id_nd = ComplexMatrix::identity(n * d);
  ComplexMatrix mt = id_nd;
  ComplexMatrix mb = id_nd;
  for (int h = 0; h < va.group()->size(); ++h) {
    mt -= (1.0 / s) * kron(rho.matrices.at(h), tb.a_tilde[h]);
    mb -= (1.0 / s) * kron(rho.matrices.at(h), tb.a_bar[h]);
  }
  ComplexMatrix dbar_lift = kron(ComplexMatrix::identity(d), tb.d_bar);
  mt += dbar_lift;
  mb += dbar_lift;
  out.via_tilde = determinant(std::move(mt)) * edge_factor;
  out.via_bar = determinant(std::move(mb)) * edge_factor;
  out.max_rel_err = std::max(rel_err(out.direct, out.via_tilde), rel_err(out.direct, out.via_bar));
  return out;
}

CoveringCharpoly covering_charpoly(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                                   const IrrepSet& irreps, cplx sigma) {
  validate_irrep_set(irreps, *va.group());
  CoveringCharpoly out;

  CoveringGraph cover = derived_covering(g, va);
  ComplexMatrix m = sigma * ComplexMatrix::identity(cover.graph.arc_count());
  m -= u_gs(cover.graph, k);
  out.direct = determinant(std::move(m));

  out.decomposed = 1.0;
  for (const auto& rho : irreps.reps) {
    ComplexMatrix f = twisted_walk_matrix(g, k, va, rho);
    ComplexMatrix mi = sigma * ComplexMatrix::identity(f.rows());
    mi -= f;
    cplx factor = determinant(std::move(mi));
    out.factors.push_back(factor);
    out.decomposed *= ipow(factor, rho.degree);
  }
  out.rel_err = rel_err(out.direct, out.decomposed);
  return out;
}

cplx covering_from_l_functions(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                               const IrrepSet& irreps, cplx sigma) {
  if (sigma == cplx(0.0, 0.0)) throw InputError("sigma must be nonzero");
  validate_irrep_set(irreps, *va.group());
  int p = va.group()->size();
  cplx value = ipow(sigma, 2 * g.edge_count() * p);
  for (const auto& rho : irreps.reps) {
    LFunctionEval lf = l_function_reciprocal(g, k, va, rho, 1.0 / sigma);
    value *= ipow(lf.direct, rho.degree);
  }
  return value;
}

std::vector<PrimeCycleClass> prime_cycles(const MetricGraph& g, cplx k, int max_len,
                                          const VoltageAssignment* va) {
  if (max_len < 0) throw InputError("max_len must be >= 0");
  if (max_len > 12) throw InputError("max_len capped at 12 to keep the enumeration tractable");
  if (va && va->arc_count() != g.arc_count())
    throw InputError("voltage assignment does not match the graph");

  std::vector<cplx> x = vertex_factors(g, k);
  std::vector<cplx> t(g.arc_count());
  for (int a = 0; a < g.arc_count(); ++a) t[a] = arc_phase(g, k, a);

  std::vector<PrimeCycleClass> out;
  std::vector<int> path;

  auto is_primitive = [&]() {
    int p = static_cast<int>(path.size());
    for (int d = 1; d < p; ++d) {
      if (p % d != 0) continue;
      bool rep = true;
      for (int i = d; i < p && rep; ++i)
        if (path[i] != path[i % d]) rep = false;
      if (rep) return false;
    }
    return true;
  };
  auto is_min_rotation = [&]() {
    int p = static_cast<int>(path.size());
    for (int r = 1; r < p; ++r) {
      for (int i = 0; i < p; ++i) {
        int cmp = path[(r + i) % p] - path[i];
        if (cmp < 0) return false;
        if (cmp > 0) break;
      }
    }
    return true;
  };
  auto record = [&]() {
    int p = static_cast<int>(path.size());
    PrimeCycleClass c;
    c.arcs = path;
    cplx w = 1.0;
    for (int i = 0; i < p; ++i) w *= t[path[i]];
    for (int i = 0; i < p; ++i) {
      int cur = path[i], next = path[(i + 1) % p];
      w *= x[g.arc(next).origin] - (g.arc(next).inverse == cur ? 1.0 : 0.0);
    }
    c.weight = w;
    c.voltage = 0;
    if (va) {
      const FiniteGroup& gr = *va->group();
      int acc = 0;
      for (int a : path) acc = gr.op(acc, va->voltage(a));
      c.voltage = acc;
    }
    out.push_back(std::move(c));
  };

  std::function<void(int)> extend = [&](int start) {
    int v_end = g.arc(path.back()).terminus;
    if (v_end == g.arc(start).origin && is_primitive() && is_min_rotation()) record();
    if (static_cast<int>(path.size()) == max_len) return;
    for (int next : g.arcs_from(v_end)) {
      if (next < start) continue;
      path.push_back(next);
      extend(start);
      path.pop_back();
    }
  };
  for (int start = 0; start < g.arc_count() && max_len > 0; ++start) {
    path.assign(1, start);
    extend(start);
  }

  std::sort(out.begin(), out.end(), [](const PrimeCycleClass& a, const PrimeCycleClass& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arcs < b.arcs;
  });
  return out;
}

PowerSeries euler_product_series(const MetricGraph& g, cplx k, const VoltageAssignment* va,
                                 const Representation& rho, int order) {
  if (!rho.group) throw InputError("representation has no group");
  std::vector<PrimeCycleClass> classes = prime_cycles(g, k, order, va);
  PowerSeries log(order);
  const FiniteGroup& gr = *rho.group;
  for (const auto& c : classes) {
    int p = c.length();
    cplx wr = 1.0;
    for (int r = 1; r * p <= order; ++r) {
      wr *= c.weight;
      log[r * p] += rho.character(gr.power(c.voltage, r)) * wr / static_cast<double>(r);
    }
  }
  return series_exp(log);
}

PowerSeries zeta_series_via_traces(const MetricGraph& g, cplx k, const VoltageAssignment* va,
                                   const Representation& rho, int order) {
  ComplexMatrix f;
  if (va) {
    f = twisted_walk_matrix(g, k, *va, rho);
  } else {
    f = kron(ComplexMatrix::identity(rho.degree), u_gs(g, k));
  }
  PowerSeries neg_log = PowerSeries(order) - series_log_det(f, order);
  return series_exp(neg_log);
}

IharaPair ihara_zeta_reciprocal(const MetricGraph& g, cplx u) {
  int n = g.vertex_count(), m = g.edge_count(), na = g.arc_count();
  ComplexMatrix adj(n, n);
  std::vector<cplx> deg(n);
  for (int a = 0; a < na; ++a) {
    adj(g.arc(a).origin, g.arc(a).terminus) += 1.0;
    deg[g.arc(a).origin] += 1.0;
  }
  ComplexMatrix q(n, n);
  for (int v = 0; v < n; ++v) q(v, v) = deg[v] - 1.0;
  ComplexMatrix vertex_form = ComplexMatrix::identity(n) - u * adj + (u * u) * q;
  IharaPair out;
  out.bass = ipow(1.0 - u * u, m - n) * determinant(std::move(vertex_form));

  ComplexMatrix b(na, na);
  for (int e = 0; e < na; ++e)
    for (int f = 0; f < na; ++f)
      if (g.arc(e).terminus == g.arc(f).origin && g.arc(e).inverse != f) b(e, f) = 1.0;
  ComplexMatrix edge_form = ComplexMatrix::identity(na) - u * b;
  out.edge = determinant(std::move(edge_form));
  return out;
}

}  // namespace qgz
