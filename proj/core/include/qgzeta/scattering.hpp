#pragma once

#include <string>
#include <vector>

#include "qgzeta/graph.hpp"
#include "qgzeta/matrix.hpp"

namespace qgz {

// Per-arc phase and vertex scattering data at momentum k.
// Invariants verified at construction: T = J0 R J0 and S = F J0.
struct ScatteringSet {
  cplx k;
  ComplexMatrix T;   // diag exp(i L_e (k - A_e))
  ComplexMatrix R;   // diag exp(i L_e (k + A_e))
  ComplexMatrix J0;  // arc reversal
  ComplexMatrix F;   // vertex blocks x_v J - I on outgoing stars
  ComplexMatrix S;   // vertex scattering routed along arcs
};

// x_v(k) = 2ik / (ik deg(v) - lambda_v). Throws SingularParameterError on
// (near-)poles.
cplx vertex_factor(const MetricGraph& g, int vertex, cplx k);

ScatteringSet scattering_set(const MetricGraph& g, cplx k);

ComplexMatrix u_gs(const MetricGraph& g, cplx k);     // T S
ComplexMatrix u_hkss(const MetricGraph& g, cplx k);   // S(-k) T(-k)
ComplexMatrix u_tilde(const MetricGraph& g, cplx k);  // R J0 F
ComplexMatrix u_prime(const MetricGraph& g, cplx k);  // J0 (T F)^{-1}

enum class WalkKind { GS, HKSS, Tilde, Prime };
ComplexMatrix walk_operator(const MetricGraph& g, cplx k, WalkKind kind);
const char* walk_kind_name(WalkKind kind);

// det(I - u_gs(k)); zero exactly at the graph's eigen-momenta.
cplx secular_det(const MetricGraph& g, cplx k);

struct WalkState {
  std::vector<cplx> amplitudes;
  double norm() const;
};

WalkState walk_evolve(const MetricGraph& g, cplx k, WalkKind kind, WalkState state, int steps);

// Stationary solution at a secular root: outgoing amplitudes a, incoming
// b = F a, one boundary value per vertex, and the fixed-point residual.
struct Eigenmode {
  double k = 0.0;
  std::vector<cplx> a;
  std::vector<cplx> b;
  std::vector<cplx> phi;
  double residual = 0.0;
};

struct SecularScan {
  std::vector<double> roots;      // distinct refined roots, ascending
  std::vector<Eigenmode> modes;   // one per independent null direction
  std::vector<std::string> warnings;
};

struct RootSearchOptions {
  double accept_abs_det = 1e-8;
  double refine_width = 1e-10;
};

// Scans |det(I - u_gs(k))|^2 on a uniform grid over [k_min, k_max] and
// golden-section refines each local minimum. Roots closer together than a
// couple of grid steps produce a coarse-grid warning.
SecularScan find_secular_roots(const MetricGraph& g, double k_min, double k_max, int grid_points,
                               const RootSearchOptions& opts = {});

}  // namespace qgz
