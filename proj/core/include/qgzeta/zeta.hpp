#pragma once

#include <vector>

#include "qgzeta/covering.hpp"
#include "qgzeta/graph.hpp"
#include "qgzeta/group.hpp"
#include "qgzeta/matrix.hpp"
#include "qgzeta/series.hpp"

namespace qgz {

// Vertex-sized reductions of the arc-sized secular problem, evaluated at a
// spectral parameter sigma. a_tilde weights an arc by the factor of its
// terminus, a_bar by the factor of its origin; d_bar collects the
// backtracking corrections on the diagonal.
struct ReducedMatrices {
  cplx sigma;
  ComplexMatrix a_tilde;
  ComplexMatrix a_bar;
  ComplexMatrix d_bar;
};
ReducedMatrices reduced_matrices(const MetricGraph& g, cplx k, cplx sigma);

struct CharpolyReduction {
  cplx direct;     // det(sigma I - U) on arcs
  cplx via_tilde;  // vertex-sized determinant times the edge-phase product
  cplx via_bar;
  double max_rel_err = 0.0;
};
CharpolyReduction charpoly_via_reduction(const MetricGraph& g, cplx k, cplx sigma);

// Splitting of the walk operator and the reduced matrices by arc voltage.
struct TwistedBlocks {
  cplx sigma;
  std::vector<ComplexMatrix> u;        // per group element, columns filtered
  std::vector<ComplexMatrix> a_tilde;  // per group element, arcs filtered
  std::vector<ComplexMatrix> a_bar;
  ComplexMatrix d_bar;
};
TwistedBlocks twisted_blocks(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                             cplx sigma);

// sum_h rho(h)^T (x) U_h; the transfer matrix of the voltage-twisted walk.
ComplexMatrix twisted_walk_matrix(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                                  const Representation& rho);

struct LFunctionEval {
  cplx direct;     // det(I - s * twisted transfer matrix)
  cplx via_tilde;  // vertex-sized form times the edge factor product
  cplx via_bar;
  double max_rel_err = 0.0;
};
// Reciprocal of the voltage-twisted L-function at s, three ways.
LFunctionEval l_function_reciprocal(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                                    const Representation& rho, cplx s);

struct CoveringCharpoly {
  cplx direct;                // det(sigma I - U) on the derived cover
  cplx decomposed;            // product of per-irrep factors^degree
  std::vector<cplx> factors;  // one per irrep, same order as the set
  double rel_err = 0.0;
};
CoveringCharpoly covering_charpoly(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                                   const IrrepSet& irreps, cplx sigma);

// Assembles the covering characteristic value from L-function reciprocals:
// sigma^(2mp) * prod_i zeta_i^{-1}(1/sigma)^(deg i).
cplx covering_from_l_functions(const MetricGraph& g, cplx k, const VoltageAssignment& va,
                               const IrrepSet& irreps, cplx sigma);

// Equivalence class (under cyclic rotation) of a primitive closed arc
// sequence; backtracking steps allowed. weight = product of arc phases times
// the cyclic product of scattering amplitudes; voltage is the ordered
// product of arc voltages of the stored representative.
struct PrimeCycleClass {
  std::vector<int> arcs;  // lexicographically minimal rotation
  cplx weight;
  int voltage = 0;  // identity when no assignment is given

  int length() const { return static_cast<int>(arcs.size()); }
};
std::vector<PrimeCycleClass> prime_cycles(const MetricGraph& g, cplx k, int max_len,
                                          const VoltageAssignment* va = nullptr);

// zeta as a truncated series in s from the prime-cycle product
// prod_C det(I_d - rho(voltage(C))^T w_C s^{|C|})^{-1}.
PowerSeries euler_product_series(const MetricGraph& g, cplx k, const VoltageAssignment* va,
                                 const Representation& rho, int order);

// Same series from the twisted transfer matrix traces; the independent
// cross-check for the cycle enumeration.
PowerSeries zeta_series_via_traces(const MetricGraph& g, cplx k, const VoltageAssignment* va,
                                   const Representation& rho, int order);

struct IharaPair {
  cplx bass;  // (1-u^2)^(m-n) det(I - uA + u^2(D-I))
  cplx edge;  // det(I - uB), B the non-backtracking arc adjacency
};
IharaPair ihara_zeta_reciprocal(const MetricGraph& g, cplx u);

}  // namespace qgz
