#pragma once

#include <vector>

#include "qgzeta/types.hpp"

namespace qgz {

// Dense row-major complex matrix. Dimensions here stay modest (a few
// hundred at most), so everything is direct dense algebra.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;

  double max_abs() const;
  double inf_norm() const;  // max absolute row sum
  double frobenius_norm() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& x);

cplx trace(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix block_diag(const std::vector<ComplexMatrix>& blocks);

// Largest |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// LU with partial pivoting, on a copy.
cplx determinant(ComplexMatrix m);
ComplexMatrix inverse(const ComplexMatrix& m);
std::vector<cplx> solve(ComplexMatrix a, std::vector<cplx> b);

// Like solve, but exactly singular pivots are replaced with a tiny value so
// the solve can proceed; used by inverse iteration near an eigenvalue.
std::vector<cplx> solve_shifted(ComplexMatrix a, std::vector<cplx> b);

// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Values ascending, eigenvectors in the matching columns.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};
HermitianEigen hermitian_eigen(ComplexMatrix a);

}  // namespace qgz
