#pragma once

#include <vector>

#include "qgzeta/matrix.hpp"
#include "qgzeta/types.hpp"

namespace qgz {

// Polynomial over C with coefficients in ascending order of degree.
class ComplexPolynomial {
 public:
  ComplexPolynomial() : c_{cplx(0.0, 0.0)} {}
  explicit ComplexPolynomial(std::vector<cplx> coeffs, bool trim = true);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cplx>& coefficients() const { return c_; }
  cplx coefficient(int l) const;  // 0 beyond stored degree

  cplx operator()(cplx z) const;  // Horner

 private:
  std::vector<cplx> c_;
};

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);

// Monic characteristic polynomial det(sigma I - M), recovered by sampling
// the determinant on a circle and taking the inverse DFT. The circle radius
// is matched to the geometric mean of the eigenvalue magnitudes (via
// |det M|^(1/n)); sampling far outside the spectrum destroys the low-order
// coefficients through cancellation.
ComplexPolynomial char_poly(const ComplexMatrix& m);

// All roots with multiplicity, by the Durand-Kerner simultaneous iteration.
// Throws ConvergenceError if the iteration stalls.
std::vector<cplx> poly_roots(const ComplexPolynomial& p);

// Eigenvalues with multiplicity: char_poly roots polished by a few rounds of
// inverse iteration plus a Rayleigh quotient. Square input, size <= 200.
std::vector<cplx> eigenvalues(const ComplexMatrix& m);

// max over a of dist(a, B) and over b of dist(b, A); handy for comparing
// eigenvalue multisets that are individually accurate.
double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace qgz
