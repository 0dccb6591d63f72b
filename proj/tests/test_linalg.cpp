#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qgzeta/matrix.hpp"
#include "qgzeta/polynomial.hpp"
#include "qgzeta/series.hpp"

using namespace qgz;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(d(rng), d(rng));
  return m;
}

// Reference determinant by cofactor expansion, n <= 6.
cplx cofactor_det(const ComplexMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  cplx acc = 0.0;
  double sign = 1.0;
  for (int j = 0; j < n; ++j) {
    ComplexMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    acc += sign * m(0, j) * cofactor_det(minor);
    sign = -sign;
  }
  return acc;
}

ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
  ComplexMatrix a = random_matrix(rng, n, n);
  ComplexMatrix h = a + a.adjoint();
  return hermitian_eigen(h).vectors;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 8; ++rep) {
      ComplexMatrix m = random_matrix(rng, n, n);
      CHECK(rel_err(determinant(m), cofactor_det(m)) < 1e-12);
    }
}

TEST_CASE("determinant special cases") {
  CHECK(determinant(ComplexMatrix(0, 0)) == cplx(1.0, 0.0));
  ComplexMatrix repeated(3, 3);
  for (int j = 0; j < 3; ++j) {
    repeated(0, j) = cplx(1.0 + j, 0.0);
    repeated(1, j) = cplx(1.0 + j, 0.0);
    repeated(2, j) = cplx(j, 1.0);
  }
  CHECK(std::abs(determinant(repeated)) < 1e-12);
  CHECK_THROWS_AS(determinant(ComplexMatrix(2, 3)), InputError);
}

TEST_CASE("determinant is multiplicative and respects Sylvester's identity") {
  std::mt19937_64 rng(11);
  ComplexMatrix a = random_matrix(rng, 6, 6);
  ComplexMatrix b = random_matrix(rng, 6, 6);
  CHECK(rel_err(determinant(a * b), determinant(a) * determinant(b)) < 1e-11);

  ComplexMatrix p = random_matrix(rng, 5, 3);
  ComplexMatrix q = random_matrix(rng, 3, 5);
  ComplexMatrix lhs = ComplexMatrix::identity(5);
  lhs -= p * q;
  ComplexMatrix rhs = ComplexMatrix::identity(3);
  rhs -= q * p;
  CHECK(rel_err(determinant(lhs), determinant(rhs)) < 1e-12);
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(13);
  ComplexMatrix a = random_matrix(rng, 7, 7);
  CHECK(max_abs_diff(a * inverse(a), ComplexMatrix::identity(7)) < 1e-12);

  std::vector<cplx> b(7);
  for (auto& v : b) v = cplx(1.0, -0.5);
  std::vector<cplx> x = solve(a, b);
  std::vector<cplx> ax = a * x;
  for (int i = 0; i < 7; ++i) CHECK(std::abs(ax[i] - b[i]) < 1e-11);

  ComplexMatrix singular(2, 2);
  singular(0, 0) = singular(0, 1) = singular(1, 0) = singular(1, 1) = 1.0;
  CHECK_THROWS_AS(solve(singular, std::vector<cplx>(2, cplx(1.0, 0.0))), SingularParameterError);
}

TEST_CASE("kron, block_diag, trace") {
  std::mt19937_64 rng(17);
  ComplexMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
  ComplexMatrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 3, 3);
  CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) < 1e-12);

  ComplexMatrix bd = block_diag({a, b});
  CHECK(bd.rows() == 5);
  CHECK(rel_err(determinant(bd), determinant(a) * determinant(b)) < 1e-12);
  CHECK(std::abs(trace(bd) - (trace(a) + trace(b))) < 1e-13);
}

TEST_CASE("hermitian_eigen reconstructs and orders") {
  std::mt19937_64 rng(19);
  ComplexMatrix a = random_matrix(rng, 6, 6);
  ComplexMatrix h = a + a.adjoint();
  HermitianEigen eig = hermitian_eigen(h);
  CHECK(max_abs_diff(eig.vectors * eig.vectors.adjoint(), ComplexMatrix::identity(6)) < 1e-12);
  ComplexMatrix hv = h * eig.vectors;
  for (int j = 0; j < 6; ++j) {
    if (j > 0) CHECK(eig.values[j - 1] <= eig.values[j]);
    for (int i = 0; i < 6; ++i)
      CHECK(std::abs(hv(i, j) - eig.values[j] * eig.vectors(i, j)) < 1e-11);
  }
}

TEST_CASE("char_poly on known matrices") {
  ComplexPolynomial pid = char_poly(ComplexMatrix::identity(2));
  CHECK(std::abs(pid.coefficient(0) - cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(pid.coefficient(1) - cplx(-2.0, 0.0)) < 1e-12);
  CHECK(std::abs(pid.coefficient(2) - cplx(1.0, 0.0)) < 1e-12);

  ComplexMatrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  ComplexPolynomial ps = char_poly(swap);
  CHECK(std::abs(ps.coefficient(0) - cplx(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(ps.coefficient(1)) < 1e-12);

  ComplexMatrix dg = ComplexMatrix::diagonal({cplx(2.0, 0.0), cplx(0.0, 3.0)});
  ComplexPolynomial pd = char_poly(dg);
  CHECK(std::abs(pd.coefficient(0) - cplx(0.0, 6.0)) < 1e-11);
  CHECK(std::abs(pd.coefficient(1) + cplx(2.0, 3.0)) < 1e-11);
}

TEST_CASE("char_poly of a companion matrix returns its polynomial") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  int n = 6;
  std::vector<cplx> coeffs{cplx(1.0, 0.0)};
  std::vector<cplx> roots(n);
  for (auto& r : roots) {
    r = cplx(d(rng), d(rng));
    std::vector<cplx> next(coeffs.size() + 1, cplx(0.0, 0.0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  ComplexMatrix comp(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[i];
  ComplexPolynomial p = char_poly(comp);
  for (int l = 0; l <= n; ++l) CHECK(std::abs(p.coefficient(l) - coeffs[l]) < 1e-9);
}

TEST_CASE("poly_roots recovers planted roots") {
  std::vector<cplx> planted{cplx(0.5, 0.2), cplx(-1.0, 0.0), cplx(0.0, -1.5), cplx(2.0, 1.0)};
  std::vector<cplx> coeffs{cplx(1.0, 0.0)};
  for (cplx r : planted) {
    std::vector<cplx> next(coeffs.size() + 1, cplx(0.0, 0.0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  std::vector<cplx> found = poly_roots(ComplexPolynomial(std::move(coeffs)));
  CHECK(hausdorff_distance(found, planted) < 1e-9);
}

TEST_CASE("poly_roots handles a double root") {
  // (z-1)^2 (z+2): the cluster at 1 stalls at the noise floor and must
  // still be accepted.
  std::vector<cplx> c{cplx(2.0, 0.0), cplx(-3.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)};
  std::vector<cplx> found = poly_roots(ComplexPolynomial(std::move(c)));
  REQUIRE(found.size() == 3);
  std::vector<cplx> expect{cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(-2.0, 0.0)};
  CHECK(hausdorff_distance(found, expect) < 1e-6);
}

TEST_CASE("eigenvalues on known and unitary matrices") {
  ComplexMatrix dg = ComplexMatrix::diagonal({cplx(2.0, 0.0), cplx(0.0, 3.0)});
  std::vector<cplx> ev = eigenvalues(dg);
  REQUIRE(ev.size() == 2);
  CHECK(std::abs(ev[0] - cplx(0.0, 3.0)) < 1e-10);
  CHECK(std::abs(ev[1] - cplx(2.0, 0.0)) < 1e-10);

  ComplexMatrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  ev = eigenvalues(swap);
  CHECK(std::abs(ev[0] + 1.0) < 1e-10);
  CHECK(std::abs(ev[1] - 1.0) < 1e-10);

  std::mt19937_64 rng(29);
  ComplexMatrix q = random_unitary(rng, 8);
  for (cplx v : eigenvalues(q)) CHECK(std::abs(std::abs(v) - 1.0) < 1e-9);
}

TEST_CASE("power series arithmetic and exp") {
  int order = 8;
  PowerSeries f(order);
  f[1] = cplx(0.7, -0.3);
  PowerSeries ef = series_exp(f);
  double fact = 1.0;
  cplx xp = 1.0;
  for (int n = 0; n <= order; ++n) {
    CHECK(std::abs(ef[n] - xp / fact) < 1e-13);
    xp *= f[1];
    fact *= n + 1.0;
  }

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  PowerSeries a(order), b(order);
  for (int n = 1; n <= order; ++n) {
    a[n] = cplx(d(rng), d(rng));
    b[n] = cplx(d(rng), d(rng));
  }
  CHECK(max_abs_coeff_diff(series_exp(a + b), series_exp(a) * series_exp(b)) < 1e-12);

  PowerSeries bad(order);
  bad[0] = 1.0;
  CHECK_THROWS_AS(series_exp(bad), InputError);
  CHECK_THROWS_AS(a + PowerSeries(order + 1), InputError);
}

TEST_CASE("series_log_det against the resolvent expansion") {
  int order = 10;
  cplx va(0.4, 0.1), vb(-0.3, 0.25);
  ComplexMatrix f = ComplexMatrix::diagonal({va, vb});
  // exp(-log det(I - sF)) = 1/((1-a s)(1-b s)); coefficients are the
  // complete homogeneous sums a^i b^j.
  PowerSeries inv_det = series_exp(PowerSeries(order) - series_log_det(f, order));
  for (int n = 0; n <= order; ++n) {
    cplx h = 0.0;
    for (int i = 0; i <= n; ++i) h += std::pow(va, i) * std::pow(vb, n - i);
    CHECK(std::abs(inv_det[n] - h) < 1e-12);
  }

  std::mt19937_64 rng(37);
  ComplexMatrix g = random_matrix(rng, 4, 4, 0.4);
  PowerSeries ld = series_log_det(g, order);
  ComplexMatrix pw = ComplexMatrix::identity(4);
  for (int n = 1; n <= order; ++n) {
    pw = pw * g;
    CHECK(std::abs(ld[n] + trace(pw) / static_cast<double>(n)) < 1e-12);
  }
}
