#include "qgzeta/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgz {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
  a_.assign(static_cast<size_t>(rows) * cols, cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

static void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix shape mismatch");
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  check_same_shape(*this, o);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  check_same_shape(*this, o);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::inf_norm() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (int j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    m = std::max(m, row);
  }
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r = a;
  r += b;
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r = a;
  r -= b;
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  ComplexMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  r *= s;
  return r;
}

std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw InputError("matrix-vector shape mismatch");
  std::vector<cplx> y(a.rows(), cplx(0.0, 0.0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

cplx trace(const ComplexMatrix& a) {
  if (!a.square()) throw InputError("trace requires a square matrix");
  cplx t = 0.0;
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return r;
}

ComplexMatrix block_diag(const std::vector<ComplexMatrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ComplexMatrix r(rows, cols);
  int i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) r(i0 + i, j0 + j) = b(i, j);
    i0 += b.rows();
    j0 += b.cols();
  }
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

namespace {

// In-place LU with partial pivoting. Returns the pivot permutation's sign,
// or 0 if a pivot is exactly zero (matrix singular to working precision).
int lu_factor(ComplexMatrix& m, std::vector<int>& perm, bool shift_zero_pivots) {
  int n = m.rows();
  perm.resize(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  double scale = m.max_abs();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      double v = std::abs(m(i, col));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      std::swap(perm[col], perm[piv]);
      sign = -sign;
    }
    if (best == 0.0) {
      if (!shift_zero_pivots) return 0;
      m(col, col) = 1e-300 + scale * 1e-16;
    }
    cplx d = m(col, col);
    for (int i = col + 1; i < n; ++i) {
      cplx f = m(i, col) / d;
      m(i, col) = f;
      if (f == cplx(0.0, 0.0)) continue;
      for (int j = col + 1; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return sign;
}

std::vector<cplx> lu_solve(const ComplexMatrix& lu, const std::vector<int>& perm,
                           const std::vector<cplx>& b) {
  int n = lu.rows();
  std::vector<cplx> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm[i]];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
    x[i] /= lu(i, i);
  }
  return x;
}

}  // namespace

cplx determinant(ComplexMatrix m) {
  if (!m.square()) throw InputError("determinant requires a square matrix");
  if (m.rows() == 0) return cplx(1.0, 0.0);
  std::vector<int> perm;
  int sign = lu_factor(m, perm, false);
  if (sign == 0) return cplx(0.0, 0.0);
  cplx det = static_cast<double>(sign);
  for (int i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  if (!m.square()) throw InputError("inverse requires a square matrix");
  int n = m.rows();
  ComplexMatrix lu = m;
  std::vector<int> perm;
  if (lu_factor(lu, perm, false) == 0) throw SingularParameterError("matrix is singular, cannot invert");
  ComplexMatrix inv(n, n);
  std::vector<cplx> e(n, cplx(0.0, 0.0));
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    std::vector<cplx> col = lu_solve(lu, perm, e);
    e[j] = 0.0;
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

std::vector<cplx> solve(ComplexMatrix a, std::vector<cplx> b) {
  if (!a.square() || a.rows() != static_cast<int>(b.size()))
    throw InputError("solve requires square A and matching b");
  std::vector<int> perm;
  if (lu_factor(a, perm, false) == 0) throw SingularParameterError("matrix is singular, cannot solve");
  return lu_solve(a, perm, b);
}

std::vector<cplx> solve_shifted(ComplexMatrix a, std::vector<cplx> b) {
  if (!a.square() || a.rows() != static_cast<int>(b.size()))
    throw InputError("solve requires square A and matching b");
  std::vector<int> perm;
  lu_factor(a, perm, true);
  return lu_solve(a, perm, b);
}

HermitianEigen hermitian_eigen(ComplexMatrix a) {
  if (!a.square()) throw InputError("hermitian_eigen requires a square matrix");
  int n = a.rows();
  // Symmetrize once so tiny Hermiticity violations from upstream arithmetic
  // cannot bias the sweep.
  for (int i = 0; i < n; ++i) {
    a(i, i) = cplx(a(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= scale * 1e-15) break;
    if (sweep == 99) throw ConvergenceError("hermitian_eigen: Jacobi sweeps did not converge");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cplx apq = a(p, q);
        double g = std::abs(apq);
        if (g <= scale * 1e-18) continue;
        cplx phase = apq / g;  // a_pq = g * phase
        double app = a(p, p).real(), aqq = a(q, q).real();
        double tau = (aqq - app) / (2.0 * g);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // Columns: [p q] <- [p q] * [[c, s*phase], [-s*conj(phase), c]] pattern,
        // chosen to zero a_pq for Hermitian a.
        for (int i = 0; i < n; ++i) {
          cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (int col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, col) = v(i, order[col]);
  }
  return out;
}

}  // namespace qgz
