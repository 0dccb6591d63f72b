#include "qgzeta/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace qgz {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coeffs, bool trim) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(cplx(0.0, 0.0));
  if (trim) {
    double scale = 0.0;
    for (const auto& v : c_) scale = std::max(scale, std::abs(v));
    while (c_.size() > 1 && std::abs(c_.back()) <= 1e-12 * scale) c_.pop_back();
  }
}

cplx ComplexPolynomial::coefficient(int l) const {
  if (l < 0 || l >= static_cast<int>(c_.size())) return cplx(0.0, 0.0);
  return c_[l];
}

cplx ComplexPolynomial::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<cplx> c(std::max(a.coefficients().size(), b.coefficients().size()), cplx(0.0, 0.0));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<cplx> c(std::max(a.coefficients().size(), b.coefficients().size()), cplx(0.0, 0.0));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<cplx> c(ca.size() + cb.size() - 1, cplx(0.0, 0.0));
  for (size_t i = 0; i < ca.size(); ++i)
    for (size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial char_poly(const ComplexMatrix& m) {
  if (!m.square()) throw InputError("char_poly requires a square matrix");
  int n = m.rows();
  if (n > 200) throw InputError("char_poly: size capped at 200");
  if (n == 0) return ComplexPolynomial({cplx(1.0, 0.0)}, false);

  double r = 1.0;
  cplx dm = determinant(m);
  if (std::isfinite(std::abs(dm)) && std::abs(dm) > 0.0)
    r = std::clamp(std::pow(std::abs(dm), 1.0 / n), 1e-2, 1e6);

  int np = n + 1;
  std::vector<cplx> values(np);
  for (int j = 0; j < np; ++j) {
    double th = 2.0 * pi * j / np;
    cplx sigma = r * cplx(std::cos(th), std::sin(th));
    ComplexMatrix a = ComplexMatrix::identity(n);
    a *= sigma;
    a -= m;
    values[j] = determinant(a);
  }
  std::vector<cplx> coeffs(np);
  double rl = 1.0;
  for (int l = 0; l < np; ++l) {
    cplx acc = 0.0;
    for (int j = 0; j < np; ++j) {
      double th = -2.0 * pi * j * l / np;
      acc += values[j] * cplx(std::cos(th), std::sin(th));
    }
    coeffs[l] = acc / (static_cast<double>(np) * rl);
    rl *= r;
  }
  coeffs[n] = 1.0;  // exactly monic by construction
  return ComplexPolynomial(std::move(coeffs), false);
}

std::vector<cplx> poly_roots(const ComplexPolynomial& p) {
  const auto& c0 = p.coefficients();
  int n = p.degree();
  if (n == 0) return {};
  std::vector<cplx> c(c0.begin(), c0.end());
  cplx lead = c.back();
  if (std::abs(lead) == 0.0) throw InputError("poly_roots: zero leading coefficient");
  for (auto& v : c) v /= lead;

  if (n == 1) return {-c[0]};

  // Fujiwara-style bound on root magnitudes for the starting circle.
  double rb = 0.0;
  for (int l = 0; l < n; ++l) {
    double v = std::pow(std::abs(c[l]), 1.0 / (n - l));
    rb = std::max(rb, v);
  }
  double radius = std::max(0.5, 1.1 * rb);

  std::vector<cplx> z(n);
  for (int j = 0; j < n; ++j) {
    double th = 2.0 * pi * j / n + 0.53;
    z[j] = radius * cplx(std::cos(th), std::sin(th));
  }

  // Horner value plus a majorant of its rounding error; |p(z)| at or below
  // eps * majorant means z is a root of a coefficientwise-nearby polynomial,
  // which is the best any iteration can certify. Multiple roots stall there
  // without ever passing the small-update test.
  auto eval = [&](cplx x, double& majorant) {
    cplx acc = 1.0;  // monic
    double maj = 1.0;
    double ax = std::abs(x);
    for (int l = n - 1; l >= 0; --l) {
      acc = acc * x + c[l];
      maj = maj * ax + std::abs(c[l]);
    }
    majorant = maj;
    return acc;
  };
  const double eps = std::numeric_limits<double>::epsilon();

  const int max_iter = 2000;
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    bool backward_stable = true;
    for (int i = 0; i < n; ++i) {
      double majorant = 1.0;
      cplx num = eval(z[i], majorant);
      if (std::abs(num) > 64.0 * n * eps * majorant) backward_stable = false;
      cplx den = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        den *= z[i] - z[j];
      }
      if (den == cplx(0.0, 0.0) || !std::isfinite(std::abs(den)) || !std::isfinite(std::abs(num))) {
        z[i] += cplx(1e-6 * (1.0 + std::abs(z[i])), 3e-7);
        worst = 1.0;
        backward_stable = false;
        continue;
      }
      cplx delta = num / den;
      z[i] -= delta;
      worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[i])));
    }
    if (worst <= 1e-14 || backward_stable) return z;
  }
  throw ConvergenceError("poly_roots: Durand-Kerner did not converge");
}

namespace {

// Cheap deterministic direction for starting inverse iteration.
std::vector<cplx> pseudo_random_unit(int n) {
  std::vector<cplx> v(n);
  uint64_t s = 0x9e3779b97f4a7c15ull;
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    double re = static_cast<double>((s >> 11) & 0xffffff) / 0xffffff - 0.5;
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    double im = static_cast<double>((s >> 11) & 0xffffff) / 0xffffff - 0.5;
    v[i] = cplx(re, im);
    norm += std::norm(v[i]);
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

std::vector<cplx> eigenvalues(const ComplexMatrix& m) {
  if (!m.square()) throw InputError("eigenvalues requires a square matrix");
  int n = m.rows();
  if (n > 200) throw InputError("eigenvalues: size capped at 200");
  if (n == 0) return {};
  if (n == 1) return {m(0, 0)};

  std::vector<cplx> rough = poly_roots(char_poly(m));
  double scale = std::max(1.0, m.inf_norm());

  std::vector<cplx> out;
  out.reserve(n);
  for (cplx lambda0 : rough) {
    cplx lambda = lambda0;
    std::vector<cplx> x = pseudo_random_unit(n);
    cplx shift = lambda0;
    for (int it = 0; it < 5; ++it) {
      ComplexMatrix a = m;
      for (int i = 0; i < n; ++i) a(i, i) -= shift;
      std::vector<cplx> y = solve_shifted(a, x);
      double ny = vec_norm(y);
      if (!(ny > 0.0) || !std::isfinite(ny)) break;
      for (auto& v : y) v /= ny;
      x = y;
      // Rayleigh quotient of the current iterate.
      std::vector<cplx> mx = m * x;
      cplx rq = 0.0;
      for (int i = 0; i < n; ++i) rq += std::conj(x[i]) * mx[i];
      double res = 0.0;
      for (int i = 0; i < n; ++i) res += std::norm(mx[i] - rq * x[i]);
      res = std::sqrt(res);
      if (std::isfinite(std::abs(rq)) && std::abs(rq - lambda0) <= 0.5 * (1.0 + std::abs(lambda0)))
        lambda = rq;
      if (res <= 1e-12 * scale) break;
      if (it >= 1) shift = lambda;  // switch to Rayleigh shifts once settled
    }
    out.push_back(lambda);
  }
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  auto one_sided = [](const std::vector<cplx>& from, const std::vector<cplx>& to) {
    double worst = 0.0;
    for (cplx x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (cplx y : to) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace qgz
