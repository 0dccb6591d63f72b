#include "qgzeta/series.hpp"

#include <algorithm>
#include <cmath>

namespace qgz {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw InputError("series order must be >= 0");
  c_.assign(order + 1, cplx(0.0, 0.0));
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s[0] = 1.0;
  return s;
}

static void check_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) throw InputError("series truncation orders differ");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_same_order(*this, o);
  for (int n = 0; n <= order(); ++n) c_[n] += o[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_same_order(*this, o);
  for (int n = 0; n <= order(); ++n) c_[n] -= o[n];
  return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r = a;
  r += b;
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r = a;
  r -= b;
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  PowerSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] == cplx(0.0, 0.0)) continue;
    for (int j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries series_exp(const PowerSeries& f) {
  if (std::abs(f[0]) > 1e-12)
    throw InputError("series_exp requires a vanishing constant term");
  PowerSeries g(f.order());
  g[0] = 1.0;
  for (int n = 1; n <= f.order(); ++n) {
    cplx acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += static_cast<double>(j) * f[j] * g[n - j];
    g[n] = acc / static_cast<double>(n);
  }
  return g;
}

PowerSeries series_log_det(const ComplexMatrix& f, int order) {
  if (!f.square()) throw InputError("series_log_det requires a square matrix");
  PowerSeries s(order);
  ComplexMatrix power = ComplexMatrix::identity(f.rows());
  for (int n = 1; n <= order; ++n) {
    power = power * f;
    s[n] = -trace(power) / static_cast<double>(n);
  }
  return s;
}

double max_abs_coeff_diff(const PowerSeries& a, const PowerSeries& b) {
  check_same_order(a, b);
  double worst = 0.0;
  for (int n = 0; n <= a.order(); ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
  return worst;
}

}  // namespace qgz
