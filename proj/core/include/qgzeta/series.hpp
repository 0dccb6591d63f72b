#pragma once

#include <vector>

#include "qgzeta/matrix.hpp"
#include "qgzeta/types.hpp"

namespace qgz {

// Truncated power series in one variable. Arithmetic stays closed at the
// fixed truncation order; combining different orders is an error.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  static PowerSeries one(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  cplx& operator[](int n) { return c_.at(n); }
  const cplx& operator[](int n) const { return c_.at(n); }
  const std::vector<cplx>& coefficients() const { return c_; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);

 private:
  std::vector<cplx> c_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

// exp of a series with vanishing constant term, via the standard recurrence
// g_n = (1/n) sum_{j=1..n} j f_j g_{n-j}.
PowerSeries series_exp(const PowerSeries& f);

// log det(I - sF) = -sum_{n>=1} tr(F^n) s^n / n, truncated at the given order.
PowerSeries series_log_det(const ComplexMatrix& f, int order);

double max_abs_coeff_diff(const PowerSeries& a, const PowerSeries& b);

}  // namespace qgz
