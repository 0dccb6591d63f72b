#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qgz {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Malformed or inconsistent input: bad graph/group data, out-of-range
// arguments, file parse and validation failures.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter value sits on (or numerically too close to) a pole of the
// quantity being evaluated, e.g. ik d_j = lambda_j in a vertex factor.
class SingularParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative method failed to converge within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Relative discrepancy between two scalars, with an absolute floor so that
// a pair of negligibly small values compares as equal.
inline double rel_err(cplx a, cplx b) {
  double diff = std::abs(a - b);
  if (diff <= 1e-10) return 0.0;
  return diff / std::max(std::abs(a), std::abs(b));
}

}  // namespace qgz
