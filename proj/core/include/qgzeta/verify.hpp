#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgzeta/types.hpp"

namespace qgz {

struct VerifyOptions {
  std::string data_dir = "data";
  uint64_t seed = 20260823;
  double tol = 1e-8;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // largest residual found, in the check's own units
  double elapsed_sec = 0.0;
  std::string detail;
};

// Closed-form secular sextics for the all-equal triangle: vertex factor a,
// listed-direction phase t, reverse phase s, with b = sigma^2 + (2a-1)st.
// The twisted variant flips the sign of the odd part.
cplx triangle_symmetric_charpoly(cplx sigma, cplx a, cplx s, cplx t);
cplx triangle_symmetric_twisted_charpoly(cplx sigma, cplx a, cplx s, cplx t);

CheckResult verify_triangle_closed_forms(const VerifyOptions& opts);
CheckResult verify_charpoly_reduction(const VerifyOptions& opts);
CheckResult verify_covering_factorization(const VerifyOptions& opts);
CheckResult verify_l_function_forms(const VerifyOptions& opts);
CheckResult verify_euler_series(const VerifyOptions& opts);
CheckResult verify_operator_relations(const VerifyOptions& opts);
CheckResult verify_equilateral_spectrum(const VerifyOptions& opts);
CheckResult verify_ihara_forms(const VerifyOptions& opts);

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace qgz
