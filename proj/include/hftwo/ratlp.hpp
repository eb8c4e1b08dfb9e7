#pragma once

#include <optional>
#include <vector>

namespace hftwo {

// Exact feasibility of { x : sum_j a_ij x_j + c_i >= 0 } over the rationals
// by Fourier-Motzkin elimination with integer rows (gcd-reduced). Intended
// for the handful of variables of a periodic-domain lattice.
struct LinearConstraint {
  std::vector<long long> a;
  long long c = 0;
};

struct RationalPoint {
  // x_j = num[j] / den, den > 0.
  std::vector<long long> num;
  long long den = 1;
};

std::optional<RationalPoint> fm_feasible(
    const std::vector<LinearConstraint>& constraints, int nvars);

}  // namespace hftwo
