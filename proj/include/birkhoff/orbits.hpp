// Perimeter-critical periodic orbits of rotation number 1/q and the
// distribution of their collision points in the Lazutkin parametrization.
#pragma once

#include <vector>

#include "birkhoff/lazutkin.hpp"
#include "birkhoff/normal_form.hpp"

namespace birkhoff {

struct PeriodicOrbit {
  int q = 0;
  std::vector<double> s;  // collision arc-length parameters, s[0] anchored
  std::vector<double> x;  // Lazutkin coordinates X0(s[k]), increasing lift
  double perimeter = 0.0;
  double residual = 0.0;  // max reflection-law violation (radians)
};

// Newton on the perimeter gradient with a tridiagonal Hessian, seeded at
// Lazutkin-equidistributed points. The anchor pins s[0]; it must sit on a
// symmetry axis of the domain (0 for the built-in specs), otherwise the
// anchored stationarity system has no solution and the solver reports the
// stall. Anchor-free families are out of scope.
PeriodicOrbit find_orbit(const LazutkinChart& lc, int q, double anchor = 0.0);

// alpha-hat samples (k/q, (x_k - x_0 - k/q) q^2) for k = 0..q-1.
std::vector<std::pair<double, double>> extract_alpha(const PeriodicOrbit& orbit);

struct AlphaValidation {
  std::vector<int> qs;
  std::vector<double> fractions;               // k/q_min shared sample points
  std::vector<std::vector<double>> alpha_hat;  // per q, at those fractions
  std::vector<double> alpha_extrapolated;      // Richardson from two largest q
  std::vector<double> minus_x1_over_y0_sq;     // -X1/Y0^2 at matching s
  double max_rel_deviation = 0.0;   // of -alpha Y0^2 against X1, interior pts
  double max_abs_deviation = 0.0;   // over all shared points
  double median_doubling_ratio = 0.0;
};

// Runs the q-ladder (orbits solved concurrently), Richardson-extrapolates
// alpha, and compares -alpha(X0) Y0^2 against X1.
AlphaValidation cross_validate_x1(const NormalForm& nf,
                                  const std::vector<int>& qs);

}  // namespace birkhoff
