// Lazutkin parametrization of the boundary and the scalar invariants
// attached to it (normalizing constant, C_BV, Marvizi-Melrose values).
// Immutable after construction; evaluations are pure and thread-safe.
#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "birkhoff/domain.hpp"

namespace birkhoff {

class LazutkinChart {
 public:
  explicit LazutkinChart(BoundaryChart chart);

  const BoundaryChart& boundary() const { return chart_; }

  double lazutkin_constant() const { return c_l_; }

  // X0 and its inverse as monotone lifts: x0(s + L) = x0(s) + 1.
  double x0(double s) const;
  double x0_inverse(double xi) const;

  // theta and position at a Lazutkin coordinate (theta lifted by 2*pi).
  double theta_of_xi(double xi) const;
  std::complex<double> point_of_xi(double xi) const;

  // Curvature radius and derivatives with respect to the Lazutkin parameter.
  CurvatureJet lazutkin_jet(double xi) const;
  double rho_l(double xi) const { return lazutkin_jet(xi).rho; }

  double y0_of_s(double s) const;
  double y0_of_xi(double xi) const;

  double c_bv() const { return c_bv_; }
  // Marvizi-Melrose integrals: I1 = integral rho^{-2/3} ds (= 1/C_L) and
  // I2 = integral (8 rho_dot^2 + 9) rho^{-4/3} ds.
  std::pair<double, double> marvizi_melrose() const { return {mm_i1_, mm_i2_}; }

  // Independent quadrature routes for C_BV, used as cross-checks.
  double c_bv_lazutkin_quadrature(double tol = 1e-13) const;
  double c_bv_arclength_quadrature(double tol = 1e-13) const;

 private:
  BoundaryChart chart_;
  double c_l_ = 0.0;
  double u_mean_ = 0.0;   // mean of rho(theta)^{1/3}
  TrigSeries u_wave_;     // periodic part of integral of rho^{1/3} d theta
  std::vector<double> xi_grid_;  // xi at uniform theta, for inversion brackets
  double c_bv_ = 0.0;
  double mm_i1_ = 0.0, mm_i2_ = 0.0;

  double xi_of_theta(double theta) const;
  double theta_of_xi_raw(double xi) const;  // xi in [0, 1)
};

}  // namespace birkhoff
