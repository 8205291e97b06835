// Boundary-layer normal-form data: the X1 coefficient of the Lazutkin
// conjugacy, the shift function A on the Lazutkin circle, the classical
// fourth-order expansion coefficients, and the pseudocollision angle
// machinery used to cross-check all of them.
#pragma once

#include <array>
#include <functional>

#include "birkhoff/lazutkin.hpp"

namespace birkhoff {

// A(xi) with derivatives; the eta^2 correction applied to Lazutkin-equal
// spacing when forming near-tangent chord triples.
struct AngularShift {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;

  static AngularShift zero();
};

class NormalForm {
 public:
  explicit NormalForm(LazutkinChart lchart);

  const LazutkinChart& lazutkin() const { return lchart_; }

  // Shift function on the Lazutkin circle, normalized by a(0) = 0; 1-periodic.
  double a(double xi) const;
  double a_prime(double xi) const;
  double a_second(double xi) const;
  AngularShift shift() const;

  // The phi^2 coefficient of the conjugacy's first component, X1(0) = 0.
  double x1(double s) const;

  struct ClassicalCoefficients {
    double alpha3, alpha4, beta4;
  };
  ClassicalCoefficients classical_coefficients(double xi) const;

  // Residual of the second-order ODE satisfied by A; combines the h-form of
  // A'' with the curvature-form terms, so it vanishes only if both evaluation
  // routes agree.
  double ode_residual(double xi) const;

  struct DiscVerdict {
    bool is_disc = false;
    double sup_x1 = 0.0;
  };
  DiscVerdict disc_test(double tol = 1e-10, int grid_points = 2048) const;

 private:
  LazutkinChart lchart_;
  double c_l_ = 0.0, c_bv_ = 0.0;
  // theta-pullbacks of the partial integrals defining A and X1
  double a_integrand_mean_ = 0.0;
  TrigSeries a_integrand_wave_;
  double x1_integrand_mean_ = 0.0;
  TrigSeries x1_integrand_wave_;
};

// Angles of the chord triple at Lazutkin coordinates
// (xi - eta + A(xi-eta) eta^2, xi + A(xi) eta^2, xi + eta + A(xi+eta) eta^2),
// both measured against the tangent orientation that points toward the
// neighbour (so both are positive and O(eta)).
double phi_plus(const LazutkinChart& lc, const AngularShift& shift, double xi,
                double eta);
double phi_minus(const LazutkinChart& lc, const AngularShift& shift, double xi,
                 double eta);

// Even defect phi_plus - phi_minus; O(eta^4) generally, O(eta^6) when the
// shift solves the compensating ODE.
double pseudocollision_defect(const LazutkinChart& lc,
                              const AngularShift& shift, double xi,
                              double eta);

struct PhiExpansion {
  double eta2 = 0.0;  // must vanish for any domain
  double eta4 = 0.0;
  double eta6 = 0.0;
};

// Even Taylor coefficients of phi_plus in eta, extracted from a geometric
// eta ladder by eliminating the known parity of the defect.
PhiExpansion phi_taylor_numeric(const LazutkinChart& lc,
                                const AngularShift& shift, double xi,
                                double eta0 = 0.08);

// Closed form of the eta^4 coefficient of phi_plus.
double phi4_closed_form(const LazutkinChart& lc, double a_second_at_xi,
                        double xi);

// Measured |eta^4 coefficient| when the shift is built to cancel it. The
// true value is zero, so this is pure extraction error; the two ladder
// scales bracket the truncation/noise trade-off and the smaller reading is
// reported.
double phi4_cancellation_residual(const LazutkinChart& lc,
                                  const AngularShift& shift, double xi);

// Normalized Taylor coefficients of the rotated chord vector
// delta z^+ = e^{-i theta(x0)} (z(x+) - z(x0)):
//   Im = (rho_L^{1/3}/C_L^2) sum s_tilde[j] eta^j,
//   Re = (rho_L^{2/3}/C_L)   sum c_tilde[j] eta^j.
struct ChordExpansion {
  std::array<double, 6> s_tilde{};  // j = 0..5
  std::array<double, 5> c_tilde{};  // j = 0..4
};

ChordExpansion chord_expansion_closed(const LazutkinChart& lc,
                                      const AngularShift& shift, double xi);

// Oracle route: adaptive quadrature of the chord integral on an eta ladder
// plus a power-series fit. Independent of the closed forms above.
ChordExpansion chord_expansion_numeric(const LazutkinChart& lc,
                                       const AngularShift& shift, double xi,
                                       double eta0 = 0.09);

}  // namespace birkhoff
