// Quartic pendulum analysis: the normalized oscillator z'' = -z^3 + z, its
// energy levels, periods and turning angle integral, and reconstruction of
// the planar curves traced by the corresponding curvature functions.
#pragma once

#include <complex>
#include <vector>

namespace birkhoff {
namespace pendulum {

// Conserved energy: H = zdot^2/2 + z^4/4 - z^2/2 + 1/4.
double hamiltonian(double zeta, double zeta_dot);

struct TurningPoints {
  double lower = 0.0, upper = 0.0;  // 0 < lower < 1 < upper
};

// Valid for energies in (0, 1/4).
TurningPoints turning_points(double energy);

// Prime period by quadrature; the endpoint square-root singularities are
// removed exactly by the substitution zeta^2 = 1 + 2 sqrt(E) sin(psi).
double period_quadrature(double energy);

// Tangent turning angle over one period, Theta = 2 sqrt(2) * integral of
// zeta dtau, by the same singularity-removing substitution. Equals 4*pi.
double theta_quadrature(double energy);

struct Trajectory {
  std::vector<double> tau, zeta, zeta_dot;
};

// Adaptive integration from the upper turning point (zeta_+, 0).
Trajectory integrate(double energy, double tau_end, double rtol = 1e-12);

// Prime period as the time of second return of zeta_dot to zero.
double period_by_integration(double energy, double rtol = 1e-12);

// Theta via the trajectory route (augmented quadrature along the flow).
double theta_by_integration(double energy, double rtol = 1e-12);

struct PendulumLevel {
  double energy = 0.0;
  TurningPoints turning;
  double period = 0.0;  // prime period (quadrature route)
  double theta = 0.0;   // turning angle over one period (quadrature route)
};

PendulumLevel level(double energy);

struct GammaCurve {
  std::vector<double> t;                     // unrenormalized parameter
  std::vector<std::complex<double>> points;  // Gamma(t)
  std::vector<double> rho;                   // curvature radius along the curve
  double turning_angle = 0.0;                // theta(T) - theta(0)
  double endpoint_gap = 0.0;                 // |Gamma(T) - Gamma(0)|
  int polyline_self_intersections = 0;       // reported, not certified
};

// Reconstructs the plane curve driven by the curvature radius
// rho(t) = (2 sqrt(2) h(t))^-3 with h(t) = sqrt(C*) zeta(sqrt(C*) t),
// over one period of h.
GammaCurve gamma_curve(double energy, double c_star = 1.0,
                       int samples = 2000, double rtol = 1e-12);

}  // namespace pendulum
}  // namespace birkhoff
