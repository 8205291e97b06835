#include "birkhoff/billiard_map.hpp"

#include <cmath>
#include <stdexcept>

#include "birkhoff/numerics.hpp"

namespace birkhoff {

namespace {

double wrap_angle(double a) {  // to (-pi, pi]
  a = std::fmod(a, kTwoPi);
  if (a > kPi) a -= kTwoPi;
  if (a <= -kPi) a += kTwoPi;
  return a;
}

void check_phi(double phi) {
  if (!(phi > kPhiMargin && phi < kPi - kPhiMargin))
    throw std::invalid_argument(
        "phi = " + std::to_string(phi) +
        " is outside the admissible range (grazing states rejected)");
}

}  // namespace

PhaseState billiard_step(const BoundaryChart& chart, const PhaseState& state) {
  check_phi(state.phi);
  const double theta0 = chart.theta_of_s(state.s);
  const double psi = theta0 + state.phi;  // ray direction
  const std::complex<double> z0 = chart.point_theta(theta0);
  const std::complex<double> e(std::cos(psi), -std::sin(psi));
  // Along the far arc the tangent angle runs from psi to psi + pi, and the
  // signed distance of the boundary point from the ray line is strictly
  // increasing in it: a global bracket, no sampling needed.
  const auto f = [&](double th) {
    return (e * (chart.point_theta(th) - z0)).imag();
  };
  const auto df = [&](double th) {
    return chart.spec().rho(th) * std::sin(th - psi);
  };
  const double theta1 = solve_increasing(f, df, psi, psi + kPi, 1e-14);
  const double phi1 = theta1 - psi;
  const double theta1_mod = theta1 - kTwoPi * std::floor(theta1 / kTwoPi);
  return {chart.s_of_theta(theta1_mod), phi1};
}

PhaseState billiard_step_back(const BoundaryChart& chart,
                              const PhaseState& state) {
  const PhaseState flipped{state.s, kPi - state.phi};
  const PhaseState advanced = billiard_step(chart, flipped);
  return {advanced.s, kPi - advanced.phi};
}

std::vector<PhaseState> billiard_orbit(const BoundaryChart& chart,
                                       PhaseState state, int n) {
  if (n < 0) throw std::invalid_argument("orbit length must be >= 0");
  std::vector<PhaseState> out;
  out.reserve(n + 1);
  out.push_back(state);
  for (int k = 0; k < n; ++k) {
    state = billiard_step(chart, state);
    out.push_back(state);
  }
  return out;
}

double reflection_residual(const BoundaryChart& chart, const PhaseState& state,
                           const PhaseState& next) {
  const std::complex<double> w = chart.point(next.s) - chart.point(state.s);
  const double chord_dir = std::arg(w);
  const double out_mismatch =
      wrap_angle(chord_dir - chart.tangent_angle(state.s) - state.phi);
  const double in_mismatch =
      wrap_angle(chart.tangent_angle(next.s) - chord_dir - next.phi);
  return std::max(std::abs(out_mismatch), std::abs(in_mismatch));
}

}  // namespace birkhoff
