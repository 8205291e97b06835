#include "birkhoff/pendulum.hpp"

#include <cmath>
#include <stdexcept>

#include "birkhoff/numerics.hpp"

namespace birkhoff {
namespace pendulum {

namespace {

void check_energy(double e) {
  if (!(e > 0.0 && e < 0.25))
    throw std::invalid_argument("energy must lie in (0, 1/4), got " +
                                std::to_string(e));
}

}  // namespace

double hamiltonian(double zeta, double zeta_dot) {
  const double z2 = zeta * zeta;
  return 0.5 * zeta_dot * zeta_dot + 0.25 * z2 * z2 - 0.5 * z2 + 0.25;
}

TurningPoints turning_points(double energy) {
  check_energy(energy);
  const double root = 2.0 * std::sqrt(energy);
  return {std::sqrt(1.0 - root), std::sqrt(1.0 + root)};
}

// Both integrands have inverse-square-root endpoint singularities in zeta;
// the substitution zeta^2 = 1 + 2 sqrt(E) sin(psi) removes them exactly:
// the speed sqrt(2E - (zeta^2-1)^2/2) becomes sqrt(2E) cos(psi), cancelling
// the cos(psi) of the measure. The cancellation is carried out in closed
// form below, since evaluating the raw difference loses all digits at the
// turning points.

double period_quadrature(double energy) {
  check_energy(energy);
  const double se = std::sqrt(energy);
  // dzeta/speed = dpsi / (sqrt(2) zeta(psi))
  return 2.0 * birkhoff::integrate(
                   [&](double psi) {
                     const double z_sq = 1.0 + 2.0 * se * std::sin(psi);
                     return 1.0 / (std::sqrt(2.0) * std::sqrt(z_sq));
                   },
                   -kPi / 2, kPi / 2, 1e-13, 1e-13);
}

double theta_quadrature(double energy) {
  check_energy(energy);
  const double se = std::sqrt(energy);
  // zeta dzeta/speed = (sqrt(E) cos psi) dpsi / (sqrt(2E) cos psi)
  return 4.0 * std::sqrt(2.0) *
         birkhoff::integrate(
             [&](double psi) {
               return se * std::cos(psi) /
                      (std::sqrt(2.0 * energy) * std::cos(psi));
             },
             -kPi / 2, kPi / 2, 1e-13, 1e-13);
}

Trajectory integrate(double energy, double tau_end, double rtol) {
  if (!(energy >= 0.0 && energy < 0.25))
    throw std::invalid_argument("energy must lie in [0, 1/4)");
  const double z0 =
      energy == 0.0 ? 1.0 : std::sqrt(1.0 + 2.0 * std::sqrt(energy));
  using Stepper = DormandPrince<2>;
  Stepper dp(
      [](double, const Stepper::State& y) {
        return Stepper::State{y[1], -y[0] * y[0] * y[0] + y[0]};
      },
      rtol, rtol);
  Trajectory out;
  dp.integrate(0.0, {z0, 0.0}, tau_end,
               [&](double t, const Stepper::State& y) {
                 out.tau.push_back(t);
                 out.zeta.push_back(y[0]);
                 out.zeta_dot.push_back(y[1]);
               });
  return out;
}

namespace {

// value of zeta_dot at time t, integrating freshly from the given state
double zeta_dot_at(double t0, const std::array<double, 2>& y0, double t,
                   double rtol) {
  using Stepper = DormandPrince<2>;
  Stepper dp(
      [](double, const Stepper::State& y) {
        return Stepper::State{y[1], -y[0] * y[0] * y[0] + y[0]};
      },
      rtol, rtol);
  return dp.integrate(t0, y0, t)[1];
}

}  // namespace

double period_by_integration(double energy, double rtol) {
  check_energy(energy);
  // march until zeta_dot has crossed zero twice, then polish the bracket
  using Stepper = DormandPrince<2>;
  Stepper dp(
      [](double, const Stepper::State& y) {
        return Stepper::State{y[1], -y[0] * y[0] * y[0] + y[0]};
      },
      rtol, rtol);
  const double z0 = std::sqrt(1.0 + 2.0 * std::sqrt(energy));
  int crossings = 0;
  double prev_t = 0.0, prev_v = 0.0;
  std::array<double, 2> prev_y{z0, 0.0};
  double bracket_lo = 0.0, bracket_hi = 0.0;
  std::array<double, 2> bracket_y{};
  bool found = false;
  const double t_max = 64.0;  // periods stay O(5) on (0, 1/4)
  dp.integrate(0.0, {z0, 0.0}, t_max, [&](double t, const Stepper::State& y) {
    if (found) return;
    if (t > 0 && prev_v != 0.0 && prev_v * y[1] <= 0.0 && y[1] != prev_v) {
      ++crossings;
      if (crossings == 2) {
        bracket_lo = prev_t;
        bracket_hi = t;
        bracket_y = prev_y;
        found = true;
      }
    }
    prev_t = t;
    prev_v = y[1];
    prev_y = {y[0], y[1]};
  });
  if (!found)
    throw std::runtime_error("period search did not see two zero crossings");
  // bisect on the flow; zeta_dot crosses + -> - at the full period
  double lo = bracket_lo, hi = bracket_hi;
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = zeta_dot_at(bracket_lo, bracket_y, mid, rtol);
    if (v > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double theta_by_integration(double energy, double rtol) {
  check_energy(energy);
  const double period = period_by_integration(energy, rtol);
  using Stepper = DormandPrince<3>;
  Stepper dp(
      [](double, const Stepper::State& y) {
        return Stepper::State{y[1], -y[0] * y[0] * y[0] + y[0],
                              2.0 * std::sqrt(2.0) * y[0]};
      },
      rtol, rtol);
  const double z0 = std::sqrt(1.0 + 2.0 * std::sqrt(energy));
  const auto y = dp.integrate(0.0, {z0, 0.0, 0.0}, period);
  return y[2];
}

PendulumLevel level(double energy) {
  PendulumLevel out;
  out.energy = energy;
  out.turning = turning_points(energy);
  out.period = period_quadrature(energy);
  out.theta = theta_quadrature(energy);
  return out;
}

namespace {

int count_self_intersections(const std::vector<std::complex<double>>& p) {
  const auto crosses = [](std::complex<double> a, std::complex<double> b,
                          std::complex<double> c, std::complex<double> d) {
    const auto side = [](std::complex<double> u, std::complex<double> v,
                         std::complex<double> w) {
      return (v.real() - u.real()) * (w.imag() - u.imag()) -
             (v.imag() - u.imag()) * (w.real() - u.real());
    };
    const double s1 = side(a, b, c), s2 = side(a, b, d);
    const double s3 = side(c, d, a), s4 = side(c, d, b);
    return s1 * s2 < 0.0 && s3 * s4 < 0.0;
  };
  int count = 0;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 2; j + 1 < n; ++j)
      if (crosses(p[i], p[i + 1], p[j], p[j + 1])) ++count;
  return count;
}

}  // namespace

GammaCurve gamma_curve(double energy, double c_star, int samples,
                       double rtol) {
  check_energy(energy);
  if (!(c_star > 0.0)) throw std::invalid_argument("c_star must be > 0");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  const double period_tau = period_by_integration(energy, rtol);
  const double sc = std::sqrt(c_star);
  // state in tau-time: zeta, zeta_dot, theta, Re Gamma, Im Gamma
  using Stepper = DormandPrince<5>;
  Stepper dp(
      [c_star, sc](double, const Stepper::State& y) {
        const double gamma_speed =
            1.0 / (8.0 * c_star * sc * y[0] * y[0]);  // rho^{2/3} dt/dtau
        return Stepper::State{y[1], -y[0] * y[0] * y[0] + y[0],
                              2.0 * std::sqrt(2.0) * y[0],
                              gamma_speed * std::cos(y[2]),
                              gamma_speed * std::sin(y[2])};
      },
      rtol, rtol);
  const double z0 = std::sqrt(1.0 + 2.0 * std::sqrt(energy));
  GammaCurve out;
  out.t.reserve(samples + 1);
  out.points.reserve(samples + 1);
  Stepper::State y{z0, 0.0, 0.0, 0.0, 0.0};
  double tau = 0.0;
  out.t.push_back(0.0);
  out.points.push_back({0.0, 0.0});
  out.rho.push_back(1.0 / std::pow(2.0 * std::sqrt(2.0) * sc * z0, 3.0));
  for (int k = 1; k <= samples; ++k) {
    const double tau_next = period_tau * k / samples;
    y = dp.integrate(tau, y, tau_next);
    tau = tau_next;
    out.t.push_back(tau / sc);
    out.points.push_back({y[3], y[4]});
    const double h = sc * y[0];
    out.rho.push_back(1.0 / std::pow(2.0 * std::sqrt(2.0) * h, 3.0));
  }
  out.turning_angle = y[2];
  out.endpoint_gap = std::abs(out.points.back() - out.points.front());
  out.polyline_self_intersections = count_self_intersections(out.points);
  return out;
}

}  // namespace pendulum
}  // namespace birkhoff
