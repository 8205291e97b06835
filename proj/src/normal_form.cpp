#include "birkhoff/normal_form.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "birkhoff/numerics.hpp"

namespace birkhoff {

namespace {

constexpr double kOneThird = 1.0 / 3.0;

struct HJet {  // h = rho_L^{-1/3} / (2 sqrt 2) and derivatives in xi
  double h, h1, h2, h3;
};

HJet h_jet(const CurvatureJet& j) {
  const double scale = 1.0 / (2.0 * std::sqrt(2.0));
  const double r = j.rho;
  const double rm13 = std::pow(r, -kOneThird);
  const double rm43 = rm13 / r, rm73 = rm43 / r, rm103 = rm73 / r;
  HJet h;
  h.h = scale * rm13;
  h.h1 = scale * (-kOneThird) * rm43 * j.d1;
  h.h2 = scale * ((4.0 / 9.0) * rm73 * j.d1 * j.d1 - kOneThird * rm43 * j.d2);
  h.h3 = scale * (-(28.0 / 27.0) * rm103 * j.d1 * j.d1 * j.d1 +
                  (4.0 / 3.0) * rm73 * j.d1 * j.d2 - kOneThird * rm43 * j.d3);
  return h;
}

}  // namespace

AngularShift AngularShift::zero() {
  auto z = [](double) { return 0.0; };
  return {z, z, z};
}

NormalForm::NormalForm(LazutkinChart lchart) : lchart_(std::move(lchart)) {
  c_l_ = lchart_.lazutkin_constant();
  c_bv_ = lchart_.c_bv();
  const auto& spec = lchart_.boundary().spec();
  const double cl = c_l_;

  // Integrand of 15 A pulled back to theta: (h''/h + h^2/C^2) dxi/dtheta,
  // with dxi/dtheta = C_L rho^{1/3}. All factors are jets in theta, no
  // inversion involved.
  auto a_integrand = [&spec, cl](double th) {
    const CurvatureJet t = spec.curvature_theta(th);
    const double r = t.rho;
    const double r13 = std::cbrt(r);
    // Lazutkin-parameter jets at xi(theta)
    const double d1 = t.d1 / (cl * r13);
    const double d2 =
        (t.d2 / (r13 * r13) - t.d1 * t.d1 / (3.0 * r13 * r13 * r)) / (cl * cl);
    const double p = d1 / r, q = d2 / r;
    const double hpp_over_h = (4.0 / 9.0) * p * p - kOneThird * q;
    const double hsq = std::pow(r, -2.0 / 3.0) / 8.0;
    return (hpp_over_h + hsq / (cl * cl)) * cl * r13;
  };
  TrigSeries a_series = TrigSeries::fit_function(a_integrand);
  a_integrand_mean_ = a_series.mean();
  {
    const int n = 4096;
    std::vector<double> wave(n);
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * j / n;
      wave[j] = a_series.integral(th) - a_integrand_mean_ * th;
    }
    a_integrand_wave_ = TrigSeries::fit(wave);
  }

  // X1(s) = -rho^{2/3}(s) * integral of F ds'; pulled back to theta the
  // integrand is F(theta) rho dtheta.
  const double cbv = c_bv_;
  auto x1_integrand = [&spec, cl, cbv](double th) {
    const CurvatureJet t = spec.curvature_theta(th);
    const double r = t.rho;
    const double rd1 = t.d1 / r;                            // arc-length d/ds
    const double rd2 = t.d2 / (r * r) - t.d1 * t.d1 / (r * r * r);
    const double r13 = std::cbrt(r);
    const double r23 = r13 * r13, r43 = r23 * r23;
    const double f = (8.0 * cl / 135.0) * rd1 * rd1 / r43 -
                     (4.0 * cl / 45.0) * rd2 / r13 + (cl / 30.0) / r43 -
                     (4.0 * cl * cl * cl * cbv / 15.0) / r23;
    return f * r;
  };
  TrigSeries x1_series = TrigSeries::fit_function(x1_integrand);
  x1_integrand_mean_ = x1_series.mean();
  {
    const int n = 4096;
    std::vector<double> wave(n);
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * j / n;
      wave[j] = x1_series.integral(th) - x1_integrand_mean_ * th;
    }
    x1_integrand_wave_ = TrigSeries::fit(wave);
  }
}

double NormalForm::a(double xi) const {
  const double th = lchart_.theta_of_xi(xi);
  const double partial = a_integrand_mean_ * th + a_integrand_wave_(th) -
                         a_integrand_wave_(0.0);
  return (partial - c_bv_ * xi) / 15.0;
}

double NormalForm::a_prime(double xi) const {
  const CurvatureJet j = lchart_.lazutkin_jet(xi);
  const HJet h = h_jet(j);
  return (h.h2 / h.h + h.h * h.h / (c_l_ * c_l_) - c_bv_) / 15.0;
}

double NormalForm::a_second(double xi) const {
  const CurvatureJet j = lchart_.lazutkin_jet(xi);
  const HJet h = h_jet(j);
  const double d_hpp_over_h = (h.h3 * h.h - h.h1 * h.h2) / (h.h * h.h);
  const double d_hsq = 2.0 * h.h * h.h1 / (c_l_ * c_l_);
  return (d_hpp_over_h + d_hsq) / 15.0;
}

AngularShift NormalForm::shift() const {
  return {[this](double xi) { return a(xi); },
          [this](double xi) { return a_prime(xi); },
          [this](double xi) { return a_second(xi); }};
}

double NormalForm::x1(double s) const {
  const double th = lchart_.boundary().theta_of_s(s);
  const double partial = x1_integrand_mean_ * th + x1_integrand_wave_(th) -
                         x1_integrand_wave_(0.0);
  return -std::pow(lchart_.boundary().spec().rho(th), 2.0 / 3.0) * partial;
}

NormalForm::ClassicalCoefficients NormalForm::classical_coefficients(
    double xi) const {
  const CurvatureJet j = lchart_.lazutkin_jet(xi);
  const double p = j.d1 / j.rho, q = j.d2 / j.rho, r = j.d3 / j.rho;
  const double w = std::pow(j.rho, -2.0 / 3.0) / (c_l_ * c_l_);
  ClassicalCoefficients c;
  c.alpha3 = p * p / 27.0 - q / 36.0 + w / 96.0;
  c.alpha4 = -(4.0 / 135.0) * p * p * p + (11.0 / 270.0) * p * q -
             r / 90.0 - p * w / 360.0;
  c.beta4 = (2.0 / 135.0) * p * p * p - (11.0 / 540.0) * p * q + r / 180.0 +
            p * w / 720.0;
  return c;
}

double NormalForm::ode_residual(double xi) const {
  const CurvatureJet j = lchart_.lazutkin_jet(xi);
  const double p = j.d1 / j.rho, q = j.d2 / j.rho, r = j.d3 / j.rho;
  const double w = std::pow(j.rho, -2.0 / 3.0) / (c_l_ * c_l_);
  return a_second(xi) + (8.0 / 135.0) * p * p * p - (11.0 / 135.0) * p * q +
         r / 45.0 + p * w / 180.0;
}

NormalForm::DiscVerdict NormalForm::disc_test(double tol,
                                              int grid_points) const {
  const double len = lchart_.boundary().length();
  double sup = 0.0;
  for (int i = 0; i < grid_points; ++i)
    sup = std::max(sup, std::abs(x1(len * i / grid_points)));
  return {sup < tol, sup};
}

namespace {

struct Triple {
  std::complex<double> z_minus, z0, z_plus;
  double theta0;
};

Triple chord_triple(const LazutkinChart& lc, const AngularShift& shift,
                    double xi, double eta) {
  const double eta2 = eta * eta;
  const double x0 = xi + shift.value(xi) * eta2;
  const double xp = xi + eta + shift.value(xi + eta) * eta2;
  const double xm = xi - eta + shift.value(xi - eta) * eta2;
  Triple t;
  t.z0 = lc.point_of_xi(x0);
  t.z_plus = lc.point_of_xi(xp);
  t.z_minus = lc.point_of_xi(xm);
  t.theta0 = lc.theta_of_xi(x0);
  if (std::abs(t.z_plus - t.z0) == 0.0 || std::abs(t.z_minus - t.z0) == 0.0)
    throw std::invalid_argument("coincident points in chord triple");
  return t;
}

double angle_from(const std::complex<double>& dz) {
  return std::atan(dz.imag() / dz.real());
}

}  // namespace

double phi_plus(const LazutkinChart& lc, const AngularShift& shift, double xi,
                double eta) {
  const Triple t = chord_triple(lc, shift, xi, eta);
  const std::complex<double> rot(std::cos(t.theta0), -std::sin(t.theta0));
  return angle_from(rot * (t.z_plus - t.z0));
}

double phi_minus(const LazutkinChart& lc, const AngularShift& shift, double xi,
                 double eta) {
  const Triple t = chord_triple(lc, shift, xi, eta);
  const std::complex<double> rot(std::cos(t.theta0), -std::sin(t.theta0));
  // measured from the negatively oriented tangent, so the value is positive
  // for eta > 0 and the defect phi_plus - phi_minus is even in eta
  return -angle_from(rot * (t.z_minus - t.z0));
}

double pseudocollision_defect(const LazutkinChart& lc,
                              const AngularShift& shift, double xi,
                              double eta) {
  const Triple t = chord_triple(lc, shift, xi, eta);
  const std::complex<double> rot(std::cos(t.theta0), -std::sin(t.theta0));
  return angle_from(rot * (t.z_plus - t.z0)) +
         angle_from(rot * (t.z_minus - t.z0));
}

PhiExpansion phi_taylor_numeric(const LazutkinChart& lc,
                                const AngularShift& shift, double xi,
                                double eta0) {
  // Gentle geometric ladder: a plain halving ladder either truncates badly
  // (large eta) or amplifies double-precision noise by eta^-4 (small eta).
  constexpr int kLevels = 6;
  constexpr double kRatio = 0.75;
  std::vector<double> etas(kLevels);
  std::vector<double> vals(kLevels);
  double e = eta0;
  for (int i = 0; i < kLevels; ++i, e *= kRatio) {
    etas[i] = e;
    vals[i] = 0.5 * pseudocollision_defect(lc, shift, xi, e);
  }
  const auto c = fit_even_coefficients(etas, vals);
  return {c[0], c[1], c[2]};
}

double phi4_cancellation_residual(const LazutkinChart& lc,
                                  const AngularShift& shift, double xi) {
  const double a = std::abs(phi_taylor_numeric(lc, shift, xi, 0.08).eta4);
  const double b = std::abs(phi_taylor_numeric(lc, shift, xi, 0.06).eta4);
  return std::min(a, b);
}

double phi4_closed_form(const LazutkinChart& lc, double a_second_at_xi,
                        double xi) {
  const CurvatureJet j = lc.lazutkin_jet(xi);
  const double cl = lc.lazutkin_constant();
  const double p = j.d1 / j.rho, q = j.d2 / j.rho, r = j.d3 / j.rho;
  const double w = std::pow(j.rho, -2.0 / 3.0) / (cl * cl);
  return (a_second_at_xi + (8.0 / 135.0) * p * p * p -
          (11.0 / 135.0) * p * q + r / 45.0 + p * w / 180.0) /
         (4.0 * cl * std::cbrt(j.rho));
}

ChordExpansion chord_expansion_closed(const LazutkinChart& lc,
                                      const AngularShift& shift, double xi) {
  const CurvatureJet j = lc.lazutkin_jet(xi);
  const double cl = lc.lazutkin_constant();
  const double p = j.d1 / j.rho, q = j.d2 / j.rho, r = j.d3 / j.rho;
  const double w = std::pow(j.rho, -2.0 / 3.0) / (cl * cl);
  const double av = shift.value(xi), a1 = shift.d1(xi), a2 = shift.d2(xi);
  ChordExpansion e;
  e.s_tilde[0] = 0.0;
  e.s_tilde[1] = 0.0;
  e.s_tilde[2] = 0.5;
  e.s_tilde[3] = p / 6.0;
  e.s_tilde[4] =
      a1 + av * p / 6.0 + 5.0 * q / 72.0 - p * p / 27.0 - w / 24.0;
  e.s_tilde[5] = a2 / 2.0 + a1 * p / 2.0 + av * (q / 6.0 - p * p / 9.0) +
                 (2.0 / 135.0) * p * p * p - (4.0 / 135.0) * p * q +
                 (7.0 / 360.0) * r - p * w / 180.0;
  e.c_tilde[0] = 0.0;
  e.c_tilde[1] = 1.0;
  e.c_tilde[2] = p / 3.0;
  e.c_tilde[3] = a1 + 2.0 * av * p / 3.0 + q / 9.0 - p * p / 27.0 - w / 6.0;
  e.c_tilde[4] = a2 / 2.0 + 2.0 * a1 * p / 3.0 +
                 av * (q / 3.0 - p * p / 9.0) + p * p * p / 81.0 -
                 p * q / 36.0 + r / 36.0 - p * w / 24.0;
  return e;
}

ChordExpansion chord_expansion_numeric(const LazutkinChart& lc,
                                       const AngularShift& shift, double xi,
                                       double eta0) {
  const double cl = lc.lazutkin_constant();
  const auto chord_integral = [&](double eta) {
    const double eta2 = eta * eta;
    const double x0 = xi + shift.value(xi) * eta2;
    const double xp = xi + eta + shift.value(xi + eta) * eta2;
    const double th0 = lc.theta_of_xi(x0);
    const auto integrand = [&](double x) {
      const double dth = lc.theta_of_xi(x) - th0;
      return std::polar(std::pow(lc.rho_l(x), 2.0 / 3.0), dth);
    };
    return integrate(integrand, x0, xp, 1e-14, 1e-14) / cl;
  };
  std::vector<double> etas;
  std::vector<std::complex<double>> vals;
  constexpr int kLevels = 8;
  constexpr double kRatio = 0.75;
  double step = eta0;
  for (int k = 0; k < kLevels; ++k, step *= kRatio) {
    etas.push_back(step);
    vals.push_back(chord_integral(step));
    etas.push_back(-step);
    vals.push_back(chord_integral(-step));
  }
  const auto coefs = fit_power_coefficients(etas, vals);  // c_1 .. c_16
  const double rho = lc.rho_l(xi);
  const double s_weight = std::cbrt(rho) / (cl * cl);
  const double c_weight = std::pow(rho, 2.0 / 3.0) / cl;
  ChordExpansion e;
  e.s_tilde[0] = 0.0;
  e.c_tilde[0] = 0.0;
  for (int jj = 1; jj <= 5; ++jj) e.s_tilde[jj] = coefs[jj - 1].imag() / s_weight;
  for (int jj = 1; jj <= 4; ++jj) e.c_tilde[jj] = coefs[jj - 1].real() / c_weight;
  return e;
}

}  // namespace birkhoff
