#include "birkhoff/lazutkin.hpp"

#include <algorithm>
#include <cmath>

#include "birkhoff/numerics.hpp"

namespace birkhoff {

LazutkinChart::LazutkinChart(BoundaryChart chart) : chart_(std::move(chart)) {
  const auto& spec = chart_.spec();
  auto u_fn = [&spec](double th) { return std::cbrt(spec.rho(th)); };
  TrigSeries u_series = TrigSeries::fit_function(u_fn);
  u_mean_ = u_series.mean();
  c_l_ = 1.0 / (kTwoPi * u_mean_);

  const int n = 4096;
  {
    std::vector<double> wave(n);
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * j / n;
      wave[j] = u_series.integral(th) - u_mean_ * th;
    }
    u_wave_ = TrigSeries::fit(wave);
  }
  xi_grid_.resize(n + 1);
  for (int j = 0; j <= n; ++j) xi_grid_[j] = xi_of_theta(kTwoPi * j / n);

  c_bv_ = c_bv_lazutkin_quadrature();
  mm_i1_ = integrate(
      [this](double s) { return std::pow(chart_.arc_jet(s).rho, -2.0 / 3.0); },
      0.0, chart_.length());
  mm_i2_ = integrate(
      [this](double s) {
        const CurvatureJet j = chart_.arc_jet(s);
        return (8.0 * j.d1 * j.d1 + 9.0) * std::pow(j.rho, -4.0 / 3.0);
      },
      0.0, chart_.length());
}

double LazutkinChart::xi_of_theta(double theta) const {
  return c_l_ * (u_mean_ * theta + u_wave_(theta) - u_wave_(0.0));
}

double LazutkinChart::x0(double s) const {
  return xi_of_theta(chart_.theta_of_s(s));
}

double LazutkinChart::theta_of_xi_raw(double xi) const {
  const int n = static_cast<int>(xi_grid_.size()) - 1;
  auto it = std::upper_bound(xi_grid_.begin(), xi_grid_.end(), xi);
  int hi_idx = std::clamp(static_cast<int>(it - xi_grid_.begin()), 1, n);
  const double lo = kTwoPi * (hi_idx - 1) / n, hi = kTwoPi * hi_idx / n;
  return solve_increasing(
      [&](double t) { return xi_of_theta(t) - xi; },
      [&](double t) { return c_l_ * std::cbrt(chart_.spec().rho(t)); }, lo, hi,
      1e-15);
}

double LazutkinChart::theta_of_xi(double xi) const {
  const double turns = std::floor(xi);
  return theta_of_xi_raw(xi - turns) + kTwoPi * turns;
}

double LazutkinChart::x0_inverse(double xi) const {
  const double turns = std::floor(xi);
  return chart_.s_of_theta(theta_of_xi_raw(xi - turns)) +
         chart_.length() * turns;
}

std::complex<double> LazutkinChart::point_of_xi(double xi) const {
  return chart_.point_theta(theta_of_xi(xi));
}

CurvatureJet LazutkinChart::lazutkin_jet(double xi) const {
  const double theta = theta_of_xi(xi);
  const CurvatureJet t = chart_.spec().curvature_theta(theta);
  const double r = t.rho;
  const double r13 = std::cbrt(r);
  CurvatureJet j;
  j.rho = r;
  j.d1 = t.d1 / (c_l_ * r13);
  j.d2 = (t.d2 / (r13 * r13) - t.d1 * t.d1 / (3.0 * r13 * r13 * r)) /
         (c_l_ * c_l_);
  j.d3 = (t.d3 / r - (4.0 / 3.0) * t.d1 * t.d2 / (r * r) +
          (5.0 / 9.0) * t.d1 * t.d1 * t.d1 / (r * r * r)) /
         (c_l_ * c_l_ * c_l_);
  return j;
}

double LazutkinChart::y0_of_s(double s) const {
  return 2.0 * c_l_ * std::cbrt(chart_.arc_jet(s).rho);
}

double LazutkinChart::y0_of_xi(double xi) const {
  return 2.0 * c_l_ * std::cbrt(rho_l(xi));
}

double LazutkinChart::c_bv_lazutkin_quadrature(double tol) const {
  // integrand of the periodicity constant: (h'/h)^2 + h^2 / C_L^2 with
  // h = rho_L^{-1/3} / (2 sqrt(2)); h is computed on demand from the jet.
  return integrate(
      [this](double xi) {
        const CurvatureJet j = lazutkin_jet(xi);
        const double p = j.d1 / j.rho;
        const double h_sq = std::pow(j.rho, -2.0 / 3.0) / 8.0;
        return p * p / 9.0 + h_sq / (c_l_ * c_l_);
      },
      0.0, 1.0, tol, tol);
}

double LazutkinChart::c_bv_arclength_quadrature(double tol) const {
  const double i1 = integrate(
      [this](double s) { return std::pow(chart_.arc_jet(s).rho, -2.0 / 3.0); },
      0.0, chart_.length(), tol, tol);
  const double i2 = integrate(
      [this](double s) {
        const CurvatureJet j = chart_.arc_jet(s);
        return (8.0 * j.d1 * j.d1 + 9.0) * std::pow(j.rho, -4.0 / 3.0);
      },
      0.0, chart_.length(), tol, tol);
  return i1 * i2 / 72.0;
}

}  // namespace birkhoff
