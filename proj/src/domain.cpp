#include "birkhoff/domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "birkhoff/numerics.hpp"

namespace birkhoff {

DomainSpec DomainSpec::disc(double radius) {
  DomainSpec s;
  s.kind_ = Kind::Disc;
  s.radius_ = radius;
  s.validate();
  return s;
}

DomainSpec DomainSpec::ellipse(double a, double b) {
  DomainSpec s;
  s.kind_ = Kind::Ellipse;
  s.a_ = a;
  s.b_ = b;
  s.validate();
  return s;
}

DomainSpec DomainSpec::fourier(double c0, std::vector<Harmonic> harmonics) {
  DomainSpec s;
  s.kind_ = Kind::Fourier;
  s.c0_ = c0;
  s.harmonics_ = std::move(harmonics);
  s.validate();
  return s;
}

void DomainSpec::validate() const {
  switch (kind_) {
    case Kind::Disc:
      if (!(radius_ > 0)) throw std::invalid_argument("disc radius must be > 0");
      return;
    case Kind::Ellipse:
      if (!(a_ > 0) || !(b_ > 0))
        throw std::invalid_argument("ellipse semi-axes must be > 0");
      return;
    case Kind::Fourier: {
      if (!(c0_ > 0)) throw std::invalid_argument("fourier c0 must be > 0");
      for (const auto& h : harmonics_) {
        if (h.k == 1)
          throw std::invalid_argument(
              "fourier harmonic k = 1 not allowed (breaks closure)");
        if (h.k < 2)
          throw std::invalid_argument("fourier harmonic index must be >= 2");
      }
      // strict convexity: rho > 0 on a dense grid
      constexpr int kGrid = 8192;
      for (int j = 0; j < kGrid; ++j) {
        const double th = kTwoPi * j / kGrid;
        const double r = rho(th);
        if (!(r > 0)) {
          std::ostringstream os;
          os << "fourier curvature radius non-positive at theta = " << th
             << " (rho = " << r << ")";
          throw std::invalid_argument(os.str());
        }
      }
      return;
    }
  }
}

CurvatureJet DomainSpec::curvature_theta(double theta) const {
  switch (kind_) {
    case Kind::Disc:
      return {radius_, 0.0, 0.0, 0.0};
    case Kind::Ellipse: {
      // rho(theta) = a^2 b^2 / u^{3/2}, u = b^2 + (a^2 - b^2) sin^2(theta);
      // tangent angle 0 at the point (0, -b).
      const double d = a_ * a_ - b_ * b_;
      const double s2 = std::sin(2 * theta);
      const double c2 = std::cos(2 * theta);
      const double sin_th = std::sin(theta);
      const double u = b_ * b_ + d * sin_th * sin_th;
      const double u1 = d * s2;
      const double u2 = 2 * d * c2;
      const double u3 = -4 * d * s2;
      const double f = a_ * a_ * b_ * b_;
      const double um = std::pow(u, -1.5);
      CurvatureJet j;
      j.rho = f * um;
      j.d1 = f * (-1.5) * um / u * u1;
      j.d2 = f * um / (u * u) * (3.75 * u1 * u1 - 1.5 * u * u2);
      j.d3 = f * um / (u * u * u) *
             (-13.125 * u1 * u1 * u1 + 11.25 * u * u1 * u2 - 1.5 * u * u * u3);
      return j;
    }
    case Kind::Fourier: {
      CurvatureJet j;
      j.rho = c0_;
      for (const auto& h : harmonics_) {
        const double k = h.k;
        const double ck = std::cos(k * theta), sk = std::sin(k * theta);
        j.rho += h.cos_coef * ck + h.sin_coef * sk;
        j.d1 += k * (-h.cos_coef * sk + h.sin_coef * ck);
        j.d2 += k * k * (-h.cos_coef * ck - h.sin_coef * sk);
        j.d3 += k * k * k * (h.cos_coef * sk - h.sin_coef * ck);
      }
      return j;
    }
  }
  throw std::logic_error("unreachable");
}

std::string DomainSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Disc:
      os << "disc{r=" << radius_ << "}";
      break;
    case Kind::Ellipse:
      os << "ellipse{a=" << a_ << ", b=" << b_ << "}";
      break;
    case Kind::Fourier:
      os << "fourier{c0=" << c0_;
      for (const auto& h : harmonics_)
        os << ", (" << h.k << ", " << h.cos_coef << ", " << h.sin_coef << ")";
      os << "}";
      break;
  }
  return os.str();
}

std::string DomainSpec::canonical_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::Disc:
      os << "disc\n" << radius_ << "\n";
      break;
    case Kind::Ellipse:
      os << "ellipse\n" << a_ << "\n" << b_ << "\n";
      break;
    case Kind::Fourier: {
      os << "fourier\n" << c0_ << "\n";
      auto hs = harmonics_;
      std::sort(hs.begin(), hs.end(),
                [](const Harmonic& x, const Harmonic& y) { return x.k < y.k; });
      for (const auto& h : hs)
        os << h.k << " " << h.cos_coef << " " << h.sin_coef << "\n";
      break;
    }
  }
  return os.str();
}

BoundaryChart::BoundaryChart(DomainSpec spec, double tol)
    : spec_(std::move(spec)), tol_(tol) {
  const auto rho_fn = [this](double th) { return spec_.rho(th); };
  TrigSeries rho_series = TrigSeries::fit_function(rho_fn);
  rho_mean_ = rho_series.mean();
  length_ = kTwoPi * rho_mean_;

  // s(theta) = integral of rho; store its purely periodic part.
  // rho = mean + wave, so s(theta) = mean*theta + integral(wave).
  int n = 4096;
  while (n < 8 * static_cast<int>(rho_series.terms())) n *= 2;
  {
    std::vector<double> wave(n);
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * j / n;
      wave[j] = rho_series.integral(th) - rho_mean_ * th;
    }
    s_wave_ = TrigSeries::fit(wave);
  }

  // z(theta) = integral of exp(i theta) rho(theta); closure needs zero mean.
  {
    std::vector<std::complex<double>> g(n);
    std::complex<double> mean{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * j / n;
      g[j] = std::complex<double>(std::cos(th), std::sin(th)) * spec_.rho(th);
      mean += g[j];
    }
    mean /= static_cast<double>(n);
    if (std::abs(mean) > 0.1 * tol_ * std::max(1.0, rho_mean_))
      throw std::invalid_argument(
          "boundary does not close up: mean of exp(i theta) rho(theta) = " +
          std::to_string(std::abs(mean)));
    for (auto& v : g) v -= mean;  // make z exactly periodic in theta
    z_wave_ = ComplexTrigSeries::fit(g);
  }

  s_grid_.resize(n + 1);
  for (int j = 0; j <= n; ++j) s_grid_[j] = s_of_theta(kTwoPi * j / n);
}

double BoundaryChart::s_of_theta(double theta) const {
  return rho_mean_ * theta + s_wave_(theta) - s_wave_(0.0);
}

double BoundaryChart::theta_of_s(double s) const {
  const double turns = std::floor(s / length_);
  const double s0 = s - turns * length_;
  // bracket from the uniform-theta grid, then Newton (ds/dtheta = rho > 0)
  const int n = static_cast<int>(s_grid_.size()) - 1;
  auto it = std::upper_bound(s_grid_.begin(), s_grid_.end(), s0);
  int hi_idx = static_cast<int>(it - s_grid_.begin());
  hi_idx = std::clamp(hi_idx, 1, n);
  double lo = kTwoPi * (hi_idx - 1) / n, hi = kTwoPi * hi_idx / n;
  const double th = solve_increasing(
      [&](double t) { return s_of_theta(t) - s0; },
      [&](double t) { return spec_.rho(t); }, lo, hi, 1e-15);
  return th + kTwoPi * turns;
}

std::complex<double> BoundaryChart::point_theta(double theta) const {
  // the mean of exp(i theta) rho vanished at construction, so the integral
  // is purely periodic in theta
  return z_wave_.integral(theta) - z_wave_.integral(0.0);
}

std::complex<double> BoundaryChart::point(double s) const {
  return point_theta(theta_of_s(s));
}

CurvatureJet BoundaryChart::arc_jet_theta(double theta) const {
  const CurvatureJet t = spec_.curvature_theta(theta);
  const double r = t.rho;
  CurvatureJet j;
  j.rho = r;
  j.d1 = t.d1 / r;
  j.d2 = t.d2 / (r * r) - t.d1 * t.d1 / (r * r * r);
  j.d3 = t.d3 / (r * r * r) - 4.0 * t.d1 * t.d2 / (r * r * r * r) +
         3.0 * t.d1 * t.d1 * t.d1 / (r * r * r * r * r);
  return j;
}

CurvatureJet BoundaryChart::arc_jet(double s) const {
  return arc_jet_theta(theta_of_s(s));
}

}  // namespace birkhoff
