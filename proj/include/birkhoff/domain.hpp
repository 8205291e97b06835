// Strictly convex planar domains described by the curvature radius as a
// function of the tangent angle, with arc-length geometry built on top.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "birkhoff/trig_series.hpp"

namespace birkhoff {

// Curvature radius and derivatives; the parameter they refer to (tangent
// angle, arc length or Lazutkin coordinate) is fixed by context.
struct CurvatureJet {
  double rho = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

class DomainSpec {
 public:
  enum class Kind { Disc, Ellipse, Fourier };

  struct Harmonic {
    int k = 0;
    double cos_coef = 0.0;
    double sin_coef = 0.0;
  };

  static DomainSpec disc(double radius);
  static DomainSpec ellipse(double a, double b);
  static DomainSpec fourier(double c0, std::vector<Harmonic> harmonics);

  Kind kind() const { return kind_; }
  double radius() const { return radius_; }
  double semi_axis_a() const { return a_; }
  double semi_axis_b() const { return b_; }
  double c0() const { return c0_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  // rho(theta) and d/dtheta derivatives, theta = tangent angle.
  CurvatureJet curvature_theta(double theta) const;
  double rho(double theta) const { return curvature_theta(theta).rho; }

  bool is_disc_kind() const { return kind_ == Kind::Disc; }
  std::string describe() const;        // short human-readable form
  std::string canonical_string() const;  // stable form used for hashing

 private:
  DomainSpec() = default;
  void validate() const;

  Kind kind_ = Kind::Disc;
  double radius_ = 1.0;
  double a_ = 1.0, b_ = 1.0;
  double c0_ = 1.0;
  std::vector<Harmonic> harmonics_;
};

// Arc-length geometry of the boundary. Immutable after construction; all
// evaluations are pure and safe to call concurrently.
class BoundaryChart {
 public:
  explicit BoundaryChart(DomainSpec spec, double tol = 1e-10);

  const DomainSpec& spec() const { return spec_; }
  double length() const { return length_; }
  double tolerance() const { return tol_; }

  // Monotone lifts: theta_of_s(s + L) = theta_of_s(s) + 2*pi and conversely.
  double theta_of_s(double s) const;
  double s_of_theta(double theta) const;

  // Boundary point; s interpreted mod the total length. z(0) is the origin
  // with horizontal positive tangent, interior above.
  std::complex<double> point(double s) const;
  std::complex<double> point_theta(double theta) const;

  double tangent_angle(double s) const { return theta_of_s(s); }

  // Curvature radius and arc-length derivatives at s.
  CurvatureJet arc_jet(double s) const;
  CurvatureJet arc_jet_theta(double theta) const;
  double rho_at_s(double s) const { return spec_.rho(theta_of_s(s)); }

 private:
  DomainSpec spec_;
  double tol_ = 1e-10;
  double length_ = 0.0;
  double rho_mean_ = 0.0;    // length / (2 pi)
  TrigSeries s_wave_;        // s(theta) = rho_mean*theta + s_wave(theta) - s_wave(0)
  ComplexTrigSeries z_wave_;  // z(theta) = z_wave.integral(theta), mean removed
  std::vector<double> s_grid_;  // s at uniform theta, for inversion brackets
};

}  // namespace birkhoff
