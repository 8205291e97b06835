#include "birkhoff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "birkhoff/billiard_map.hpp"
#include "birkhoff/io.hpp"
#include "birkhoff/lazutkin.hpp"
#include "birkhoff/normal_form.hpp"
#include "birkhoff/numerics.hpp"
#include "birkhoff/orbits.hpp"
#include "birkhoff/pendulum.hpp"

namespace birkhoff {

namespace {

CheckResult check(std::string name, double value, double bound,
                  std::string note = "") {
  CheckResult r;
  r.name = std::move(name);
  r.value = value;
  r.bound = bound;
  r.pass = value < bound;
  r.note = std::move(note);
  return r;
}

double circle_dist(double a, double b, double len) {
  double d = std::fmod(std::abs(a - b), len);
  return std::min(d, len - d);
}

double sup_x1_grid(const NormalForm& nf, int grid = 2048) {
  const double len = nf.lazutkin().boundary().length();
  double sup = 0.0;
  for (int i = 0; i < grid; ++i)
    sup = std::max(sup, std::abs(nf.x1(len * i / grid)));
  return sup;
}

double gauss_bonnet_residual(const BoundaryChart& chart) {
  const double v = integrate(
      [&](double s) { return 1.0 / chart.arc_jet(s).rho; }, 0.0,
      chart.length(), 1e-13, 1e-13);
  return std::abs(v - kTwoPi);
}

double unit_speed_residual(const BoundaryChart& chart) {
  double worst = 0.0;
  const double h = 1e-4;
  for (int i = 0; i < 16; ++i) {
    const double s = chart.length() * (i + 0.37) / 16.0;
    const double chord = std::abs(chart.point(s + h) - chart.point(s));
    worst = std::max(worst, std::abs(chord - h));
  }
  return worst;
}

double x0_roundtrip_residual(const LazutkinChart& lc) {
  double worst = 0.0;
  const double len = lc.boundary().length();
  for (int i = 0; i <= 96; ++i) {
    const double s = len * i / 96.0;
    worst = std::max(worst, std::abs(lc.x0_inverse(lc.x0(s)) - s));
    const double x = static_cast<double>(i) / 96.0;
    worst = std::max(worst, std::abs(lc.x0(lc.x0_inverse(x)) - x));
  }
  return worst;
}

double reversor_residual(const BoundaryChart& chart, int n_states) {
  std::mt19937 gen(7771u);
  std::uniform_real_distribution<double> us(0.0, chart.length());
  std::uniform_real_distribution<double> uphi(0.05, kPi - 0.05);
  double worst = 0.0;
  for (int i = 0; i < n_states; ++i) {
    const PhaseState x{us(gen), uphi(gen)};
    // f J f J = Id
    PhaseState z = billiard_step(chart, x);
    z = PhaseState{z.s, kPi - z.phi};
    z = billiard_step(chart, z);
    z = PhaseState{z.s, kPi - z.phi};
    worst = std::max(worst, circle_dist(z.s, x.s, chart.length()));
    worst = std::max(worst, std::abs(z.phi - x.phi));
  }
  return worst;
}

double disc_map_residual(const BoundaryChart& chart) {
  const double r = chart.spec().radius();
  const double len = chart.length();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    for (int j = 1; j <= 50; ++j) {
      const double s = len * i / 50.0;
      const double phi = kPi * j / 51.0;
      const PhaseState out = billiard_step(chart, {s, phi});
      worst = std::max(worst, circle_dist(out.s, s + 2 * r * phi, len));
      worst = std::max(worst, std::abs(out.phi - phi));
    }
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> domain_check_battery(const DomainSpec& spec,
                                              const VerifyOptions& options) {
  std::vector<CheckResult> out;
  BoundaryChart chart(spec);
  LazutkinChart lc(chart);
  NormalForm nf(lc);

  out.push_back(check("gauss-bonnet residual", gauss_bonnet_residual(chart),
                      1e-10));
  out.push_back(check("boundary closure",
                      std::abs(chart.point(chart.length()) - chart.point(0.0)),
                      1e-10));
  out.push_back(check("unit speed (h=1e-4)", unit_speed_residual(chart), 1e-10));
  double rho_min = 1e300;
  for (int i = 0; i < 10000; ++i)
    rho_min = std::min(rho_min, chart.arc_jet(chart.length() * i / 10000.0).rho);
  out.push_back(check("strict convexity (min rho > 0)", -rho_min, 0.0,
                      "min rho = " + std::to_string(rho_min)));
  out.push_back(check("x0 round trip", x0_roundtrip_residual(lc), 1e-10));

  {
    const double a = lc.c_bv_lazutkin_quadrature();
    const double b = lc.c_bv_arclength_quadrature();
    out.push_back(check("c_bv route agreement (relative)",
                        std::abs(a - b) / std::abs(b), 1e-8));
    const auto [i1, i2] = lc.marvizi_melrose();
    out.push_back(check("c_bv = I1 I2 / 72 (relative)",
                        std::abs(lc.c_bv() - i1 * i2 / 72.0) / lc.c_bv(),
                        1e-8));
    out.push_back(check("I1 = 1/C_L (relative)",
                        std::abs(i1 * lc.lazutkin_constant() - 1.0), 1e-10));
  }

  out.push_back(
      check("billiard reversor identity", reversor_residual(chart, 100), 1e-9));
  if (spec.kind() == DomainSpec::Kind::Disc)
    out.push_back(check("disc map closed form", disc_map_residual(chart), 1e-10));

  out.push_back(check("x1 periodicity |X1(L)|",
                      std::abs(nf.x1(chart.length())), 1e-9));
  out.push_back(check("shift periodicity |A(1)|", std::abs(nf.a(1.0)), 1e-9));
  {
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
      const auto c = nf.classical_coefficients(i / 64.0);
      worst = std::max(worst, std::abs(c.beta4 + c.alpha4 / 2.0));
    }
    out.push_back(check("beta4 + alpha4/2", worst, 1e-12));
  }
  {
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i < 64; ++i)
      scale = std::max(scale,
                       std::abs(nf.classical_coefficients(i / 64.0).beta4));
    for (int i = 0; i < 64; ++i) {
      const double xi = i / 64.0;
      const auto c = nf.classical_coefficients(xi);
      const double denom = std::max(std::abs(c.beta4), 1e-3 * scale);
      if (denom > 0)
        worst = std::max(worst,
                         std::abs(nf.a_second(xi) / 4.0 + c.beta4) / denom);
    }
    out.push_back(check("A''/4 + beta4 (relative)", worst, 1e-8));
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 16; ++i)
      worst = std::max(worst, std::abs(nf.ode_residual(i / 16.0)));
    out.push_back(check("shift ODE residual", worst, 1e-8));
  }
  {
    double worst = 0.0;
    const double len = chart.length();
    for (int i = 0; i < 16; ++i) {
      const double s = len * (i + 0.5) / 16.0;
      const double y0 = lc.y0_of_s(s);
      worst = std::max(worst,
                       std::abs(nf.x1(s) + y0 * y0 * nf.a(lc.x0(s))));
    }
    out.push_back(check("x1 = -Y0^2 A(X0) agreement", worst, 1e-9));
  }
  {
    const AngularShift zero = AngularShift::zero();
    double worst2 = 0.0, worst4 = 0.0, worst4a = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double xi = 0.11 + i / 4.0;
      const auto taylor = phi_taylor_numeric(lc, zero, xi);
      worst2 = std::max(worst2, std::abs(taylor.eta2));
      const double closed = phi4_closed_form(lc, 0.0, xi);
      worst4 = std::max(worst4, std::abs(taylor.eta4 - closed) /
                                    std::max(0.01, std::abs(closed)));
      // suppression relative to the uncompensated coefficient, so the bound
      // is meaningful on strongly eccentric domains as well
      worst4a = std::max(worst4a,
                         phi4_cancellation_residual(lc, nf.shift(), xi) /
                             std::max(0.01, std::abs(closed)));
    }
    out.push_back(check("phi_2 vanishes (numeric)", worst2, 1e-8));
    out.push_back(check("phi_4 closed form vs numeric (relative)", worst4,
                        1e-5));
    out.push_back(check("phi_4 suppression by the shift (relative)", worst4a,
                        1e-4));
  }
  {
    const AngularShift zero = AngularShift::zero();
    double worst = 0.0;
    for (double xi : {0.23, 0.57}) {
      const auto closed = chord_expansion_closed(lc, zero, xi);
      const auto oracle = chord_expansion_numeric(lc, zero, xi);
      for (int j = 0; j <= 5; ++j)
        worst = std::max(worst,
                         std::abs(closed.s_tilde[j] - oracle.s_tilde[j]) /
                             std::max(0.5, std::abs(closed.s_tilde[j])));
      for (int j = 0; j <= 4; ++j)
        worst = std::max(worst,
                         std::abs(closed.c_tilde[j] - oracle.c_tilde[j]) /
                             std::max(0.5, std::abs(closed.c_tilde[j])));
    }
    out.push_back(check("chord expansion closed vs oracle (relative)", worst,
                        1e-6));
  }
  {
    const auto verdict = nf.disc_test(options.disc_tol);
    std::ostringstream note;
    note << (verdict.is_disc ? "IS A DISC" : "NOT A DISC") << " (sup|X1| = "
         << std::scientific << std::setprecision(3) << verdict.sup_x1 << ")";
    const bool expected_disc = spec.kind() == DomainSpec::Kind::Disc ||
                               (spec.kind() == DomainSpec::Kind::Ellipse &&
                                spec.semi_axis_a() == spec.semi_axis_b()) ||
                               (spec.kind() == DomainSpec::Kind::Fourier &&
                                spec.harmonics().empty());
    CheckResult r;
    r.name = "disc verdict consistent with the spec kind";
    r.value = verdict.sup_x1;
    r.bound = expected_disc ? options.disc_tol : 1e300;
    r.pass = verdict.is_disc == expected_disc;
    r.note = note.str();
    out.push_back(r);
    if (options.with_orbits && !verdict.is_disc) {
      try {
        const auto val = cross_validate_x1(nf, options.q_ladder);
        out.push_back(check("orbit alpha vs x1 (max relative deviation)",
                            val.max_rel_deviation, 1e-2));
        if (options.q_ladder.size() >= 3) {
          const bool ok = val.median_doubling_ratio > 3.0 &&
                          val.median_doubling_ratio < 5.0;
          CheckResult r2;
          r2.name = "alpha-hat doubling ratio in [3, 5]";
          r2.value = val.median_doubling_ratio;
          r2.bound = 5.0;
          r2.pass = ok;
          out.push_back(r2);
        }
      } catch (const std::exception& e) {
        // anchored orbits only exist when s = 0 sits on a symmetry axis;
        // report the stall instead of aborting the remaining checks
        CheckResult r2;
        r2.name = "orbit alpha vs x1";
        r2.value = 1e300;
        r2.bound = 1e-2;
        r2.pass = false;
        r2.note = e.what();
        out.push_back(r2);
      }
    }
  }
  return out;
}

std::vector<CheckResult> pendulum_check_battery() {
  namespace pn = pendulum;
  std::vector<CheckResult> out;
  {
    double worst_q = 0.0, worst_agree = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double e =
          std::exp(std::log(1e-4) +
                   (std::log(0.24) - std::log(1e-4)) * i / 19.0);
      worst_q = std::max(worst_q, std::abs(pn::theta_quadrature(e) - 4 * kPi));
      worst_agree = std::max(
          worst_agree,
          std::abs(pn::theta_by_integration(e) - pn::theta_quadrature(e)));
    }
    out.push_back(check("theta(E) = 4 pi (quadrature, 20 energies)", worst_q,
                        1e-8));
    out.push_back(check("theta routes agree (trajectory vs quadrature)",
                        worst_agree, 1e-7));
  }
  out.push_back(check("small-amplitude period vs pi sqrt(2)",
                      std::abs(pn::period_quadrature(1e-6) -
                               kPi * std::sqrt(2.0)),
                      1e-4));
  {
    const double e = 0.04;
    const auto traj = pn::integrate(e, pn::period_quadrature(e));
    double drift = 0.0;
    for (std::size_t i = 0; i < traj.tau.size(); ++i)
      drift = std::max(drift, std::abs(pn::hamiltonian(traj.zeta[i],
                                                       traj.zeta_dot[i]) -
                                       e));
    out.push_back(check("energy drift over one period (E = 0.04)", drift,
                        1e-9));
    out.push_back(check("period routes agree (E = 0.04)",
                        std::abs(pn::period_quadrature(e) -
                                 pn::period_by_integration(e)),
                        1e-8));
  }
  for (double e : {0.005, 0.02, 0.05}) {
    const auto curve = pn::gamma_curve(e, 1.0, 800);
    std::ostringstream name;
    name << "gamma curve E = " << e;
    out.push_back(check(name.str() + ": turning angle - 4 pi",
                        std::abs(curve.turning_angle - 4 * kPi), 1e-6));
    out.push_back(check(name.str() + ": closure gap above 1e-3",
                        1e-3 - curve.endpoint_gap, 0.0,
                        "gap = " + std::to_string(curve.endpoint_gap)));
  }
  return out;
}

std::vector<CheckResult> acceptance_criteria(const std::string& output_dir) {
  namespace pn = pendulum;
  std::vector<CheckResult> out;

  // 1. disc characterization, forward direction
  for (double r : {0.5, 1.0, 3.0}) {
    NormalForm nf{LazutkinChart{BoundaryChart{DomainSpec::disc(r)}}};
    std::ostringstream name;
    name << "1. disc r = " << r << ": sup|X1| below 1e-10";
    out.push_back(check(name.str(), sup_x1_grid(nf), 1e-10));
  }

  // 2. converse on sampled non-discs
  for (const auto& spec :
       {DomainSpec::ellipse(1.0, 1.05), DomainSpec::ellipse(1.0, 1.2),
        DomainSpec::fourier(1.0, {{2, 0.05, 0.0}}),
        DomainSpec::fourier(1.0, {{3, 0.02, 0.0}})}) {
    NormalForm nf{LazutkinChart{BoundaryChart{spec}}};
    const double sup = sup_x1_grid(nf);
    CheckResult r;
    r.name = "2. " + spec.describe() + ": sup|X1| above 1e-4";
    r.value = sup;
    r.bound = 1e-4;
    r.pass = sup > 1e-4;
    r.note = "non-disc detected";
    out.push_back(r);
  }

  // 3. theta(E) = 4 pi, both routes
  {
    double worst_q = 0.0, worst_agree = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double e = std::exp(
          std::log(1e-4) + (std::log(0.24) - std::log(1e-4)) * i / 19.0);
      const double tq = pn::theta_quadrature(e);
      worst_q = std::max(worst_q, std::abs(tq - 4 * kPi));
      worst_agree =
          std::max(worst_agree, std::abs(pn::theta_by_integration(e) - tq));
    }
    out.push_back(
        check("3. theta(E) = 4 pi over 20 log-spaced energies", worst_q, 1e-8));
    out.push_back(check("3. quadrature and trajectory routes agree",
                        worst_agree, 1e-7));
  }

  // 4. pendulum small-amplitude period and energy drift
  out.push_back(check("4. |T(1e-6) - pi sqrt(2)|",
                      std::abs(pn::period_quadrature(1e-6) -
                               kPi * std::sqrt(2.0)),
                      1e-4));
  {
    const auto traj = pn::integrate(0.04, pn::period_quadrature(0.04));
    double drift = 0.0;
    for (std::size_t i = 0; i < traj.tau.size(); ++i)
      drift = std::max(
          drift,
          std::abs(pn::hamiltonian(traj.zeta[i], traj.zeta_dot[i]) - 0.04));
    out.push_back(check("4. energy drift over one period (E = 0.04)", drift,
                        1e-9));
  }

  // 5. figure curves: 4 pi turning angle, open endpoints, svg emitted
  {
    std::filesystem::create_directories(output_dir);
    for (double e : {0.005, 0.02, 0.05}) {
      const auto curve = pn::gamma_curve(e, 1.0, 1200);
      std::ostringstream name;
      name << "5. gamma E = " << e;
      out.push_back(check(name.str() + ": |turning angle - 4 pi|",
                          std::abs(curve.turning_angle - 4 * kPi), 1e-6));
      CheckResult gap;
      gap.name = name.str() + ": endpoint gap above 1e-3";
      gap.value = curve.endpoint_gap;
      gap.bound = 1e-3;
      gap.pass = curve.endpoint_gap > 1e-3;
      std::ostringstream file;
      file << output_dir << "/gamma_E" << e << ".svg";
      SvgOptions opt;
      std::ostringstream cap;
      cap << "non-closing curve, E = " << e << ", turning angle 4 pi, "
          << curve.polyline_self_intersections << " polyline self-crossings";
      opt.caption = cap.str();
      write_file(file.str(), render_svg_polyline(curve.points, opt));
      gap.note = "svg: " + file.str();
      out.push_back(gap);
    }
  }

  // 6. classical coefficient identities on ellipse{1, 1.2}
  {
    NormalForm nf{LazutkinChart{BoundaryChart{DomainSpec::ellipse(1.0, 1.2)}}};
    double worst_half = 0.0, worst_ode = 0.0, scale = 0.0;
    for (int i = 0; i < 64; ++i)
      scale = std::max(scale,
                       std::abs(nf.classical_coefficients(i / 64.0).beta4));
    for (int i = 0; i < 64; ++i) {
      const double xi = i / 64.0;
      const auto c = nf.classical_coefficients(xi);
      worst_half = std::max(worst_half, std::abs(c.beta4 + c.alpha4 / 2.0));
      const double denom = std::max(std::abs(c.beta4), 1e-3 * scale);
      worst_ode = std::max(worst_ode,
                           std::abs(nf.a_second(xi) / 4.0 + c.beta4) / denom);
    }
    out.push_back(check("6. beta4 = -alpha4/2 at 64 points", worst_half,
                        1e-12));
    out.push_back(check("6. A''/4 + beta4 = 0 (relative) at 64 points",
                        worst_ode, 1e-8));
  }

  // 7. chord expansion coefficients on ellipse{1, 1.3}
  {
    LazutkinChart lc{BoundaryChart{DomainSpec::ellipse(1.0, 1.3)}};
    const AngularShift zero = AngularShift::zero();
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double xi = (i + 0.5) / 8.0;
      const auto closed = chord_expansion_closed(lc, zero, xi);
      const auto oracle = chord_expansion_numeric(lc, zero, xi);
      for (int j = 2; j <= 5; ++j)
        worst = std::max(worst,
                         std::abs(closed.s_tilde[j] - oracle.s_tilde[j]) /
                             std::max(0.5, std::abs(closed.s_tilde[j])));
      for (int j = 1; j <= 4; ++j)
        worst = std::max(worst,
                         std::abs(closed.c_tilde[j] - oracle.c_tilde[j]) /
                             std::max(0.5, std::abs(closed.c_tilde[j])));
    }
    out.push_back(check(
        "7. chord coefficients closed vs oracle at 8 points (relative)", worst,
        1e-6));
    LazutkinChart disc{BoundaryChart{DomainSpec::disc(1.0)}};
    const auto e = chord_expansion_closed(disc, zero, 0.3);
    const double special =
        std::max({std::abs(e.s_tilde[2] - 0.5), std::abs(e.c_tilde[1] - 1.0),
                  std::abs(e.s_tilde[3]), std::abs(e.c_tilde[2])});
    out.push_back(check("7. disc specialization of the chord coefficients",
                        special, 1e-12));
  }

  // 8. angle expansion: phi_2 = 0, phi_4 closed form, cancellation, order 6
  {
    NormalForm nf{LazutkinChart{BoundaryChart{DomainSpec::ellipse(1.0, 1.2)}}};
    const auto& lc = nf.lazutkin();
    const AngularShift zero = AngularShift::zero();
    double worst2 = 0.0, worst4 = 0.0, worst4a = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double xi = (i + 0.5) / 8.0;
      const auto taylor = phi_taylor_numeric(lc, zero, xi);
      worst2 = std::max(worst2, std::abs(taylor.eta2));
      const double closed = phi4_closed_form(lc, 0.0, xi);
      worst4 = std::max(worst4, std::abs(taylor.eta4 - closed) /
                                    std::max(0.01, std::abs(closed)));
      worst4a = std::max(worst4a,
                         phi4_cancellation_residual(lc, nf.shift(), xi));
    }
    out.push_back(check("8. numeric phi_2 coefficient", worst2, 1e-8));
    out.push_back(check("8. phi_4 closed form vs numeric (relative)", worst4,
                        1e-5));
    out.push_back(check("8. phi_4 with the computed shift", worst4a, 1e-6));
    std::vector<double> etas{0.04, 0.0283, 0.02, 0.01414, 0.01};
    std::vector<double> defects;
    for (double eta : etas)
      defects.push_back(
          std::abs(pseudocollision_defect(lc, nf.shift(), 0.2, eta)));
    const double slope = loglog_slope(etas, defects);
    CheckResult r;
    r.name = "8. pseudocollision defect log-log slope in 6 +/- 0.3";
    r.value = slope;
    r.bound = 6.3;
    r.pass = slope > 5.7 && slope < 6.3;
    out.push_back(r);
  }

  // 9. billiard map oracles
  {
    BoundaryChart disc{DomainSpec::disc(1.0)};
    out.push_back(check("9. disc map closed form on a 50x50 grid",
                        disc_map_residual(disc), 1e-10));
    BoundaryChart ell{DomainSpec::ellipse(1.0, 1.2)};
    out.push_back(check("9. reversor identity on 100 random states",
                        reversor_residual(ell, 100), 1e-9));
  }

  // 10. orbit distribution
  {
    NormalForm nf{LazutkinChart{BoundaryChart{DomainSpec::ellipse(1.0, 1.2)}}};
    const auto val = cross_validate_x1(nf, {32, 64, 128});
    CheckResult ratio;
    ratio.name = "10. alpha-hat per-doubling ratio in [3, 5]";
    ratio.value = val.median_doubling_ratio;
    ratio.bound = 5.0;
    ratio.pass =
        val.median_doubling_ratio > 3.0 && val.median_doubling_ratio < 5.0;
    out.push_back(ratio);
    out.push_back(check("10. -alpha(X0) Y0^2 vs X1 (max relative deviation)",
                        val.max_rel_deviation, 1e-2));
  }

  // 11. geometry invariants on every built-in spec
  {
    double gb = 0.0, closure = 0.0, speed = 0.0, roundtrip = 0.0;
    for (const auto& spec :
         {DomainSpec::disc(0.5), DomainSpec::disc(1.0), DomainSpec::disc(3.0),
          DomainSpec::ellipse(1.0, 1.05), DomainSpec::ellipse(1.0, 1.2),
          DomainSpec::ellipse(1.0, 1.3),
          DomainSpec::fourier(1.0, {{2, 0.05, 0.0}}),
          DomainSpec::fourier(1.0, {{3, 0.02, 0.0}})}) {
      BoundaryChart chart(spec);
      LazutkinChart lc(chart);
      gb = std::max(gb, gauss_bonnet_residual(chart));
      closure = std::max(
          closure, std::abs(chart.point(chart.length()) - chart.point(0.0)));
      speed = std::max(speed, unit_speed_residual(chart));
      roundtrip = std::max(roundtrip, x0_roundtrip_residual(lc));
    }
    out.push_back(check("11. gauss-bonnet residual (all specs)", gb, 1e-10));
    out.push_back(check("11. closure residual (all specs)", closure, 1e-10));
    out.push_back(check("11. unit-speed residual (all specs)", speed, 1e-10));
    out.push_back(check("11. x0 round-trip residual (all specs)", roundtrip,
                        1e-10));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void print_check_table(std::ostream& out,
                       const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": value "
        << std::scientific << std::setprecision(3) << c.value;
    if (c.bound < 1e299) out << " vs bound " << c.bound;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n" << std::defaultfloat;
  }
}

}  // namespace birkhoff
