#include <doctest.h>

#include <cmath>

#include "birkhoff/billiard_map.hpp"
#include "birkhoff/normal_form.hpp"
#include "birkhoff/numerics.hpp"
#include "test_util.hpp"

using namespace birkhoff;

TEST_SUITE_BEGIN("normal_form");

namespace {

NormalForm make(const DomainSpec& spec) {
  return NormalForm{LazutkinChart{BoundaryChart{spec}}};
}

}  // namespace

TEST_CASE("discs have vanishing x1 and shift") {
  for (double r : {0.5, 1.0, 3.0}) {
    const NormalForm nf = make(DomainSpec::disc(r));
    const auto verdict = nf.disc_test(1e-10);
    CAPTURE(r);
    CHECK(verdict.is_disc);
    CHECK(verdict.sup_x1 < 1e-10);
    for (double xi : {0.0, 0.3, 0.77}) {
      CHECK(std::abs(nf.a(xi)) < 1e-12);
      CHECK(std::abs(nf.a_prime(xi)) < 1e-12);
      CHECK(std::abs(nf.ode_residual(xi)) < 1e-13);
    }
  }
}

TEST_CASE("disc classical coefficients") {
  const NormalForm nf = make(DomainSpec::disc(1.0));
  const auto c = nf.classical_coefficients(0.4);
  CHECK(c.alpha3 == doctest::Approx(kPi * kPi / 24.0).epsilon(1e-12));
  CHECK(std::abs(c.alpha4) < 1e-13);
  CHECK(std::abs(c.beta4) < 1e-13);
}

TEST_CASE("non-circular domains are detected") {
  for (const auto& spec :
       {DomainSpec::ellipse(1.0, 1.05), DomainSpec::ellipse(1.0, 1.2),
        DomainSpec::fourier(1.0, {{2, 0.05, 0.0}}),
        DomainSpec::fourier(1.0, {{3, 0.02, 0.0}})}) {
    const NormalForm nf = make(spec);
    const auto verdict = nf.disc_test(1e-10);
    CAPTURE(spec.describe());
    CHECK_FALSE(verdict.is_disc);
    CHECK(verdict.sup_x1 > 1e-4);
    // X1 and the shift vanish together or not at all
    double sup_a = 0.0;
    for (int i = 0; i < 256; ++i)
      sup_a = std::max(sup_a, std::abs(nf.a(i / 256.0)));
    CHECK(sup_a > 1e-5);
    MESSAGE(spec.describe(), " sup|X1| = ", verdict.sup_x1);
  }
}

TEST_CASE("normalizations: x1(0) = 0, x1 periodic, a(0) = 0, a(1) = 0") {
  for (const auto& spec :
       {DomainSpec::ellipse(1.0, 1.2), DomainSpec::fourier(1.0, {{2, 0.05, 0.0}})}) {
    const NormalForm nf = make(spec);
    const double len = nf.lazutkin().boundary().length();
    CHECK(std::abs(nf.x1(0.0)) < 1e-14);
    CHECK(std::abs(nf.x1(len)) < 1e-9);
    CHECK(std::abs(nf.a(0.0)) < 1e-14);
    CHECK(std::abs(nf.a(1.0)) < 1e-9);
  }
}

TEST_CASE("x1 agrees with the shift route") {
  // X1(s) = -Y0(s)^2 A(X0(s)): the integral route and the shift route use
  // different pulled-back integrands
  const NormalForm nf = make(DomainSpec::ellipse(1.0, 1.2));
  const auto& lc = nf.lazutkin();
  const double len = lc.boundary().length();
  for (int i = 1; i < 16; ++i) {
    const double s = len * i / 16.0;
    const double y0 = lc.y0_of_s(s);
    const double via_a = -y0 * y0 * nf.a(lc.x0(s));
    const double direct = nf.x1(s);
    CHECK(std::abs(direct - via_a) < 1e-6 * std::max(1e-6, std::abs(direct)));
  }
}

TEST_CASE("beta4 is minus half of alpha4") {
  for (const auto& spec :
       {DomainSpec::ellipse(1.0, 1.2), DomainSpec::fourier(1.0, {{3, 0.02, 0.0}})}) {
    const NormalForm nf = make(spec);
    for (int i = 0; i < 64; ++i) {
      const auto c = nf.classical_coefficients(i / 64.0);
      CHECK(std::abs(c.beta4 + c.alpha4 / 2.0) <
            1e-12 * std::max(1.0, std::abs(c.beta4)));
    }
  }
}

TEST_CASE("a'' / 4 + beta4 = 0") {
  const NormalForm nf = make(DomainSpec::ellipse(1.0, 1.2));
  for (int i = 0; i < 64; ++i) {
    const double xi = i / 64.0;
    const auto c = nf.classical_coefficients(xi);
    const double lhs = nf.a_second(xi) / 4.0 + c.beta4;
    CHECK(std::abs(lhs) < 1e-8 * std::max(1e-3, std::abs(c.beta4)));
  }
}

TEST_CASE("a'' by finite differences of the integral form") {
  const NormalForm nf = make(DomainSpec::ellipse(1.0, 1.2));
  for (double xi : {0.1, 0.35, 0.6}) {
    const double h = 1e-4;
    const double fd2 = (nf.a(xi + h) - 2 * nf.a(xi) + nf.a(xi - h)) / (h * h);
    CHECK(std::abs(fd2 - nf.a_second(xi)) <
          1e-5 * std::max(1.0, std::abs(nf.a_second(xi))));
    const double fd1 = (nf.a(xi + h) - nf.a(xi - h)) / (2 * h);
    CHECK(std::abs(fd1 - nf.a_prime(xi)) <
          1e-6 * std::max(1.0, std::abs(nf.a_prime(xi))));
  }
}

TEST_CASE("ode residual vanishes on non-disc domains") {
  for (const auto& spec :
       {DomainSpec::ellipse(1.0, 1.2), DomainSpec::fourier(1.0, {{2, 0.05, 0.0}})}) {
    const NormalForm nf = make(spec);
    for (int i = 0; i < 16; ++i)
      CHECK(std::abs(nf.ode_residual(i / 16.0)) < 1e-8);
  }
}

TEST_CASE("disc pseudocollision angles are exact") {
  const LazutkinChart lc{BoundaryChart{DomainSpec::disc(1.0)}};
  const AngularShift zero = AngularShift::zero();
  for (double xi : {0.0, 0.3}) {
    const double eta = 0.01;
    CHECK(phi_plus(lc, zero, xi, eta) ==
          doctest::Approx(kPi * eta).epsilon(1e-12));
    CHECK(phi_minus(lc, zero, xi, eta) ==
          doctest::Approx(kPi * eta).epsilon(1e-12));
    CHECK(std::abs(pseudocollision_defect(lc, zero, xi, eta)) < 1e-14);
  }
  const auto taylor = phi_taylor_numeric(lc, zero, 0.2);
  CHECK(std::abs(taylor.eta2) < 1e-10);
  CHECK(std::abs(taylor.eta4) < 1e-8);
}

TEST_CASE("phi4 numeric matches the closed form with zero shift") {
  const LazutkinChart lc{BoundaryChart{DomainSpec::ellipse(1.0, 1.2)}};
  const AngularShift zero = AngularShift::zero();
  for (int i = 0; i < 8; ++i) {
    const double xi = 0.2 + i / 16.0;
    const auto taylor = phi_taylor_numeric(lc, zero, xi);
    const double closed = phi4_closed_form(lc, 0.0, xi);
    CAPTURE(xi);
    CHECK(std::abs(taylor.eta2) < 1e-8);
    CHECK(std::abs(taylor.eta4 - closed) < 1e-5 * std::max(0.01, std::abs(closed)));
  }
}

TEST_CASE("the computed shift cancels the eta^4 angle defect") {
  const NormalForm nf = make(DomainSpec::ellipse(1.0, 1.2));
  const auto& lc = nf.lazutkin();
  const AngularShift shift = nf.shift();
  for (double xi : {0.1, 0.2, 0.45, 0.8}) {
    CAPTURE(xi);
    CHECK(std::abs(phi_taylor_numeric(lc, shift, xi).eta2) < 1e-8);
    CHECK(phi4_cancellation_residual(lc, shift, xi) < 1e-6);
  }
}

TEST_CASE("pseudocollision defect decay orders") {
  const NormalForm nf = make(DomainSpec::ellipse(1.0, 1.2));
  const auto& lc = nf.lazutkin();
  const double xi = 0.2;
  std::vector<double> etas{0.04, 0.0283, 0.02, 0.01414, 0.01};

  std::vector<double> d0;
  for (double e : etas)
    d0.push_back(std::abs(pseudocollision_defect(lc, AngularShift::zero(), xi, e)));
  const double slope0 = loglog_slope(etas, d0);
  CHECK(slope0 == doctest::Approx(4.0).epsilon(0.05));

  std::vector<double> d1;
  for (double e : etas)
    d1.push_back(std::abs(pseudocollision_defect(lc, nf.shift(), xi, e)));
  const double slope1 = loglog_slope(etas, d1);
  CHECK(slope1 == doctest::Approx(6.0).epsilon(0.05));

  // the defect over eta^6 stays bounded with the computed shift
  std::vector<double> ratios;
  for (double e : {0.02, 0.01, 0.005})
    ratios.push_back(
        std::abs(pseudocollision_defect(lc, nf.shift(), xi, e)) /
        std::pow(e, 6));
  for (double r : ratios) CHECK(r < 20.0 * ratios.front() + 1.0);
}

TEST_CASE("chord expansion: closed forms match the quadrature oracle") {
  const LazutkinChart lc{BoundaryChart{DomainSpec::ellipse(1.0, 1.3)}};
  const AngularShift zero = AngularShift::zero();
  const double xi = 0.37;
  const auto closed = chord_expansion_closed(lc, zero, xi);
  const auto oracle = chord_expansion_numeric(lc, zero, xi);
  for (int j = 0; j <= 5; ++j) {
    CAPTURE(j);
    CHECK(std::abs(closed.s_tilde[j] - oracle.s_tilde[j]) <
          1e-6 * std::max(0.5, std::abs(closed.s_tilde[j])));
  }
  for (int j = 0; j <= 4; ++j) {
    CAPTURE(j);
    CHECK(std::abs(closed.c_tilde[j] - oracle.c_tilde[j]) <
          1e-6 * std::max(0.5, std::abs(closed.c_tilde[j])));
  }
}

TEST_CASE("chord expansion with a non-trivial shift") {
  const NormalForm nf = make(DomainSpec::ellipse(1.0, 1.3));
  const auto& lc = nf.lazutkin();
  const AngularShift shift = nf.shift();
  for (double xi : {0.12, 0.61}) {
    const auto closed = chord_expansion_closed(lc, shift, xi);
    const auto oracle = chord_expansion_numeric(lc, shift, xi);
    CAPTURE(xi);
    for (int j = 0; j <= 5; ++j)
      CHECK(std::abs(closed.s_tilde[j] - oracle.s_tilde[j]) <
            1e-6 * std::max(0.5, std::abs(closed.s_tilde[j])));
    for (int j = 0; j <= 4; ++j)
      CHECK(std::abs(closed.c_tilde[j] - oracle.c_tilde[j]) <
            1e-6 * std::max(0.5, std::abs(closed.c_tilde[j])));
  }
}

TEST_CASE("chord expansion disc specialization") {
  const LazutkinChart lc{BoundaryChart{DomainSpec::disc(1.0)}};
  const auto e = chord_expansion_closed(lc, AngularShift::zero(), 0.3);
  CHECK(e.s_tilde[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.c_tilde[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(e.s_tilde[3]) < 1e-12);
  CHECK(std::abs(e.c_tilde[2]) < 1e-12);
  CHECK(e.s_tilde[4] == doctest::Approx(-kPi * kPi / 6.0).epsilon(1e-12));
  const auto o = chord_expansion_numeric(lc, AngularShift::zero(), 0.3);
  CHECK(std::abs(o.s_tilde[2] - 0.5) < 1e-10);
  CHECK(std::abs(o.c_tilde[1] - 1.0) < 1e-10);
  CHECK(std::abs(o.s_tilde[3]) < 1e-8);
  CHECK(std::abs(o.c_tilde[2]) < 1e-8);
}

TEST_CASE("classical coefficients match the iterated map") {
  // independent dynamical oracle: express one bounce in the coordinates
  // x = X0(s), y = 4 C_L rho^{1/3} sin(phi/2) and extract the cubic and
  // quartic corrections of x' - x and y' - y from a ladder in y
  const DomainSpec spec = DomainSpec::ellipse(1.0, 1.2);
  BoundaryChart chart{spec};
  const LazutkinChart lc{chart};
  const NormalForm nf{lc};
  const double cl = lc.lazutkin_constant();

  const auto y_of = [&](double s, double phi) {
    return 4.0 * cl * std::cbrt(chart.arc_jet(s).rho) * std::sin(phi / 2);
  };
  const auto map_once = [&](double x, double y) {
    const double s = lc.x0_inverse(x);
    const double rho13 = std::cbrt(chart.arc_jet(s).rho);
    const double phi = 2.0 * std::asin(y / (4.0 * cl * rho13));
    const PhaseState next = billiard_step(chart, {s, phi});
    // lift the image coordinate next to x
    double x_next = lc.x0(next.s);
    while (x_next < x) x_next += 1.0;
    return std::pair<double, double>{x_next, y_of(next.s, next.phi)};
  };

  for (double x : {0.13, 0.31, 0.72}) {
    std::vector<double> ys, dx, dy;
    double y = 0.08;
    for (int k = 0; k < 10; ++k, y *= 0.75) {
      const auto [xn, yn] = map_once(x, y);
      ys.push_back(y);
      dx.push_back(xn - x);
      dy.push_back(yn - y);
    }
    const auto cx = fit_power_coefficients(ys, dx);
    const auto cy = fit_power_coefficients(ys, dy);
    const auto expected = nf.classical_coefficients(x);
    CAPTURE(x);
    CHECK(cx[0] == doctest::Approx(1.0).epsilon(1e-8));  // x' = x + y + ...
    CHECK(std::abs(cx[1]) < 1e-7);                       // no quadratic term
    CHECK(cx[2] == doctest::Approx(expected.alpha3).epsilon(1e-5));
    CHECK(cx[3] == doctest::Approx(expected.alpha4).epsilon(5e-4));
    CHECK(std::abs(cy[0]) < 1e-8);
    CHECK(std::abs(cy[1]) < 1e-7);
    CHECK(std::abs(cy[2]) < 5e-5);
    CHECK(cy[3] == doctest::Approx(expected.beta4).epsilon(2e-3));
  }
}

TEST_CASE("measured angle matches the series prediction at small eta") {
  const LazutkinChart lc{BoundaryChart{DomainSpec::ellipse(1.0, 1.2)}};
  const AngularShift zero = AngularShift::zero();
  const double xi = 0.3, eta = 0.01;
  const auto e = chord_expansion_closed(lc, zero, xi);
  const double rho = lc.rho_l(xi);
  const double cl = lc.lazutkin_constant();
  double num = 0.0, den = 0.0, pow_eta = 1.0;
  for (int j = 0; j <= 5; ++j) {
    num += (std::cbrt(rho) / (cl * cl)) * e.s_tilde[j] * pow_eta;
    if (j <= 4) den += (std::pow(rho, 2.0 / 3.0) / cl) * e.c_tilde[j] * pow_eta;
    pow_eta *= eta;
  }
  const double predicted = std::atan(num / den);
  const double measured = phi_plus(lc, zero, xi, eta);
  CHECK(std::abs(predicted - measured) < 1e-6 * measured);
}

TEST_SUITE_END();
