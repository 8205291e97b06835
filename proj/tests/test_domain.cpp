#include <doctest.h>

#include <cmath>
#include <complex>

#include "birkhoff/domain.hpp"
#include "birkhoff/numerics.hpp"
#include "test_util.hpp"

using namespace birkhoff;

TEST_SUITE_BEGIN("domain");

namespace {

std::vector<DomainSpec> builtin_specs() {
  return {DomainSpec::disc(1.0), DomainSpec::disc(0.5), DomainSpec::disc(3.0),
          DomainSpec::ellipse(1.0, 1.2), DomainSpec::ellipse(1.0, 1.05),
          DomainSpec::fourier(1.0, {{2, 0.05, 0.0}}),
          DomainSpec::fourier(1.0, {{3, 0.02, 0.0}})};
}

}  // namespace

TEST_CASE("disc chart matches closed forms") {
  BoundaryChart chart(DomainSpec::disc(1.0));
  CHECK(chart.length() == doctest::Approx(kTwoPi).epsilon(1e-14));
  for (double s : {0.0, 0.7, 2.0, 5.5}) {
    CHECK(chart.arc_jet(s).rho == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(chart.tangent_angle(s) == doctest::Approx(s).epsilon(1e-13));
  }
  // s = pi is the far end of a diameter
  CHECK(std::abs(chart.point(kPi) - chart.point(0.0)) ==
        doctest::Approx(2.0).epsilon(1e-13));
  // disc of radius 2: constant jet (2, 0, 0, 0)
  BoundaryChart chart2(DomainSpec::disc(2.0));
  const CurvatureJet j = chart2.arc_jet(1.234);
  CHECK(j.rho == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(j.d1) < 1e-13);
  CHECK(std::abs(j.d2) < 1e-13);
  CHECK(std::abs(j.d3) < 1e-13);
}

TEST_CASE("pure harmonics do not change the perimeter") {
  BoundaryChart chart(DomainSpec::fourier(1.0, {{2, 0.1, 0.0}}));
  CHECK(chart.length() == doctest::Approx(kTwoPi).epsilon(1e-14));
}

TEST_CASE("gauss-bonnet, closure and convexity on built-in specs") {
  for (const auto& spec : builtin_specs()) {
    CAPTURE(spec.describe());
    BoundaryChart chart(spec);
    const double gb = integrate(
        [&](double s) { return 1.0 / chart.arc_jet(s).rho; }, 0.0,
        chart.length(), 1e-13, 1e-13);
    CHECK(std::abs(gb - kTwoPi) < 1e-10);
    CHECK(std::abs(chart.point(chart.length()) - chart.point(0.0)) < 1e-10);
    CHECK(chart.tangent_angle(chart.length()) ==
          doctest::Approx(kTwoPi).epsilon(1e-12));
    for (int i = 0; i < 10000; ++i)
      CHECK(chart.arc_jet(chart.length() * i / 10000.0).rho > 0.0);
  }
}

TEST_CASE("unit speed") {
  BoundaryChart chart(DomainSpec::ellipse(1.0, 1.2));
  for (int i = 0; i < 20; ++i) {
    const double s = testutil::uniform(0.0, chart.length());
    for (double h : {1e-3, 1e-4}) {
      const double chord = std::abs(chart.point(s + h) - chart.point(s));
      CHECK(std::abs(chord - h) <= 0.2 * h * h * h);
    }
  }
}

TEST_CASE("anchor at the origin with horizontal tangent") {
  for (const auto& spec : builtin_specs()) {
    BoundaryChart chart(spec);
    CHECK(std::abs(chart.point(0.0)) < 1e-13);
    CHECK(std::abs(chart.tangent_angle(0.0)) < 1e-13);
    // interior above: the point a quarter around has positive imaginary part
    CHECK(chart.point(chart.length() / 4).imag() > 0.0);
    // s interpreted mod the length
    CHECK(std::abs(chart.point(chart.length()) - chart.point(0.0)) < 1e-12);
  }
}

TEST_CASE("unit-speed derivative at five points") {
  BoundaryChart chart(DomainSpec::ellipse(1.0, 1.2));
  for (int i = 1; i <= 5; ++i) {
    const double s = chart.length() * i / 6.0;
    double prev_err = 1.0;
    for (double h : {1e-2, 1e-3}) {
      const double speed = std::abs(chart.point(s + h) - chart.point(s)) / h;
      const double err = std::abs(speed - 1.0);
      CHECK(err < 0.2 * h * h);
      if (h == 1e-3) CHECK(err < prev_err);  // second order in h
      prev_err = err;
    }
  }
}

TEST_CASE("theta <-> s round trips") {
  for (const auto& spec : builtin_specs()) {
    BoundaryChart chart(spec);
    for (int i = 0; i <= 64; ++i) {
      const double th = kTwoPi * i / 64.0;
      CHECK(std::abs(chart.theta_of_s(chart.s_of_theta(th)) - th) < 1e-12);
      const double s = chart.length() * i / 64.0;
      CHECK(std::abs(chart.s_of_theta(chart.theta_of_s(s)) - s) < 1e-12);
    }
  }
}

TEST_CASE("curvature jet matches finite differences on the ellipse") {
  BoundaryChart chart(DomainSpec::ellipse(1.0, 1.2));
  const double s = 0.3;
  const CurvatureJet j = chart.arc_jet(s);
  const auto rho = [&](double t) { return chart.arc_jet(t).rho; };

  const double h1 = 1e-5;
  const double fd1 = (rho(s + h1) - rho(s - h1)) / (2 * h1);
  CHECK(std::abs(fd1 - j.d1) < 1e-6 * std::abs(j.d1));

  const double h2 = 1e-4;
  const double fd2 = (rho(s + h2) - 2 * rho(s) + rho(s - h2)) / (h2 * h2);
  CHECK(std::abs(fd2 - j.d2) < 1e-6 * std::abs(j.d2));

  const auto fd3_at = [&](double h) {
    return (rho(s + 2 * h) - 2 * rho(s + h) + 2 * rho(s - h) -
            rho(s - 2 * h)) /
           (2 * h * h * h);
  };
  const double fd3 = (4 * fd3_at(5e-3) - fd3_at(1e-2)) / 3.0;
  CHECK(std::abs(fd3 - j.d3) < 1e-6 * std::abs(j.d3));
}

TEST_CASE("cosine harmonic has flat curvature at the anchor") {
  BoundaryChart chart(DomainSpec::fourier(1.0, {{2, 0.1, 0.0}}));
  CHECK(std::abs(chart.arc_jet(0.0).d1) < 1e-13);
}

TEST_CASE("ellipse with equal axes reduces to the disc") {
  BoundaryChart e(DomainSpec::ellipse(1.0, 1.0));
  BoundaryChart d(DomainSpec::disc(1.0));
  CHECK(e.length() == doctest::Approx(d.length()).epsilon(1e-13));
  for (double s : {0.3, 2.2, 5.0})
    CHECK(e.arc_jet(s).rho == doctest::Approx(d.arc_jet(s).rho).epsilon(1e-13));
}

TEST_CASE("random convex fourier domains satisfy every chart invariant") {
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<DomainSpec::Harmonic> harmonics;
    for (int k = 2; k <= 5; ++k)
      harmonics.push_back({k, testutil::uniform(-0.02, 0.02),
                           testutil::uniform(-0.02, 0.02)});
    const DomainSpec spec = DomainSpec::fourier(
        testutil::uniform(0.8, 1.5), harmonics);
    CAPTURE(spec.describe());
    BoundaryChart chart(spec);
    const double gb = integrate(
        [&](double s) { return 1.0 / chart.arc_jet(s).rho; }, 0.0,
        chart.length(), 1e-13, 1e-13);
    CHECK(std::abs(gb - kTwoPi) < 1e-10);
    CHECK(std::abs(chart.point(chart.length()) - chart.point(0.0)) < 1e-10);
    for (int i = 0; i < 8; ++i) {
      const double s = testutil::uniform(0.0, chart.length());
      const double h = 1e-4;
      CHECK(std::abs(std::abs(chart.point(s + h) - chart.point(s)) - h) <
            1e-10);
      CHECK(std::abs(chart.s_of_theta(chart.theta_of_s(s)) - s) < 1e-11);
    }
  }
}

TEST_CASE("wide dynamic range and skew harmonics stay within tolerances") {
  // eccentric boundaries push the spectral tail near the roundoff floor;
  // construction must still converge and meet the geometric invariants
  for (const auto& spec : {DomainSpec::ellipse(1.0, 3.0),
                           DomainSpec::fourier(1.0, {{2, 0.03, 0.03}})}) {
    CAPTURE(spec.describe());
    BoundaryChart chart(spec);
    const double gb = integrate(
        [&](double s) { return 1.0 / chart.arc_jet(s).rho; }, 0.0,
        chart.length(), 1e-13, 1e-13);
    CHECK(std::abs(gb - kTwoPi) < 1e-10);
    CHECK(std::abs(chart.point(chart.length()) - chart.point(0.0)) < 1e-10);
    for (int i = 0; i <= 32; ++i) {
      const double s = chart.length() * i / 32.0;
      CHECK(std::abs(chart.s_of_theta(chart.theta_of_s(s)) - s) < 1e-11);
    }
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(DomainSpec::disc(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::disc(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::ellipse(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::fourier(1.0, {{1, 0.1, 0.0}}),
                  std::invalid_argument);
  // rho dips below zero: reported with the violating angle
  CHECK_THROWS_WITH_AS(DomainSpec::fourier(1.0, {{2, 1.5, 0.0}}),
                       doctest::Contains("non-positive at theta"),
                       std::invalid_argument);
}

TEST_SUITE_END();
