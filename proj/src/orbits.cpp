#include "birkhoff/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <stdexcept>

#include "birkhoff/numerics.hpp"

namespace birkhoff {

namespace {

struct VertexData {
  std::vector<std::complex<double>> z;
  std::vector<double> theta;  // lifted tangent angles
  std::vector<double> rho;
  std::vector<double> chord;     // |z_{k+1} - z_k|, cyclic
  std::vector<double> phi_out;   // chord k direction minus tangent at k
  std::vector<double> phi_in;    // tangent at k+1 minus chord k direction
};

// geometry of the closed polygon through s[0..q-1] (s ascending, wrap by L)
VertexData polygon_geometry(const BoundaryChart& chart,
                            const std::vector<double>& s) {
  const int q = static_cast<int>(s.size());
  VertexData v;
  v.z.resize(q);
  v.theta.resize(q);
  v.rho.resize(q);
  v.chord.resize(q);
  v.phi_out.resize(q);
  v.phi_in.resize(q);
  for (int k = 0; k < q; ++k) {
    v.z[k] = chart.point(s[k]);
    v.theta[k] = chart.tangent_angle(s[k]);
    v.rho[k] = chart.arc_jet(s[k]).rho;
  }
  for (int k = 0; k < q; ++k) {
    const int k1 = (k + 1) % q;
    const std::complex<double> w = v.z[k1] - v.z[k];
    v.chord[k] = std::abs(w);
    const double sigma = std::arg(w);
    auto wrap = [](double a) {
      a = std::fmod(a, kTwoPi);
      if (a < 0) a += kTwoPi;
      return a;
    };
    v.phi_out[k] = wrap(sigma - v.theta[k]);
    v.phi_in[k1] = wrap(v.theta[k1] - sigma);
  }
  return v;
}

bool ordered(const std::vector<double>& s, double len) {
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    if (!(s[k] < s[k + 1])) return false;
  return s.back() - s.front() < len;
}

double max_residual(const VertexData& v) {
  double r = 0.0;
  for (std::size_t k = 0; k < v.phi_in.size(); ++k)
    r = std::max(r, std::abs(v.phi_in[k] - v.phi_out[k]));
  return r;
}

double perimeter_of(const BoundaryChart& chart, const std::vector<double>& s) {
  double p = 0.0;
  const int q = static_cast<int>(s.size());
  for (int k = 0; k < q; ++k)
    p += std::abs(chart.point(s[(k + 1) % q]) - chart.point(s[k]));
  return p;
}

}  // namespace

PeriodicOrbit find_orbit(const LazutkinChart& lc, int q, double anchor) {
  if (q < 3) throw std::invalid_argument("orbit period must be >= 3");
  const BoundaryChart& chart = lc.boundary();
  const double len = chart.length();
  const double s0 = anchor;
  const double x_base = lc.x0(s0);

  std::vector<double> s(q);
  for (int k = 0; k < q; ++k)
    s[k] = lc.x0_inverse(x_base + static_cast<double>(k) / q);

  // gradient of the perimeter in the free vertices and the tridiagonal
  // Hessian blocks; vertex 0 stays anchored
  const auto gradient = [&](const VertexData& v, std::vector<double>& g) {
    for (int k = 1; k < q; ++k)
      g[k - 1] = std::cos(v.phi_in[k]) - std::cos(v.phi_out[k]);
  };

  const auto newton_sweep = [&](std::vector<double>& cur) -> double {
    VertexData v = polygon_geometry(chart, cur);
    std::vector<double> g(q - 1);
    gradient(v, g);
    std::vector<double> diag(q - 1), sub(q - 2), sup(q - 2);
    for (int k = 1; k < q; ++k) {
      const double si = std::sin(v.phi_in[k]), so = std::sin(v.phi_out[k]);
      diag[k - 1] = si * si / v.chord[k - 1] + so * so / v.chord[k] -
                    (si + so) / v.rho[k];
      if (k < q - 1) {
        const double coupling =
            std::sin(v.phi_out[k]) * std::sin(v.phi_in[k + 1]) / v.chord[k];
        sup[k - 1] = coupling;
        sub[k - 1] = coupling;
      }
    }
    std::vector<double> rhs(q - 1);
    for (int k = 0; k < q - 1; ++k) rhs[k] = -g[k];
    const auto delta = solve_tridiagonal(sub, diag, sup, rhs);
    double alpha = 1.0;
    const double res_before = max_residual(v);
    for (int halving = 0; halving < 40; ++halving, alpha *= 0.5) {
      std::vector<double> trial = cur;
      for (int k = 1; k < q; ++k) trial[k] += alpha * delta[k - 1];
      if (!ordered(trial, len)) continue;
      const VertexData tv = polygon_geometry(chart, trial);
      if (max_residual(tv) < res_before || alpha < 1e-6) {
        cur = trial;
        return max_residual(tv);
      }
    }
    return res_before;  // no progress
  };

  const auto ascent_sweeps = [&](std::vector<double>& cur, int sweeps) {
    for (int pass = 0; pass < sweeps; ++pass) {
      for (int k = 1; k < q; ++k) {
        VertexData v = polygon_geometry(chart, cur);
        const double g = std::cos(v.phi_in[k]) - std::cos(v.phi_out[k]);
        const double si = std::sin(v.phi_in[k]), so = std::sin(v.phi_out[k]);
        const double h = si * si / v.chord[k - 1] +
                         so * so / v.chord[k % q] - (si + so) / v.rho[k];
        if (h >= 0.0) continue;
        double step = -g / h;
        const double lo = cur[k - 1], hi = k + 1 < q ? cur[k + 1] : s0 + len;
        double trial = cur[k] + step;
        if (trial <= lo || trial >= hi) trial = 0.5 * (lo + hi);
        cur[k] = trial;
      }
    }
  };

  if (q < 8) ascent_sweeps(s, 5);

  double residual = max_residual(polygon_geometry(chart, s));
  bool retried = false;
  for (int it = 0; it < 120; ++it) {
    residual = newton_sweep(s);
    if (residual < 1e-13) break;
    if (it == 60 && !retried) {
      // fall back to monotone coordinate ascent, then retry Newton
      ascent_sweeps(s, 5);
      retried = true;
    }
  }
  if (residual > 1e-10)
    throw std::runtime_error(
        "periodic orbit solver stalled at reflection residual " +
        std::to_string(residual) + " for q = " + std::to_string(q));

  // perimeter maximality: -H must be positive definite on the free vertices
  {
    VertexData v = polygon_geometry(chart, s);
    std::vector<double> diag(q - 1), sub(q - 2);
    for (int k = 1; k < q; ++k) {
      const double si = std::sin(v.phi_in[k]), so = std::sin(v.phi_out[k]);
      diag[k - 1] = -(si * si / v.chord[k - 1] + so * so / v.chord[k] -
                      (si + so) / v.rho[k]);
      if (k < q - 1)
        sub[k - 1] = -std::sin(v.phi_out[k]) * std::sin(v.phi_in[k + 1]) /
                     v.chord[k];
    }
    // LDL^T pivots of the tridiagonal matrix
    double pivot = diag[0];
    for (int k = 0; k < q - 1; ++k) {
      if (k > 0) pivot = diag[k] - sub[k - 1] * sub[k - 1] / pivot;
      if (!(pivot > 0.0))
        throw std::runtime_error(
            "converged orbit is not a perimeter maximum (q = " +
            std::to_string(q) + ")");
    }
  }

  PeriodicOrbit orbit;
  orbit.q = q;
  orbit.s = s;
  orbit.x.resize(q);
  for (int k = 0; k < q; ++k) orbit.x[k] = lc.x0(s[k]);
  orbit.perimeter = perimeter_of(chart, s);
  orbit.residual = residual;
  for (int k = 0; k + 1 < q; ++k)
    if (!(orbit.x[k] < orbit.x[k + 1]))
      throw std::runtime_error("orbit coordinates not increasing");
  if (!(orbit.x.back() < orbit.x.front() + 1.0))
    throw std::runtime_error("orbit does not wind exactly once");
  return orbit;
}

std::vector<std::pair<double, double>> extract_alpha(
    const PeriodicOrbit& orbit) {
  std::vector<std::pair<double, double>> out;
  out.reserve(orbit.q);
  const double q = orbit.q;
  for (int k = 0; k < orbit.q; ++k) {
    const double frac = k / q;
    out.emplace_back(frac, (orbit.x[k] - orbit.x[0] - frac) * q * q);
  }
  return out;
}

AlphaValidation cross_validate_x1(const NormalForm& nf,
                                  const std::vector<int>& qs) {
  if (qs.size() < 2)
    throw std::invalid_argument("need at least two q values");
  const LazutkinChart& lc = nf.lazutkin();

  std::vector<std::future<PeriodicOrbit>> futures;
  futures.reserve(qs.size());
  for (int q : qs)
    futures.push_back(std::async(std::launch::async,
                                 [&lc, q] { return find_orbit(lc, q, 0.0); }));
  std::vector<PeriodicOrbit> orbits;
  orbits.reserve(qs.size());
  for (auto& f : futures) orbits.push_back(f.get());

  const int q_min = qs.front();
  for (std::size_t i = 1; i < qs.size(); ++i)
    if (qs[i] % q_min != 0)
      throw std::invalid_argument("ladder q values must be multiples of q[0]");

  AlphaValidation val;
  val.qs = qs;
  val.alpha_hat.assign(qs.size(), {});
  for (int k = 0; k < q_min; ++k) {
    val.fractions.push_back(static_cast<double>(k) / q_min);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const auto& orbit = orbits[i];
      const int stride = qs[i] / q_min;
      const double frac = static_cast<double>(k) / q_min;
      const double alpha_hat =
          (orbit.x[k * stride] - orbit.x[0] - frac) * orbit.q * orbit.q;
      val.alpha_hat[i].push_back(alpha_hat);
    }
  }

  // Richardson step from the two largest q (errors decay like q^-2)
  const std::size_t last = qs.size() - 1;
  for (int k = 0; k < q_min; ++k) {
    const double fine = val.alpha_hat[last][k];
    const double coarse = val.alpha_hat[last - 1][k];
    const double r = static_cast<double>(qs[last]) / qs[last - 1];
    const double weight = r * r;
    val.alpha_extrapolated.push_back((weight * fine - coarse) /
                                     (weight - 1.0));
  }

  // per-doubling convergence ratios (median over usable points)
  if (qs.size() >= 3) {
    std::vector<double> ratios;
    for (int k = 1; k < q_min; ++k) {
      const double d1 =
          std::abs(val.alpha_hat[0][k] - val.alpha_hat[1][k]);
      const double d2 =
          std::abs(val.alpha_hat[1][k] - val.alpha_hat[2][k]);
      if (d2 > 1e-9) ratios.push_back(d1 / d2);
    }
    if (!ratios.empty()) {
      std::sort(ratios.begin(), ratios.end());
      val.median_doubling_ratio = ratios[ratios.size() / 2];
    }
  }

  // compare -alpha(X0) Y0^2 with X1 at the shared points
  double sup_x1 = 0.0;
  const double len = lc.boundary().length();
  for (int i = 0; i < 2048; ++i)
    sup_x1 = std::max(sup_x1, std::abs(nf.x1(len * i / 2048.0)));
  for (int k = 0; k < q_min; ++k) {
    const double x = val.fractions[k];
    const double s = lc.x0_inverse(x);
    const double y0 = lc.y0_of_s(s);
    const double x1 = nf.x1(s);
    val.minus_x1_over_y0_sq.push_back(-x1 / (y0 * y0));
    const double lhs = -val.alpha_extrapolated[k] * y0 * y0;
    const double dev = std::abs(lhs - x1);
    val.max_abs_deviation = std::max(val.max_abs_deviation, dev);
    // relative deviations only make sense away from the zeros of X1, and
    // only when X1 is not identically zero (discs)
    if (sup_x1 > 1e-12 && std::abs(x1) >= 0.05 * sup_x1)
      val.max_rel_deviation =
          std::max(val.max_rel_deviation, dev / std::abs(x1));
  }
  return val;
}

}  // namespace birkhoff
