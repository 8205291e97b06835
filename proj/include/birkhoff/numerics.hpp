// Small numerical toolbox: quadrature, root finding, series fitting, ODE stepping.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace birkhoff {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gauss-Legendre rule on [-1, 1]; nodes by Newton on the Legendre recurrence.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);
  static const GaussLegendre& order(int n);

  template <class F>
  auto integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto acc = weights_[0] * f(mid + half * nodes_[0]);
    for (std::size_t i = 1; i < nodes_.size(); ++i)
      acc += weights_[i] * f(mid + half * nodes_[i]);
    return half * acc;
  }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_, weights_;
};

namespace detail {

double gk_norm(double v);
double gk_norm(std::complex<double> v);

// 15-point Kronrod nodes with embedded 7-point Gauss rule (positive half).
struct GK15 {
  static const std::array<double, 8> xk;
  static const std::array<double, 8> wk;
  static const std::array<double, 4> wg;
};

template <class F>
auto gk15(F&& f, double a, double b, double& err) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  using R = decltype(f(mid));
  R kron = GK15::wk[7] * f(mid);
  R gauss = GK15::wg[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const R lo = f(mid - half * GK15::xk[i]);
    const R hi = f(mid + half * GK15::xk[i]);
    kron += GK15::wk[i] * (lo + hi);
    if (i % 2 == 1) gauss += GK15::wg[i / 2] * (lo + hi);
  }
  kron *= half;
  gauss *= half;
  err = gk_norm(kron - gauss);
  return kron;
}

}  // namespace detail

// Adaptive Gauss-Kronrod; throws QuadratureError if the tolerance cannot be met.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol = 1e-13,
               double rel_tol = 1e-13, int max_depth = 48) {
  using R = decltype(f(a));
  struct Seg {
    double a, b;
    int depth;
  };
  std::vector<Seg> stack{{a, b, 0}};
  R total{};
  double err_total = 0.0;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    double err = 0.0;
    R val = detail::gk15(f, s.a, s.b, err);
    const double tol_here =
        std::max(abs_tol, rel_tol * detail::gk_norm(val)) *
        std::max(1e-3, (s.b - s.a) / std::max(1e-300, std::abs(b - a)));
    if (err <= tol_here || s.depth >= max_depth) {
      if (err > tol_here)
        throw QuadratureError("adaptive quadrature failed to converge on [" +
                              std::to_string(s.a) + ", " + std::to_string(s.b) +
                              "], err=" + std::to_string(err));
      total += val;
      err_total += err;
    } else {
      const double m = 0.5 * (s.a + s.b);
      stack.push_back({s.a, m, s.depth + 1});
      stack.push_back({m, s.b, s.depth + 1});
    }
  }
  return total;
}

// Safeguarded Newton for strictly increasing f with f(lo) <= 0 <= f(hi).
// The bracket is trusted (endpoints are never evaluated): callers supply
// structural brackets, and endpoint values can sit below the noise floor.
double solve_increasing(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double lo,
                        double hi, double x_tol = 1e-14, int max_iter = 240);

// Dense LU solve with partial pivoting (row-major n-by-n).
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b);

// Given values v_i = sum_{j=1..m} c_j x_i^j (m == #points), recover c.
// Solved in the rescaled variable x/max|x| to keep the Vandermonde tame.
template <class T>
std::vector<T> fit_power_coefficients(const std::vector<double>& xs,
                                      const std::vector<T>& vs) {
  const int m = static_cast<int>(xs.size());
  double scale = 0.0;
  for (double x : xs) scale = std::max(scale, std::abs(x));
  std::vector<double> a(m * m);
  for (int i = 0; i < m; ++i) {
    double p = 1.0;
    for (int j = 0; j < m; ++j) {
      p *= xs[i] / scale;
      a[i * m + j] = p;
    }
  }
  auto rescale = [&](std::vector<T>& c) {
    double p = 1.0;
    for (int j = 0; j < m; ++j) {
      p *= scale;
      c[j] /= p;
    }
  };
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    std::vector<double> re(m), im(m);
    for (int i = 0; i < m; ++i) {
      re[i] = vs[i].real();
      im[i] = vs[i].imag();
    }
    auto cr = solve_dense(a, re);
    auto ci = solve_dense(std::move(a), im);
    std::vector<T> out(m);
    for (int i = 0; i < m; ++i) out[i] = {cr[i], ci[i]};
    rescale(out);
    return out;
  } else {
    auto c = solve_dense(std::move(a), vs);
    rescale(c);
    return c;
  }
}

// v_i = sum_{j=1..m} c_j x_i^(2j): even-power fit (Richardson ladder).
std::vector<double> fit_even_coefficients(const std::vector<double>& xs,
                                          const std::vector<double>& vs);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& xs,
                    const std::vector<double>& ys);

// Thomas solve for a tridiagonal system (diag d, sub l, super u), in place.
std::vector<double> solve_tridiagonal(std::vector<double> sub,
                                      std::vector<double> diag,
                                      std::vector<double> sup,
                                      std::vector<double> rhs);

// In-place radix-2 FFT (forward, unnormalized); size must be a power of two.
void fft(std::vector<std::complex<double>>& a);

// Dormand-Prince 5(4) adaptive integrator for small fixed-size systems.
template <std::size_t N>
class DormandPrince {
 public:
  using State = std::array<double, N>;
  using Rhs = std::function<State(double, const State&)>;

  DormandPrince(Rhs rhs, double rtol = 1e-12, double atol = 1e-12)
      : rhs_(std::move(rhs)), rtol_(rtol), atol_(atol) {}

  // Integrates from (t, y) to t_end; calls observer after every accepted step.
  State integrate(double t, State y, double t_end,
                  const std::function<void(double, const State&)>& observer =
                      nullptr) const {
    if (observer) observer(t, y);
    const double dir = t_end >= t ? 1.0 : -1.0;
    double h = dir * std::min(1e-2, std::abs(t_end - t));
    State k1 = rhs_(t, y);
    int rejects_in_a_row = 0;
    while (dir * (t_end - t) > 0) {
      if (dir * (t + h - t_end) > 0) h = t_end - t;
      State y_new, k_last;
      const double err = step(t, y, k1, h, y_new, k_last);
      if (err <= 1.0) {
        t += h;
        y = y_new;
        k1 = k_last;  // FSAL
        if (observer) observer(t, y);
        rejects_in_a_row = 0;
      } else if (++rejects_in_a_row > 60) {
        throw std::runtime_error("ODE step size underflow at t=" +
                                 std::to_string(t));
      }
      const double fac =
          std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h *= fac;
      if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t)))
        throw std::runtime_error("ODE step size underflow at t=" +
                                 std::to_string(t));
    }
    return y;
  }

  // One embedded step; returns scaled error (<= 1 means accept).
  double step(double t, const State& y, const State& k1, double h,
              State& y_out, State& k_last) const {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;
    State tmp;
    auto axpy = [&](const std::array<const State*, 6>& ks,
                    const std::array<double, 6>& cs, int n) {
      for (std::size_t i = 0; i < N; ++i) {
        double acc = y[i];
        for (int j = 0; j < n; ++j) acc += h * cs[j] * (*ks[j])[i];
        tmp[i] = acc;
      }
    };
    axpy({&k1}, {a21}, 1);
    State k2 = rhs_(t + h / 5, tmp);
    axpy({&k1, &k2}, {a31, a32}, 2);
    State k3 = rhs_(t + 3 * h / 10, tmp);
    axpy({&k1, &k2, &k3}, {a41, a42, a43}, 3);
    State k4 = rhs_(t + 4 * h / 5, tmp);
    axpy({&k1, &k2, &k3, &k4}, {a51, a52, a53, a54}, 4);
    State k5 = rhs_(t + 8 * h / 9, tmp);
    axpy({&k1, &k2, &k3, &k4, &k5}, {a61, a62, a63, a64, a65}, 5);
    State k6 = rhs_(t + h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      y_out[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                             b5 * k5[i] + b6 * k6[i]);
    State k7 = rhs_(t + h, y_out);
    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                            e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc =
          atol_ + rtol_ * std::max(std::abs(y[i]), std::abs(y_out[i]));
      err += (e / sc) * (e / sc);
    }
    k_last = k7;
    return std::sqrt(err / N);
  }

 private:
  Rhs rhs_;
  double rtol_, atol_;
};

}  // namespace birkhoff
