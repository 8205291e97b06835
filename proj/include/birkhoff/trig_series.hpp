// Truncated trigonometric series for smooth 2*pi-periodic functions, with
// exact term-by-term antiderivatives. Fitted from uniform samples by FFT.
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace birkhoff {

class TrigSeries {
 public:
  TrigSeries() = default;

  // Interpolates uniform samples f(2*pi*j/N), N a power of two. Coefficients
  // below drop_tol (relative to the largest) are discarded.
  static TrigSeries fit(const std::vector<double>& samples,
                        double drop_tol = 1e-16);

  // Samples fn adaptively (doubling N) until the top-octave coefficients are
  // negligible; throws QuadratureError if N exceeds max_n.
  static TrigSeries fit_function(const std::function<double(double)>& fn,
                                 double tail_tol = 1e-13, int min_n = 256,
                                 int max_n = 1 << 16);

  double operator()(double theta) const;
  double derivative(double theta) const;

  // Integral from 0 to theta (exact for the truncated series; grows linearly
  // with slope mean()).
  double integral(double theta) const;

  double mean() const { return mean_; }
  std::size_t terms() const { return a_.size(); }

 private:
  double mean_ = 0.0;
  std::vector<double> a_, b_;  // a_[k-1] cos(k t) + b_[k-1] sin(k t)
};

class ComplexTrigSeries {
 public:
  ComplexTrigSeries() = default;

  static ComplexTrigSeries fit(
      const std::vector<std::complex<double>>& samples,
      double drop_tol = 1e-16);

  std::complex<double> operator()(double theta) const;
  std::complex<double> integral(double theta) const;  // from 0, includes mean term
  std::complex<double> mean() const { return mean_; }

 private:
  std::complex<double> mean_{0.0, 0.0};
  // coefficients of exp(i k t) for k = 1..K and exp(-i k t) for k = 1..K
  std::vector<std::complex<double>> pos_, neg_;
};

}  // namespace birkhoff
