#include "birkhoff/trig_series.hpp"

#include <algorithm>
#include <cmath>

#include "birkhoff/numerics.hpp"

namespace birkhoff {

namespace {

std::vector<std::complex<double>> dft_coefficients(
    std::vector<std::complex<double>> samples) {
  const std::size_t n = samples.size();
  fft(samples);
  for (auto& c : samples) c /= static_cast<double>(n);
  return samples;  // c[k] multiplies exp(i k t), indices mod n
}

}  // namespace

TrigSeries TrigSeries::fit(const std::vector<double>& samples,
                           double drop_tol) {
  std::vector<std::complex<double>> buf(samples.begin(), samples.end());
  const auto c = dft_coefficients(std::move(buf));
  const std::size_t n = c.size();
  TrigSeries out;
  out.mean_ = c[0].real();
  double top = std::abs(out.mean_);
  for (std::size_t k = 1; k <= n / 2; ++k)
    top = std::max(top, 2.0 * std::abs(c[k]));
  const double cut = drop_tol * std::max(top, 1e-300);
  std::size_t kmax = 0;
  // aliasing-safe range: keep k < n/2
  for (std::size_t k = 1; k < n / 2; ++k)
    if (2.0 * std::abs(c[k]) > cut) kmax = k;
  out.a_.resize(kmax);
  out.b_.resize(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    // real series: c_k e^{ikt} + c_{n-k} e^{-ikt} with c_{n-k} = conj(c_k)
    out.a_[k - 1] = 2.0 * c[k].real();
    out.b_[k - 1] = -2.0 * c[k].imag();
  }
  return out;
}

TrigSeries TrigSeries::fit_function(const std::function<double(double)>& fn,
                                    double tail_tol, int min_n, int max_n) {
  for (int n = min_n; n <= max_n; n *= 2) {
    std::vector<double> samples(n);
    for (int j = 0; j < n; ++j) samples[j] = fn(kTwoPi * j / n);
    std::vector<std::complex<double>> buf(samples.begin(), samples.end());
    const auto c = dft_coefficients(std::move(buf));
    double scale = 0.0;
    for (int k = 0; k <= n / 2; ++k) scale = std::max(scale, std::abs(c[k]));
    double tail = 0.0;
    for (int k = n / 4; k <= n / 2; ++k) tail = std::max(tail, std::abs(c[k]));
    if (tail <= tail_tol * std::max(scale, 1e-300)) return fit(samples);
  }
  throw QuadratureError(
      "trigonometric fit did not converge (function not resolvable at max "
      "sample count)");
}

double TrigSeries::operator()(double theta) const {
  double acc = mean_;
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck = 1.0, sk = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    const double sn = sk * c1 + ck * s1;
    ck = cn;
    sk = sn;
    acc += a_[k] * ck + b_[k] * sk;
  }
  return acc;
}

double TrigSeries::derivative(double theta) const {
  double acc = 0.0;
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck = 1.0, sk = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    const double sn = sk * c1 + ck * s1;
    ck = cn;
    sk = sn;
    acc += (k + 1) * (-a_[k] * sk + b_[k] * ck);
  }
  return acc;
}

double TrigSeries::integral(double theta) const {
  double acc = mean_ * theta;
  const double c1 = std::cos(theta), s1 = std::sin(theta);
  double ck = 1.0, sk = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    const double cn = ck * c1 - sk * s1;
    const double sn = sk * c1 + ck * s1;
    ck = cn;
    sk = sn;
    acc += (a_[k] * sk + b_[k] * (1.0 - ck)) / (k + 1);
  }
  return acc;
}

ComplexTrigSeries ComplexTrigSeries::fit(
    const std::vector<std::complex<double>>& samples, double drop_tol) {
  const auto c = dft_coefficients(samples);
  const std::size_t n = c.size();
  ComplexTrigSeries out;
  out.mean_ = c[0];
  double top = std::abs(out.mean_);
  for (std::size_t k = 1; k < n; ++k) top = std::max(top, std::abs(c[k]));
  const double cut = drop_tol * std::max(top, 1e-300);
  std::size_t kmax = 0;
  for (std::size_t k = 1; k < n / 2; ++k)
    if (std::abs(c[k]) > cut || std::abs(c[n - k]) > cut) kmax = k;
  out.pos_.resize(kmax);
  out.neg_.resize(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    out.pos_[k - 1] = c[k];
    out.neg_[k - 1] = c[n - k];
  }
  return out;
}

std::complex<double> ComplexTrigSeries::operator()(double theta) const {
  std::complex<double> acc = mean_;
  const std::complex<double> w(std::cos(theta), std::sin(theta));
  std::complex<double> wp = 1.0, wn = 1.0;
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    wp *= w;
    wn *= std::conj(w);
    acc += pos_[k] * wp + neg_[k] * wn;
  }
  return acc;
}

std::complex<double> ComplexTrigSeries::integral(double theta) const {
  std::complex<double> acc = mean_ * theta;
  const std::complex<double> w(std::cos(theta), std::sin(theta));
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> wp = 1.0, wn = 1.0;
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    wp *= w;
    wn *= std::conj(w);
    const double kk = static_cast<double>(k + 1);
    acc += pos_[k] * (wp - 1.0) / (i * kk) + neg_[k] * (wn - 1.0) / (-i * kk);
  }
  return acc;
}

}  // namespace birkhoff
