#include "biphoton/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace biphoton {

namespace {

constexpr int kDefaultPoints = 2001;

// Stored-grid half spans. The rectangle ends exactly at its band edges and
// the Gaussian truncates below 1e-19 of its mass at 4. The Lorentzian's
// 1/x^2 tails force a much wider grid: half-span 800 keeps the windowing
// ringing of its heralded waveform below 1e-3 of the peak intensity while
// spacing 0.04 still resolves the unit-FWHM peak.
constexpr double kRectHalfSpan = 0.5;
constexpr double kGaussHalfSpan = 4.0;
constexpr double kLorentzHalfSpan = 800.0;
constexpr int kLorentzPoints = 40001;

// Purity and density-matrix quadratures integrate over this narrower window
// for the Lorentzian; it holds 99.6% of the mass and keeps refined 2-D
// grids affordable.
constexpr double kLorentzWindow = 40.0;

void check_rate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("rate must be positive and finite");
  }
}

}  // namespace

JointSpectrum::JointSpectrum(SpectrumModel model, std::string name, double rate,
                             FrequencyGrid grid, std::function<Complex(double)> raw_profile,
                             double window_lo, double window_hi)
    : model_(model),
      name_(std::move(name)),
      rate_(rate),
      grid_(std::move(grid)),
      window_lo_(window_lo),
      window_hi_(window_hi) {
  const int n = grid_.size();
  samples_.resize(static_cast<size_t>(n));
  double mass = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex v = raw_profile(grid_.point(i));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument(name_ + ": non-finite amplitude at x = " +
                                  std::to_string(grid_.point(i)));
    }
    samples_[static_cast<size_t>(i)] = v;
    mass += grid_.weight(i) * std::norm(v);
  }
  if (!(mass > 0.0)) {
    throw std::invalid_argument(name_ + ": spectrum has zero mass, cannot normalize");
  }
  // Rate normalization on the stored grid: BW * integral |phi|^2 dx == R.
  const double scale = std::sqrt(rate_ / mass);
  for (auto& v : samples_) v *= scale;
  profile_ = [raw = std::move(raw_profile), scale](double x) { return scale * raw(x); };
}

TimeGrid JointSpectrum::default_time_grid() const {
  if (model_ == SpectrumModel::FrequencyBin) return TimeGrid::symmetric_span(8001, 2.0);
  return TimeGrid::symmetric_span(4001, 8.0);
}

JointSpectrum make_rectangular(double rate) {
  check_rate(rate);
  const double amp = std::sqrt(rate);  // sqrt(R/BW) with BW == 1
  auto raw = [amp](double x) -> Complex {
    return std::abs(x) <= kRectHalfSpan ? Complex(amp, 0.0) : Complex(0.0, 0.0);
  };
  FrequencyGrid grid = FrequencyGrid::symmetric_span(kDefaultPoints, kRectHalfSpan);
  return JointSpectrum(SpectrumModel::Rectangular, "rect", rate, std::move(grid), raw,
                       -kRectHalfSpan, kRectHalfSpan);
}

JointSpectrum make_gaussian(double rate) {
  check_rate(rate);
  // |phi|^2 = (2 R sqrt(pi ln2)/pi) e^{-4 ln2 x^2}: intensity FWHM exactly 1.
  const double amp = std::sqrt(2.0 * rate * std::sqrt(std::numbers::pi * std::numbers::ln2) /
                               std::numbers::pi);
  auto raw = [amp](double x) -> Complex {
    return Complex(amp * std::exp(-2.0 * std::numbers::ln2 * x * x), 0.0);
  };
  FrequencyGrid grid = FrequencyGrid::symmetric_span(kDefaultPoints, kGaussHalfSpan);
  return JointSpectrum(SpectrumModel::Gaussian, "gaussian", rate, std::move(grid), raw,
                       -kGaussHalfSpan, kGaussHalfSpan);
}

JointSpectrum make_lorentzian(double rate, DecayDirection direction) {
  check_rate(rate);
  // phi = N / (1/2 -+ i x): |phi|^2 has FWHM 1; the minus sign puts the
  // time-domain pole on the causal side of the chosen photon.
  const double imag_sign = (direction == DecayDirection::DecayOnPhoton1) ? -1.0 : 1.0;
  const double amp = std::sqrt(rate / (2.0 * std::numbers::pi));
  auto raw = [amp, imag_sign](double x) -> Complex {
    return amp / Complex(0.5, imag_sign * x);
  };
  FrequencyGrid grid = FrequencyGrid::symmetric_span(kLorentzPoints, kLorentzHalfSpan);
  return JointSpectrum(SpectrumModel::Lorentzian, "lorentzian", rate, std::move(grid), raw,
                       -kLorentzWindow, kLorentzWindow);
}

JointSpectrum make_frequency_bin(double delta, double theta, double bin_width, double rate) {
  check_rate(rate);
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("frequency-bin separation delta must be positive");
  }
  if (bin_width == 0.0) bin_width = delta / 20.0;
  if (!(bin_width > 0.0) || bin_width > delta / 10.0) {
    throw std::invalid_argument("bin_width must be in (0, delta/10]: bins may not overlap");
  }
  const double sigma = bin_width;
  const Complex phase = std::polar(1.0, theta);
  auto raw = [delta, sigma, phase](double x) -> Complex {
    const double a = (x - delta) / (2.0 * sigma);
    const double b = x / (2.0 * sigma);
    return Complex(std::exp(-a * a), 0.0) + phase * std::exp(-b * b);
  };
  const double lo = -8.0 * sigma;
  const double hi = delta + 8.0 * sigma;
  FrequencyGrid grid(4001, lo, hi);
  JointSpectrum spec(SpectrumModel::FrequencyBin, "freq-bin", rate, std::move(grid), raw, lo, hi);
  spec.bin_delta_ = delta;
  return spec;
}

JointSpectrum make_tabulated(std::span<const double> x, std::span<const Complex> phi,
                             double rate) {
  check_rate(rate);
  if (x.size() != phi.size()) {
    throw std::invalid_argument("tabulated spectrum: x and phi lengths differ");
  }
  if (x.size() < 3) {
    throw std::invalid_argument("tabulated spectrum needs at least 3 points, got " +
                                std::to_string(x.size()));
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(phi[i].real()) || !std::isfinite(phi[i].imag())) {
      throw std::invalid_argument("tabulated spectrum: non-finite entry at row " +
                                  std::to_string(i + 1));
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw std::invalid_argument("tabulated spectrum: x must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");
    }
  }
  std::vector<double> xs(x.begin(), x.end());
  std::vector<Complex> ys(phi.begin(), phi.end());
  auto raw = [xs = std::move(xs), ys = std::move(ys)](double xq) -> Complex {
    return detail::interp_linear(xs, ys, xq);
  };
  FrequencyGrid grid(kDefaultPoints, x.front(), x.back());
  return JointSpectrum(SpectrumModel::Tabulated, "tabulated", rate, std::move(grid), raw,
                       x.front(), x.back());
}

}  // namespace biphoton
