#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "biphoton/grid.hpp"
#include "biphoton/numerics.hpp"

namespace biphoton {

enum class SpectrumModel { Rectangular, Gaussian, Lorentzian, FrequencyBin, Tabulated };

enum class DecayDirection { DecayOnPhoton1, DecayOnPhoton2 };

/// Symbolic center-frequency labels; optical carriers are never sampled.
struct CenterFrequencies {
  std::string photon1 = "omega_10";
  std::string photon2 = "omega_20";
};

/// Joint spectral amplitude Phi over dimensionless detuning x, with the
/// pair-rate normalization R = BW * integral |phi(x)|^2 dx enforced on the
/// stored grid (BW == 1 internally; every quantity is in BW units).
///
/// `amplitude_at` evaluates the underlying profile anywhere (0 outside the
/// model support), so refined quadratures never interpolate stored samples.
class JointSpectrum {
 public:
  SpectrumModel model() const { return model_; }
  const std::string& model_name() const { return name_; }
  double rate() const { return rate_; }
  const FrequencyGrid& grid() const { return grid_; }
  std::span<const Complex> samples() const { return samples_; }
  const CenterFrequencies& centers() const { return centers_; }
  bool modulated() const { return modulated_; }

  Complex amplitude_at(double x) const { return profile_(x); }

  /// Support window used by purity and density-matrix quadratures. For the
  /// heavy-tailed Lorentzian this is narrower than the stored grid.
  double window_lo() const { return window_lo_; }
  double window_hi() const { return window_hi_; }

  /// Model-appropriate default time axis for heralded waveforms.
  TimeGrid default_time_grid() const;

  /// Bin separation of a FrequencyBin spectrum (meaningless otherwise).
  double bin_delta() const { return bin_delta_; }

  friend JointSpectrum make_rectangular(double rate);
  friend JointSpectrum make_gaussian(double rate);
  friend JointSpectrum make_lorentzian(double rate, DecayDirection direction);
  friend JointSpectrum make_frequency_bin(double delta, double theta, double bin_width,
                                          double rate);
  friend JointSpectrum make_tabulated(std::span<const double> x, std::span<const Complex> phi,
                                      double rate);

  friend class SpectralModulator;  // modulated-copy construction

 private:
  JointSpectrum(SpectrumModel model, std::string name, double rate, FrequencyGrid grid,
                std::function<Complex(double)> raw_profile, double window_lo, double window_hi);

  SpectrumModel model_;
  std::string name_;
  double rate_;
  FrequencyGrid grid_;
  std::vector<Complex> samples_;
  std::function<Complex(double)> profile_;
  double window_lo_, window_hi_;
  double bin_delta_ = 0.0;
  bool modulated_ = false;
  CenterFrequencies centers_;
};

/// Flat-top amplitude sqrt(R/BW) on x in [-1/2, 1/2], zero outside; grid
/// endpoints aligned exactly to the band edges.
JointSpectrum make_rectangular(double rate = 1.0);

/// Gaussian amplitude whose intensity |Phi|^2 has FWHM exactly 1 in x.
JointSpectrum make_gaussian(double rate = 1.0);

/// Complex Lorentzian phi(x) proportional to 1/(1/2 -+ i x); |phi|^2 FWHM 1.
/// The heralded waveform of the chosen photon is a causal one-sided
/// exponential decay, the partner's its time reverse.
JointSpectrum make_lorentzian(double rate = 1.0,
                              DecayDirection direction = DecayDirection::DecayOnPhoton1);

/// Two equal-weight Gaussian bins at detunings 0 and delta with relative
/// phase e^{i theta} on the 0-detuning bin. bin_width <= delta/10;
/// pass bin_width = 0 for the default delta/20.
JointSpectrum make_frequency_bin(double delta, double theta, double bin_width = 0.0,
                                 double rate = 1.0);

/// User-supplied amplitude, linearly interpolated onto a uniform working
/// grid over [x.front(), x.back()] and renormalized to the rate.
JointSpectrum make_tabulated(std::span<const double> x, std::span<const Complex> phi,
                             double rate = 1.0);

}  // namespace biphoton
