#pragma once

#include <span>
#include <string>
#include <vector>

#include "biphoton/spectrum.hpp"

namespace biphoton {

enum class ModulatorArm { Trigger, Signal };
enum class ModulatorKind { Unity, LinearPhase, QuadraticPhase, AmplitudeMask, Tabulated };

/// Passive spectral transfer function M (|M| <= 1), placed on the trigger or
/// signal arm. The argument of `value` is the detuning local to the arm's own
/// center frequency; frequency anti-correlation makes a trigger-arm element
/// act on the joint spectrum at the reflected detuning -x.
class SpectralModulator {
 public:
  static SpectralModulator unity(ModulatorArm arm = ModulatorArm::Trigger);
  /// e^{2 pi i x T}; T in 1/BW units. On the trigger arm this delays the
  /// heralded waveform by T.
  static SpectralModulator linear_phase(double T, ModulatorArm arm);
  /// e^{i beta x^2}; dimensionless group-delay-dispersion coefficient, chosen
  /// so trigger-arm beta exactly cancels signal-arm -beta.
  static SpectralModulator quadratic_phase(double beta, ModulatorArm arm);
  /// Real mask 0 <= m <= 1, linearly interpolated; zero outside its domain.
  static SpectralModulator amplitude_mask(std::span<const double> x, std::span<const double> m,
                                          ModulatorArm arm);
  /// Complex tabulated transfer function, |M| <= 1 everywhere.
  static SpectralModulator tabulated(std::span<const double> x, std::span<const Complex> m,
                                     ModulatorArm arm);

  ModulatorKind kind() const { return kind_; }
  ModulatorArm arm() const { return arm_; }
  bool pure_phase() const {
    return kind_ == ModulatorKind::Unity || kind_ == ModulatorKind::LinearPhase ||
           kind_ == ModulatorKind::QuadraticPhase;
  }
  double parameter() const { return param_; }
  std::string description() const;

  Complex value(double x_arm) const;

  /// True when the transfer function is defined over [lo, hi] of arm-local
  /// detuning (always true for the analytic kinds).
  bool covers(double lo, double hi) const;

  /// Modulated spectrum Phi(x) * M(arm-signed x) plus the heralding
  /// efficiency eta = post/pre spectral mass. The result is not
  /// renormalized: its rate is eta * R, keeping the rate invariant true.
  struct Result {
    JointSpectrum spectrum;
    double efficiency;
  };
  Result apply(const JointSpectrum& spectrum) const;

 private:
  SpectralModulator(ModulatorKind kind, ModulatorArm arm) : kind_(kind), arm_(arm) {}

  ModulatorKind kind_;
  ModulatorArm arm_;
  double param_ = 0.0;
  std::vector<double> tab_x_;
  std::vector<Complex> tab_m_;
};

/// Free-function form; returns the modulated spectrum and efficiency.
inline SpectralModulator::Result apply_modulator(const JointSpectrum& spectrum,
                                                 const SpectralModulator& mod) {
  return mod.apply(spectrum);
}

}  // namespace biphoton
