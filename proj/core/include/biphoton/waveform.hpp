#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biphoton/grid.hpp"
#include "biphoton/modulator.hpp"
#include "biphoton/spectrum.hpp"

namespace biphoton {

enum class HeraldedArm { Photon1, Photon2 };

/// Heralded temporal envelope psi on a dimensionless time grid u = BW tau.
/// The optical carrier (e^{-i omega_10 tau} or e^{-i omega_20 tau}) is a
/// symbolic label, never sampled. `norm` is the spectral-side (Parseval)
/// value of integral |psi|^2 dtau: exactly 1 for unit-efficiency heralding,
/// eta after a lossy modulator.
class TemporalWaveform {
 public:
  TemporalWaveform(TimeGrid grid, std::vector<Complex> amplitude, double norm, HeraldedArm arm,
                   std::string carrier, std::string source);

  const TimeGrid& grid() const { return grid_; }
  std::span<const Complex> amplitude() const { return amplitude_; }
  double norm() const { return norm_; }
  HeraldedArm heralded_arm() const { return arm_; }
  const std::string& carrier() const { return carrier_; }
  const std::string& source() const { return source_; }

  double intensity(int i) const { return std::norm(amplitude_[static_cast<size_t>(i)]); }

 private:
  TimeGrid grid_;
  std::vector<Complex> amplitude_;
  double norm_;
  HeraldedArm arm_;
  std::string carrier_;
  std::string source_;
};

/// psi0(u) for Photon1, psi0(-u) for Photon2 (trigger swap reverses time).
TemporalWaveform herald_waveform(const JointSpectrum& spectrum, HeraldedArm arm);
TemporalWaveform herald_waveform(const JointSpectrum& spectrum, HeraldedArm arm,
                                 const TimeGrid& tgrid);

struct ModulatedWaveform {
  TemporalWaveform waveform;
  double efficiency;
};

/// Heralded waveform of the modulated spectrum, normalized against the
/// unmodulated rate: norm == eta, or 1 when renormalize is set (eta is
/// reported either way).
ModulatedWaveform herald_waveform_modulated(const JointSpectrum& spectrum,
                                            const SpectralModulator& mod, HeraldedArm arm,
                                            bool renormalize = false);
ModulatedWaveform herald_waveform_modulated(const JointSpectrum& spectrum,
                                            const SpectralModulator& mod, HeraldedArm arm,
                                            const TimeGrid& tgrid, bool renormalize = false);

/// Global-phase-invariant overlap |<a,b>| / (||a|| ||b||) over the common
/// grid; 1 iff equal up to a global phase. Grids must match.
double waveform_fidelity(const TemporalWaveform& a, const TemporalWaveform& b);

struct BeatNote {
  double period;      ///< dominant intensity-oscillation period in u
  double visibility;  ///< (max - min)/(max + min) over the central envelope
};

/// Beat readout for frequency-bin heralds: period from the peak of the
/// intensity autocorrelation (baseline-normalized to remove envelope bias).
/// nullopt when no oscillation is detectable.
std::optional<BeatNote> beat_note_analysis(const TemporalWaveform& wf);

}  // namespace biphoton
