#include "biphoton/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "biphoton/errors.hpp"
#include "biphoton/numerics.hpp"

namespace biphoton {

namespace {

void check_alias_guard(const FrequencyGrid& fgrid, const TimeGrid& tgrid) {
  const double t_max = std::max(std::abs(tgrid.lo()), std::abs(tgrid.hi()));
  const double phase_step = 2.0 * std::numbers::pi * fgrid.spacing() * t_max;
  if (phase_step > std::numbers::pi) {
    throw AccuracyError("herald_waveform: spectral grid too coarse for |u| up to " +
                        std::to_string(t_max));
  }
}

/// psi(u) = (1/sqrt(rate_ref)) sum_i w_i phi_i e^{-2 pi i x_i t}, with
/// t = u for Photon1 and t = -u for Photon2 (trigger swap).
TemporalWaveform build_waveform(const JointSpectrum& spec, HeraldedArm arm, const TimeGrid& tgrid,
                                double rate_ref, double norm, bool renormalize) {
  check_alias_guard(spec.grid(), tgrid);
  const int nt = tgrid.size();
  std::vector<double> times(static_cast<size_t>(nt));
  const double sign = (arm == HeraldedArm::Photon1) ? 1.0 : -1.0;
  for (int j = 0; j < nt; ++j) times[static_cast<size_t>(j)] = sign * tgrid.point(j);

  std::vector<Complex> amp = detail::transform_at_times(spec.samples(), spec.grid(), times);
  double scale = 1.0 / std::sqrt(rate_ref);
  if (renormalize && norm > 0.0) {
    scale /= std::sqrt(norm);
    norm = 1.0;
  }
  for (auto& a : amp) a *= scale;

  const std::string carrier = (arm == HeraldedArm::Photon1)
                                  ? "exp(-i " + spec.centers().photon1 + " tau)"
                                  : "exp(-i " + spec.centers().photon2 + " tau)";
  return TemporalWaveform(tgrid, std::move(amp), norm, arm, carrier, spec.model_name());
}

}  // namespace

TemporalWaveform::TemporalWaveform(TimeGrid grid, std::vector<Complex> amplitude, double norm,
                                   HeraldedArm arm, std::string carrier, std::string source)
    : grid_(std::move(grid)),
      amplitude_(std::move(amplitude)),
      norm_(norm),
      arm_(arm),
      carrier_(std::move(carrier)),
      source_(std::move(source)) {
  if (amplitude_.size() != static_cast<size_t>(grid_.size())) {
    throw std::invalid_argument("waveform: amplitude count does not match grid size");
  }
}

TemporalWaveform herald_waveform(const JointSpectrum& spectrum, HeraldedArm arm) {
  return herald_waveform(spectrum, arm, spectrum.default_time_grid());
}

TemporalWaveform herald_waveform(const JointSpectrum& spectrum, HeraldedArm arm,
                                 const TimeGrid& tgrid) {
  if (!(spectrum.rate() > 0.0)) {
    throw std::invalid_argument("cannot herald from a fully blocked spectrum (rate 0)");
  }
  // Unit-efficiency heralding: spectral-side norm is exactly rate/rate.
  return build_waveform(spectrum, arm, tgrid, spectrum.rate(), 1.0, false);
}

ModulatedWaveform herald_waveform_modulated(const JointSpectrum& spectrum,
                                            const SpectralModulator& mod, HeraldedArm arm,
                                            bool renormalize) {
  return herald_waveform_modulated(spectrum, mod, arm, spectrum.default_time_grid(), renormalize);
}

ModulatedWaveform herald_waveform_modulated(const JointSpectrum& spectrum,
                                            const SpectralModulator& mod, HeraldedArm arm,
                                            const TimeGrid& tgrid, bool renormalize) {
  if (!(spectrum.rate() > 0.0)) {
    throw std::invalid_argument("cannot herald from a fully blocked spectrum (rate 0)");
  }
  const auto modded = mod.apply(spectrum);
  if (!(modded.efficiency > 0.0)) {
    throw std::invalid_argument("modulator blocked the entire spectrum (efficiency 0)");
  }
  // Normalized against the unmodulated rate: norm = eta unless renormalized.
  TemporalWaveform wf = build_waveform(modded.spectrum, arm, tgrid, spectrum.rate(),
                                       modded.efficiency, renormalize);
  return ModulatedWaveform{std::move(wf), modded.efficiency};
}

double waveform_fidelity(const TemporalWaveform& a, const TemporalWaveform& b) {
  if (!a.grid().same_axis(b.grid())) {
    throw std::invalid_argument("waveform_fidelity: time grids do not match");
  }
  const auto w = a.grid().weights();
  Complex overlap{0.0, 0.0};
  double na = 0.0, nb = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    overlap += w[i] * std::conj(a.amplitude()[i]) * b.amplitude()[i];
    na += w[i] * std::norm(a.amplitude()[i]);
    nb += w[i] * std::norm(b.amplitude()[i]);
  }
  if (!(na > 0.0) || !(nb > 0.0)) {
    throw std::invalid_argument("waveform_fidelity: zero-norm waveform");
  }
  return std::abs(overlap) / std::sqrt(na * nb);
}

std::optional<BeatNote> beat_note_analysis(const TemporalWaveform& wf) {
  const int n = wf.grid().size();
  const double h = wf.grid().spacing();
  std::vector<double> I(static_cast<size_t>(n));
  double imax = 0.0, tv = 0.0;
  for (int i = 0; i < n; ++i) {
    I[static_cast<size_t>(i)] = wf.intensity(i);
    imax = std::max(imax, I[static_cast<size_t>(i)]);
    if (i > 0) tv += std::abs(I[static_cast<size_t>(i)] - I[static_cast<size_t>(i - 1)]);
  }
  if (!(imax > 0.0)) return std::nullopt;

  // A unimodal packet has total variation 2*max (up to side-lobe ripple);
  // fringes multiply it by the visible-fringe count.
  if (tv / (2.0 * imax) < 2.0) return std::nullopt;

  double mean = 0.0;
  for (double v : I) mean += v;
  mean /= n;

  // Intensity autocorrelation at non-negative lags.
  std::vector<double> C(static_cast<size_t>(n));
  detail::parallel_for(n, 0, [&](int k) {
    double acc = 0.0;
    for (int i = 0; i + k < n; ++i) {
      acc += (I[static_cast<size_t>(i)] - mean) * (I[static_cast<size_t>(i + k)] - mean);
    }
    C[static_cast<size_t>(k)] = acc;
  });

  // First local minimum, then the first local maximum after it.
  int kmin = 1;
  while (kmin < n - 1 &&
         !(C[static_cast<size_t>(kmin)] < C[static_cast<size_t>(kmin - 1)] &&
           C[static_cast<size_t>(kmin)] <= C[static_cast<size_t>(kmin + 1)])) {
    ++kmin;
  }
  int k1 = kmin + 1;
  while (k1 < n - 1 && !(C[static_cast<size_t>(k1)] > C[static_cast<size_t>(k1 - 1)] &&
                         C[static_cast<size_t>(k1)] >= C[static_cast<size_t>(k1 + 1)])) {
    ++k1;
  }
  if (k1 >= n - 1) return std::nullopt;

  // The envelope biases the raw peak inward; dividing by a one-period moving
  // average flattens the baseline before the final peak read-off.
  auto baseline = [&](int i) {
    const int a = std::max(0, i - k1 / 2);
    const int b = std::min(n - 1, i + k1 / 2);
    double acc = 0.0;
    for (int j = a; j <= b; ++j) acc += C[static_cast<size_t>(j)];
    return acc / (b - a + 1);
  };
  const int lo = std::max(2, static_cast<int>(0.6 * k1));
  const int hi = std::min(n - 2, static_cast<int>(1.4 * k1));
  int kbest = k1;
  double dbest = -1e300;
  for (int k = lo; k <= hi; ++k) {
    const double base = baseline(k);
    const double d = C[static_cast<size_t>(k)] / std::max(std::abs(base), 1e-300);
    if (d > dbest) {
      dbest = d;
      kbest = k;
    }
  }
  const double da = C[static_cast<size_t>(kbest - 1)] / std::max(std::abs(baseline(kbest - 1)), 1e-300);
  const double db = C[static_cast<size_t>(kbest)] / std::max(std::abs(baseline(kbest)), 1e-300);
  const double dc = C[static_cast<size_t>(kbest + 1)] / std::max(std::abs(baseline(kbest + 1)), 1e-300);
  double kref = static_cast<double>(kbest);
  const double denom = da - 2.0 * db + dc;
  if (denom != 0.0) kref += 0.5 * (da - dc) / denom;
  const double period = kref * h;

  // Fringe visibility over the central beat period around u = 0.
  double vmax = 0.0, vmin = 1e300;
  for (int i = 0; i < n; ++i) {
    if (std::abs(wf.grid().point(i)) <= period) {
      vmax = std::max(vmax, I[static_cast<size_t>(i)]);
      vmin = std::min(vmin, I[static_cast<size_t>(i)]);
    }
  }
  const double visibility = (vmax - vmin) / (vmax + vmin);
  return BeatNote{period, visibility};
}

}  // namespace biphoton
