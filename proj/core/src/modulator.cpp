#include "biphoton/modulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace biphoton {

namespace {

constexpr double kPassiveTol = 1e-12;

void check_table(std::span<const double> x, size_t ny) {
  if (x.size() != ny) throw std::invalid_argument("modulator table: x and value lengths differ");
  if (x.size() < 2) throw std::invalid_argument("modulator table needs at least 2 points");
  for (size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      throw std::invalid_argument("modulator table: x must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");
    }
  }
}

}  // namespace

SpectralModulator SpectralModulator::unity(ModulatorArm arm) {
  return SpectralModulator(ModulatorKind::Unity, arm);
}

SpectralModulator SpectralModulator::linear_phase(double T, ModulatorArm arm) {
  SpectralModulator m(ModulatorKind::LinearPhase, arm);
  m.param_ = T;
  return m;
}

SpectralModulator SpectralModulator::quadratic_phase(double beta, ModulatorArm arm) {
  SpectralModulator m(ModulatorKind::QuadraticPhase, arm);
  m.param_ = beta;
  return m;
}

SpectralModulator SpectralModulator::amplitude_mask(std::span<const double> x,
                                                    std::span<const double> mval,
                                                    ModulatorArm arm) {
  check_table(x, mval.size());
  SpectralModulator m(ModulatorKind::AmplitudeMask, arm);
  m.tab_x_.assign(x.begin(), x.end());
  m.tab_m_.reserve(mval.size());
  for (size_t i = 0; i < mval.size(); ++i) {
    if (!(mval[i] >= 0.0) || mval[i] > 1.0 + kPassiveTol) {
      throw std::invalid_argument("amplitude mask must satisfy 0 <= m <= 1 (row " +
                                  std::to_string(i + 1) + ")");
    }
    m.tab_m_.emplace_back(mval[i], 0.0);
  }
  return m;
}

SpectralModulator SpectralModulator::tabulated(std::span<const double> x,
                                               std::span<const Complex> mval, ModulatorArm arm) {
  check_table(x, mval.size());
  SpectralModulator m(ModulatorKind::Tabulated, arm);
  m.tab_x_.assign(x.begin(), x.end());
  m.tab_m_.assign(mval.begin(), mval.end());
  for (size_t i = 0; i < m.tab_m_.size(); ++i) {
    if (std::abs(m.tab_m_[i]) > 1.0 + kPassiveTol) {
      throw std::invalid_argument("passive modulator requires |M| <= 1 (row " +
                                  std::to_string(i + 1) + ")");
    }
  }
  return m;
}

std::string SpectralModulator::description() const {
  const std::string arm = (arm_ == ModulatorArm::Trigger) ? "trigger" : "signal";
  switch (kind_) {
    case ModulatorKind::Unity: return "unity@" + arm;
    case ModulatorKind::LinearPhase: return "linear-phase:" + std::to_string(param_) + "@" + arm;
    case ModulatorKind::QuadraticPhase: return "quad-phase:" + std::to_string(param_) + "@" + arm;
    case ModulatorKind::AmplitudeMask: return "mask@" + arm;
    case ModulatorKind::Tabulated: return "tabulated@" + arm;
  }
  return "modulator";
}

Complex SpectralModulator::value(double x_arm) const {
  switch (kind_) {
    case ModulatorKind::Unity:
      return {1.0, 0.0};
    case ModulatorKind::LinearPhase:
      return std::polar(1.0, 2.0 * std::numbers::pi * x_arm * param_);
    case ModulatorKind::QuadraticPhase:
      return std::polar(1.0, param_ * x_arm * x_arm);
    case ModulatorKind::AmplitudeMask:
    case ModulatorKind::Tabulated:
      return detail::interp_linear(tab_x_, std::span<const Complex>(tab_m_), x_arm);
  }
  return {0.0, 0.0};
}

bool SpectralModulator::covers(double lo, double hi) const {
  if (kind_ == ModulatorKind::AmplitudeMask || kind_ == ModulatorKind::Tabulated) {
    return tab_x_.front() <= lo && tab_x_.back() >= hi;
  }
  return true;
}

SpectralModulator::Result SpectralModulator::apply(const JointSpectrum& spectrum) const {
  // Eq.-of-motion bookkeeping: a trigger-arm element sees the joint spectrum
  // at the reflected detuning -x; a signal-arm element at +x.
  const double arm_sign = (arm_ == ModulatorArm::Trigger) ? -1.0 : 1.0;
  const FrequencyGrid& grid = spectrum.grid();
  const double span_lo = std::min(arm_sign * grid.lo(), arm_sign * grid.hi());
  const double span_hi = std::max(arm_sign * grid.lo(), arm_sign * grid.hi());
  if (!covers(span_lo, span_hi)) {
    throw std::invalid_argument("modulator table does not cover the spectral support [" +
                                std::to_string(span_lo) + ", " + std::to_string(span_hi) + "]");
  }

  JointSpectrum out = spectrum;
  double mass = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const Complex m = value(arm_sign * grid.point(i));
    out.samples_[static_cast<size_t>(i)] *= m;
    mass += grid.weight(i) * std::norm(out.samples_[static_cast<size_t>(i)]);
  }
  double eta = mass / spectrum.rate();
  if (pure_phase() || eta > 1.0) eta = std::min(eta, 1.0);

  out.rate_ = eta * spectrum.rate();
  out.modulated_ = true;
  out.profile_ = [inner = spectrum.profile_, self = *this, arm_sign](double x) {
    return inner(x) * self.value(arm_sign * x);
  };
  return Result{std::move(out), eta};
}

}  // namespace biphoton
