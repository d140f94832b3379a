#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "biphoton/heralding.hpp"
#include "biphoton/spectrum.hpp"
#include "biphoton/waveform.hpp"

namespace biphoton {

/// %.9g formatting used for every CSV number; identical inputs give
/// byte-identical files.
std::string format_g9(double v);

/// Atomic file write: temp file in the target directory, then rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

struct TabulatedData {
  std::vector<double> x;
  std::vector<Complex> values;
};

/// Reads `x, re` or `x, re, im` CSV (header required, '#' comments).
/// Throws ParseError naming the offending line.
TabulatedData read_tabulated_csv(const std::filesystem::path& path);

std::string waveform_csv(const TemporalWaveform& wf, double bw_hz = 0.0);
nlohmann::json waveform_json(const TemporalWaveform& wf);

std::string density_csv(const HeraldedDensityMatrix& rho);
nlohmann::json density_json(const HeraldedDensityMatrix& rho);

std::string purity_curve_csv(std::span<const double> s_values, std::span<const double> gamma,
                             double bw_hz = 0.0);

std::string modes_csv(std::span<const double> eigenvalues);

}  // namespace biphoton
