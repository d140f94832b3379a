#pragma once

#include <span>
#include <string>
#include <vector>

#include "biphoton/grid.hpp"
#include "biphoton/numerics.hpp"
#include "biphoton/spectrum.hpp"

namespace biphoton {

/// Discretized heralded-photon density kernel
///   rho(x_i, x_j) = sinc(pi s (x_i - x_j)) phi(x_i) phi*(x_j) / (2 pi R_w)
/// on the spectrum's support window, where s = BW * dt and R_w is the
/// window's spectral mass (so the continuum trace is exactly 1).
///
/// Hermitian by construction; the diagonal does not depend on s.
class HeraldedDensityMatrix {
 public:
  HeraldedDensityMatrix(FrequencyGrid grid, std::vector<Complex> elements, double s,
                        std::string source);

  const FrequencyGrid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  double s() const { return s_; }
  const std::string& source() const { return source_; }

  Complex at(int i, int j) const {
    return elements_[static_cast<size_t>(i) * static_cast<size_t>(grid_.size()) +
                     static_cast<size_t>(j)];
  }
  std::span<const Complex> elements() const { return elements_; }

  /// Continuum trace, 2 pi sum_i w_i rho_ii.
  double trace() const;

  /// Largest |rho_ij - conj(rho_ji)| over the matrix.
  double hermiticity_defect() const;

 private:
  FrequencyGrid grid_;
  std::vector<Complex> elements_;  // row-major, size n*n
  double s_;
  std::string source_;
};

struct PurityOptions {
  int min_points = 0;     ///< 0 -> per-route default (801 direct, 2001 autocorrelation)
  int max_points = 32001; ///< refinement cap; spacing <= 1/(8 s) is requested up to here
  int threads = 0;        ///< 0 -> hardware concurrency
  bool* capped = nullptr; ///< set true when the cap limited the requested refinement
};

/// Builds the density matrix at the given BW*dt product. n_points = 0 picks
/// a model-appropriate default resolution on the support window.
HeraldedDensityMatrix density_matrix(const JointSpectrum& spectrum, double s, int n_points = 0);

/// Purity by 2-D tensor quadrature of the sinc^2 kernel against
/// |phi|^2 (x) |phi|^2 (the oracle path).
double purity_direct(const JointSpectrum& spectrum, double s, const PurityOptions& opts = {});

/// Purity via the 1-D reduction gamma = int dD sinc^2(pi s D) (f*f)(D) / R^2
/// with f = |phi|^2 and (f*f) the autocorrelation (the fast path).
double purity_autocorr(const JointSpectrum& spectrum, double s, const PurityOptions& opts = {});

/// Tr(rho^2) of a discretized kernel, (2 pi)^2 sum w_i w_j |rho_ij|^2.
double purity_from_matrix(const HeraldedDensityMatrix& rho);

/// Leading eigenvalue of the weight-symmetrized kernel by power iteration
/// with a certified residual bound.
double leading_eigenvalue(const HeraldedDensityMatrix& rho);

/// True when the symmetrized kernel plus shift*I admits a Cholesky
/// factorization, certifying min eigenvalue > -shift.
bool is_positive_semidefinite(const HeraldedDensityMatrix& rho, double shift = 1e-8);

struct ModeDecomposition {
  std::vector<double> eigenvalues;          ///< all, descending
  std::vector<std::vector<Complex>> modes;  ///< top-k, orthonormal under 2 pi w_i
};

/// Dense Hermitian eigendecomposition of the weight-symmetrized kernel
/// B_ij = sqrt(2 pi w_i) rho_ij sqrt(2 pi w_j); eigenvalues sum to the trace
/// and their squares to the purity.
ModeDecomposition mode_decomposition(const HeraldedDensityMatrix& rho, int k);

struct PurityCurve {
  std::vector<double> s_values;
  std::vector<std::string> models;
  std::vector<std::vector<double>> gamma;  ///< gamma[model][s-index]
};

/// Sweeps gamma(s) for each model over [s_lo, s_hi], log-spaced (linear when
/// s_lo == 0), via the autocorrelation path; s points run in parallel.
PurityCurve purity_curve(std::span<const JointSpectrum> models, double s_lo, double s_hi,
                         int n_points, const PurityOptions& opts = {});

}  // namespace biphoton
