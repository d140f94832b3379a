#include "biphoton/heralding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_s(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("BW*dt product s must be non-negative and finite");
  }
}

int make_odd(int n) { return (n % 2 == 0) ? n + 1 : n; }

/// Grid size resolving the sinc^2 kernel: spacing <= 1/(8 s) up to the cap.
int refined_points(double span, double s, int base, int cap, bool* capped) {
  double required = static_cast<double>(base);
  if (s > 0.0) required = std::max(required, std::ceil(span * 8.0 * s) + 1.0);
  if (required > static_cast<double>(cap)) {
    const int n = make_odd(cap);
    if (capped) *capped = true;
    // Accuracy degrades past the refinement cap; s = 100 is the declared
    // validity limit for the default windows.
    std::cerr << "biphoton: warning: purity quadrature capped at " << n << " points for s = " << s
              << "; result accuracy reduced\n";
    return n;
  }
  return make_odd(static_cast<int>(required));
}

struct WindowSamples {
  FrequencyGrid grid;
  std::vector<double> intensity;  // |phi(x_i)|^2
  double mass;                    // sum w_i |phi|^2 over the window
};

WindowSamples sample_window(const JointSpectrum& spec, int n) {
  FrequencyGrid grid(n, spec.window_lo(), spec.window_hi());
  std::vector<double> f(static_cast<size_t>(n));
  double mass = 0.0;
  for (int i = 0; i < n; ++i) {
    f[static_cast<size_t>(i)] = std::norm(spec.amplitude_at(grid.point(i)));
    mass += grid.weight(i) * f[static_cast<size_t>(i)];
  }
  if (!(mass > 0.0)) {
    throw std::invalid_argument("spectrum has zero mass on its support window");
  }
  return {std::move(grid), std::move(f), mass};
}

Eigen::MatrixXcd symmetrized_kernel(const HeraldedDensityMatrix& rho) {
  const int n = rho.size();
  std::vector<double> sw(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sw[static_cast<size_t>(i)] = std::sqrt(kTwoPi * rho.grid().weight(i));
  Eigen::MatrixXcd B(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      B(i, j) = sw[static_cast<size_t>(i)] * rho.at(i, j) * sw[static_cast<size_t>(j)];
    }
  }
  return B;
}

}  // namespace

HeraldedDensityMatrix::HeraldedDensityMatrix(FrequencyGrid grid, std::vector<Complex> elements,
                                             double s, std::string source)
    : grid_(std::move(grid)), elements_(std::move(elements)), s_(s), source_(std::move(source)) {
  const size_t n = static_cast<size_t>(grid_.size());
  if (elements_.size() != n * n) {
    throw std::invalid_argument("density matrix: element count does not match grid size");
  }
}

double HeraldedDensityMatrix::trace() const {
  double tr = 0.0;
  for (int i = 0; i < size(); ++i) tr += grid_.weight(i) * at(i, i).real();
  return kTwoPi * tr;
}

double HeraldedDensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    }
  }
  return worst;
}

HeraldedDensityMatrix density_matrix(const JointSpectrum& spectrum, double s, int n_points) {
  check_s(s);
  if (!(spectrum.rate() > 0.0)) {
    throw std::invalid_argument("cannot herald from a fully blocked spectrum (rate 0)");
  }
  if (n_points == 0) {
    n_points = (spectrum.model() == SpectrumModel::Lorentzian) ? 1601 : 801;
  }
  if (n_points < 3) throw std::invalid_argument("density matrix grid needs at least 3 points");

  const int n = make_odd(n_points);
  FrequencyGrid grid(n, spectrum.window_lo(), spectrum.window_hi());
  std::vector<Complex> phi(static_cast<size_t>(n));
  double mass = 0.0;
  for (int i = 0; i < n; ++i) {
    phi[static_cast<size_t>(i)] = spectrum.amplitude_at(grid.point(i));
    mass += grid.weight(i) * std::norm(phi[static_cast<size_t>(i)]);
  }
  if (!(mass > 0.0)) {
    throw std::invalid_argument("spectrum has zero mass on its support window");
  }

  const double scale = 1.0 / (kTwoPi * mass);
  std::vector<Complex> rho(static_cast<size_t>(n) * static_cast<size_t>(n));
  const auto x = grid.points();
  detail::parallel_for(n, 0, [&](int i) {
    const size_t row = static_cast<size_t>(i) * static_cast<size_t>(n);
    for (int j = i; j < n; ++j) {
      const double kern = sinc(std::numbers::pi * s * (x[static_cast<size_t>(i)] -
                                                       x[static_cast<size_t>(j)]));
      rho[row + static_cast<size_t>(j)] =
          scale * kern * phi[static_cast<size_t>(i)] * std::conj(phi[static_cast<size_t>(j)]);
    }
  });
  // Mirror the upper triangle so Hermiticity holds bitwise.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      rho[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
          std::conj(rho[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(i)]);
    }
  }
  return HeraldedDensityMatrix(std::move(grid), std::move(rho), s, spectrum.model_name());
}

double purity_direct(const JointSpectrum& spectrum, double s, const PurityOptions& opts) {
  check_s(s);
  const double span = spectrum.window_hi() - spectrum.window_lo();
  const int base = opts.min_points > 0 ? make_odd(opts.min_points) : 801;
  const int n = refined_points(span, s, base, opts.max_points, opts.capped);

  const WindowSamples ws = sample_window(spectrum, n);
  const auto x = ws.grid.points();
  const auto w = ws.grid.weights();
  std::vector<double> wf(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    wf[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] * ws.intensity[static_cast<size_t>(i)] /
                                 ws.mass;
  }

  std::vector<double> row_sums(static_cast<size_t>(n));
  detail::parallel_for(n, opts.threads, [&](int i) {
    const double xi = x[static_cast<size_t>(i)];
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double kern = sinc(std::numbers::pi * s * (xi - x[static_cast<size_t>(j)]));
      acc += wf[static_cast<size_t>(j)] * kern * kern;
    }
    row_sums[static_cast<size_t>(i)] = wf[static_cast<size_t>(i)] * acc;
  });
  double gamma = 0.0;
  for (int i = 0; i < n; ++i) gamma += row_sums[static_cast<size_t>(i)];
  return gamma;
}

double purity_autocorr(const JointSpectrum& spectrum, double s, const PurityOptions& opts) {
  check_s(s);
  const double span = spectrum.window_hi() - spectrum.window_lo();
  const int base = opts.min_points > 0 ? make_odd(opts.min_points) : 2001;
  const int n = refined_points(span, s, base, opts.max_points, opts.capped);

  const WindowSamples ws = sample_window(spectrum, n);
  const auto& f = ws.intensity;
  const double h = ws.grid.spacing();

  // (f*f)(k h) over the overlap, trapezoid in the inner integral.
  std::vector<double> g(static_cast<size_t>(n));
  detail::parallel_for(n, opts.threads, [&](int k) {
    const int m = n - k;
    double acc = 0.0;
    if (m == 1) {
      acc = 0.0;  // zero-length overlap
    } else {
      for (int i = 0; i < m; ++i) {
        const double term = f[static_cast<size_t>(i)] * f[static_cast<size_t>(i + k)];
        acc += (i == 0 || i == m - 1) ? 0.5 * term : term;
      }
      acc *= h;
    }
    g[static_cast<size_t>(k)] = acc;
  });

  // Outer Simpson over lags in [-span, span]; weights are symmetric, so fold.
  UniformGrid lag_grid(2 * n - 1, -(n - 1) * h, (n - 1) * h);
  double gamma = 0.0;
  for (int k = 0; k < n; ++k) {
    const double kern = sinc(std::numbers::pi * s * k * h);
    const double contrib = lag_grid.weight(n - 1 + k) * kern * kern * g[static_cast<size_t>(k)];
    gamma += (k == 0) ? contrib : 2.0 * contrib;
  }
  return gamma / (ws.mass * ws.mass);
}

double purity_from_matrix(const HeraldedDensityMatrix& rho) {
  const int n = rho.size();
  if (rho.hermiticity_defect() > 1e-9) {
    throw std::invalid_argument("purity_from_matrix: input is not Hermitian");
  }
  const auto w = rho.grid().weights();
  std::vector<double> row_sums(static_cast<size_t>(n));
  detail::parallel_for(n, 0, [&](int i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += w[static_cast<size_t>(j)] * std::norm(rho.at(i, j));
    }
    row_sums[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] * acc;
  });
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += row_sums[static_cast<size_t>(i)];
  return kTwoPi * kTwoPi * sum;
}

double leading_eigenvalue(const HeraldedDensityMatrix& rho) {
  const int n = rho.size();
  const auto w = rho.grid().weights();
  std::vector<double> sw(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sw[static_cast<size_t>(i)] = std::sqrt(kTwoPi * w[static_cast<size_t>(i)]);

  auto matvec = [&](const std::vector<Complex>& v, std::vector<Complex>& out) {
    detail::parallel_for(n, 0, [&](int i) {
      Complex acc{0.0, 0.0};
      for (int j = 0; j < n; ++j) {
        acc += sw[static_cast<size_t>(i)] * rho.at(i, j) * sw[static_cast<size_t>(j)] *
               v[static_cast<size_t>(j)];
      }
      out[static_cast<size_t>(i)] = acc;
    });
  };

  std::vector<Complex> v(static_cast<size_t>(n)), bv(static_cast<size_t>(n));
  double norm0 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::max(rho.at(i, i).real(), 0.0);
    v[static_cast<size_t>(i)] = std::sqrt(d) * sw[static_cast<size_t>(i)];
    norm0 += std::norm(v[static_cast<size_t>(i)]);
  }
  if (norm0 == 0.0) {
    v[0] = 1.0;
    norm0 = 1.0;
  }
  for (auto& c : v) c /= std::sqrt(norm0);

  double lambda = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    matvec(v, bv);
    Complex rq{0.0, 0.0};
    for (int i = 0; i < n; ++i) rq += std::conj(v[static_cast<size_t>(i)]) * bv[static_cast<size_t>(i)];
    lambda = rq.real();
    double resid = 0.0, bnorm = 0.0;
    for (int i = 0; i < n; ++i) {
      resid += std::norm(bv[static_cast<size_t>(i)] - lambda * v[static_cast<size_t>(i)]);
      bnorm += std::norm(bv[static_cast<size_t>(i)]);
    }
    if (std::sqrt(resid) <= 1e-12) return lambda;
    if (bnorm == 0.0) return 0.0;
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = bv[static_cast<size_t>(i)] / std::sqrt(bnorm);
  }
  throw AccuracyError("leading_eigenvalue: power iteration did not converge in 200 steps");
}

bool is_positive_semidefinite(const HeraldedDensityMatrix& rho, double shift) {
  Eigen::MatrixXcd B = symmetrized_kernel(rho);
  for (int i = 0; i < B.rows(); ++i) B(i, i) += shift;
  const Eigen::LLT<Eigen::MatrixXcd> llt(B);
  return llt.info() == Eigen::Success;
}

ModeDecomposition mode_decomposition(const HeraldedDensityMatrix& rho, int k) {
  const int n = rho.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("mode_decomposition: k must be in [1, n]");
  }
  const Eigen::MatrixXcd B = symmetrized_kernel(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(B);
  if (solver.info() != Eigen::Success) {
    throw AccuracyError("mode_decomposition: Hermitian eigensolver failed to converge");
  }

  ModeDecomposition out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[static_cast<size_t>(i)] = solver.eigenvalues()(n - 1 - i);
  }
  out.modes.reserve(static_cast<size_t>(k));
  for (int m = 0; m < k; ++m) {
    std::vector<Complex> mode(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double sw = std::sqrt(kTwoPi * rho.grid().weight(i));
      mode[static_cast<size_t>(i)] = solver.eigenvectors()(i, n - 1 - m) / sw;
    }
    out.modes.push_back(std::move(mode));
  }
  return out;
}

PurityCurve purity_curve(std::span<const JointSpectrum> models, double s_lo, double s_hi,
                         int n_points, const PurityOptions& opts) {
  if (!(s_lo >= 0.0) || !(s_hi > s_lo)) {
    throw std::invalid_argument("purity_curve: need 0 <= s_lo < s_hi");
  }
  if (n_points < 2) throw std::invalid_argument("purity_curve: need at least 2 sweep points");
  if (models.empty()) throw std::invalid_argument("purity_curve: no models given");

  PurityCurve curve;
  curve.s_values.resize(static_cast<size_t>(n_points));
  if (s_lo > 0.0) {
    const double la = std::log(s_lo), lb = std::log(s_hi);
    for (int i = 0; i < n_points; ++i) {
      curve.s_values[static_cast<size_t>(i)] = std::exp(la + (lb - la) * i / (n_points - 1));
    }
  } else {
    for (int i = 0; i < n_points; ++i) {
      curve.s_values[static_cast<size_t>(i)] = s_lo + (s_hi - s_lo) * i / (n_points - 1);
    }
  }
  curve.s_values.back() = s_hi;

  std::atomic<bool> any_capped{false};
  for (const auto& spec : models) {
    curve.models.push_back(spec.model_name());
    std::vector<double> gamma(static_cast<size_t>(n_points));
    detail::parallel_for(n_points, opts.threads, [&](int i) {
      bool capped = false;
      PurityOptions point_opts = opts;
      point_opts.threads = 1;  // sweep-level parallelism only
      point_opts.capped = &capped;
      gamma[static_cast<size_t>(i)] =
          purity_autocorr(spec, curve.s_values[static_cast<size_t>(i)], point_opts);
      if (capped) any_capped.store(true, std::memory_order_relaxed);
    });
    curve.gamma.push_back(std::move(gamma));
  }
  if (opts.capped && any_capped.load()) *opts.capped = true;
  return curve;
}

}  // namespace biphoton
