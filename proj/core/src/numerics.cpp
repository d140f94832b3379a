#include "biphoton/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "biphoton/errors.hpp"

namespace biphoton {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

namespace {

void check_length(size_t samples, int grid_points, const char* what) {
  if (samples != static_cast<size_t>(grid_points)) {
    throw std::invalid_argument(std::string(what) + ": sample count " +
                                std::to_string(samples) + " does not match grid size " +
                                std::to_string(grid_points));
  }
}

}  // namespace

Complex integrate(std::span<const Complex> samples, const UniformGrid& grid) {
  check_length(samples.size(), grid.size(), "integrate");
  Complex acc{0.0, 0.0};
  const auto w = grid.weights();
  for (size_t i = 0; i < samples.size(); ++i) acc += w[i] * samples[i];
  return acc;
}

double integrate(std::span<const double> samples, const UniformGrid& grid) {
  check_length(samples.size(), grid.size(), "integrate");
  double acc = 0.0;
  const auto w = grid.weights();
  for (size_t i = 0; i < samples.size(); ++i) acc += w[i] * samples[i];
  return acc;
}

namespace detail {

int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = default_threads();
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([=, &fn] {
      for (int i = t; i < n; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

namespace {

template <typename T>
T interp_impl(std::span<const double> xs, std::span<const T> ys, double x) {
  if (xs.empty() || x < xs.front() || x > xs.back()) return T{};
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  if (it == xs.end()) return ys.back();
  const size_t j = static_cast<size_t>(it - xs.begin());
  const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
  return ys[j - 1] * (1.0 - t) + ys[j] * t;
}

}  // namespace

double interp_linear(std::span<const double> xs, std::span<const double> ys, double x) {
  return interp_impl(xs, ys, x);
}

Complex interp_linear(std::span<const double> xs, std::span<const Complex> ys, double x) {
  return interp_impl(xs, ys, x);
}

std::vector<Complex> transform_at_times(std::span<const Complex> spectrum,
                                        const FrequencyGrid& fgrid,
                                        std::span<const double> times) {
  check_length(spectrum.size(), fgrid.size(), "fourier_to_time");
  const int nf = fgrid.size();
  const int nt = static_cast<int>(times.size());
  const auto x = fgrid.points();
  const auto w = fgrid.weights();

  std::vector<Complex> weighted(static_cast<size_t>(nf));
  for (int i = 0; i < nf; ++i) {
    weighted[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] * spectrum[static_cast<size_t>(i)];
  }

  std::vector<Complex> out(static_cast<size_t>(nt));
  parallel_for(nt, 0, [&](int j) {
    const double u = times[static_cast<size_t>(j)];
    Complex acc{0.0, 0.0};
    for (int i = 0; i < nf; ++i) {
      const double phase = -2.0 * std::numbers::pi * x[static_cast<size_t>(i)] * u;
      acc += weighted[static_cast<size_t>(i)] * Complex(std::cos(phase), std::sin(phase));
    }
    out[static_cast<size_t>(j)] = acc;
  });
  return out;
}

}  // namespace detail

std::vector<Complex> fourier_to_time(std::span<const Complex> spectrum,
                                     const FrequencyGrid& fgrid, const TimeGrid& tgrid) {
  const double t_max = std::max(std::abs(tgrid.lo()), std::abs(tgrid.hi()));
  // Angular spectral spacing is 2 pi * dx; more than pi of phase advance per
  // sample at the far end of the time window aliases the kernel.
  const double phase_step = 2.0 * std::numbers::pi * fgrid.spacing() * t_max;
  if (phase_step > std::numbers::pi) {
    throw AccuracyError("fourier_to_time: spectral grid too coarse for |t| up to " +
                        std::to_string(t_max) + " (phase step " + std::to_string(phase_step) +
                        " rad/sample exceeds pi)");
  }
  return detail::transform_at_times(spectrum, fgrid, tgrid.points());
}

}  // namespace biphoton
