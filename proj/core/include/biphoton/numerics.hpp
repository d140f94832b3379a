#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "biphoton/grid.hpp"

namespace biphoton {

using Complex = std::complex<double>;

/// Unnormalized sinc, sin(x)/x with the removable singularity at 0.
double sinc(double x);

/// Weighted quadrature sum of samples over the grid.
Complex integrate(std::span<const Complex> samples, const UniformGrid& grid);
double integrate(std::span<const double> samples, const UniformGrid& grid);

/// Frequency -> time transform with the e^{-i Omega tau} sign convention,
/// psi(u) = sum_i w_i phi(x_i) e^{-2 pi i x_i u}, evaluated by direct
/// kernel quadrature at every grid time.
///
/// Throws AccuracyError when the spectral grid is too coarse for the
/// requested time range (angular spacing times |t|_max exceeding pi).
std::vector<Complex> fourier_to_time(std::span<const Complex> spectrum,
                                     const FrequencyGrid& fgrid,
                                     const TimeGrid& tgrid);

namespace detail {

/// Same transform evaluated at arbitrary times (no aliasing guard).
std::vector<Complex> transform_at_times(std::span<const Complex> spectrum,
                                        const FrequencyGrid& fgrid,
                                        std::span<const double> times);

/// Runs fn(i) for i in [0, n) over a worker pool; each index owns its
/// output slot, so results are independent of the thread count.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

int default_threads();

/// Piecewise-linear lookup on a strictly increasing axis; 0 outside.
double interp_linear(std::span<const double> xs, std::span<const double> ys, double x);
Complex interp_linear(std::span<const double> xs, std::span<const Complex> ys, double x);

}  // namespace detail

}  // namespace biphoton
