#include "biphoton/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace biphoton {

UniformGrid::UniformGrid(int n_points, double lo, double hi) : lo_(lo), hi_(hi) {
  if (n_points < 3) {
    throw std::invalid_argument("grid needs at least 3 points, got " + std::to_string(n_points));
  }
  if (!(hi > lo)) {
    throw std::invalid_argument("grid span must be positive");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  const int n = n_points;
  spacing_ = (hi - lo) / (n - 1);
  symmetric_ = (lo == -hi);

  points_.resize(static_cast<size_t>(n));
  if (symmetric_) {
    // Mirror-exact fill: point(i) == -point(n-1-i) bitwise.
    for (int i = 0; i < n / 2; ++i) {
      const double v = lo + i * spacing_;
      points_[static_cast<size_t>(i)] = v;
      points_[static_cast<size_t>(n - 1 - i)] = -v;
    }
    if (n % 2 == 1) points_[static_cast<size_t>(n / 2)] = 0.0;
  } else {
    for (int i = 0; i < n; ++i) points_[static_cast<size_t>(i)] = lo + i * spacing_;
    points_[static_cast<size_t>(n - 1)] = hi;
  }

  weights_.assign(static_cast<size_t>(n), 0.0);
  if (n % 2 == 1) {
    rule_ = QuadratureRule::Simpson;
    const double c = spacing_ / 3.0;
    weights_[0] = weights_[static_cast<size_t>(n - 1)] = c;
    for (int i = 1; i < n - 1; ++i) {
      weights_[static_cast<size_t>(i)] = (i % 2 == 1) ? 4.0 * c : 2.0 * c;
    }
  } else {
    rule_ = QuadratureRule::Trapezoid;
    weights_[0] = weights_[static_cast<size_t>(n - 1)] = spacing_ / 2.0;
    for (int i = 1; i < n - 1; ++i) weights_[static_cast<size_t>(i)] = spacing_;
  }
}

}  // namespace biphoton
