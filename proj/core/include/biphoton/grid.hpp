#pragma once

#include <span>
#include <vector>

namespace biphoton {

enum class QuadratureRule { Simpson, Trapezoid };

/// Uniform 1-D grid with composite quadrature weights.
///
/// Composite Simpson when the point count is odd, trapezoid otherwise.
/// A span with lo == -hi is filled mirror-exactly: point(i) == -point(n-1-i)
/// holds bitwise, which downstream time-reversal identities rely on.
class UniformGrid {
 public:
  UniformGrid(int n_points, double lo, double hi);

  int size() const { return static_cast<int>(points_.size()); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double spacing() const { return spacing_; }
  QuadratureRule rule() const { return rule_; }
  bool symmetric() const { return symmetric_; }

  double point(int i) const { return points_[static_cast<size_t>(i)]; }
  double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
  std::span<const double> points() const { return points_; }
  std::span<const double> weights() const { return weights_; }

  bool same_axis(const UniformGrid& other) const {
    return size() == other.size() && lo_ == other.lo_ && hi_ == other.hi_;
  }

 private:
  double lo_, hi_, spacing_;
  bool symmetric_;
  QuadratureRule rule_;
  std::vector<double> points_;
  std::vector<double> weights_;
};

/// Dimensionless detuning axis, x = Omega / (2 pi BW); x = 1 is one full
/// bandwidth of ordinary frequency.
class FrequencyGrid : public UniformGrid {
 public:
  FrequencyGrid(int n_points, double x_min, double x_max)
      : UniformGrid(n_points, x_min, x_max) {}
  static FrequencyGrid symmetric_span(int n_points, double half_span) {
    return FrequencyGrid(n_points, -half_span, half_span);
  }
};

/// Dimensionless time axis, u = BW * tau.
class TimeGrid : public UniformGrid {
 public:
  TimeGrid(int n_points, double t_min, double t_max)
      : UniformGrid(n_points, t_min, t_max) {}
  static TimeGrid symmetric_span(int n_points, double half_span) {
    return TimeGrid(n_points, -half_span, half_span);
  }
};

}  // namespace biphoton
