#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lightcone/quad.hpp"
#include "lightcone/specfun.hpp"

namespace lightcone {

enum class GridKind { uniform, log_uniform };

std::string to_string(GridKind kind);
GridKind grid_kind_from_string(const std::string& name);

/// n points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);
/// n points from lo to hi inclusive, equally spaced in log; needs 0 < lo < hi.
std::vector<double> log_uniform_grid(double lo, double hi, std::size_t n);

/// Values on a strictly increasing grid plus the decay of the function past the
/// last sample.
///
/// Between samples the function is the local cubic through the four nearest
/// samples (in log x for log-uniform grids). Below the first sample it is
/// continued linearly through the first two samples, down to x = 0 when the
/// grid is positive. Above the last sample it follows the decay hint from the
/// last value: v e^{-r (x - x_n)}, v (x_n / x)^p, or 0 for compact support.
template <class T>
class BasicSampledFunction {
 public:
  using value_type = T;

  BasicSampledFunction(std::vector<double> grid, std::vector<T> values, GridKind kind,
                       DecayHint decay);

  template <class F>
  static BasicSampledFunction from_function(F&& f, std::vector<double> grid, GridKind kind,
                                            DecayHint decay) {
    std::vector<T> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = static_cast<T>(f(grid[i]));
    return BasicSampledFunction(std::move(grid), std::move(values), kind, decay);
  }

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<T>& values() const noexcept { return values_; }
  GridKind kind() const noexcept { return kind_; }
  const DecayHint& decay() const noexcept { return decay_; }
  std::size_t size() const noexcept { return grid_.size(); }
  double front() const noexcept { return grid_.front(); }
  double back() const noexcept { return grid_.back(); }

  /// Interpolated / extrapolated value.
  T operator()(double x) const;

  /// Derivative samples on the grid by fourth-order finite differences.
  std::vector<T> derivative_samples() const;
  /// The derivative as a sampled function on the same grid.
  BasicSampledFunction derivative() const;

  /// integral |f|^2 over [max(0, front) or front, infinity) of the
  /// interpolant, with the linear continuation below the grid when it starts
  /// above 0 and the hinted tail above it.
  double l2_norm_squared(bool include_tails = true) const;
  double l2_norm(bool include_tails = true) const;

  BasicSampledFunction with_values(std::vector<T> values) const;
  BasicSampledFunction with_decay(DecayHint decay) const;

 private:
  std::size_t cell_of(double x) const;
  T interpolate(double x, std::size_t cell) const;

  std::vector<double> grid_;
  std::vector<double> coord_;  // x, or log x for log-uniform grids
  std::vector<T> values_;
  GridKind kind_;
  DecayHint decay_;
};

using SampledFunction = BasicSampledFunction<double>;
using ComplexSampledFunction = BasicSampledFunction<Complex>;

SampledFunction real_part(const ComplexSampledFunction& f);
SampledFunction imag_part(const ComplexSampledFunction& f);

/// L2 distance between two sampled functions through their interpolants,
/// over the grid of `a` (tails excluded).
double l2_distance(const SampledFunction& a, const SampledFunction& b);

/// A real function on (0, infinity) together with its decay at infinity.
struct HalfLineFunction {
  std::function<double(double)> f;
  DecayHint decay;

  double operator()(double x) const { return f(x); }
};

HalfLineFunction as_function(const SampledFunction& s);

}  // namespace lightcone
