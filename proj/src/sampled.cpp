#include "lightcone/sampled.hpp"

#include <algorithm>
#include <cmath>

#include "lightcone/error.hpp"

namespace lightcone {
namespace {

// Finite-difference weights for the first derivative at z on nodes x (Fornberg).
std::vector<double> first_derivative_weights(double z, const double* x, int n) {
  std::vector<double> c0(n, 0.0), c1(n, 0.0);
  double c1v = 1.0;
  double c4 = x[0] - z;
  c0[0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        if (mn >= 1) c1[i] = c1v * (1.0 * c0[i - 1] - c5 * c1[i - 1]) / c2;
        c0[i] = -c1v * c5 * c0[i - 1] / c2;
      }
      if (mn >= 1) c1[j] = (c4 * c1[j] - 1.0 * c0[j]) / c3;
      c0[j] = c4 * c0[j] / c3;
    }
    c1v = c2;
  }
  return c1;
}

constexpr int kCellNodes = 6;

}  // namespace

std::string to_string(GridKind kind) {
  return kind == GridKind::uniform ? "uniform" : "log_uniform";
}

GridKind grid_kind_from_string(const std::string& name) {
  if (name == "uniform") return GridKind::uniform;
  if (name == "log_uniform" || name == "log") return GridKind::log_uniform;
  throw DomainError("unknown grid kind '" + name + "'");
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2 || !(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("uniform_grid: need n >= 2 and finite lo < hi");
  }
  std::vector<double> g(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

std::vector<double> log_uniform_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0)) throw DomainError("log_uniform_grid: lo must be positive");
  auto t = uniform_grid(std::log(lo), std::log(hi), n);
  for (auto& v : t) v = std::exp(v);
  t.front() = lo;
  t.back() = hi;
  return t;
}

template <class T>
BasicSampledFunction<T>::BasicSampledFunction(std::vector<double> grid, std::vector<T> values,
                                              GridKind kind, DecayHint decay)
    : grid_(std::move(grid)), values_(std::move(values)), kind_(kind), decay_(decay) {
  if (grid_.size() != values_.size()) throw DomainError("sampled function: size mismatch");
  if (grid_.size() < 4) throw DomainError("sampled function: need at least 4 samples");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(grid_[i])) throw DomainError("sampled function: non-finite grid point");
    if (i > 0 && !(grid_[i] > grid_[i - 1])) {
      throw DomainError("sampled function: grid must be strictly increasing");
    }
    if (!std::isfinite(std::abs(values_[i]))) {
      throw DomainError("sampled function: non-finite value");
    }
  }
  if (kind_ == GridKind::log_uniform && !(grid_.front() > 0.0)) {
    throw DomainError("sampled function: log-uniform grid must be positive");
  }
  coord_ = grid_;
  if (kind_ == GridKind::log_uniform) {
    for (auto& c : coord_) c = std::log(c);
  }
}

template <class T>
std::size_t BasicSampledFunction<T>::cell_of(double x) const {
  auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, grid_.size() - 2);
}

template <class T>
T BasicSampledFunction<T>::interpolate(double x, std::size_t cell) const {
  const std::size_t n = grid_.size();
  std::size_t s = cell == 0 ? 0 : cell - 1;
  s = std::min(s, n - 4);
  const double c = kind_ == GridKind::log_uniform ? std::log(x) : x;
  T sum{};
  for (std::size_t j = s; j < s + 4; ++j) {
    double w = 1.0;
    for (std::size_t m = s; m < s + 4; ++m) {
      if (m != j) w *= (c - coord_[m]) / (coord_[j] - coord_[m]);
    }
    sum += w * values_[j];
  }
  return sum;
}

template <class T>
T BasicSampledFunction<T>::operator()(double x) const {
  if (x < grid_.front()) {
    const double slope_den = grid_[1] - grid_[0];
    return values_[0] + (x - grid_[0]) / slope_den * (values_[1] - values_[0]);
  }
  if (x > grid_.back()) {
    const T& last = values_.back();
    switch (decay_.kind()) {
      case DecayHint::Kind::exponential:
        return last * std::exp(-decay_.rate() * (x - grid_.back()));
      case DecayHint::Kind::algebraic:
        return last * std::pow(grid_.back() / x, decay_.power());
      case DecayHint::Kind::compact:
        return T{};
    }
  }
  return interpolate(x, cell_of(x));
}

template <class T>
std::vector<T> BasicSampledFunction<T>::derivative_samples() const {
  const std::size_t n = grid_.size();
  const int width = n >= 5 ? 5 : 4;
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t s = i >= 2 ? i - 2 : 0;
    s = std::min(s, n - static_cast<std::size_t>(width));
    const auto w = first_derivative_weights(grid_[i], &grid_[s], width);
    T d{};
    for (int j = 0; j < width; ++j) d += w[j] * values_[s + j];
    out[i] = d;
  }
  return out;
}

template <class T>
BasicSampledFunction<T> BasicSampledFunction<T>::derivative() const {
  return with_values(derivative_samples());
}

template <class T>
double BasicSampledFunction<T>::l2_norm_squared(bool include_tails) const {
  const auto rule = quad::gauss_legendre(kCellNodes);
  const bool log_grid = kind_ == GridKind::log_uniform;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < grid_.size(); ++i) {
    const double a = coord_[i];
    const double b = coord_[i + 1];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double cell = 0.0;
    for (int k = 0; k < kCellNodes; ++k) {
      const double c = mid + half * rule.nodes[k];
      const double x = log_grid ? std::exp(c) : c;
      const double jac = log_grid ? x : 1.0;
      cell += rule.weights[k] * std::norm(interpolate(x, i)) * jac;
    }
    total += cell * half;
  }
  if (!include_tails) return total;
  if (grid_.front() > 0.0) {
    // linear continuation on (0, front): |v0 + s (x - x0)|^2 integrated exactly
    const double x0 = grid_.front();
    const T slope = (values_[1] - values_[0]) / (grid_[1] - grid_[0]);
    const T at0 = values_[0] - slope * x0;
    const double lo = std::norm(at0), hi = std::norm(values_[0]);
    const double mid = std::norm(0.5 * (at0 + values_[0]));
    total += x0 * (lo + 4.0 * mid + hi) / 6.0;
  }
  const double last = std::norm(values_.back());
  switch (decay_.kind()) {
    case DecayHint::Kind::exponential:
      total += last / (2.0 * decay_.rate());
      break;
    case DecayHint::Kind::algebraic:
      total += last * grid_.back() / (2.0 * decay_.power() - 1.0);
      break;
    case DecayHint::Kind::compact:
      break;
  }
  return total;
}

template <class T>
double BasicSampledFunction<T>::l2_norm(bool include_tails) const {
  return std::sqrt(l2_norm_squared(include_tails));
}

template <class T>
BasicSampledFunction<T> BasicSampledFunction<T>::with_values(std::vector<T> values) const {
  return BasicSampledFunction(grid_, std::move(values), kind_, decay_);
}

template <class T>
BasicSampledFunction<T> BasicSampledFunction<T>::with_decay(DecayHint decay) const {
  return BasicSampledFunction(grid_, values_, kind_, decay);
}

template class BasicSampledFunction<double>;
template class BasicSampledFunction<Complex>;

SampledFunction real_part(const ComplexSampledFunction& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values()[i].real();
  return SampledFunction(f.grid(), std::move(v), f.kind(), f.decay());
}

SampledFunction imag_part(const ComplexSampledFunction& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values()[i].imag();
  return SampledFunction(f.grid(), std::move(v), f.kind(), f.decay());
}

double l2_distance(const SampledFunction& a, const SampledFunction& b) {
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.values()[i] - b(a.grid()[i]);
  return a.with_values(std::move(diff)).l2_norm(false);
}

HalfLineFunction as_function(const SampledFunction& s) {
  return HalfLineFunction{[s](double x) { return s(x); }, s.decay()};
}

}  // namespace lightcone
