#pragma once

#include <optional>
#include <vector>

#include "lightcone/parallel.hpp"
#include "lightcone/sampled.hpp"

namespace lightcone {

/// Function of s = 1/2 + i tau sampled on a uniform tau grid symmetric about 0.
struct CriticalLineSamples {
  std::vector<double> tau;
  std::vector<Complex> values;
};

/// n uniform points on [-tau_max, tau_max].
std::vector<double> symmetric_tau_grid(double tau_max, std::size_t n);

struct TransformOptions {
  double tol = 1e-10;
  Execution execution = Execution::parallel;
  /// Decay hint attached to the output. When absent, an exponential input
  /// hint of rate r gives rate 1/r on the output (exact for p(y) e^{-r y});
  /// other input hints require an explicit output hint.
  std::optional<DecayHint> output_decay;
};

/// H f(x) = int_0^inf J0(2 sqrt(x y)) f(y) dy for x >= 0.
double h_transform_point(const HalfLineFunction& f, double x, double tol);
double h_transform_point(const SampledFunction& f, double x, double tol);

SampledFunction h_transform(const HalfLineFunction& f, std::vector<double> x_grid, GridKind kind,
                            const TransformOptions& options = {});
SampledFunction h_transform(const SampledFunction& f, std::vector<double> x_grid, GridKind kind,
                            const TransformOptions& options = {});

/// A(r) = int_0^inf sqrt(r s) J0(r s) B(s) ds.
double hankel0_transform_point(const HalfLineFunction& b, double r, double tol);
SampledFunction hankel0_transform(const HalfLineFunction& b, std::vector<double> r_grid,
                                  GridKind kind, const TransformOptions& options = {});
SampledFunction hankel0_transform(const SampledFunction& b, std::vector<double> r_grid,
                                  GridKind kind, const TransformOptions& options = {});

struct MellinOptions {
  double tol = 1e-10;
  /// Lower end of the log-variable integration, t = log u.
  double log_lower = -23.025850929940457;  // log(1e-10)
  Execution execution = Execution::parallel;
};

/// g^(s) = int_0^inf g(u) u^{-s} du on s = 1/2 + i tau, computed as the Fourier
/// integral of e^{t/2} g(e^t) over [log_lower, log T] plus the contribution
/// g(0+) e^{(1/2 - i tau) t_lo} / (1/2 - i tau) of (0, e^{t_lo}). T is chosen
/// from the decay hint so the neglected tail is below tol.
CriticalLineSamples mellin_transform(const HalfLineFunction& g, const std::vector<double>& tau,
                                     const MellinOptions& options = {});
/// Sampled input. Throws RangeError when the hinted tail beyond the last
/// sample carries more than tol.
CriticalLineSamples mellin_transform(const SampledFunction& g, const std::vector<double>& tau,
                                     const MellinOptions& options = {});

/// g(x) = x^{-1/2} (1/2 pi) int G^(tau) e^{i tau log x} d tau by the trapezoid
/// rule on the sample grid. Real part is returned.
SampledFunction inverse_mellin(const CriticalLineSamples& samples, std::vector<double> x_grid,
                               GridKind kind, DecayHint decay,
                               Execution execution = Execution::parallel);

struct MellinPathOptions {
  double tau_max = 40.0;
  std::size_t tau_count = 4096;
  MellinOptions mellin;
  std::optional<DecayHint> output_decay;
};

/// H g through the multiplier: (H g)^(s) = chi(s) g^(1 - s), chi = Gamma(1-s)/Gamma(s).
SampledFunction h_via_mellin(const SampledFunction& g, std::vector<double> x_grid, GridKind kind,
                             const MellinPathOptions& options = {});
SampledFunction h_via_mellin(const HalfLineFunction& g, std::vector<double> x_grid, GridKind kind,
                             const MellinPathOptions& options = {});

/// Empirical multiplier image^(s) / g^(1 - s) for real g, on the given tau grid.
CriticalLineSamples empirical_multiplier(const SampledFunction& g, const SampledFunction& image,
                                         const std::vector<double>& tau,
                                         const MellinOptions& options = {});

}  // namespace lightcone
