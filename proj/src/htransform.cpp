#include "lightcone/htransform.hpp"

#include <cmath>
#include <numbers>

#include "lightcone/error.hpp"

namespace lightcone {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kRecurrenceBlock = 64;

DecayHint image_decay(const DecayHint& input, const std::optional<DecayHint>& requested) {
  if (requested) return *requested;
  if (input.kind() == DecayHint::Kind::exponential) return DecayHint::exponential(1.0 / input.rate());
  throw DomainError("transform: an output decay hint is required for non-exponential input");
}

void require_positive_grid(const std::vector<double>& grid, const char* who) {
  if (grid.empty()) throw DomainError(std::string(who) + ": empty grid");
  if (!(grid.front() > 0.0)) throw DomainError(std::string(who) + ": grid must be positive");
}

// Upper cut T for int_T^inf |g(u)| u^{-1/2} du < tol under the hint, starting
// the search at `start`.
double mellin_upper_cut(const std::function<double(double)>& g, const DecayHint& hint,
                        double start, double tol) {
  switch (hint.kind()) {
    case DecayHint::Kind::compact:
      return std::max(start, hint.support_end());
    case DecayHint::Kind::exponential: {
      const double r = hint.rate();
      double u = start;
      for (int step = 0; step < 100000; ++step) {
        double envelope = 0.0;
        for (int j = 0; j <= 8; ++j) envelope = std::max(envelope, std::abs(g(u + j / (8.0 * r))));
        if (envelope / (r * std::sqrt(u)) < 0.1 * tol) return u;
        u += 1.0 / r;
      }
      throw RangeError("mellin_transform: exponential tail did not fall below tol");
    }
    case DecayHint::Kind::algebraic: {
      const double p = hint.power();
      if (p <= 0.5) throw RangeError("mellin_transform: algebraic decay too slow");
      double u = start;
      for (int step = 0; step < 200; ++step) {
        double envelope = 0.0;
        for (int j = 0; j <= 8; ++j) envelope = std::max(envelope, std::abs(g(u * (1.0 + j / 8.0))));
        if (envelope * std::sqrt(u) / (p - 0.5) < 0.1 * tol) return u;
        u *= 2.0;
      }
      throw RangeError("mellin_transform: algebraic tail did not fall below tol");
    }
  }
  return start;
}

struct LogNodes {
  std::vector<double> t;
  std::vector<double> weighted;  // w * e^{t/2} g(e^t)
};

void add_uniform_panels(LogNodes& nodes, const std::function<double(double)>& g, double lo,
                        double hi, double width) {
  if (!(hi > lo)) return;
  const auto rule = quad::gauss_legendre(16);
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double t = mid + 0.5 * h * rule.nodes[k];
      nodes.t.push_back(t);
      nodes.weighted.push_back(0.5 * h * rule.weights[k] * std::exp(0.5 * t) * g(std::exp(t)));
    }
  }
}

// sum_n weighted[n] e^{-i tau t_n} for every tau, plus `extra(tau)`.
template <class Extra>
CriticalLineSamples fourier_sum(const LogNodes& nodes, const std::vector<double>& tau,
                                Execution execution, Extra&& extra) {
  CriticalLineSamples out{tau, std::vector<Complex>(tau.size())};
  const std::size_t blocks = (tau.size() + kRecurrenceBlock - 1) / kRecurrenceBlock;
  const bool uniform = tau.size() > 1;
  const double dtau = uniform ? (tau.back() - tau.front()) / static_cast<double>(tau.size() - 1) : 0.0;
  for_each_index(blocks, execution, [&](std::size_t b) {
    const std::size_t lo = b * kRecurrenceBlock;
    const std::size_t hi = std::min(tau.size(), lo + kRecurrenceBlock);
    std::vector<Complex> acc(hi - lo);
    for (std::size_t n = 0; n < nodes.t.size(); ++n) {
      const double t = nodes.t[n];
      Complex phase = std::polar(1.0, -tau[lo] * t);
      const Complex step = std::polar(1.0, -dtau * t);
      for (std::size_t j = lo; j < hi; ++j) {
        acc[j - lo] += nodes.weighted[n] * phase;
        phase *= step;
      }
    }
    for (std::size_t j = lo; j < hi; ++j) out.values[j] = acc[j - lo] + extra(tau[j]);
  });
  return out;
}

void check_tau_grid(const std::vector<double>& tau) {
  if (tau.size() < 2) throw DomainError("mellin: tau grid needs at least 2 points");
  const double d = (tau.back() - tau.front()) / static_cast<double>(tau.size() - 1);
  for (std::size_t j = 1; j < tau.size(); ++j) {
    if (std::abs(tau[j] - tau[j - 1] - d) > 1e-9 * (1.0 + std::abs(d))) {
      throw DomainError("mellin: tau grid must be uniform");
    }
  }
}

}  // namespace

std::vector<double> symmetric_tau_grid(double tau_max, std::size_t n) {
  if (!(tau_max > 0.0)) throw DomainError("symmetric_tau_grid: tau_max must be positive");
  auto g = uniform_grid(-tau_max, tau_max, n);
  for (std::size_t i = 0; i < n / 2; ++i) g[n - 1 - i] = -g[i];
  if (n % 2 == 1) g[n / 2] = 0.0;
  return g;
}

double h_transform_point(const HalfLineFunction& f, double x, double tol) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("h_transform: x must be >= 0");
  if (x == 0.0) return quad::integrate_semi_infinite(f.f, 0.0, tol, f.decay).value;
  return quad::integrate_bessel_kernel(
             f.f, BesselKernel::j0, [x](double y) { return 2.0 * std::sqrt(x * y); }, 0.0, tol,
             f.decay)
      .value;
}

double h_transform_point(const SampledFunction& f, double x, double tol) {
  return h_transform_point(as_function(f), x, tol);
}

SampledFunction h_transform(const HalfLineFunction& f, std::vector<double> x_grid, GridKind kind,
                            const TransformOptions& options) {
  require_positive_grid(x_grid, "h_transform");
  std::vector<double> values(x_grid.size());
  for_each_index(x_grid.size(), options.execution,
                 [&](std::size_t i) { values[i] = h_transform_point(f, x_grid[i], options.tol); });
  return SampledFunction(std::move(x_grid), std::move(values), kind,
                         image_decay(f.decay, options.output_decay));
}

SampledFunction h_transform(const SampledFunction& f, std::vector<double> x_grid, GridKind kind,
                            const TransformOptions& options) {
  return h_transform(as_function(f), std::move(x_grid), kind, options);
}

double hankel0_transform_point(const HalfLineFunction& b, double r, double tol) {
  if (!std::isfinite(r) || r < 0.0) throw DomainError("hankel0_transform: r must be >= 0");
  if (r == 0.0) return 0.0;
  auto integrand = [&](double s) { return std::sqrt(r * s) * b.f(s); };
  return quad::integrate_bessel_kernel(integrand, BesselKernel::j0, [r](double s) { return r * s; },
                                       0.0, tol, b.decay)
      .value;
}

SampledFunction hankel0_transform(const HalfLineFunction& b, std::vector<double> r_grid,
                                  GridKind kind, const TransformOptions& options) {
  require_positive_grid(r_grid, "hankel0_transform");
  std::vector<double> values(r_grid.size());
  for_each_index(r_grid.size(), options.execution, [&](std::size_t i) {
    values[i] = hankel0_transform_point(b, r_grid[i], options.tol);
  });
  DecayHint decay = options.output_decay ? *options.output_decay : b.decay;
  return SampledFunction(std::move(r_grid), std::move(values), kind, decay);
}

SampledFunction hankel0_transform(const SampledFunction& b, std::vector<double> r_grid,
                                  GridKind kind, const TransformOptions& options) {
  return hankel0_transform(as_function(b), std::move(r_grid), kind, options);
}

CriticalLineSamples mellin_transform(const HalfLineFunction& g, const std::vector<double>& tau,
                                     const MellinOptions& options) {
  check_tau_grid(tau);
  const double tau_max = std::max(std::abs(tau.front()), std::abs(tau.back()));
  const double width = std::min(0.05, 1.0 / std::max(tau_max, 1.0));
  const double t_lo = options.log_lower;
  const double upper = mellin_upper_cut(g.f, g.decay, 1.0, options.tol);
  LogNodes nodes;
  add_uniform_panels(nodes, g.f, t_lo, std::log(upper), width);
  const double g0 = g.f(std::exp(t_lo));
  return fourier_sum(nodes, tau, options.execution, [&](double t) {
    const Complex a(0.5, -t);
    return g0 * std::exp(a * t_lo) / a;
  });
}

CriticalLineSamples mellin_transform(const SampledFunction& g, const std::vector<double>& tau,
                                     const MellinOptions& options) {
  check_tau_grid(tau);
  if (!(g.front() > 0.0)) throw DomainError("mellin_transform: grid must be positive");
  const double x_n = g.back();
  const double v_n = std::abs(g.values().back());
  double beyond = 0.0;
  switch (g.decay().kind()) {
    case DecayHint::Kind::exponential:
      beyond = v_n / (g.decay().rate() * std::sqrt(x_n));
      break;
    case DecayHint::Kind::algebraic:
      beyond = v_n * std::sqrt(x_n) / std::max(g.decay().power() - 0.5, 1e-300);
      break;
    case DecayHint::Kind::compact:
      beyond = 0.0;
      break;
  }
  if (beyond > options.tol) {
    throw RangeError("mellin_transform: the tail beyond the last sample exceeds tol");
  }
  const double tau_max = std::max(std::abs(tau.front()), std::abs(tau.back()));
  const double width = std::min(0.05, 1.0 / std::max(tau_max, 1.0));
  const auto rule = quad::gauss_legendre(6);
  auto eval = [&g](double u) { return g(u); };
  LogNodes nodes;
  const auto& grid = g.grid();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = std::log(grid[i]);
    const double b = std::log(grid[i + 1]);
    const int sub = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
    const double h = (b - a) / sub;
    for (int s = 0; s < sub; ++s) {
      const double mid = a + (s + 0.5) * h;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double t = mid + 0.5 * h * rule.nodes[k];
        nodes.t.push_back(t);
        nodes.weighted.push_back(0.5 * h * rule.weights[k] * std::exp(0.5 * t) * g(std::exp(t)));
      }
    }
  }
  const double upper = mellin_upper_cut(eval, g.decay(), x_n, options.tol);
  add_uniform_panels(nodes, eval, std::log(x_n), std::log(upper), width);
  // (0, x0): the continuation c0 + s u integrated exactly against u^{-1/2 - i tau}.
  const double x0 = grid[0];
  const double slope = (g.values()[1] - g.values()[0]) / (grid[1] - grid[0]);
  const double c0 = g.values()[0] - slope * x0;
  return fourier_sum(nodes, tau, options.execution, [&](double t) {
    const Complex a(0.5, -t);
    const Complex xa = std::exp(a * std::log(x0));
    return c0 * xa / a + slope * xa * x0 / (a + 1.0);
  });
}

SampledFunction inverse_mellin(const CriticalLineSamples& samples, std::vector<double> x_grid,
                               GridKind kind, DecayHint decay, Execution execution) {
  check_tau_grid(samples.tau);
  require_positive_grid(x_grid, "inverse_mellin");
  const auto& tau = samples.tau;
  const std::size_t n = tau.size();
  const double dtau = (tau.back() - tau.front()) / static_cast<double>(n - 1);
  std::vector<double> values(x_grid.size());
  for_each_index(x_grid.size(), execution, [&](std::size_t i) {
    const double t = std::log(x_grid[i]);
    Complex sum{};
    for (std::size_t b = 0; b < n; b += kRecurrenceBlock) {
      Complex phase = std::polar(1.0, tau[b] * t);
      const Complex step = std::polar(1.0, dtau * t);
      const std::size_t e = std::min(n, b + kRecurrenceBlock);
      for (std::size_t j = b; j < e; ++j) {
        const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        sum += w * samples.values[j] * phase;
        phase *= step;
      }
    }
    values[i] = (sum * dtau / kTwoPi).real() / std::sqrt(x_grid[i]);
  });
  return SampledFunction(std::move(x_grid), std::move(values), kind, decay);
}

namespace {

SampledFunction apply_chi(const CriticalLineSamples& ghat, std::vector<double> x_grid,
                          GridKind kind, DecayHint decay, Execution execution) {
  CriticalLineSamples image{ghat.tau, std::vector<Complex>(ghat.tau.size())};
  const std::size_t n = ghat.tau.size();
  for (std::size_t j = 0; j < n; ++j) {
    image.values[j] = specfun::chi_multiplier(ghat.tau[j]) * ghat.values[n - 1 - j];
  }
  return inverse_mellin(image, std::move(x_grid), kind, decay, execution);
}

}  // namespace

SampledFunction h_via_mellin(const SampledFunction& g, std::vector<double> x_grid, GridKind kind,
                             const MellinPathOptions& options) {
  const auto tau = symmetric_tau_grid(options.tau_max, options.tau_count);
  const auto ghat = mellin_transform(g, tau, options.mellin);
  return apply_chi(ghat, std::move(x_grid), kind, image_decay(g.decay(), options.output_decay),
                   options.mellin.execution);
}

SampledFunction h_via_mellin(const HalfLineFunction& g, std::vector<double> x_grid, GridKind kind,
                             const MellinPathOptions& options) {
  const auto tau = symmetric_tau_grid(options.tau_max, options.tau_count);
  const auto ghat = mellin_transform(g, tau, options.mellin);
  return apply_chi(ghat, std::move(x_grid), kind, image_decay(g.decay, options.output_decay),
                   options.mellin.execution);
}

CriticalLineSamples empirical_multiplier(const SampledFunction& g, const SampledFunction& image,
                                         const std::vector<double>& tau,
                                         const MellinOptions& options) {
  const auto ghat = mellin_transform(g, tau, options);
  const auto ihat = mellin_transform(image, tau, options);
  CriticalLineSamples out{tau, std::vector<Complex>(tau.size())};
  const std::size_t n = tau.size();
  for (std::size_t j = 0; j < n; ++j) out.values[j] = ihat.values[j] / ghat.values[n - 1 - j];
  return out;
}

}  // namespace lightcone
